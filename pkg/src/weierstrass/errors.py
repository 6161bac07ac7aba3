"""Exception hierarchy shared by every module."""


class SemigroupError(ValueError):
    """Base class for invalid-input conditions."""


class NotCofinite(SemigroupError):
    def __init__(self, gens, divisor):
        self.gens = tuple(gens)
        self.divisor = divisor
        super().__init__(
            f"generators {list(self.gens)} share the factor {divisor}; "
            "the generated monoid has infinitely many gaps"
        )


class NotASemigroup(SemigroupError):
    """Raised when a candidate set is not closed under addition.

    ``pair`` holds a witness ``(a, b)`` with ``a, b`` in the set but ``a + b`` not.
    """

    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        a, b = self.pair
        super().__init__(message or f"not closed under addition: {a} + {b} = {a + b} is a gap")


class InvalidInput(SemigroupError):
    pass


class ValidationFailed(SemigroupError):
    pass


class RootHasNoParent(SemigroupError):
    def __init__(self):
        super().__init__("the genus 0 semigroup N is the root of the tree and has no parent")


class SpecParseError(SemigroupError):
    """Malformed textual semigroup description; ``position`` is a 0-based column."""

    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse {text!r} at column {position}: {reason}")
