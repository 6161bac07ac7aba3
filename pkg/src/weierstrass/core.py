"""Numerical semigroups and their per-semigroup invariants.

A semigroup is stored as a bitmask of its members in ``[0, frobenius]``;
every integer above the Frobenius number is implicitly a member.  The genus
0 semigroup ``N`` has ``frobenius == -1`` and an empty mask of 0 bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator

from .errors import InvalidInput, NotASemigroup, NotCofinite, SpecParseError


@dataclass(frozen=True)
class NumericalSemigroup:
    frobenius: int
    genus: int
    membership: int  # bit n set iff n in S, for 0 <= n <= frobenius

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return bool(self.membership >> n & 1)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({format_semigroup(self)})"

    def __str__(self) -> str:
        return format_semigroup(self)

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        m = self.membership
        return tuple(n for n in range(1, self.frobenius + 1) if not m >> n & 1)

    @cached_property
    def multiplicity(self) -> int:
        n = 1
        while n not in self:
            n += 1
        return n

    @cached_property
    def generators(self) -> tuple[int, ...]:
        return _minimal_generators(self)

    def elements(self, upto: int) -> Iterator[int]:
        """Members of S in ``[0, upto]``, increasing."""
        for n in range(upto + 1):
            if n in self:
                yield n

    def is_ordinary(self) -> bool:
        return self.frobenius == self.genus

    def sort_key(self) -> str:
        return format_semigroup(self)


NATURALS = NumericalSemigroup(frobenius=-1, genus=0, membership=0)


def _from_mask(mask: int, frobenius: int) -> NumericalSemigroup:
    """Build from a membership mask whose bit ``frobenius`` is clear (trusted input)."""
    mask &= (1 << (frobenius + 1)) - 1
    genus = frobenius + 1 - bin(mask).count("1")
    return NumericalSemigroup(frobenius=frobenius, genus=genus, membership=mask)


def from_member_mask(mask: int, upto: int) -> NumericalSemigroup:
    """Semigroup whose members in ``[0, upto]`` are the set bits of ``mask``.

    Everything above ``upto`` is taken to be a member.  The result is trimmed to
    its true Frobenius number but closure is not re-checked.
    """
    frob = upto
    while frob >= 0 and mask >> frob & 1:
        frob -= 1
    if frob < 0:
        return NATURALS
    return _from_mask(mask, frob)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """The smallest numerical semigroup containing ``gens``.

    >>> from_generators([2, 7]).gaps
    (1, 3, 5)
    """
    gens = sorted(set(int(a) for a in gens))
    if not gens:
        raise InvalidInput("at least one generator is required")
    if gens[0] <= 0:
        raise InvalidInput(f"generators must be positive, got {gens[0]}")
    d = reduce(math.gcd, gens)
    if d != 1:
        raise NotCofinite(gens, d)
    m = gens[0]
    bound = 2 * gens[-1] ** 2
    reach = bytearray(bound + 1)
    reach[0] = 1
    run = 1
    last_gap = -1
    for n in range(1, bound + 1):
        if any(n >= a and reach[n - a] for a in gens):
            reach[n] = 1
            run += 1
            # m consecutive members: every later integer is a member
            if run >= m:
                break
        else:
            last_gap = n
            run = 0
    if last_gap < 0:
        return NATURALS
    mask = 0
    for n in range(last_gap + 1):
        if reach[n]:
            mask |= 1 << n
    return _from_mask(mask, last_gap)


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """``N \\ gaps``; raises :class:`NotASemigroup` with a violating pair."""
    gaps = set(int(b) for b in gaps)
    if not gaps:
        return NATURALS
    if min(gaps) <= 0:
        raise InvalidInput(f"gaps must be positive integers, got {min(gaps)}")
    frob = max(gaps)
    mask = 0
    for n in range(frob + 1):
        if n not in gaps:
            mask |= 1 << n
    members = [n for n in range(1, frob + 1) if mask >> n & 1]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b > frob:
                break
            if not mask >> (a + b) & 1:
                raise NotASemigroup((a, b))
    return _from_mask(mask, frob)


def is_semigroup_gapset(gaps: Iterable[int]) -> bool:
    try:
        from_gaps(gaps)
    except NotASemigroup:
        return False
    return True


def ordinary(g: int) -> NumericalSemigroup:
    """``H_g = {0, g+1, g+2, ...}``."""
    if g < 0:
        raise InvalidInput(f"genus must be nonnegative, got {g}")
    if g == 0:
        return NATURALS
    return NumericalSemigroup(frobenius=g, genus=g, membership=1)


def _minimal_generators(S: NumericalSemigroup) -> tuple[int, ...]:
    if S.genus == 0:
        return (1,)
    m = S.multiplicity
    top = S.frobenius + m + 1
    members = [n for n in range(1, top + 1) if n in S]
    gens = []
    for a in members:
        # a is composite iff a = g + s with g a generator and s a positive member
        if not any(a - g > 0 and (a - g) in S for g in gens):
            gens.append(a)
    return tuple(gens)


def minimal_generators(S: NumericalSemigroup) -> list[int]:
    return list(S.generators)


def effective_generators(S: NumericalSemigroup) -> list[int]:
    """Minimal generators above the Frobenius number (the tree children)."""
    return [a for a in S.generators if a > S.frobenius]


def is_composite(S: NumericalSemigroup, a: int) -> bool:
    """True iff ``a`` is a sum of two positive elements of S."""
    return a > 0 and any(s in S and (a - s) in S for s in range(1, a // 2 + 1))


def weight(S: NumericalSemigroup) -> int:
    g = S.genus
    w = sum(S.gaps) - g * (g + 1) // 2
    assert w == _weight_by_pairs(S), "weight: closed form and pair count disagree"
    return w


def _weight_by_pairs(S: NumericalSemigroup) -> int:
    # #{(a, b): 0 < a < b, a in S, b a gap}
    return sum(sum(1 for a in range(1, b) if a in S) for b in S.gaps)


def effective_weight(S: NumericalSemigroup) -> int:
    gaps = S.gaps
    return sum(sum(1 for b in gaps if b > a) for a in S.generators)


def deligne_lambda(S: NumericalSemigroup) -> int:
    """Number of gaps ``b`` with ``a + b`` in S for every positive ``a`` in S."""
    positives = [a for a in range(1, S.frobenius + 1) if a in S]
    return sum(1 for b in S.gaps if all((a + b) in S for a in positives))


def composite_gap_pairs(S: NumericalSemigroup) -> int:
    """``#{(a, b): a composite, b a gap, a < b}``."""
    gaps = S.gaps
    return sum(
        sum(1 for b in gaps if b > a)
        for a in range(1, S.frobenius)
        if a in S and is_composite(S, a)
    )


def is_primitive(S: NumericalSemigroup) -> bool:
    """Every composite element exceeds the largest gap.

    Three equivalent characterisations are evaluated and must agree.
    """
    by_multiplicity = 2 * S.multiplicity > S.frobenius
    by_composites = not any(
        a in S and is_composite(S, a) for a in range(1, S.frobenius)
    )
    by_weight = weight(S) == effective_weight(S)
    assert by_multiplicity == by_composites == by_weight, "primitivity tests disagree"
    return by_multiplicity


def is_secundive(S: NumericalSemigroup) -> bool:
    """Largest gap is smaller than the sum of the two smallest generators."""
    gens = S.generators
    if S.genus == 0 or len(gens) < 2:
        return True
    return S.frobenius < gens[0] + gens[1]


def is_symmetric(S: NumericalSemigroup) -> bool:
    by_frobenius = S.frobenius == 2 * S.genus - 1
    top = 2 * S.genus - 1
    by_involution = all(
        (n in S) != ((top - n) in S) for n in range(0, top + 1)
    )
    assert by_frobenius == by_involution, "symmetry tests disagree"
    return by_frobenius


@dataclass(frozen=True)
class InvariantRecord:
    genus: int
    frobenius: int
    multiplicity: int
    weight: int
    effective_weight: int
    deligne_lambda: int
    is_primitive: bool
    is_secundive: bool
    is_symmetric: bool
    generators: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "frobenius": self.frobenius,
            "multiplicity": self.multiplicity,
            "weight": self.weight,
            "effective_weight": self.effective_weight,
            "lambda": self.deligne_lambda,
            "is_primitive": self.is_primitive,
            "is_secundive": self.is_secundive,
            "is_symmetric": self.is_symmetric,
            "generators": list(self.generators),
        }


def invariants(S: NumericalSemigroup) -> InvariantRecord:
    return InvariantRecord(
        genus=S.genus,
        frobenius=S.frobenius,
        multiplicity=S.multiplicity,
        weight=weight(S),
        effective_weight=effective_weight(S),
        deligne_lambda=deligne_lambda(S),
        is_primitive=is_primitive(S),
        is_secundive=is_secundive(S),
        is_symmetric=is_symmetric(S),
        generators=S.generators,
    )


# -- text format -------------------------------------------------------------


def format_semigroup(S: NumericalSemigroup, style: str = "gens") -> str:
    if style == "gens":
        return "gens:" + ",".join(map(str, S.generators))
    if style == "gaps":
        return "gaps:" + ",".join(map(str, S.gaps))
    raise ValueError(f"unknown style {style!r}")


def _parse_int_list(text: str, offset: int) -> list[int]:
    body = text[offset:]
    if body == "":
        return []
    values = []
    pos = offset
    for chunk in body.split(","):
        if not chunk.isdigit():
            bad = next((i for i, ch in enumerate(chunk) if not ch.isdigit()), 0)
            reason = "empty entry" if chunk == "" else f"unexpected character {chunk[bad]!r}"
            raise SpecParseError(text, pos + bad, reason)
        v = int(chunk)
        if values and v <= values[-1]:
            raise SpecParseError(text, pos, "values must be strictly increasing")
        values.append(v)
        pos += len(chunk) + 1
    return values


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse ``gens:6,7,8`` or ``gaps:1,2,3`` (no spaces, strictly increasing)."""
    text = text.strip()
    if text.startswith("gens:"):
        values = _parse_int_list(text, 5)
        if not values:
            raise SpecParseError(text, 5, "at least one generator is required")
        if values[0] == 0:
            raise SpecParseError(text, 5, "generators must be positive")
        return from_generators(values)
    if text.startswith("gaps:"):
        values = _parse_int_list(text, 5)
        if values and values[0] == 0:
            raise SpecParseError(text, 5, "0 is never a gap")
        return from_gaps(values)
    colon = text.find(":")
    raise SpecParseError(text, 0, "expected prefix 'gens:' or 'gaps:'" if colon < 0 else f"unknown prefix {text[:colon + 1]!r}")
