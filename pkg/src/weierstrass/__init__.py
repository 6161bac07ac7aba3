"""Numerical semigroups, effective weight and the semigroup tree."""

from .core import (
    NATURALS,
    InvariantRecord,
    NumericalSemigroup,
    deligne_lambda,
    effective_generators,
    effective_weight,
    format_semigroup,
    from_gaps,
    from_generators,
    invariants,
    is_primitive,
    is_secundive,
    is_symmetric,
    minimal_generators,
    ordinary,
    parse_semigroup,
    weight,
)
from .errors import (
    InvalidInput,
    NotASemigroup,
    NotCofinite,
    RootHasNoParent,
    SemigroupError,
    SpecParseError,
    ValidationFailed,
)
from .slide import Outcome, certificate_chain, find_good_slider, is_good_slider, slide_semigroup
from .tree import EnumerationFilter, EnumerationStats, children, enumerate_parallel, parent

__version__ = "0.1.0"
