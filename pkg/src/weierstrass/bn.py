"""Vanishing sequences, the adjusted Brill-Noether number and its identities.

For an effective subsequence ``T`` of ``S`` (with ``r = |T| - 1``):

    schubert_dimension(S, T, d) = sum(T) - (r+1) g - r(r+1)/2 + sum_{t in T} #{gaps > t}
    rho_g(r, d; d - T)          = sum(T) - r g - r(r+1)/2

Both sides are independent of ``d``.  The gap sum is ``g`` (from 0) plus
``ew(S)`` (from the generators) plus 0 (composites in T lie above every gap),
which is why the dimension equals ``rho + ew``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import NumericalSemigroup, effective_weight
from .errors import InvalidInput


@dataclass(frozen=True)
class VanishingSequence:
    d: int
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise InvalidInput("a vanishing sequence needs at least one entry")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise InvalidInput(f"{list(vals)} is not strictly increasing")
        if vals[0] < 0 or vals[-1] > self.d:
            raise InvalidInput(f"{list(vals)} is not inside [0, {self.d}]")

    @property
    def r(self) -> int:
        return len(self.values) - 1

    def ramification(self) -> tuple[int, ...]:
        return tuple(a - i for i, a in enumerate(self.values))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def _seq(d: int, seq) -> VanishingSequence:
    if isinstance(seq, VanishingSequence):
        if seq.d != d:
            raise InvalidInput(f"sequence bound {seq.d} does not match d={d}")
        return seq
    return VanishingSequence(d, tuple(seq))


def rho(g: int, r: int, d: int, sequences: Sequence = ()) -> int:
    """``(r+1)(d-r) - r g - sum_i sum_j (a^i_j - j)``."""
    total = (r + 1) * (d - r) - r * g
    for seq in sequences:
        A = _seq(d, seq)
        if A.r != r:
            raise InvalidInput(f"sequence {list(A.values)} has length {len(A)}, expected {r + 1}")
        total -= sum(A.ramification())
    return total


def complement(seq: VanishingSequence) -> VanishingSequence:
    """``d - A``, listed increasingly."""
    return VanishingSequence(seq.d, tuple(seq.d - a for a in reversed(seq.values)))


def schubert_dimension(S: NumericalSemigroup, T: Sequence[int], d: int) -> int:
    """``sum (j_i - i)`` where ``T[i]`` is the ``j_i``-th element of S (from 0)."""
    T = sorted(T)
    if not T or T[0] != 0:
        raise InvalidInput("T must contain 0")
    if T[-1] > d:
        raise InvalidInput(f"d={d} is below max T={T[-1]}")
    outside = [t for t in T if t not in S]
    if outside:
        raise InvalidInput(f"{outside} are not elements of {S}")
    gaps = S.gaps
    total = 0
    for i, t in enumerate(T):
        index = t - sum(1 for b in gaps if b < t)
        total += index - i
    return total


def verify_dim_identity(S: NumericalSemigroup, T: Sequence[int], d: int) -> bool:
    from .slide import effective_subsequence_violations

    problems = effective_subsequence_violations(S, T)
    if problems:
        raise InvalidInput(f"{sorted(T)} is not an effective subsequence: " + "; ".join(problems))
    T = sorted(T)
    dual = complement(VanishingSequence(d, tuple(T)))
    return schubert_dimension(S, T, d) == rho(S.genus, len(T) - 1, d, [dual]) + effective_weight(S)


def bn_additivity_check(g1: int, g2: int, r: int, d: int, A, A_next) -> bool:
    """``rho_{g1}(A) + rho_{g2}(d - A, A') == rho_{g1+g2}(A')``."""
    A, A_next = _seq(d, A), _seq(d, A_next)
    left = rho(g1, r, d, [A]) + rho(g2, r, d, [complement(A), A_next])
    return left == rho(g1 + g2, r, d, [A_next])


def elliptic_rho_identity_check(r: int, d: int, T, T_next) -> bool:
    """``rho_1(r, d; T', d - T) == 1 + sum_i (t_i - t'_i - 1)``."""
    T, T_next = _seq(d, T), _seq(d, T_next)
    if T.r != r or T_next.r != r:
        raise InvalidInput(f"both sequences need {r + 1} entries")
    left = rho(1, r, d, [T_next, complement(T)])
    right = 1 + sum(t - tn - 1 for t, tn in zip(T.values, T_next.values))
    return left == right
