"""Sliding, good sliders and certificate chains down to an ordinary semigroup.

``slide_k`` fixes multiples of ``k`` and moves every other integer to the
preceding non-multiple of ``k``.  A good slider ``k`` of a secundive semigroup
S lowers both genus and effective weight by one while carrying an effective
subsequence of S to one of ``slide_k(S)``; chaining good sliders until the
effective weight reaches 0 gives the induction trace.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import (
    NumericalSemigroup,
    effective_weight,
    from_gaps,
    is_composite,
    is_secundive,
)
from .errors import InvalidInput, NotASemigroup, ValidationFailed


def slide_element(k: int, s: int) -> int:
    if k < 2:
        raise InvalidInput(f"slide needs k >= 2, got {k}")
    r = s % k
    if r == 0:
        return s
    if r == 1:
        return s - 2
    return s - 1


def slide_semigroup(k: int, S: NumericalSemigroup) -> NumericalSemigroup:
    """Image of S under ``slide_k``, validated as a numerical semigroup."""
    if k < 2:
        raise InvalidInput(f"slide needs k >= 2, got {k}")
    if k not in S:
        raise InvalidInput(f"{k} is not an element of {S}")
    if 1 in S:
        raise InvalidInput("sliding N would produce the negative element -1")
    f = S.frobenius
    # every integer above f lies in the image, so only [0, f] needs checking
    image = {slide_element(k, s) for s in S.elements(f + 2)}
    return from_gaps(n for n in range(1, f + 1) if n not in image)


@dataclass(frozen=True)
class EffectiveSubsequence:
    elements: tuple[int, ...]
    host: NumericalSemigroup

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def effective_subsequence_violations(S: NumericalSemigroup, T: Sequence[int]) -> list[str]:
    """Reasons ``T`` fails to be an effective subsequence of S (empty if it is one)."""
    T = list(T)
    problems = []
    if 0 not in T:
        problems.append("does not contain 0")
    outside = [t for t in T if t not in S]
    if outside:
        problems.append(f"elements {outside} are not in S")
    missing = [a for a in S.generators if a not in T]
    if missing:
        problems.append(f"missing generators {missing}")
    low = [t for t in T if t < S.frobenius and is_composite(S, t)]
    if low:
        problems.append(f"composite elements {low} below the Frobenius number")
    return problems


def is_effective_subsequence(S: NumericalSemigroup, T: Sequence[int]) -> bool:
    return not effective_subsequence_violations(S, T)


def canonical_effective_subsequence(S: NumericalSemigroup, k: int) -> EffectiveSubsequence:
    """0 together with the least positive element of S in each residue class mod k."""
    if k < 2:
        raise InvalidInput(f"residue classes need k >= 2, got {k}")
    if k not in S:
        raise InvalidInput(f"{k} is not an element of {S}")
    least = {}
    n = 1
    while len(least) < k:
        if n in S and n % k not in least:
            least[n % k] = n
        n += 1
    T = tuple(sorted({0, *least.values()}))
    problems = effective_subsequence_violations(S, T)
    if problems:
        raise ValidationFailed(f"{list(T)} is not an effective subsequence of {S}: " + "; ".join(problems))
    return EffectiveSubsequence(T, S)


@dataclass(frozen=True)
class SliderCheck:
    """Outcome of testing a candidate slider; ``failed`` names the first failing condition."""

    k: int
    ok: bool
    failed: Optional[str] = None
    detail: str = ""
    after: Optional[NumericalSemigroup] = None
    t_before: Optional[tuple[int, ...]] = None
    t_after: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.ok


def is_good_slider(S: NumericalSemigroup, k: int) -> SliderCheck:
    """Check conditions (a), (b), (c); (c) only via the canonical subsequence."""
    if k < 2 or k not in S or not is_secundive(S):
        return SliderCheck(k, False, "precondition", "needs S secundive and k >= 2 in S")
    try:
        after = slide_semigroup(k, S)
    except NotASemigroup as exc:
        return SliderCheck(k, False, "a", f"image is not a semigroup: {exc}")
    if after.genus != S.genus - 1:
        return SliderCheck(k, False, "a", f"image genus {after.genus} != {S.genus - 1}", after)
    if not is_secundive(after):
        return SliderCheck(k, False, "a", "image is not secundive", after)
    ew, ew_after = effective_weight(S), effective_weight(after)
    if ew_after != ew - 1:
        return SliderCheck(k, False, "b", f"ew {ew} -> {ew_after}", after)
    try:
        T = canonical_effective_subsequence(S, k).elements
    except ValidationFailed as exc:
        return SliderCheck(k, False, "c", str(exc), after)
    T_after = tuple(slide_element(k, t) for t in T)
    problems = effective_subsequence_violations(after, T_after)
    if problems:
        return SliderCheck(k, False, "c", f"slid T={list(T_after)}: " + "; ".join(problems), after, T, T_after)
    return SliderCheck(k, True, None, "", after, T, T_after)


@dataclass(frozen=True)
class SliderChoice:
    """Result of :func:`find_good_slider`; ``k is None`` when nothing was found."""

    k: Optional[int]
    rule: str
    check: Optional[SliderCheck] = None

    def __bool__(self):
        return self.k is not None


def _criteria_candidates(S: NumericalSemigroup):
    m = S.multiplicity
    f = S.frobenius
    if (m + 1) not in S:
        yield "m", m
    if f < 2 * m - 1:
        k = next((k for k in range(m, f + 1) if k in S and (k + 1) not in S), None)
        if k is not None:
            yield "small-frobenius", k
    if m >= 3 and (2 * m - 2) in S and f == 2 * m - 1:
        yield "2m-2", 2 * m - 2


def find_good_slider(S: NumericalSemigroup) -> SliderChoice:
    """Try the three sufficient criteria in order, then scan every ``k`` in S."""
    if S.genus == 0 or not is_secundive(S) or effective_weight(S) < 1:
        return SliderChoice(None, "precondition")
    for rule, k in _criteria_candidates(S):
        check = is_good_slider(S, k)
        if check:
            return SliderChoice(k, rule, check)
    for k in range(2, S.frobenius + 2):
        if k in S:
            check = is_good_slider(S, k)
            if check:
                return SliderChoice(k, "scan", check)
    return SliderChoice(None, "none")


def is_komeda(S: NumericalSemigroup) -> bool:
    """``S == {0, m, m+1} ∪ [2m, ∞)`` for some ``m >= 4``."""
    m = S.multiplicity
    if m < 4 or S.frobenius != 2 * m - 1:
        return False
    return all((n in S) == (n in (m, m + 1)) for n in range(1, 2 * m))


class Outcome(str, enum.Enum):
    REACHED_ORDINARY = "ReachedOrdinary"
    KOMEDA_EXCEPTION = "KomedaException"
    NO_SLIDER_FOUND = "NoSliderFound"


def elliptic_bridge_check(T: Sequence[int], T_next: Sequence[int], k_index: int) -> bool:
    """Hypotheses of the elliptic-bridge step for ``(T, T')`` at position ``k_index``."""
    T, Tn = list(T), list(T_next)
    r = len(T) - 1
    if len(Tn) != len(T) or not 1 <= k_index <= r:
        return False
    if T[0] != 0 or Tn[0] != 0 or T[k_index] != Tn[k_index]:
        return False
    m = T[k_index]
    for i in range(1, r + 1):
        if i == k_index:
            continue
        if T[i] % m == 0 or Tn[i] % m == 0:
            return False
        if not T[i - 1] <= Tn[i] < T[i]:
            return False
    return True


def prune_multiples(T: Sequence[int], k: int) -> tuple[int, ...]:
    """Drop multiples of ``k`` other than 0 and ``k``."""
    return tuple(t for t in T if t % k or t in (0, k))


@dataclass(frozen=True)
class SlideStep:
    before: NumericalSemigroup
    k: int
    after: NumericalSemigroup
    t_before: tuple[int, ...]
    t_after: tuple[int, ...]
    rule: str = ""

    def violations(self) -> list[str]:
        out = []
        if slide_semigroup(self.k, self.before) != self.after:
            out.append("after != slide_k(before)")
        if self.after.genus != self.before.genus - 1:
            out.append("genus did not drop by one")
        if effective_weight(self.after) != effective_weight(self.before) - 1:
            out.append("ew did not drop by one")
        if not is_secundive(self.after):
            out.append("after is not secundive")
        if tuple(slide_element(self.k, t) for t in self.t_before) != self.t_after:
            out.append("t_after != slide_k(t_before)")
        if not is_effective_subsequence(self.before, self.t_before):
            out.append("t_before is not an effective subsequence of before")
        if not is_effective_subsequence(self.after, self.t_after):
            out.append("t_after is not an effective subsequence of after")
        return out

    def bridge_ok(self) -> bool:
        T = prune_multiples(self.t_before, self.k)
        Tn = tuple(slide_element(self.k, t) for t in T)
        return elliptic_bridge_check(T, Tn, T.index(self.k))

    def as_dict(self) -> dict:
        return {
            "before": str(self.before),
            "k": self.k,
            "after": str(self.after),
            "T": list(self.t_before),
            "T_next": list(self.t_after),
        }


@dataclass
class CertificateChain:
    start: NumericalSemigroup
    steps: list[SlideStep] = field(default_factory=list)
    terminal: Optional[NumericalSemigroup] = None
    outcome: Optional[Outcome] = None

    def as_dict(self) -> dict:
        return {
            "start": str(self.start),
            "steps": [s.as_dict() for s in self.steps],
            "terminal": str(self.terminal),
            "outcome": self.outcome.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def certificate_chain(S: NumericalSemigroup) -> CertificateChain:
    chain = CertificateChain(start=S)
    current = S
    while True:
        if effective_weight(current) == 0:
            outcome = Outcome.REACHED_ORDINARY
            break
        if is_komeda(current):
            outcome = Outcome.KOMEDA_EXCEPTION
            break
        choice = find_good_slider(current)
        if not choice:
            outcome = Outcome.NO_SLIDER_FOUND
            break
        c = choice.check
        T = prune_multiples(c.t_before, choice.k)
        chain.steps.append(
            SlideStep(
                before=current,
                k=choice.k,
                after=c.after,
                t_before=T,
                t_after=tuple(slide_element(choice.k, t) for t in T),
                rule=choice.rule,
            )
        )
        current = c.after
    chain.terminal = current
    chain.outcome = outcome
    return chain
