"""Named semigroup families with closed-form genus and effective weight.

Set-builder forms such as ``X ∪ H_c`` below mean ``X`` together with every
integer ``>= c``; read that way each family has exactly the stated genus.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import (
    NATURALS,
    NumericalSemigroup,
    effective_weight,
    from_gaps,
    from_generators,
    ordinary as _ordinary,
    weight,
)
from .errors import InvalidInput


def _union_with_tail(elements, c: int) -> NumericalSemigroup:
    """``elements ∪ {n >= c}``; closure is validated."""
    keep = set(elements) | {0}
    return from_gaps(n for n in range(1, c) if n not in keep)


def ordinary(g: int) -> NumericalSemigroup:
    return _ordinary(g)


def hyperelliptic(g: int) -> NumericalSemigroup:
    if g < 1:
        raise InvalidInput(f"hyperelliptic needs g >= 1, got {g}")
    return from_generators([2, 2 * g + 1])


def _check_ge(g, e):
    if not 1 <= e <= g - 1:
        raise InvalidInput(f"need 1 <= e <= g - 1, got g={g}, e={e}")


def ngs1(g: int, e: int) -> NumericalSemigroup:
    """Multiples of ``g - e + 1`` together with everything from ``g + 1 + g // (g - e)`` on."""
    _check_ge(g, e)
    q = g - e + 1
    c = g + 1 + g // (g - e)
    S = _union_with_tail(range(0, c, q), c)
    assert S.genus == g, (g, e, S)
    return S


def ngs2(g: int, e: int) -> NumericalSemigroup:
    _check_ge(g, e)
    S = _union_with_tail(range(g, g + e), g + e + 1)
    assert S.genus == g, (g, e, S)
    return S


def ngs3(g: int) -> NumericalSemigroup:
    # g = 2 would put 1 in the set
    if g < 3:
        raise InvalidInput(f"ngs3 needs g >= 3, got {g}")
    S = _union_with_tail([g - 1, *range(g + 1, 2 * g - 1)], 2 * g)
    assert S.genus == g, (g, S)
    return S


class TwoGeneratorPrediction(NamedTuple):
    genus: int
    ew: int
    dim_ms: int

    @property
    def codim(self) -> int:
        # dim M_{g,1} = 3g - 2
        return 3 * self.genus - 2 - self.dim_ms


def two_generator(e: int, d: int) -> tuple[NumericalSemigroup, TwoGeneratorPrediction]:
    """``<e, d>`` with its closed-form genus, ew and stratum dimension."""
    if not 1 < e < d:
        raise InvalidInput(f"need 1 < e < d, got e={e}, d={d}")
    if math.gcd(e, d) != 1:
        raise InvalidInput(f"e={e} and d={d} are not coprime")
    g = (e - 1) * (d - 1) // 2
    pred = TwoGeneratorPrediction(
        genus=g,
        ew=2 * g - d - e + d // e + 2,
        dim_ms=g + d + e - 4 - d // e,
    )
    return from_generators([e, d]), pred


def n_d_delta(d: int, delta: int) -> NumericalSemigroup:
    """``<d-1, d>`` with every gap from its ``(g+1)``-th on filled in, ``g = C(d-1, 2) - delta``.

    Only ``g >= d - 2`` is accepted: below that the two generators no longer
    sit under every gap beyond ``d - 2`` and ``ew = 2g - 2d + 4`` fails.
    """
    if d < 3:
        raise InvalidInput(f"need d >= 3, got {d}")
    full = math.comb(d - 1, 2)
    if not 0 <= delta < full:
        raise InvalidInput(f"need 0 <= delta < {full}, got {delta}")
    g = full - delta
    if g < d - 2:
        raise InvalidInput(f"genus {g} < d - 2 = {d - 2}; closed form does not apply")
    base = from_generators([d - 1, d])
    S = from_gaps(base.gaps[:g])
    assert S.genus == g
    return S


def max_ew_extremal(g: int, eta: int) -> NumericalSemigroup:
    """``<c, c+1, ..., d>`` with ``c = (3g+3+eta)/4`` and ``d = (5g+1+3eta)/4``."""
    if g < 6:
        raise InvalidInput(f"extremal construction needs g >= 6, got {g}")
    if not -2 <= eta <= 2 or (eta - g - 1) % 4:
        raise InvalidInput(f"eta={eta} must lie in [-2, 2] with eta ≡ g+1 (mod 4)")
    c = (3 * g + 3 + eta) // 4
    d = (5 * g + 1 + 3 * eta) // 4
    S = from_gaps([*range(1, c), *range(d + 1, 2 * c)])
    assert S.genus == g, (g, eta, S)
    return S


def admissible_etas(g: int) -> list[int]:
    return [eta for eta in range(-2, 3) if (eta - g - 1) % 4 == 0]


def max_ew_bound(g: int) -> int:
    return (g + 1) ** 2 // 8


def komeda(m: int) -> NumericalSemigroup:
    """``{0, m, m+1} ∪ [2m, ∞)``; genus ``2m - 3``."""
    if m < 4:
        raise InvalidInput(f"komeda needs m >= 4, got {m}")
    return _union_with_tail([m, m + 1], 2 * m)


def negatively_graded_family(g: int) -> list[NumericalSemigroup]:
    """The ordinary semigroup and every NGS semigroup of genus ``g``."""
    if g == 0:
        return [NATURALS]
    out = [ordinary(g)]
    for e in range(1, g):
        out.append(ngs1(g, e))
        out.append(ngs2(g, e))
    if g >= 3:
        out.append(ngs3(g))
    return out


def classify_negatively_graded(S: NumericalSemigroup) -> bool:
    return S in negatively_graded_family(S.genus)


class Family(str, enum.Enum):
    ORDINARY = "ordinary"
    HYPERELLIPTIC = "hyperelliptic"
    NGS1 = "ngs1"
    NGS2 = "ngs2"
    NGS3 = "ngs3"
    TWO_GENERATOR = "two-gen"
    ND_DELTA = "nodal-plane"
    MAX_EW = "max-ew"
    KOMEDA = "komeda"


# CLI parameter names per family, in constructor order
PARAMS = {
    Family.ORDINARY: ("g",),
    Family.HYPERELLIPTIC: ("g",),
    Family.NGS1: ("g", "e"),
    Family.NGS2: ("g", "e"),
    Family.NGS3: ("g",),
    Family.TWO_GENERATOR: ("e", "d"),
    Family.ND_DELTA: ("d", "delta"),
    Family.MAX_EW: ("g", "eta"),
    Family.KOMEDA: ("m",),
}


@dataclass
class FamilyDescriptor:
    family: Family
    params: dict
    semigroup: NumericalSemigroup
    predicted: dict = field(default_factory=dict)

    def computed(self) -> dict:
        out = {"genus": self.semigroup.genus, "effective_weight": effective_weight(self.semigroup)}
        if "weight" in self.predicted:
            out["weight"] = weight(self.semigroup)
        if "codim" in self.predicted:
            # the stratum of a two-generator semigroup has codimension exactly ew
            out["codim"] = out["effective_weight"]
        return out

    def mismatches(self) -> dict:
        got = self.computed()
        return {k: (v, got[k]) for k, v in self.predicted.items() if k in got and got[k] != v}

    def ok(self) -> bool:
        return not self.mismatches()


def describe(family, **params) -> FamilyDescriptor:
    """Construct a family member and attach the closed-form predictions."""
    fam = Family(family)
    missing = [p for p in PARAMS[fam] if p not in params]
    extra = [p for p in params if p not in PARAMS[fam]]
    if missing or extra:
        raise InvalidInput(f"{fam.value} takes parameters {', '.join(PARAMS[fam])}")
    p = params
    if fam is Family.ORDINARY:
        S, pred = ordinary(p["g"]), {"genus": p["g"], "effective_weight": 0}
    elif fam is Family.HYPERELLIPTIC:
        g = p["g"]
        S = hyperelliptic(g)
        pred = {"genus": g, "effective_weight": g - 1, "weight": g * (g - 1) // 2}
    elif fam is Family.NGS1:
        S, pred = ngs1(p["g"], p["e"]), {"genus": p["g"], "effective_weight": p["e"]}
    elif fam is Family.NGS2:
        S, pred = ngs2(p["g"], p["e"]), {"genus": p["g"], "effective_weight": p["e"]}
    elif fam is Family.NGS3:
        S, pred = ngs3(p["g"]), {"genus": p["g"], "effective_weight": p["g"] - 1}
    elif fam is Family.TWO_GENERATOR:
        S, tg = two_generator(p["e"], p["d"])
        pred = {"genus": tg.genus, "effective_weight": tg.ew, "dim_ms": tg.dim_ms, "codim": tg.codim}
    elif fam is Family.ND_DELTA:
        d = p["d"]
        S = n_d_delta(d, p["delta"])
        g = math.comb(d - 1, 2) - p["delta"]
        pred = {"genus": g, "effective_weight": 2 * g - 2 * d + 4}
    elif fam is Family.MAX_EW:
        g, eta = p["g"], p["eta"]
        S = max_ew_extremal(g, eta)
        assert ((g + 1) ** 2 - eta**2) % 8 == 0
        pred = {"genus": g, "effective_weight": ((g + 1) ** 2 - eta**2) // 8}
    else:
        m = p["m"]
        S, pred = komeda(m), {"genus": 2 * m - 3, "effective_weight": 2 * m - 4}
    return FamilyDescriptor(fam, dict(params), S, pred)


def all_instances(max_genus: int):
    """Every admissible family member of genus <= ``max_genus``."""
    for g in range(0, max_genus + 1):
        yield describe("ordinary", g=g)
    for g in range(1, max_genus + 1):
        yield describe("hyperelliptic", g=g)
        for e in range(1, g):
            yield describe("ngs1", g=g, e=e)
            yield describe("ngs2", g=g, e=e)
        if g >= 3:
            yield describe("ngs3", g=g)
    for e in range(2, max_genus + 2):
        for d in range(e + 1, 2 * max_genus + 2):
            if math.gcd(e, d) == 1 and (e - 1) * (d - 1) // 2 <= max_genus:
                yield describe("two-gen", e=e, d=d)
    d = 3
    while d - 2 <= max_genus:
        full = math.comb(d - 1, 2)
        for g in range(d - 2, min(full, max_genus) + 1):
            yield describe("nodal-plane", d=d, delta=full - g)
        d += 1
    for g in range(6, max_genus + 1):
        for eta in admissible_etas(g):
            yield describe("max-ew", g=g, eta=eta)
    m = 4
    while 2 * m - 3 <= max_genus:
        yield describe("komeda", m=m)
        m += 1
