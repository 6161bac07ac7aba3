"""Batch computations behind the CLI: the max-ew search, tables, identity sweeps."""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field

from . import families, tree
from .bn import (
    VanishingSequence,
    bn_additivity_check,
    elliptic_rho_identity_check,
    verify_dim_identity,
)
from .core import deligne_lambda, effective_weight, is_primitive, is_secundive, weight
from .slide import canonical_effective_subsequence
from .tree import DEFAULT_SPLIT_DEPTH, EnumerationFilter

EXACT_FROM_GENUS = 10
EXTREMAL_FROM_GENUS = 6


@dataclass
class MaxEwRow:
    g: int
    max_ew: int
    bound: int
    witnesses: list[str]
    extremal: list[str]
    status: str = "pass"

    @property
    def sporadic(self) -> list[str]:
        return [w for w in self.witnesses if w not in self.extremal]

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "max_ew": self.max_ew,
            "bound": self.bound,
            "status": self.status,
            "witnesses": self.witnesses,
            "extremal": self.extremal,
            "sporadic": self.sporadic,
        }


@dataclass
class MaxEwReport:
    max_genus: int
    counts: list[int]
    rows: list[MaxEwRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.rows)

    @property
    def findings(self) -> list[MaxEwRow]:
        return [r for r in self.rows if r.status != "pass"]

    def as_dict(self) -> dict:
        return {
            "max_genus": self.max_genus,
            "ok": self.ok,
            "counts": self.counts,
            "rows": [r.as_dict() for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["g", "count", "max_ew", "bound", "status", "witness_count", "witnesses"])
        for r in self.rows:
            w.writerow([r.g, self.counts[r.g], r.max_ew, r.bound, r.status, len(r.witnesses), " ".join(r.witnesses)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{'g':>3} {'count':>9} {'max_ew':>6} {'bound':>5}  status  witnesses"]
        for r in self.rows:
            wits = ", ".join(r.witnesses)
            lines.append(f"{r.g:>3} {self.counts[r.g]:>9} {r.max_ew:>6} {r.bound:>5}  {r.status}  {wits}")
        lines.append("all rows pass" if self.ok else f"{len(self.findings)} FINDING(S)")
        return "\n".join(lines) + "\n"


def _row_status(g, max_ew, bound, witnesses, extremal):
    if max_ew > bound:
        return "FINDING:exceeds-bound"
    if max_ew < bound:
        return "FINDING:bound-not-attained"
    if g >= EXACT_FROM_GENUS and set(witnesses) != set(extremal):
        return "FINDING:witnesses-not-extremal"
    if not set(extremal) <= set(witnesses):
        return "FINDING:extremal-missing"
    return "pass"


def conjecture_max_ew(max_genus: int, jobs: int = 1, split_depth: int = DEFAULT_SPLIT_DEPTH) -> MaxEwReport:
    """Exhaustively compare max ew per genus with ``floor((g+1)^2 / 8)``."""
    if max_genus < 1:
        raise ValueError("max_genus must be >= 1")
    flt = EnumerationFilter(max_genus)
    stats = tree.enumerate_parallel(flt, jobs=jobs, split_depth=split_depth)
    report = MaxEwReport(max_genus, list(stats.counts_by_genus))
    for g in range(max_genus + 1):
        best = stats.max_ew(g)
        wits = [str(S) for S in stats.witnesses(g)]
        extremal = []
        if g >= EXTREMAL_FROM_GENUS:
            extremal = sorted({str(families.max_ew_extremal(g, eta)) for eta in families.admissible_etas(g)})
        bound = families.max_ew_bound(g)
        status = _row_status(g, best, bound, wits, extremal)
        report.rows.append(MaxEwRow(g, best, bound, wits, extremal, status))
    return report


# -- tables -------------------------------------------------------------------


TABLE_KINDS = ("counts", "deligne", "primitivity", "families")


@dataclass
class Table:
    header: list[str]
    rows: list[list]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        w.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([dict(zip(self.header, r)) for r in self.rows])

    def to_text(self) -> str:
        cells = [self.header] + [[str(c) for c in r] for r in self.rows]
        widths = [max(len(str(row[i])) for row in cells) for i in range(len(self.header))]
        return "".join(
            "  ".join(str(c).rjust(w) for c, w in zip(row, widths)) + "\n" for row in cells
        )


def table(kind: str, max_genus: int, ew_bound=None, jobs: int = 1) -> Table:
    if kind not in TABLE_KINDS:
        raise ValueError(f"unknown table kind {kind!r}; choose from {', '.join(TABLE_KINDS)}")
    flt = EnumerationFilter(max_genus, ew_bound=ew_bound)
    if kind == "counts":
        stats = tree.enumerate_parallel(flt, jobs=jobs)
        return Table(["g", "count"], [[g, c] for g, c in enumerate(stats.counts_by_genus)])
    if kind == "families":
        rows = []
        for desc in families.all_instances(max_genus):
            got = desc.computed()
            params = " ".join(f"{k}={v}" for k, v in desc.params.items())
            rows.append([
                desc.family.value, params, str(desc.semigroup),
                desc.predicted["genus"], got["genus"],
                desc.predicted["effective_weight"], got["effective_weight"],
                desc.ok(),
            ])
        return Table(["family", "params", "semigroup", "predicted_g", "g", "predicted_ew", "ew", "ok"], rows)

    semigroups = []
    tree.enumerate(flt, visitor=semigroups.append, engine="python")
    if kind == "deligne":
        rows = []
        for S in semigroups:
            ew, lam = effective_weight(S), deligne_lambda(S)
            rows.append([str(S), S.genus, ew, lam, S.genus - lam, ew >= S.genus - lam,
                         ew == S.genus - lam, families.classify_negatively_graded(S)])
        rows.sort(key=lambda r: (r[1], r[0]))
        return Table(["semigroup", "g", "ew", "lambda", "g_minus_lambda", "bound_holds",
                      "equality", "negatively_graded"], rows)
    # primitivity
    per = {}
    for S in semigroups:
        c = per.setdefault(S.genus, [0, 0, 0, 0])
        c[0] += 1
        prim = is_primitive(S)
        c[1] += prim
        c[2] += weight(S) == effective_weight(S)
        c[3] += is_secundive(S)
    rows = [[g, *per[g]] for g in sorted(per)]
    return Table(["g", "count", "primitive", "wt_equals_ew", "secundive"], rows)


# -- identity sweeps ----------------------------------------------------------


def random_vanishing(rng: random.Random, r: int, d: int) -> VanishingSequence:
    return VanishingSequence(d, tuple(sorted(rng.sample(range(d + 1), r + 1))))


def random_identity_inputs(rng: random.Random, max_r: int = 6, max_d: int = 30):
    r = rng.randint(0, max_r)
    d = rng.randint(r, max_d)
    return r, d, random_vanishing(rng, r, d), random_vanishing(rng, r, d)


def check_identities(max_genus: int = 12, samples: int = 10**4, seed: int = 0) -> dict:
    """Run the dimension identity exhaustively and the two rho identities at random."""
    dim_checked = dim_failed = 0
    failures = []

    def visit(S):
        nonlocal dim_checked, dim_failed
        if S.genus == 0 or not is_secundive(S):
            return
        T = canonical_effective_subsequence(S, S.multiplicity).elements
        for d in (max(T), max(T) + 3):
            dim_checked += 1
            if not verify_dim_identity(S, T, d):
                dim_failed += 1
                failures.append(f"dim identity {S} T={list(T)} d={d}")

    tree.enumerate(EnumerationFilter(max_genus), visitor=visit, engine="python")

    rng = random.Random(seed)
    add_failed = ell_failed = 0
    for _ in range(samples):
        r, d, A, B = random_identity_inputs(rng)
        g1, g2 = rng.randint(0, 20), rng.randint(0, 20)
        if not bn_additivity_check(g1, g2, r, d, A, B):
            add_failed += 1
            failures.append(f"additivity g1={g1} g2={g2} A={list(A)} A'={list(B)} d={d}")
        if not elliptic_rho_identity_check(r, d, A, B):
            ell_failed += 1
            failures.append(f"elliptic rho T={list(A)} T'={list(B)} d={d}")
    return {
        "dim_identity": {"checked": dim_checked, "failed": dim_failed},
        "bn_additivity": {"checked": samples, "failed": add_failed},
        "elliptic_rho": {"checked": samples, "failed": ell_failed},
        "ok": not failures,
        "failures": failures[:20],
    }
