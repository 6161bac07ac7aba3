"""The semigroup tree and exhaustive enumeration by genus.

The parent of S is ``S ∪ {frobenius}``; the children of S are ``S \\ {a}`` for
each effective generator ``a`` (a minimal generator above the Frobenius
number).  Every numerical semigroup appears exactly once in this tree.

Along a tree edge the effective weight grows by the number of minimal
generators of the parent lying below the removed generator, so it never
decreases; this makes ``ew_bound`` pruning sound.
"""

from __future__ import annotations

import builtins
import csv
import io
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import (
    NATURALS,
    NumericalSemigroup,
    _from_mask,
    effective_weight,
    from_member_mask,
)
from .errors import InvalidInput, RootHasNoParent

log = logging.getLogger(__name__)

PROGRESS_EVERY = 10**6
DEFAULT_SPLIT_DEPTH = 9
COMPILED_GENUS_LIMIT = 64  # two 64-bit words of gap mask per witness
AUTO_COMPILED_FROM = 15

# Re-derive ew from scratch at every edge; tests switch this on.
CHECK_INCREMENTS = False


def children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    return [_remove(S, a) for a in S.generators if a > S.frobenius]


def _remove(S: NumericalSemigroup, a: int) -> NumericalSemigroup:
    filled = ((1 << (a + 1)) - 1) ^ ((1 << (S.frobenius + 1)) - 1)
    mask = (S.membership | filled) & ~(1 << a)
    return NumericalSemigroup(frobenius=a, genus=S.genus + 1, membership=mask)


def parent(S: NumericalSemigroup) -> NumericalSemigroup:
    if S.genus == 0:
        raise RootHasNoParent()
    return from_member_mask(S.membership | (1 << S.frobenius), S.frobenius)


def _children_with_ew(S: NumericalSemigroup, ew: int):
    """Children in increasing removed-generator order, with their ew."""
    out = []
    for below, a in builtins.enumerate(S.generators):
        if a > S.frobenius:
            child = _remove(S, a)
            child_ew = ew + below
            if CHECK_INCREMENTS:
                assert child_ew == effective_weight(child), (S, a)
            out.append((child, child_ew))
    return out


@dataclass
class EnumerationFilter:
    max_genus: int
    ew_bound: Optional[int] = None
    predicate: Optional[Callable[[NumericalSemigroup], bool]] = None

    def __post_init__(self):
        if self.max_genus < 0:
            raise InvalidInput(f"max_genus must be >= 0, got {self.max_genus}")
        if self.ew_bound is not None and self.ew_bound < 0:
            raise InvalidInput(f"ew_bound must be >= 0, got {self.ew_bound}")


@dataclass
class EnumerationStats:
    counts_by_genus: list[int]
    # (max ew, witnesses sorted by their gens: string); (None, ()) when a genus is empty
    max_ew_by_genus: list[tuple[Optional[int], tuple[NumericalSemigroup, ...]]]
    visited: int = 0
    elapsed: float = 0.0

    @classmethod
    def empty(cls, max_genus: int) -> "EnumerationStats":
        return cls([0] * (max_genus + 1), [(None, ())] * (max_genus + 1))

    def add(self, S: NumericalSemigroup, ew: int) -> None:
        g = S.genus
        self.counts_by_genus[g] += 1
        best, wits = self.max_ew_by_genus[g]
        if best is None or ew > best:
            self.max_ew_by_genus[g] = (ew, (S,))
        elif ew == best:
            self.max_ew_by_genus[g] = (best, wits + (S,))

    def merge(self, other: "EnumerationStats") -> None:
        for g, c in builtins.enumerate(other.counts_by_genus):
            self.counts_by_genus[g] += c
            ob, ow = other.max_ew_by_genus[g]
            mb, mw = self.max_ew_by_genus[g]
            if ob is None:
                continue
            if mb is None or ob > mb:
                self.max_ew_by_genus[g] = (ob, ow)
            elif ob == mb:
                self.max_ew_by_genus[g] = (mb, mw + ow)
        self.visited += other.visited

    def canonicalize(self) -> "EnumerationStats":
        self.max_ew_by_genus = [
            (ew, tuple(sorted(w, key=NumericalSemigroup.sort_key)))
            for ew, w in self.max_ew_by_genus
        ]
        return self

    def max_ew(self, g: int) -> Optional[int]:
        return self.max_ew_by_genus[g][0]

    def witnesses(self, g: int) -> tuple[NumericalSemigroup, ...]:
        return self.max_ew_by_genus[g][1]

    def as_dict(self) -> dict:
        rows = [
            {"g": g, "ew": ew, "witnesses": [str(S) for S in wits]}
            for g, (ew, wits) in builtins.enumerate(self.max_ew_by_genus)
            if ew is not None
        ]
        return {"counts": list(self.counts_by_genus), "max_ew": rows}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["g", "count", "max_ew", "witness_count"])
        for g, count in builtins.enumerate(self.counts_by_genus):
            ew, wits = self.max_ew_by_genus[g]
            w.writerow([g, count, "" if ew is None else ew, len(wits)])
        return buf.getvalue()


class _Progress:
    def __init__(self):
        self.next_report = PROGRESS_EVERY

    def tick(self, visited: int) -> None:
        if visited >= self.next_report:
            log.info("visited %d nodes", visited)
            self.next_report = (visited // PROGRESS_EVERY + 1) * PROGRESS_EVERY


def _python_subtree(root, root_ew, flt, visitor, stats, progress=None):
    """Depth-first, children in increasing removed-generator order."""
    stack = [(root, root_ew)]
    bound = flt.ew_bound
    pred = flt.predicate
    while stack:
        S, ew = stack.pop()
        stats.visited += 1
        if progress is not None:
            progress.tick(stats.visited)
        if pred is None or pred(S):
            stats.add(S, ew)
            if visitor is not None:
                visitor(S)
        if S.genus < flt.max_genus:
            kids = _children_with_ew(S, ew)
            for child, child_ew in reversed(kids):
                if bound is None or child_ew <= bound:
                    stack.append((child, child_ew))


def _decomposition_row(S: NumericalSemigroup, size: int) -> np.ndarray:
    member = np.array([n in S for n in range(size)], dtype=bool)
    row = np.zeros(size, dtype=np.int32)
    for x in range(size):
        if member[x]:
            h = x // 2
            row[x] = int(np.count_nonzero(member[: h + 1] & member[x - h : x + 1][::-1]))
    return row


def _from_gap_words(lo: int, hi: int) -> NumericalSemigroup:
    gaps = int(lo) | (int(hi) << 64)
    if gaps == 0:
        return NATURALS
    frob = gaps.bit_length() - 1
    full = (1 << (frob + 1)) - 1
    return _from_mask(full & ~gaps, frob)


def _compiled_subtree(root, root_ew, flt, capacity=64):
    from ._kernel import subtree_stats

    maxg = flt.max_genus
    if maxg > COMPILED_GENUS_LIMIT:
        raise InvalidInput(f"compiled engine supports max_genus <= {COMPILED_GENUS_LIMIT}")
    size = 3 * maxg + 3
    row = _decomposition_row(root, size)
    bound = -1 if flt.ew_bound is None else flt.ew_bound
    while True:
        counts = np.zeros(maxg + 1, dtype=np.int64)
        max_ew = np.full(maxg + 1, -1, dtype=np.int64)
        wit_lo = np.zeros((maxg + 1, capacity), dtype=np.uint64)
        wit_hi = np.zeros((maxg + 1, capacity), dtype=np.uint64)
        wit_n = np.zeros(maxg + 1, dtype=np.int64)
        visited = subtree_stats(
            row, root.frobenius, root.genus, root.multiplicity, root_ew,
            maxg, bound, counts, max_ew, wit_lo, wit_hi, wit_n,
        )
        need = int(wit_n.max())
        if need <= capacity:
            break
        capacity = need
    stats = EnumerationStats.empty(maxg)
    stats.visited = int(visited)
    for g in range(maxg + 1):
        stats.counts_by_genus[g] = int(counts[g])
        if counts[g]:
            wits = tuple(_from_gap_words(wit_lo[g, i], wit_hi[g, i]) for i in range(wit_n[g]))
            stats.max_ew_by_genus[g] = (int(max_ew[g]), wits)
    return stats


def _pick_engine(engine, flt, visitor):
    if engine not in ("auto", "python", "compiled"):
        raise InvalidInput(f"unknown engine {engine!r}")
    plain = visitor is None and flt.predicate is None
    if engine == "compiled" and not plain:
        raise InvalidInput("the compiled engine cannot run visitors or predicates")
    if engine == "auto":
        big = AUTO_COMPILED_FROM <= flt.max_genus <= COMPILED_GENUS_LIMIT
        return "compiled" if plain and big else "python"
    return engine


def enumerate(flt: EnumerationFilter, visitor=None, engine: str = "auto") -> EnumerationStats:
    """Visit every semigroup of genus <= ``flt.max_genus`` passing the filter, once.

    Single-threaded visits happen in a deterministic depth-first order with
    children taken by increasing removed generator.
    """
    t0 = time.perf_counter()
    eng = _pick_engine(engine, flt, visitor)
    if eng == "compiled":
        stats = _compiled_subtree(NATURALS, 0, flt)
    else:
        stats = EnumerationStats.empty(flt.max_genus)
        _python_subtree(NATURALS, 0, flt, visitor, stats, _Progress())
    stats.elapsed = time.perf_counter() - t0
    return stats.canonicalize()


def _split(flt: EnumerationFilter, split_depth: int, visitor, stats):
    """Handle nodes above ``split_depth`` here; return the subtree roots at it."""
    roots = []
    stack = [(NATURALS, 0)]
    pred = flt.predicate
    while stack:
        S, ew = stack.pop()
        if S.genus == split_depth:
            roots.append((S, ew))
            continue
        stats.visited += 1
        if pred is None or pred(S):
            stats.add(S, ew)
            if visitor is not None:
                visitor(S)
        if S.genus < flt.max_genus:
            for child, child_ew in reversed(_children_with_ew(S, ew)):
                if flt.ew_bound is None or child_ew <= flt.ew_bound:
                    stack.append((child, child_ew))
    return roots


def enumerate_parallel(
    flt: EnumerationFilter,
    visitor=None,
    jobs: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    engine: str = "auto",
) -> EnumerationStats:
    """Same visited set and statistics as :func:`enumerate`, over ``jobs`` threads.

    Complete subtrees rooted at genus ``split_depth`` are the unit of work.  The
    compiled engine releases the GIL; a Python visitor may be called from any
    worker thread and must synchronise itself.
    """
    if jobs < 1:
        raise InvalidInput(f"jobs must be >= 1, got {jobs}")
    if split_depth < 0:
        raise InvalidInput(f"split_depth must be >= 0, got {split_depth}")
    t0 = time.perf_counter()
    eng = _pick_engine(engine, flt, visitor)
    stats = EnumerationStats.empty(flt.max_genus)
    roots = _split(flt, split_depth, visitor, stats)

    def work(item):
        S, ew = item
        if eng == "compiled":
            return _compiled_subtree(S, ew, flt)
        part = EnumerationStats.empty(flt.max_genus)
        _python_subtree(S, ew, flt, visitor, part)
        return part

    progress = _Progress()
    if jobs == 1:
        results = map(work, roots)
        for part in results:
            stats.merge(part)
            progress.tick(stats.visited)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(work, roots):
                stats.merge(part)
                progress.tick(stats.visited)
    stats.elapsed = time.perf_counter() - t0
    return stats.canonicalize()
