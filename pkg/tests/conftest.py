import functools

import pytest

from weierstrass import tree

ACCEPTANCE_LINES = []


@functools.lru_cache(maxsize=None)
def semigroups_upto(max_genus):
    """Every semigroup of genus <= max_genus, in tree visit order."""
    out = []
    tree.enumerate(tree.EnumerationFilter(max_genus), visitor=out.append, engine="python")
    return tuple(out)


def brute_force_gapsets(max_genus):
    """All closure-valid gap sets of size <= max_genus, found without the tree.

    A gap set of genus g lies inside [1, 2g - 1], so subsets of [1, 2*max_genus - 1]
    cover everything.  Candidates are enumerated as bitmasks and filtered by the
    closure axiom only.
    """
    top = max(2 * max_genus - 1, 1)
    found = [[] for _ in range(max_genus + 1)]
    for mask in range(1 << top):
        g = bin(mask).count("1")
        if g > max_genus:
            continue
        gaps = [i + 1 for i in range(top) if mask >> i & 1]
        if gaps and gaps[-1] > 2 * g - 1:
            continue
        if _closed(mask, top):
            found[g].append(tuple(gaps))
    return found


def _closed(gapmask, top):
    # members a, b in [1, top] with a + b a gap violate closure
    for s in range(2, top + 1):
        if not gapmask >> (s - 1) & 1:
            continue
        for a in range(1, s // 2 + 1):
            if not gapmask >> (a - 1) & 1 and not gapmask >> (s - a - 1) & 1:
                return False
    return True


def record_acceptance(label, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture
def acceptance():
    return record_acceptance


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
