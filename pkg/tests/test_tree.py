import pytest

from conftest import brute_force_gapsets, semigroups_upto
from weierstrass import tree
from weierstrass.core import NATURALS, effective_weight, from_generators, ordinary
from weierstrass.errors import InvalidInput, RootHasNoParent
from weierstrass.tree import EnumerationFilter, children, enumerate_parallel, parent

COUNTS_8 = [1, 1, 2, 4, 7, 12, 23, 39, 67]


def test_children_examples():
    assert children(ordinary(2)) == [
        ordinary(3),
        from_generators([3, 5, 7]),
        from_generators([3, 4]),
    ]
    assert children(NATURALS) == [ordinary(1)]
    assert children(from_generators([2, 5])) == [from_generators([2, 7])]


def test_parent_examples():
    assert parent(from_generators([2, 7])) == from_generators([2, 5])
    assert parent(ordinary(1)) == NATURALS
    assert parent(from_generators([3, 4])) == ordinary(2)
    with pytest.raises(RootHasNoParent):
        parent(NATURALS)


def test_parent_inverts_children_to_genus_12():
    for S in semigroups_upto(11):
        for C in children(S):
            assert C.genus == S.genus + 1
            assert parent(C) == S


def test_tree_matches_brute_force_gapsets():
    oracle = brute_force_gapsets(9)
    seen = [set() for _ in range(10)]
    for S in semigroups_upto(9):
        assert S.gaps not in seen[S.genus], "visited twice"
        seen[S.genus].add(S.gaps)
    assert seen == [set(x) for x in oracle]


def test_ew_increment_law():
    for S in semigroups_upto(11):
        ew = effective_weight(S)
        gens = S.generators
        for C in children(S):
            below = sum(1 for b in gens if b < C.frobenius)
            assert effective_weight(C) == ew + below >= ew


def test_enumerate_with_increment_assertions(monkeypatch):
    monkeypatch.setattr(tree, "CHECK_INCREMENTS", True)
    stats = tree.enumerate(EnumerationFilter(10), engine="python")
    assert stats.counts_by_genus[:9] == COUNTS_8


@pytest.mark.parametrize("engine", ["python", "compiled"])
def test_counts_to_genus_8(engine):
    stats = tree.enumerate(EnumerationFilter(8), engine=engine)
    assert stats.counts_by_genus == COUNTS_8
    assert stats.visited == sum(COUNTS_8)


def test_genus_zero_only():
    assert tree.enumerate(EnumerationFilter(0)).counts_by_genus == [1]


def test_ew_bound_zero_visits_ordinaries():
    seen = []
    stats = tree.enumerate(EnumerationFilter(9, ew_bound=0), visitor=seen.append)
    assert seen == [ordinary(g) for g in range(10)]
    assert stats.counts_by_genus == [1] * 10


@pytest.mark.parametrize("bound", [1, 3, 6])
def test_ew_bound_pruning_is_sound(bound):
    got = tree.enumerate(EnumerationFilter(10, ew_bound=bound), engine="python").counts_by_genus
    fast = tree.enumerate(EnumerationFilter(10, ew_bound=bound), engine="compiled").counts_by_genus
    want = [0] * 11
    for S in semigroups_upto(10):
        if effective_weight(S) <= bound:
            want[S.genus] += 1
    assert got == fast == want


def test_predicate_filters_visits():
    seen = []
    flt = EnumerationFilter(8, predicate=lambda S: S.multiplicity == 3)
    tree.enumerate(flt, visitor=seen.append)
    assert seen and all(S.multiplicity == 3 for S in seen)


def test_filter_validation():
    with pytest.raises(InvalidInput):
        EnumerationFilter(-1)
    with pytest.raises(InvalidInput):
        EnumerationFilter(5, ew_bound=-2)


@pytest.mark.parametrize("max_genus", [8, 12, 16])
def test_engines_agree(max_genus):
    a = tree.enumerate(EnumerationFilter(max_genus), engine="python")
    b = tree.enumerate(EnumerationFilter(max_genus), engine="compiled")
    assert a.to_json() == b.to_json()
    assert a.visited == b.visited


@pytest.mark.parametrize("jobs, split_depth", [(1, 9), (4, 3), (4, 9), (8, 5)])
def test_parallel_matches_sequential(jobs, split_depth):
    seq = tree.enumerate(EnumerationFilter(14))
    par = enumerate_parallel(EnumerationFilter(14), jobs=jobs, split_depth=split_depth)
    assert par.to_json() == seq.to_json()
    assert par.to_csv() == seq.to_csv()


def test_parallel_visitor_sees_each_semigroup_once():
    seen = []
    enumerate_parallel(EnumerationFilter(10), visitor=seen.append, jobs=4, split_depth=4)
    assert sorted(seen, key=str) == sorted(semigroups_upto(10), key=str)


def test_parallel_genus_20():
    seq = tree.enumerate(EnumerationFilter(20))
    par = enumerate_parallel(EnumerationFilter(20), jobs=8)
    assert par.counts_by_genus[20] == seq.counts_by_genus[20] == 37396


def test_stats_json_shape():
    d = tree.enumerate(EnumerationFilter(9)).as_dict()
    assert d["counts"][9] == 118
    row = d["max_ew"][9]
    assert row["g"] == 9 and row["ew"] == 12
    assert "gens:6,7,8" in row["witnesses"] and "gens:8,9,10,11,12,13" in row["witnesses"]
    assert row["witnesses"] == sorted(row["witnesses"])
