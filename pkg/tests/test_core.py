import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import semigroups_upto
from weierstrass.core import (
    NATURALS,
    composite_gap_pairs,
    deligne_lambda,
    effective_generators,
    effective_weight,
    format_semigroup,
    from_gaps,
    from_generators,
    invariants,
    is_primitive,
    is_secundive,
    is_semigroup_gapset,
    is_symmetric,
    minimal_generators,
    ordinary,
    parse_semigroup,
    weight,
)
from weierstrass.errors import NotASemigroup, NotCofinite, SemigroupError, SpecParseError


def brute_members(gens, upto):
    """Members of the monoid generated by gens, up to upto, by dynamic programming."""
    ok = [False] * (upto + 1)
    ok[0] = True
    for n in range(1, upto + 1):
        ok[n] = any(n >= a and ok[n - a] for a in gens)
    return ok


def test_from_generators_matches_dp():
    S = from_generators([6, 7, 8])
    assert S.gaps == (1, 2, 3, 4, 5, 9, 10, 11, 17)
    assert S.genus == 9 and S.frobenius == 17 and S.multiplicity == 6


@pytest.mark.parametrize("gens", [[2, 4], [6, 9, 15]])
def test_non_cofinite_rejected(gens):
    with pytest.raises(NotCofinite):
        from_generators(gens)


def test_nonpositive_generator_rejected():
    with pytest.raises(SemigroupError):
        from_generators([0, 4])


def test_from_gaps_rejects_sum_of_members():
    with pytest.raises(NotASemigroup) as info:
        from_gaps([1, 2, 3, 8])
    assert info.value.pair == (4, 4)


def test_naturals():
    assert NATURALS.genus == 0 and NATURALS.frobenius == -1
    assert from_gaps([]) == NATURALS == from_generators([1])
    assert minimal_generators(NATURALS) == [1]
    assert effective_weight(NATURALS) == 0


@pytest.mark.parametrize(
    "gens, wt, ew, lam",
    [
        ([6, 7, 8], 17, 12, 1),
        ([3, 7], None, 6, None),
        ([2, 11], 10, 4, 1),
    ],
)
def test_invariant_examples(gens, wt, ew, lam):
    S = from_generators(gens)
    if wt is not None:
        assert weight(S) == wt
    assert effective_weight(S) == ew
    if lam is not None:
        assert deligne_lambda(S) == lam


@pytest.mark.parametrize("g", range(0, 12))
def test_ordinary(g):
    H = ordinary(g)
    assert H.gaps == tuple(range(1, g + 1))
    assert effective_weight(H) == 0 and weight(H) == 0
    assert deligne_lambda(H) == g
    assert is_primitive(H) and is_secundive(H)


# <2,5> has frobenius 3 < 4 and is primitive; the non-primitive range starts at g = 3
@pytest.mark.parametrize("g", range(3, 12))
def test_hyperelliptic_flags(g):
    S = from_generators([2, 2 * g + 1])
    assert deligne_lambda(S) == 1
    assert not is_primitive(S)
    assert is_secundive(S) and is_symmetric(S)


def test_flag_examples():
    S = from_generators([6, 7, 8])
    assert not is_primitive(S) and not is_secundive(S)
    assert is_symmetric(from_generators([3, 4]))
    assert not is_symmetric(ordinary(2))
    assert effective_generators(S) == []
    assert effective_generators(ordinary(2)) == [3, 4, 5]


def test_parse_and_format_round_trip():
    S = parse_semigroup("gaps:1,2,3,4,5,9,10,11,17")
    assert S == parse_semigroup("gens:6,7,8")
    assert format_semigroup(S) == "gens:6,7,8"
    assert format_semigroup(S, "gaps") == "gaps:1,2,3,4,5,9,10,11,17"
    assert parse_semigroup("gaps:") == NATURALS


@pytest.mark.parametrize("text", ["gens:6, 7", "gens:7,6", "gens:", "gaps:1,x", "foo:1", "gens:3,,4"])
def test_parse_errors_carry_position(text):
    with pytest.raises(SpecParseError) as info:
        parse_semigroup(text)
    assert 0 <= info.value.position <= len(text)


def test_invariant_record_serialises_lambda():
    d = invariants(from_generators([6, 7, 8])).as_dict()
    assert d["lambda"] == 1 and d["genus"] == 9 and d["effective_weight"] == 12


gen_sets = st.lists(st.integers(2, 25), min_size=1, max_size=5).filter(lambda xs: math.gcd(*xs) == 1)


@given(gen_sets)
@settings(max_examples=200, deadline=None)
def test_generators_round_trip(gens):
    S = from_generators(gens)
    assert from_gaps(S.gaps) == S
    assert set(minimal_generators(S)) <= set(gens)
    assert from_generators(minimal_generators(S)) == S
    upto = S.frobenius + max(gens) + 2
    dp = brute_members(gens, upto)
    assert [n in S for n in range(upto + 1)] == dp


@given(gen_sets)
@settings(max_examples=200, deadline=None)
def test_weight_identities(gens):
    S = from_generators(gens)
    gaps = S.gaps
    ew_pairs = sum(1 for a in minimal_generators(S) for b in gaps if b > a)
    assert effective_weight(S) == ew_pairs
    assert weight(S) == sum(gaps) - S.genus * (S.genus + 1) // 2


def _lambda_brute(S):
    pos = [a for a in range(1, S.frobenius + S.multiplicity + 1) if a in S]
    return sum(1 for b in S.gaps if all(a + b in S for a in pos))


def test_exhaustive_invariants_to_genus_14():
    for S in semigroups_upto(14):
        assert is_semigroup_gapset(S.gaps)
        ew, wt = effective_weight(S), weight(S)
        assert wt - ew == composite_gap_pairs(S)
        assert is_primitive(S) == (wt == ew) == (2 * S.multiplicity > S.frobenius)
        assert deligne_lambda(S) == _lambda_brute(S)
        if ew <= S.genus - 1:
            assert is_secundive(S)


def test_non_secundive_with_ew_equal_g_exists():
    for g in range(6, 15):
        assert any(
            S.genus == g and not is_secundive(S) and effective_weight(S) == g
            for S in semigroups_upto(14)
        ), g
