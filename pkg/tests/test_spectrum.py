import pytest
from hypothesis import given, settings, strategies as st

from groupoidal.catalog import DEFAULT_SEMIGROUPS, catalog_get
from groupoidal.errors import NoZero, NotBelowE, OutOfDomain
from groupoidal.spectrum import (
    act_character,
    all_characters,
    fixed_and_interior,
    is_cover,
    is_tight_character,
    is_tight_character_exhaustive,
    principal_character,
    proper_characters,
    tight_characters,
    ultrafilter_characters,
)

from oracles import filters_by_subset_scan, tight_filters_by_definition

WITH_ZERO = [n for n in DEFAULT_SEMIGROUPS if catalog_get(n).zero is not None]


def idx(S, label):
    return S.labels.index(label)


def minima(S, chars):
    return sorted(S.labels[c.minimum] for c in chars)


def test_chain_characters():
    S = catalog_get("chain(3)")
    assert len(all_characters(S)) == 3 and len(proper_characters(S)) == 2
    assert minima(S, ultrafilter_characters(S)) == ["1"]
    assert minima(S, tight_characters(S)) == ["1"]


def test_single_idempotent_has_one_character():
    assert len(all_characters(catalog_get("cyclic_group(3)"))) == 1


def test_brandt_characters():
    S = catalog_get("brandt(2)")
    assert len(all_characters(S)) == 3
    assert minima(S, proper_characters(S)) == ["e11", "e22"]
    assert minima(S, tight_characters(S)) == ["e11", "e22"]


def test_diamond_ultrafilters_and_tight():
    S = catalog_get("diamond")
    assert minima(S, ultrafilter_characters(S)) == ["a", "b"]
    assert minima(S, tight_characters(S)) == ["a", "b"]
    C = catalog_get("chain(2)")
    assert minima(C, ultrafilter_characters(C)) == ["1"]


def test_no_zero_errors():
    with pytest.raises(NoZero):
        proper_characters(catalog_get("cyclic_group(2)"))


def test_cover_examples():
    D = catalog_get("diamond")
    assert is_cover(D, idx(D, "0"), [])
    assert is_cover(D, idx(D, "1"), [idx(D, "a"), idx(D, "b")])
    B = catalog_get("brandt(2)")
    assert not is_cover(B, idx(B, "e11"), [idx(B, "0")])
    with pytest.raises(NotBelowE):
        is_cover(B, idx(B, "e11"), [idx(B, "e22")])


def test_action_examples():
    B = catalog_get("brandt(2)")
    chi = principal_character(B, idx(B, "e11"))
    assert act_character(B, idx(B, "e21"), chi).minimum == idx(B, "e22")
    with pytest.raises(OutOfDomain):
        act_character(B, idx(B, "e12"), chi)
    T = catalog_get("truncated_clifford(2)")
    for c in all_characters(T):
        assert act_character(T, idx(T, "a"), c) == c
    e = idx(T, "e")
    assert all(act_character(T, e, c) == c for c in all_characters(T))


def test_fixed_and_interior_examples():
    T = catalog_get("truncated_clifford(2)")
    X = all_characters(T)
    fixed, interior = fixed_and_interior(T, idx(T, "a"), X)
    assert len(fixed) == 4
    assert sorted(T.labels[X[i].minimum] for i in interior) == ["0", "1", "2"]
    B = catalog_get("brandt(2)")
    fixed, interior = fixed_and_interior(B, idx(B, "e21"), proper_characters(B))
    assert fixed == () and interior == ()
    e = idx(B, "e11")
    fixed, interior = fixed_and_interior(B, e, all_characters(B))
    assert fixed == interior


@pytest.mark.parametrize("name", DEFAULT_SEMIGROUPS)
def test_characters_match_subset_scan(name):
    S = catalog_get(name)
    scan = set(filters_by_subset_scan([list(r) for r in S.mul]))
    assert {frozenset(c.members()) for c in all_characters(S)} == scan


@settings(max_examples=len(WITH_ZERO), deadline=None)
@given(st.sampled_from(WITH_ZERO))
def test_tight_matches_definition(name):
    S = catalog_get(name)
    oracle = set(tight_filters_by_definition([list(r) for r in S.mul], S.zero))
    assert {frozenset(c.members()) for c in tight_characters(S)} == oracle
    for c in proper_characters(S):
        assert is_tight_character(S, c) == is_tight_character_exhaustive(S, c)


@pytest.mark.parametrize("name", WITH_ZERO)
def test_finite_ultrafilters_are_tight(name):
    S = catalog_get(name)
    assert {c.mask for c in ultrafilter_characters(S)} == {c.mask for c in tight_characters(S)}
