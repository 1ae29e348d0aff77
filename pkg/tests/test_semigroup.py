import pytest
from hypothesis import given, settings, strategies as st

from groupoidal.catalog import DEFAULT_SEMIGROUPS, catalog_get
from groupoidal.errors import BadParams, ClosureTooLarge, NotAssociative, NotIdempotent, NotInverse, TooLarge, UnknownName
from groupoidal.semigroup import (
    PartialInjection,
    build_from_partial_injections,
    build_from_table,
    classify,
    enumerate_congruences,
    is_simple_group,
    maximal_subgroup,
    natural_order,
)

from oracles import congruences_by_partition_scan


def idx(S, label):
    return S.labels.index(label)


SMALL = [n for n in DEFAULT_SEMIGROUPS if catalog_get(n).n <= 8]


# ---------------------------------------------------------------- construction


def test_trivial_group_table():
    S = build_from_table([[0]])
    assert S.n == 1 and S.idempotents == (0,) and S.zero is None


def test_two_element_chain_has_zero():
    S = build_from_table([[0, 0], [0, 1]])
    assert S.zero == 0 and S.idempotents == (0, 1)


def test_brandt_table_valid_with_zero_last():
    S = catalog_get("brandt(2)")
    assert S.n == 5 and S.labels[S.zero] == "0"
    assert S.labels[S.inv[idx(S, "e12")]] == "e21"


def test_non_associative_table_reports_triple():
    with pytest.raises(NotAssociative) as exc:
        build_from_table([[1, 1], [0, 0]])
    assert len(exc.value.witness) == 3


def test_table_without_inverses_rejected():
    # {0, 1} under max with 1 absorbing is fine; left-zero band is not inverse
    with pytest.raises(NotInverse):
        build_from_table([[0, 0], [1, 1]])


def test_identity_generator_gives_trivial_monoid():
    S = build_from_partial_injections([PartialInjection(2, frozenset({(0, 0), (1, 1)}))])
    assert S.n == 1


def test_single_partial_map_closes_to_brandt():
    S = build_from_partial_injections([PartialInjection(2, frozenset({(0, 1)}))])
    assert S.n == 5 and S.zero is not None
    assert classify(S).is_congruence_free


def test_transpositions_generate_s3():
    t01 = PartialInjection(3, frozenset({(0, 1), (1, 0), (2, 2)}))
    t12 = PartialInjection(3, frozenset({(0, 0), (1, 2), (2, 1)}))
    S = build_from_partial_injections([t01, t12])
    assert S.n == 6 and S.zero is None and len(S.idempotents) == 1


def test_closure_cap(monkeypatch):
    monkeypatch.setenv("GROUPOIDAL_MAX_CLOSURE", "4")
    with pytest.raises(ClosureTooLarge):
        build_from_partial_injections([PartialInjection(2, frozenset({(0, 1)}))])


def test_symmetric_inverse_monoid_sizes():
    assert [catalog_get(f"sym_inverse({n})").n for n in (1, 2, 3)] == [2, 7, 34]


# ---------------------------------------------------------------- order and subgroups


def test_natural_order_examples():
    B = catalog_get("brandt(2)")
    assert all(B.leq(s, s) for s in range(B.n))
    assert not B.leq(idx(B, "e11"), idx(B, "e12"))
    assert B.leq(idx(B, "0"), idx(B, "e12"))
    T = catalog_get("truncated_clifford(2)")
    assert T.leq(idx(T, "1"), idx(T, "a"))


@pytest.mark.parametrize("name", DEFAULT_SEMIGROUPS)
def test_natural_order_is_partial_order(name):
    S = catalog_get(name)
    leq = natural_order(S)
    n = S.n
    for s in range(n):
        assert leq[s][s]
        for t in range(n):
            if s != t and leq[s][t]:
                assert not leq[t][s]
            for u in range(n):
                if leq[s][t] and leq[t][u]:
                    assert leq[s][u]


def test_maximal_subgroups():
    T = catalog_get("truncated_clifford(2)")
    Ge = maximal_subgroup(T, idx(T, "e"))
    assert sorted(T.labels[g] for g in Ge.elements) == ["a", "e"]
    B = catalog_get("brandt(2)")
    assert maximal_subgroup(B, idx(B, "e11")).order == 1
    C = catalog_get("chain(3)")
    assert all(maximal_subgroup(C, e).order == 1 for e in C.idempotents)
    with pytest.raises(NotIdempotent):
        maximal_subgroup(T, idx(T, "a"))


def test_group_simplicity():
    S3 = catalog_get("symmetric_group(3)")
    assert not is_simple_group(maximal_subgroup(S3, S3.idempotents[0]))
    Z3 = catalog_get("cyclic_group(3)")
    assert is_simple_group(maximal_subgroup(Z3, 0))


# ---------------------------------------------------------------- classification


def test_classify_brandt():
    r = classify(catalog_get("brandt(2)"))
    assert r.is_congruence_free and r.is_tight and r.is_0_simple


def test_classify_diamond():
    r = classify(catalog_get("diamond"))
    assert r.is_0_disjunctive and not r.is_0_simple and r.is_tight is False


def test_classify_truncated_clifford():
    r = classify(catalog_get("truncated_clifford(2)"))
    assert not r.is_fundamental
    assert r.is_hausdorff and r.is_pseudofinite


@pytest.mark.parametrize("name", DEFAULT_SEMIGROUPS)
def test_graph_and_every_catalog_member_hausdorff(name):
    assert classify(catalog_get(name)).is_hausdorff


def test_graph_inverse_semigroups_are_zero_e_unitary():
    for g in ("edge", "parallel", "path2"):
        assert classify(catalog_get(f"graph_inverse({g})")).is_0_e_unitary


# ---------------------------------------------------------------- congruences


def test_congruence_counts():
    assert len(enumerate_congruences(build_from_table([[0]]))) == 1
    assert len(enumerate_congruences(catalog_get("chain(2)"))) == 2
    assert len(enumerate_congruences(catalog_get("brandt(2)"))) == 2


def test_congruence_cap():
    with pytest.raises(TooLarge):
        enumerate_congruences(catalog_get("brandt(3)"))


@settings(max_examples=len(SMALL), deadline=None)
@given(st.sampled_from(SMALL))
def test_congruences_match_partition_scan(name):
    S = catalog_get(name)
    ours = enumerate_congruences(S)
    scan = congruences_by_partition_scan([list(r) for r in S.mul])
    canon = {tuple(min(b) for x in range(S.n) for b in part if x in b) for part in scan}
    assert set(ours) == canon


# ---------------------------------------------------------------- catalog


def test_catalog_examples():
    assert catalog_get("brandt(2)").n == 5
    T = catalog_get("truncated_clifford(2)")
    assert T.n == 5 and all(T.mul[a][b] == T.mul[b][a] for a in range(5) for b in range(5))
    C = catalog_get("chain(3)")
    assert C.n == 3 and len(C.idempotents) == 3


def test_catalog_errors():
    with pytest.raises(UnknownName):
        catalog_get("nonsense(2)")
    with pytest.raises(BadParams):
        catalog_get("brandt(0)")
    with pytest.raises(BadParams):
        catalog_get("brandt(x)")


def test_catalog_params_form():
    assert catalog_get("brandt", (3,)).n == 10
