import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from groupoidal.catalog import DEFAULT_SEMIGROUPS, catalog_get, default_groupoids, groupoid_get
from groupoidal.errors import NotABisection, NotInvariant
from groupoidal.germs import (
    LocalBisection,
    all_bisections,
    bisection_ops,
    effective_by_action,
    effective_by_isotropy,
    germ_groupoid,
    group_groupoid,
    is_effective,
    is_minimal,
    orbits_and_isotropy,
    pair_groupoid,
    random_bisection,
    restrict,
    standard_groupoid,
)
from groupoidal.semigroup import maximal_subgroup
from groupoidal.spectrum import all_characters, principal_character, proper_characters

from oracles import universal_arrow_count

GROUPOIDS = default_groupoids()


def idx(S, label):
    return S.labels.index(label)


def test_group_with_one_point_is_the_group():
    S = catalog_get("symmetric_group(3)")
    G = germ_groupoid(S, all_characters(S))
    assert G.n_objects == 1 and G.n_arrows == 6


def test_brandt_germ_groupoids():
    B = catalog_get("brandt(2)")
    assert germ_groupoid(B, proper_characters(B)).n_arrows == 4
    assert germ_groupoid(B, all_characters(B)).n_arrows == 5
    assert [standard_groupoid(B, k).n_arrows for k in ("universal", "contracted", "tight")] == [5, 4, 4]


def test_non_invariant_set_rejected():
    B = catalog_get("brandt(2)")
    with pytest.raises(NotInvariant):
        germ_groupoid(B, [principal_character(B, idx(B, "e11"))])


def test_semilattice_groupoid_is_unit_space():
    G = standard_groupoid(catalog_get("chain(3)"), "universal")
    assert G.n_arrows == 3 and all(G.is_unit(g) for g in range(3))


def test_truncated_clifford_universal():
    T = catalog_get("truncated_clifford(2)")
    G = standard_groupoid(T, "universal")
    assert G.n_objects == 4 and G.n_arrows == 5
    data = orbits_and_isotropy(G)
    assert all(len(O) == 1 for O in data.orbits)
    x = next(i for i, c in enumerate(G.action.X) if c.minimum == idx(T, "e"))
    assert data.isotropy[x].order == 2
    assert not is_effective(G)


@pytest.mark.parametrize("name", DEFAULT_SEMIGROUPS)
def test_arrow_counts_match_germ_oracle(name):
    S = catalog_get(name)
    if S.n > 30:
        pytest.skip("oracle limited to small semigroups")
    mul = [list(r) for r in S.mul]
    assert standard_groupoid(S, "universal").n_arrows == universal_arrow_count(mul) == S.n
    if S.zero is not None:
        assert standard_groupoid(S, "contracted").n_arrows == universal_arrow_count(mul, S.zero) == S.n - 1


def test_orbits_and_minimality():
    P = pair_groupoid(2)
    data = orbits_and_isotropy(P)
    assert len(data.orbits) == 1 and all(H.order == 1 for H in data.isotropy)
    U = groupoid_get("universal:brandt(2)")
    B = catalog_get("brandt(2)")
    orbit_minima = sorted(sorted(B.labels[U.action.X[x].minimum] for x in O) for O in orbits_and_isotropy(U).orbits)
    assert orbit_minima == [["0"], ["e11", "e22"]]
    assert is_minimal(groupoid_get("contracted:brandt(2)")) and not is_minimal(U)
    assert is_minimal(groupoid_get("group(cyclic_group(2))"))


def test_effectiveness_examples():
    assert is_effective(groupoid_get("contracted:brandt(2)"))
    assert not is_effective(groupoid_get("group(cyclic_group(2))"))


@pytest.mark.parametrize("name", GROUPOIDS)
def test_groupoid_axioms_and_dual_effectiveness(name):
    G = groupoid_get(name)
    G.validate()
    if G.action is not None:
        assert effective_by_isotropy(G) == effective_by_action(G)


def test_bisection_examples():
    P = pair_groupoid(2)
    units = frozenset(P.unit)
    a = next(g for g in range(P.n_arrows) if P.d[g] == 0 and P.r[g] == 1)
    b = P.inv[a]
    ops = bisection_ops(P, {a}, {b})
    assert ops.is_valid and ops.product == {P.unit[1]} and ops.star == {b}
    for V in all_bisections(P):
        assert bisection_ops(P, units, V).product == V
    with pytest.raises(NotABisection):
        LocalBisection.of(P, {P.unit[0], next(g for g in range(P.n_arrows) if P.d[g] == 0 and g != P.unit[0])})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GROUPOIDS), st.integers(0, 2**32 - 1))
def test_bisection_products_stay_bisections(name, seed):
    G = groupoid_get(name)
    rng = np.random.default_rng(seed)
    U, V = random_bisection(G, rng), random_bisection(G, rng)
    ops = bisection_ops(G, U, V)
    assert ops.is_valid
    assert bisection_ops(G, ops.product, ops.product).is_valid


def test_restriction_examples():
    U = groupoid_get("universal:brandt(2)")
    assert restrict(U, range(U.n_objects)).n_arrows == U.n_arrows
    proper = [i for i, c in enumerate(U.action.X) if c.is_proper]
    R = restrict(U, proper)
    C = groupoid_get("contracted:brandt(2)")
    assert R.n_arrows == C.n_arrows
    assert sorted(R.arrow_label(g) for g in range(R.n_arrows)) == sorted(C.arrow_label(g) for g in range(C.n_arrows))
    assert restrict(pair_groupoid(2), [0]).n_arrows == 1


def test_group_groupoid_from_maximal_subgroup():
    S = catalog_get("symmetric_group(3)")
    G = group_groupoid(maximal_subgroup(S, S.idempotents[0]))
    assert G.n_objects == 1 and G.n_arrows == 6 and not is_effective(G)
