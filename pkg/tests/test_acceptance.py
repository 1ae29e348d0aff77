"""Acceptance criteria, one test per criterion.

Each criterion prints a single ``PASS``/``FAIL`` line (collected by the
terminal-summary hook in ``conftest.py``) and must finish within 60 seconds.
Run directly with ``python tests/test_acceptance.py`` for the lines alone.
"""
from __future__ import annotations

import itertools
import time

import numpy as np

from groupoidal import linalg
from groupoidal.algebra import (
    groupoid_algebra,
    indicator,
    convolve,
    is_simple,
    radical,
    semigroup_algebra,
    germ_isomorphism,
    tight_relators,
    wedderburn_components,
)
from groupoidal.catalog import DEFAULT_SEMIGROUPS, NAMED_GRAPHS, catalog_get, default_groupoids, groupoid_get, named_graph
from groupoidal.fields import QQ, PrimeField
from groupoidal.germs import (
    all_bisections,
    bisection_product,
    group_groupoid,
    is_effective,
    is_minimal,
    random_bisection,
    standard_groupoid,
)
from groupoidal.leavitt import leavitt_algebra, leavitt_dimension_check
from groupoidal.representations import check_non_annihilation, is_faithful, is_simple_module, k_dense_check, primitivity_witness
from groupoidal.semigroup import classify, enumerate_congruences, maximal_subgroup

from oracles import largest_nil_left_ideal

F2, F3 = PrimeField(2), PrimeField(3)
TIME_LIMIT = 60.0
RESULTS: dict[int, tuple[bool, str, float]] = {}

SEMIGROUPS = [catalog_get(n) for n in DEFAULT_SEMIGROUPS]
SMALL = [S for S in SEMIGROUPS if S.n <= 30]
WITH_ZERO = [S for S in SMALL if S.zero is not None]
GROUPOIDS = default_groupoids()


def record(number: int, title: str, body) -> None:
    """Run ``body`` (returns a detail string or raises), store and print the verdict line."""
    start = time.perf_counter()
    try:
        detail = body()
        ok = True
    except AssertionError as exc:
        ok, detail = False, f"assertion failed: {exc}"
    elapsed = time.perf_counter() - start
    if ok and elapsed >= TIME_LIMIT:
        ok, detail = False, f"took {elapsed:.1f}s (limit {TIME_LIMIT:.0f}s)"
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'} [{elapsed:5.2f}s] {title}: {detail}"
    RESULTS[number] = (ok, line, elapsed)
    print(line)
    assert ok, line


# ---------------------------------------------------------------- 1


def germ_maps():
    checked = 0
    for S, F in itertools.product(SMALL, (QQ, F2, F3)):
        m = germ_isomorphism(S, F)
        n = S.n
        assert m.target.dim == n == m.source.dim, S.name
        assert linalg.rank(m.matrix, F) == n, S.name
        for s, t in itertools.product(range(n), repeat=2):
            lhs = m.matrix[m.elements.index(S.mul[s][t])]
            rhs = m.target.mul(m.matrix[m.elements.index(s)], m.matrix[m.elements.index(t)])
            assert np.array_equal(lhs, rhs), (S.name, str(F), s, t)
        checked += 1
    return f"{checked} (semigroup, field) pairs bijective and multiplicative, dim kU(S) = |S|"


def test_criterion_01_germ_isomorphism():
    record(1, "germ isomorphism kS -> kU(S)", germ_maps)


# ---------------------------------------------------------------- 2


def simplicity_equivalence():
    cases = simple = 0
    for name, F in itertools.product(GROUPOIDS, (F2, F3)):
        G = groupoid_get(name)
        d = is_simple(groupoid_algebra(G, F))
        assert d.value is not None, (name, str(F), "undecided")
        assert d.value == (is_effective(G) and is_minimal(G)), (name, str(F))
        cases += 1
        simple += d.value
    return f"{cases} groupoid/field cases, {simple} simple, 0 disagreements"


def test_criterion_02_simplicity_equivalence():
    record(2, "simple iff effective and minimal", simplicity_equivalence)


# ---------------------------------------------------------------- 3


def contracted_simplicity():
    cases = 0
    for S, F in itertools.product(WITH_ZERO, (F2, F3)):
        r = classify(S)
        d = is_simple(semigroup_algebra(S, F, contracted=True))
        assert d.value == bool(r.is_congruence_free and r.is_tight), (S.name, str(F))
        cases += 1
    for n, F in itertools.product((1, 2, 3), (F2, F3)):
        assert wedderburn_components(semigroup_algebra(catalog_get(f"brandt({n})"), F, contracted=True)) == [n * n]
    for name in ("diamond", "chain(3)", "chain(4)"):
        for F in (F2, F3):
            assert is_simple(semigroup_algebra(catalog_get(name), F, contracted=True)).value is False, name
    return f"{cases} cases agree; brandt(n) -> [n^2]; diamond and chains non-simple"


def test_criterion_03_contracted_simplicity():
    record(3, "k_0S simple iff congruence-free and tight", contracted_simplicity)


# ---------------------------------------------------------------- 4


def clifford_radical():
    for n in (2, 3, 4):
        S = catalog_get(f"truncated_clifford({n})")
        A = semigroup_algebra(S, F2, contracted=True)
        R = radical(A)
        e_minus_a = F2.zeros(A.dim)
        e_minus_a[A.labels.index("e")] = e_minus_a[A.labels.index("a")] = 1
        assert R.shape[0] == 1 and np.array_equal(R[0], e_minus_a), n
        assert not np.any(A.mul(e_minus_a, e_minus_a))
        assert radical(semigroup_algebra(S, QQ, contracted=True)).shape[0] == 0, n
    A = semigroup_algebra(catalog_get("truncated_clifford(2)"), F2, contracted=True)
    oracle = largest_nil_left_ideal(A.C.tolist(), 2)
    R = radical(A)
    assert sorted(oracle) == sorted([tuple([0] * A.dim), tuple(int(v) for v in R[0])])
    return "dim 1 spanned by e-a over F_2 for n = 2,3,4; 0 over Q; brute-force nil ideal agrees at n = 2"


def test_criterion_04_semiprimitivity_counterexample():
    record(4, "radical of F_2 truncated Clifford algebra", clifford_radical)


# ---------------------------------------------------------------- 5


def maximal_subgroup_criterion():
    cases = non_semiprimitive = 0
    for S, F in itertools.product(SEMIGROUPS, (QQ, F2, F3)):
        if S.n > 30:
            continue
        whole = radical(semigroup_algebra(S, F)).shape[0] == 0
        groups = all(
            radical(groupoid_algebra(group_groupoid(maximal_subgroup(S, e)), F)).shape[0] == 0
            for e in S.idempotents
        )
        assert whole == groups, (S.name, str(F))
        cases += 1
        non_semiprimitive += not whole
    return f"{cases} cases, {non_semiprimitive} with nonzero radical, 0 exceptions"


def test_criterion_05_maximal_subgroup_semiprimitivity():
    record(5, "kS semiprimitive iff every kG_e is", maximal_subgroup_criterion)


# ---------------------------------------------------------------- 6


def tight_presentation():
    cases = 0
    for S, F in itertools.product(WITH_ZERO, (QQ, F2)):
        pres = tight_relators(S, F)
        n = pres.algebra.dim
        I, K = pres.ideal, pres.kernel
        assert I.shape[0] == K.shape[0], S.name
        assert linalg.span_contains(K, I, F, n) and linalg.span_contains(I, K, F, n), S.name
        assert n - K.shape[0] == standard_groupoid(S, "tight").n_arrows, S.name
        cases += 1
    return f"{cases} cases: relator ideal = kernel of k_0S -> kU_T(S)"


def test_criterion_06_tight_presentation():
    record(6, "minimal-cover relators generate the tight kernel", tight_presentation)


# ---------------------------------------------------------------- 7


def tight_effective_minimal():
    effective_cases = minimal_cases = 0
    for S in WITH_ZERO:
        r = classify(S)
        if r.is_fundamental and r.is_0_disjunctive:
            assert is_effective(standard_groupoid(S, "ultrafilter")), S.name
            effective_cases += 1
        if r.is_0_simple:
            assert is_minimal(standard_groupoid(S, "tight")), S.name
            minimal_cases += 1
    assert effective_cases and minimal_cases
    return f"{effective_cases} ultrafilter groupoids effective, {minimal_cases} tight groupoids minimal"


def test_criterion_07_tight_groupoid_effective_minimal():
    record(7, "ultrafilter groupoid effective, U_T minimal", tight_effective_minimal)


# ---------------------------------------------------------------- 8


LEAVITT_GRAPHS = ("edge", "parallel", "path2", "star", "two_vertices", "edge_plus_vertex", "in_star", "diamond_graph")


def leavitt_identification():
    assert set(LEAVITT_GRAPHS) <= set(NAMED_GRAPHS)
    for name, F in itertools.product(LEAVITT_GRAPHS, (QQ, F2)):
        E = named_graph(name)
        L = leavitt_algebra(E, F)
        expected = sum(E.paths_ending_at(v) ** 2 for v in E.sinks())
        assert L.dim == expected == L.presentation.quotient_dim, name
        assert linalg.rank(L.isomorphism, F) == L.dim
        report = leavitt_dimension_check(E, F, L)
        assert report.ok
    return f"{len(LEAVITT_GRAPHS)} graphs over Q and F_2: dim = sum of squared path counts, constructions isomorphic"


def test_criterion_08_leavitt_identification():
    record(8, "tight groupoid algebra = Leavitt path algebra", leavitt_identification)


# ---------------------------------------------------------------- 9


def convolution_identities():
    G0 = groupoid_get("contracted:brandt(2)")
    bis = all_bisections(G0)
    for U, V in itertools.product(bis, repeat=2):
        got = convolve(G0, QQ, indicator(G0, QQ, U), indicator(G0, QQ, V))
        assert np.array_equal(got, indicator(G0, QQ, bisection_product(G0, U, V)))
    exhaustive = len(bis) ** 2

    rng = np.random.default_rng(20240901)
    others = [n for n in GROUPOIDS if n != "contracted:brandt(2)"]
    sampled = 0
    while sampled < 1000:
        G = groupoid_get(others[sampled % len(others)])
        U, V = random_bisection(G, rng), random_bisection(G, rng)
        got = convolve(G, F3, indicator(G, F3, U), indicator(G, F3, V))
        assert np.array_equal(got, indicator(G, F3, bisection_product(G, U, V))), G.name
        sampled += 1

    triples = 0
    for name in GROUPOIDS:
        G = groupoid_get(name)
        for _ in range(200):
            phi = F3.array([F3.random_element(rng) for _ in range(G.n_arrows)])
            U = random_bisection(G, rng)
            while not U:
                U = random_bisection(G, rng)
            h = sorted(U)[int(rng.integers(len(U)))]
            gs = [g for g in range(G.n_arrows) if G.d[g] == G.r[h]]
            g = gs[int(rng.integers(len(gs)))]
            val = convolve(G, F3, phi, indicator(G, F3, U))[G.compose[g][h]]
            assert val == phi[g], (name, g, h)
            assert (val != 0) == (phi[g] != 0)
            triples += 1
    return f"{exhaustive} exhaustive pairs on U_0(B_2), {sampled} sampled pairs, {triples} right-translation triples"


def test_criterion_09_convolution_identities():
    record(9, "bisection indicator products and right translation", convolution_identities)


# ---------------------------------------------------------------- 10


def non_annihilation():
    total = 0
    for i, name in enumerate(GROUPOIDS):
        res = check_non_annihilation(groupoid_get(name), F2, samples=200, seed=1000 + i)
        assert res.violations == 0 and res.zero_a == 0, (name, res)
        total += res.samples
    return f"{total} random elements over {len(GROUPOIDS)} groupoids, 0 violations, element a nonzero every time"


def test_criterion_10_non_annihilation():
    record(10, "phi . Ind_x(V_x) != 0 for faithful V_x", non_annihilation)


# ---------------------------------------------------------------- 11


def congruence_oracle():
    cases = free = 0
    for S in SEMIGROUPS:
        if S.n > 8:
            continue
        count = len(enumerate_congruences(S))
        assert (count == 2) == classify(S).is_congruence_free, (S.name, count)
        cases += 1
        free += count == 2
    return f"{cases} semigroups with |S| <= 8, {free} congruence-free, 0 exceptions"


def test_criterion_11_congruence_oracle():
    record(11, "congruence count 2 iff criterion flag", congruence_oracle)


# ---------------------------------------------------------------- 12


def primitivity():
    cases = primitive = 0
    for name, F in itertools.product(GROUPOIDS, (F2, F3)):
        G = groupoid_get(name)
        A = groupoid_algebra(G, F)
        report = primitivity_witness(G, F, A)
        direct = is_simple(A).value
        assert report.verdict == direct and report.method == "both-agree", (name, str(F))
        if direct:
            assert report.dense_orbits, name
            assert all(k_dense_check(G, F, O) for O in report.dense_orbits)
            W = report.witness
            assert W is not None and is_faithful(W) and is_simple_module(W).verdict == "simple", name
            primitive += 1
        cases += 1
    return f"{cases} cases, {primitive} primitive, each with a k-dense orbit and a faithful simple induced module"


def test_criterion_12_primitivity():
    record(12, "primitivity witness vs direct decision", primitivity)


if __name__ == "__main__":
    for fn in sorted(k for k in globals() if k.startswith("test_criterion_")):
        try:
            globals()[fn]()
        except AssertionError:
            pass
    print(f"{sum(ok for ok, _, _ in RESULTS.values())}/{len(RESULTS)} criteria passed")
