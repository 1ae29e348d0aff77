"""Modules over groupoid algebras: Schützenberger and induced modules,
annihilators, irreducibility (MeatAxe), k-density and the witness modules for
semiprimitivity and primitivity.

A module over an algebra ``A`` stores one matrix per basis element of ``A``;
matrices act on column vectors and ``rho(b_i) rho(b_j) = rho(b_i b_j)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from . import polynomials as P
from .algebra import (
    FiniteDimAlgebra,
    SimplicityDecision,
    groupoid_algebra,
    is_simple,
    radical,
)
from .errors import InternalInconsistency, VerificationFailed
from .fields import Field, PrimeField
from .germs import FiniteGroupoid, group_groupoid, orbits_and_isotropy
from .semigroup import FiniteGroup


@dataclass(frozen=True, eq=False)
class FiniteDimModule:
    algebra: FiniteDimAlgebra
    matrices: np.ndarray  # (dim A, m, m)
    tag: str = ""

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.matrices.shape[1]

    def __repr__(self):
        return f"FiniteDimModule({self.tag}, dim={self.dim})"

    def matrix_of(self, a) -> np.ndarray:
        F = self.field
        a = F.array(a)
        if self.dim == 0:
            return F.zeros((0, 0))
        flat = self.matrices.reshape(self.matrices.shape[0], -1)
        return linalg.matmul(a.reshape(1, -1), flat, F).reshape(self.dim, self.dim)

    def act(self, a, v) -> np.ndarray:
        return linalg.matmul(self.matrix_of(a), self.field.array(v).reshape(-1, 1), self.field).ravel()

    def check_homomorphism(self) -> None:
        A, F = self.algebra, self.field
        n = A.dim
        for i, j in itertools.product(range(n), repeat=2):
            lhs = linalg.matmul(self.matrices[i], self.matrices[j], F)
            rhs = self.matrix_of(A.C[i, j])
            if np.any(lhs != rhs):
                raise VerificationFailed("action is not multiplicative", witness=(self.tag, i, j))


def _module(A, mats, tag, check=True) -> FiniteDimModule:
    M = FiniteDimModule(A, mats, tag)
    if check:
        M.check_homomorphism()
    return M


# ---------------------------------------------------------------- group modules


@dataclass(frozen=True, eq=False)
class GroupModule:
    """A representation of a finite group; ``matrices[i]`` is the image of local element ``i``."""

    group: FiniteGroup
    matrices: np.ndarray
    field: Field
    tag: str = ""

    @property
    def dim(self) -> int:
        return self.matrices.shape[1]

    def check(self) -> None:
        G, F = self.group, self.field
        for a, b in itertools.product(range(G.order), repeat=2):
            if np.any(linalg.matmul(self.matrices[a], self.matrices[b], F) != self.matrices[G.table[a][b]]):
                raise VerificationFailed("not a group representation", witness=(a, b))


def trivial_group_module(G: FiniteGroup, F: Field) -> GroupModule:
    return GroupModule(G, np.stack([F.eye(1)] * G.order), F, "trivial")


def regular_group_module(G: FiniteGroup, F: Field) -> GroupModule:
    m = G.order
    mats = F.zeros((m, m, m))
    for a, b in itertools.product(range(m), repeat=2):
        mats[a, G.table[a][b], b] = F.scalar(1)
    return GroupModule(G, mats, F, "regular")


def sign_module(G: FiniteGroup, F: Field, sign) -> GroupModule:
    """One-dimensional module with ``g -> sign[g]`` (a homomorphism to +-1)."""
    mats = np.stack([F.array([[sign[g]]]) for g in range(G.order)])
    V = GroupModule(G, mats, F, "sign")
    V.check()
    return V


def group_module_as_module(V: GroupModule) -> FiniteDimModule:
    A = groupoid_algebra(group_groupoid(V.group), V.field)
    return _module(A, V.matrices, f"group-module {V.tag}")


def module_as_group_module(M: FiniteDimModule, G: FiniteGroup) -> GroupModule:
    """For an algebra built by ``group_groupoid(G)``, the basis is ``G`` itself."""
    return GroupModule(G, M.matrices, M.field, M.tag)


# ---------------------------------------------------------------- groupoid modules


def transversal(G: FiniteGroupoid, x: int) -> dict[int, int]:
    """``y -> h_y``: the least-index arrow ``x -> y`` for each ``y`` in the orbit of ``x``."""
    out: dict[int, int] = {}
    for g in range(G.n_arrows):
        if G.d[g] == x and G.r[g] not in out:
            out[G.r[g]] = g
    return dict(sorted(out.items()))


@dataclass(frozen=True, eq=False)
class SchutzenbergerModule:
    module: FiniteDimModule
    basis: tuple[int, ...]  # arrows with domain x
    isotropy: FiniteGroup
    right_action: np.ndarray  # (|G_x|, m, m): t -> t h


def schutzenberger_module(G: FiniteGroupoid, x: int, F: Field, A: FiniteDimAlgebra | None = None) -> SchutzenbergerModule:
    """``k L_x`` with ``delta_g . t = g t`` when ``d(g) = r(t)``; the right ``G_x`` action is checked free."""
    A = A or groupoid_algebra(G, F)
    L = tuple(g for g in range(G.n_arrows) if G.d[g] == x)
    pos = {t: i for i, t in enumerate(L)}
    m = len(L)
    mats = F.zeros((G.n_arrows, m, m))
    for g in range(G.n_arrows):
        for t in L:
            gt = G.compose[g][t]
            if gt >= 0:
                mats[g, pos[gt], pos[t]] = F.scalar(1)
    Gx = orbits_and_isotropy(G).isotropy[x]
    right = F.zeros((Gx.order, m, m))
    for k, h in enumerate(Gx.elements):
        images = set()
        for t in L:
            th = G.compose[t][h]
            if h != G.unit[x] and th == t:
                raise VerificationFailed("isotropy does not act freely", witness=(t, h))
            images.add(th)
            right[k, pos[th], pos[t]] = F.scalar(1)
        if len(images) != m:
            raise VerificationFailed("right isotropy action is not a permutation", witness=h)
    M = _module(A, mats, f"schutzenberger {G.object_label(x)}")
    return SchutzenbergerModule(M, L, Gx, right)


def induced_module(
    G: FiniteGroupoid, x: int, V: GroupModule, F: Field, A: FiniteDimAlgebra | None = None
) -> FiniteDimModule:
    """``Ind_x(V) = ⊕_y h_y ⊗ V``; ``delta_g`` sends ``h_y ⊗ v`` to ``h_{r(g)} ⊗ rho(h_{r(g)}^-1 g h_y) v``."""
    A = A or groupoid_algebra(G, F)
    h = transversal(G, x)
    Gx = V.group
    local = {g: i for i, g in enumerate(Gx.elements)}
    ys = list(h)
    block = {y: i for i, y in enumerate(ys)}
    d = V.dim
    m = len(ys) * d
    mats = F.zeros((G.n_arrows, m, m))
    for g in range(G.n_arrows):
        y = G.d[g]
        if y not in block:
            continue
        target = G.r[g]
        k = G.compose[G.inv[h[target]]][G.compose[g][h[y]]]
        bi, bj = block[target] * d, block[y] * d
        mats[g, bi : bi + d, bj : bj + d] = V.matrices[local[k]]
    return _module(A, mats, f"induced {G.object_label(x)} {V.tag}")


def orbit_module(G: FiniteGroupoid, x: int, F: Field, A=None) -> FiniteDimModule:
    Gx = orbits_and_isotropy(G).isotropy[x]
    return induced_module(G, x, trivial_group_module(Gx, F), F, A)


def direct_sum(modules, tag="direct-sum") -> FiniteDimModule:
    modules = list(modules)
    A = modules[0].algebra
    F = A.field
    m = sum(M.dim for M in modules)
    mats = F.zeros((A.dim, m, m))
    off = 0
    for M in modules:
        mats[:, off : off + M.dim, off : off + M.dim] = M.matrices
        off += M.dim
    return FiniteDimModule(A, mats, tag)


def regular_module(A: FiniteDimAlgebra) -> FiniteDimModule:
    return FiniteDimModule(A, A.regular_matrices, "regular")


def submodule(M: FiniteDimModule, W) -> FiniteDimModule:
    """Restriction of ``M`` to the invariant subspace spanned by the rows of ``W``."""
    F = M.field
    W = linalg.row_basis(W, F, M.dim)
    k = W.shape[0]
    mats = F.zeros((M.algebra.dim, k, k))
    for i in range(M.algebra.dim):
        images = linalg.matmul(W, M.matrices[i].T, F)  # row r = rho_i W[r]
        for r in range(k):
            c = linalg.coordinates(W, images[r], F)
            if c is None:
                raise VerificationFailed("subspace is not invariant")
            mats[i, :, r] = c
    return FiniteDimModule(M.algebra, mats, f"sub({M.tag})")


# ---------------------------------------------------------------- annihilators and spinning


def annihilator(M: FiniteDimModule) -> np.ndarray:
    """Basis of ``{a in A : rho(a) = 0}``."""
    F = M.field
    n = M.algebra.dim
    flat = M.matrices.reshape(n, -1)
    return linalg.row_basis(linalg.nullspace(flat.T, F, n), F, n)


def is_faithful(M: FiniteDimModule) -> bool:
    return annihilator(M).shape[0] == 0


def spin(mats, vectors, F: Field, n: int) -> np.ndarray:
    """Smallest subspace containing ``vectors`` and invariant under every matrix."""
    span = linalg.Span(F, n)
    frontier = [v for v in linalg.as_matrix(vectors, F, n) if span.add(v)]
    while frontier:
        W = np.array(frontier, dtype=frontier[0].dtype)
        frontier = []
        for X in mats:
            for v in linalg.matmul(W, X.T, F):
                if span.add(v):
                    frontier.append(v)
    return span.matrix()


def _matrix_minpoly(X: np.ndarray, F: Field) -> list:
    m = X.shape[0]
    powers = [F.eye(m)]
    while True:
        nxt = linalg.matmul(powers[-1], X, F)
        M = np.array([p.reshape(-1) for p in powers], dtype=nxt.dtype)
        c = linalg.coordinates(M, nxt.reshape(-1), F)
        if c is not None:
            return [F.reduce(-ci) for ci in c] + [F.scalar(1)]
        powers.append(nxt)


def _poly_at_matrix(coeffs, X: np.ndarray, F: Field) -> np.ndarray:
    m = X.shape[0]
    acc = F.zeros((m, m))
    for c in reversed(coeffs):
        acc = F.reduce(linalg.matmul(acc, X, F) + F.scalar(c) * F.eye(m))
    return acc


def _random_algebra_element(mats, F: Field, rng) -> np.ndarray:
    gens = [X for X in mats if np.any(X != 0)]
    m = mats.shape[1]
    theta = F.zeros((m, m))
    for X in gens:
        theta = F.reduce(theta + F.random_element(rng) * X)
    for _ in range(2):
        a, b = rng.integers(0, len(gens), size=2)
        prod = linalg.matmul(gens[a], gens[b], F)
        theta = F.reduce(theta + F.random_element(rng) * prod)
    return theta


def is_simple_module(M: FiniteDimModule, seed: int = 0, attempts: int = 64) -> SimplicityDecision:
    """Irreducibility test.

    Over F_p this is the Holt-Rees MeatAxe: for a random element ``theta`` of
    the acting algebra and an irreducible factor ``f`` of its minimal
    polynomial, spin a vector of ``ker f(theta)`` (proper spin: reducible) and
    a vector of ``ker f(theta)^T`` under the transposes; if both are full and
    ``dim ker f(theta) = deg f`` the module is irreducible (Norton).  Over Q
    only rational eigenvalues are used and the result may be ``undecided``.
    """
    verdict, method, sub = _meataxe(M, seed, attempts)
    witness = {} if sub is None else {"submodule_dim": int(sub.shape[0])}
    return SimplicityDecision(verdict, method, witness)


def _meataxe(M: FiniteDimModule, seed: int, attempts: int = 64):
    """``(verdict, method, proper submodule rows or None)``."""
    F = M.field
    m = M.dim
    mats = M.matrices
    if m == 0 or not np.any(mats != 0):
        return "not_simple", "zero-action", None
    rng = np.random.default_rng(seed)
    mats_T = np.stack([X.T for X in mats])
    for _ in range(attempts):
        theta = _random_algebra_element(mats, F, rng)
        mp = _matrix_minpoly(theta, F)
        if isinstance(F, PrimeField):
            factors = [g for g, _ in P.factor([int(c) for c in mp], F.p)]
        else:
            factors = [[-r, 1] for r in P.rational_roots(mp)]
        for f in sorted(factors, key=len):
            fx = _poly_at_matrix(f, theta, F)
            N = linalg.nullspace(fx, F, m)
            if N.shape[0] == 0:
                continue
            W = spin(mats, N[:1], F, m)
            if W.shape[0] < m:
                return "not_simple", "spin", W
            if N.shape[0] == len(f) - 1:
                NT = linalg.nullspace(fx.T, F, m)
                WT = spin(mats_T, NT[:1], F, m)
                if WT.shape[0] < m:
                    # vectors killed by an invariant subspace of the dual form a submodule
                    return "not_simple", "dual-spin", linalg.nullspace(WT, F, m)
                return "simple", "norton", None
    if isinstance(F, PrimeField):
        raise VerificationFailed("MeatAxe found no decisive element", witness=M.tag)
    for v in F.eye(m):
        W = spin(mats, v.reshape(1, -1), F, m)
        if W.shape[0] < m:
            return "not_simple", "spin", W
    return "undecided", "rational-spin-exhausted", None


def simple_submodule(M: FiniteDimModule, seed: int = 0) -> FiniteDimModule:
    """A simple submodule of ``M`` (F_p), found by repeated splitting."""
    current = M
    while True:
        verdict, _, W = _meataxe(current, seed)
        if verdict == "simple":
            return current
        if W is None:
            raise VerificationFailed("cannot split a module that is not simple", witness=current.tag)
        current = submodule(current, W)


# ---------------------------------------------------------------- density and witnesses


def null_set(G: FiniteGroupoid, F: Field, X) -> np.ndarray:
    """Basis of ``N(X) = {phi : phi(g) = 0 whenever d(g) in X}``."""
    X = set(X)
    rows = [np.eye(G.n_arrows, dtype=np.int64)[g] for g in range(G.n_arrows) if G.d[g] in X]
    cons = F.array(rows) if rows else F.zeros((0, G.n_arrows))
    return linalg.nullspace(cons, F, G.n_arrows)


def k_dense_check(G: FiniteGroupoid, F: Field, X) -> bool:
    X = set(X)
    dense = null_set(G, F, X).shape[0] == 0
    # finite discrete case: k-dense exactly when X is everything
    if dense != (X >= set(range(G.n_objects))):
        raise InternalInconsistency("k-density disagrees with the discrete criterion", witness=sorted(X))
    return dense


def isotropy_algebra(G: FiniteGroupoid, x: int, F: Field) -> FiniteDimAlgebra:
    Gx = orbits_and_isotropy(G).isotropy[x]
    return groupoid_algebra(group_groupoid(Gx), F)


@dataclass(frozen=True, eq=False)
class SemiprimitivityReport:
    semiprimitive_points: tuple[int, ...]
    dense: bool
    witness: FiniteDimModule | None
    witness_faithful: bool | None
    radical_dim: int
    verdict: bool
    method: str


def semiprimitivity_witness(G: FiniteGroupoid, F: Field, A: FiniteDimAlgebra | None = None) -> SemiprimitivityReport:
    A = A or groupoid_algebra(G, F)
    data = orbits_and_isotropy(G)
    X = tuple(x for x in range(G.n_objects) if radical(isotropy_algebra(G, x, F)).shape[0] == 0)
    dense = k_dense_check(G, F, X)
    witness, faithful = None, None
    if dense:
        parts = [
            induced_module(G, x, regular_group_module(data.isotropy[x], F), F, A) for x in X
        ]
        witness = direct_sum(parts, "semiprimitivity-witness")
        faithful = is_faithful(witness)
        if not faithful:
            raise VerificationFailed("induced witness module is not faithful", witness=G.name)
    rad = radical(A).shape[0]
    direct = rad == 0
    if dense and not direct:
        raise InternalInconsistency("dense semiprimitive isotropy but nonzero radical", witness=G.name)
    if direct and not dense:
        raise InternalInconsistency("semiprimitive algebra with non-dense semiprimitive isotropy", witness=G.name)
    method = "both-agree" if dense else "algebra-linear-algebra"
    return SemiprimitivityReport(X, dense, witness, faithful, rad, direct, method)


@dataclass(frozen=True, eq=False)
class PrimitivityReport:
    dense_orbits: tuple[tuple[int, ...], ...]
    isotropy_primitive: bool | None
    witness: FiniteDimModule | None
    witness_decision: bool | None
    direct_decision: bool | None
    verdict: bool | None
    method: str


def primitivity_witness(G: FiniteGroupoid, F: Field, A: FiniteDimAlgebra | None = None, seed: int = 0) -> PrimitivityReport:
    """Primitive iff some dense orbit has a primitive isotropy algebra.

    Finite-dimensional algebras are primitive exactly when simple, which gives
    the direct decision; the two must agree.
    """
    A = A or groupoid_algebra(G, F)
    data = orbits_and_isotropy(G)
    dense_orbits = tuple(O for O in data.orbits if k_dense_check(G, F, O))
    iso_prim, witness, witness_decision = None, None, False
    for O in dense_orbits:
        x = O[0]
        B = isotropy_algebra(G, x, F)
        iso = is_simple(B, seed)
        iso_prim = iso.value
        if iso_prim is None:
            witness_decision = None
            continue
        if iso_prim:
            witness_decision = True
            if isinstance(F, PrimeField):
                V = simple_submodule(regular_module(B), seed)
                Vx = module_as_group_module(V, data.isotropy[x])
                witness = induced_module(G, x, Vx, F, A)
                if not is_faithful(witness) or is_simple_module(witness, seed).verdict != "simple":
                    raise VerificationFailed("induced module from a primitive isotropy is not faithful simple")
            break
    direct = is_simple(A, seed).value
    if direct and not dense_orbits:
        raise InternalInconsistency("primitive algebra without a dense orbit", witness=G.name)
    if direct is not None and witness_decision is not None and direct != witness_decision:
        raise InternalInconsistency(
            "witness and direct primitivity decisions disagree", witness=(witness_decision, direct)
        )
    if direct is None and witness_decision is None:
        return PrimitivityReport(dense_orbits, iso_prim, witness, None, None, None, "undecided")
    verdict = direct if direct is not None else witness_decision
    method = "both-agree" if direct is not None and witness_decision is not None else (
        "algebra-linear-algebra" if witness_decision is None else "groupoid-criterion"
    )
    return PrimitivityReport(dense_orbits, iso_prim, witness, witness_decision, direct, verdict, method)


# ---------------------------------------------------------------- non-annihilation witness


def nonannihilation_element(G: FiniteGroupoid, x: int, phi, g: int, F: Field) -> np.ndarray:
    """``a = sum over z: d(g) -> r(g) of phi(z) (h_{r(g)}^-1 z h_{d(g)})`` in ``k G_x``.

    Returned as coordinates over the isotropy group's local elements.
    """
    h = transversal(G, x)
    Gx = orbits_and_isotropy(G).isotropy[x]
    local = {a: i for i, a in enumerate(Gx.elements)}
    a = F.zeros(Gx.order)
    for z in range(G.n_arrows):
        if G.d[z] == G.d[g] and G.r[z] == G.r[g] and phi[z] != 0:
            k = G.compose[G.inv[h[G.r[g]]]][G.compose[z][h[G.d[g]]]]
            a[local[k]] = F.reduce(a[local[k]] + phi[z])
    return a


@dataclass(frozen=True)
class NonAnnihilationCheck:
    samples: int
    violations: int
    zero_a: int


def check_non_annihilation(G: FiniteGroupoid, F: Field, samples: int = 200, seed: int = 0) -> NonAnnihilationCheck:
    """Random ``phi`` with ``phi(g) != 0``, ``d(g)`` in ``O_x``: ``phi . Ind_x(V_x) != 0`` for faithful ``V_x``."""
    A = groupoid_algebra(G, F)
    data = orbits_and_isotropy(G)
    rng = np.random.default_rng(seed)
    induced = {}
    violations = zero_a = 0
    for _ in range(samples):
        x = int(rng.integers(G.n_objects))
        if x not in induced:
            induced[x] = induced_module(G, x, regular_group_module(data.isotropy[x], F), F, A)
        orbit = set(data.orbits[data.orbit_of[x]])
        candidates = [g for g in range(G.n_arrows) if G.d[g] in orbit]
        g = candidates[int(rng.integers(len(candidates)))]
        phi = F.array([F.random_element(rng) for _ in range(G.n_arrows)])
        if phi[g] == 0:
            phi[g] = F.scalar(1)
        a = nonannihilation_element(G, x, phi, g, F)
        if not np.any(a != 0):
            zero_a += 1
        if not np.any(induced[x].matrix_of(phi) != 0):
            violations += 1
    return NonAnnihilationCheck(samples, violations, zero_a)
