"""Finite-dimensional algebras given by structure constants over Q or F_p.

``C[i, j, k]`` is the coefficient of ``b_k`` in ``b_i b_j``.  Elements are
coordinate vectors (numpy arrays in the field dtype).  Linear maps act on
column vectors: ``left_matrix(a)[k, j]`` is the ``b_k`` coordinate of ``a b_j``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from . import polynomials as P
from .errors import (
    NoZero,
    NotAnIdeal,
    NotIdempotent,
    NotSemisimple,
    VerificationFailed,
)
from .fields import Field, PrimeField, Rationals
from .germs import NONE, FiniteGroupoid, restriction_arrow_map, standard_groupoid
from .semigroup import InverseSemigroup
from .spectrum import is_cover, tight_characters

# ---------------------------------------------------------------- the algebra type


@dataclass(frozen=True, eq=False)
class FiniteDimAlgebra:
    field: Field
    C: np.ndarray
    labels: tuple[str, ...]
    involution: tuple[int, ...] | None = None
    name: str = ""

    @property
    def dim(self) -> int:
        return self.C.shape[0]

    def __repr__(self):
        return f"FiniteDimAlgebra({self.name or 'anonymous'}, dim={self.dim}, field={self.field})"

    # -- elements

    def zero(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = self.field.scalar(1)
        return v

    def element(self, coords) -> np.ndarray:
        v = self.field.array(list(coords))
        if v.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} coordinates, got {v.shape}")
        return v

    @cached_property
    def sparse(self) -> list[list[tuple]]:
        n = self.dim
        table = [[() for _ in range(n)] for _ in range(n)]
        for i, j in itertools.product(range(n), repeat=2):
            row = self.C[i, j]
            nz = np.nonzero(row != 0)[0]
            table[i][j] = tuple((int(k), row[k]) for k in nz)
        return table

    def mul(self, x, y) -> np.ndarray:
        F = self.field
        out = self.zero()
        xs = [(i, x[i]) for i in np.nonzero(np.asarray(x) != 0)[0]]
        ys = [(j, y[j]) for j in np.nonzero(np.asarray(y) != 0)[0]]
        table = self.sparse
        for i, a in xs:
            row = table[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return F.reduce(out)

    def power(self, x, k: int) -> np.ndarray:
        """``x^k`` for ``k >= 1``."""
        result = None
        base = x
        while k:
            if k & 1:
                result = base if result is None else self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    @cached_property
    def _C_left(self) -> np.ndarray:
        n = self.dim
        return self.C.transpose(1, 0, 2).reshape(n, n * n)  # [l, (i,k)] = C[i,l,k]

    @cached_property
    def _C_right(self) -> np.ndarray:
        n = self.dim
        return self.C.reshape(n, n * n)  # [l, (i,k)] = C[l,i,k]

    def left_products(self, W) -> np.ndarray:
        """``out[r, i] = b_i * W[r]``."""
        W = linalg.as_matrix(W, self.field, self.dim)
        n = self.dim
        if W.shape[0] == 0:
            return self.field.zeros((0, n, n))
        return linalg.matmul(W, self._C_left, self.field).reshape(-1, n, n)

    def right_products(self, W) -> np.ndarray:
        """``out[r, i] = W[r] * b_i``."""
        W = linalg.as_matrix(W, self.field, self.dim)
        n = self.dim
        if W.shape[0] == 0:
            return self.field.zeros((0, n, n))
        return linalg.matmul(W, self._C_right, self.field).reshape(-1, n, n)

    def left_matrix(self, a) -> np.ndarray:
        return self.right_products(np.asarray(a).reshape(1, -1))[0].T

    def right_matrix(self, a) -> np.ndarray:
        return self.left_products(np.asarray(a).reshape(1, -1))[0].T

    @cached_property
    def regular_matrices(self) -> np.ndarray:
        """Left multiplication matrices of the basis, shape ``(n, n, n)``."""
        n = self.dim
        return np.stack([self.C[i].T for i in range(n)]) if n else self.field.zeros((0, 0, 0))

    # -- structure

    @cached_property
    def unit(self) -> np.ndarray | None:
        """The two-sided identity, or ``None``."""
        n = self.dim
        F = self.field
        if n == 0:
            return None
        # u b_i = b_i and b_i u = b_i for all i
        eqs = np.concatenate([self._C_right.reshape(n, n, n), self._C_left.reshape(n, n, n)], axis=1)
        M = eqs.reshape(n, -1).T
        target = np.concatenate([F.eye(n).reshape(-1), F.eye(n).reshape(-1)])
        u = linalg.solve(M, target, F)
        return u

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def is_associative(self) -> bool:
        n = self.dim
        F = self.field
        if n == 0:
            return True
        C2 = self.C.reshape(n * n, n)
        lhs = linalg.matmul(C2, self.C.reshape(n, n * n), F)  # [(i,j),(l,m)] = (b_i b_j) b_l
        # b_i (b_j b_l): sum_k C[j,l,k] C[i,k,m]
        rhs = np.stack([linalg.matmul(C2, self.C[i], F) for i in range(n)])  # [i,(j,l),m]
        return bool(np.all(lhs.reshape(n, n, n, n) == rhs.reshape(n, n, n, n)))

    def involution_is_anti_automorphism(self) -> bool:
        if self.involution is None:
            return True
        inv = self.involution
        n = self.dim
        for i, j in itertools.product(range(n), repeat=2):
            lhs = self.zero()
            for k, c in self.sparse[i][j]:
                lhs[inv[k]] += c
            rhs = self.zero()
            for k, c in self.sparse[inv[j]][inv[i]]:
                rhs[k] += c
            if np.any(self.field.reduce(lhs) != rhs):
                return False
        return True


def algebra_from_table(F: Field, n: int, entries, labels=None, involution=None, name="") -> FiniteDimAlgebra:
    """``entries`` maps ``(i, j)`` to a list of ``(k, coeff)``."""
    C = F.zeros((n, n, n))
    for (i, j), terms in entries.items():
        for k, c in terms:
            C[i, j, k] = F.reduce(C[i, j, k] + F.scalar(c))
    if labels is None:
        labels = [f"b{i}" for i in range(n)]
    return FiniteDimAlgebra(F, C, tuple(labels), None if involution is None else tuple(involution), name)


def algebra_from_tensor(F: Field, C, labels=None, name="") -> FiniteDimAlgebra:
    C = F.array(C)
    n = C.shape[0]
    if labels is None:
        labels = [f"b{i}" for i in range(n)]
    return FiniteDimAlgebra(F, C, tuple(labels), None, name)


# ---------------------------------------------------------------- constructions


def groupoid_algebra(G: FiniteGroupoid, F: Field) -> FiniteDimAlgebra:
    """Point masses ``delta_g`` with ``delta_g * delta_h = delta_{gh}`` when composable."""
    n = G.n_arrows
    entries = {
        (g, h): [(G.compose[g][h], 1)]
        for g in range(n)
        for h in range(n)
        if G.compose[g][h] != NONE
    }
    A = algebra_from_table(
        F, n, entries, [G.arrow_label(g) for g in range(n)], G.inv, name=f"k[{G.name}]"
    )
    u = unit_mass(G, F)
    if A.unit is None or np.any(A.unit != u):
        raise VerificationFailed("sum of unit masses is not the identity", witness=G.name)
    return A


def unit_mass(G: FiniteGroupoid, F: Field, objects=None) -> np.ndarray:
    """Indicator of the units over ``objects`` (default: all)."""
    v = F.zeros(G.n_arrows)
    for x in range(G.n_objects) if objects is None else objects:
        v[G.unit[x]] = F.scalar(1)
    return v


def indicator(G: FiniteGroupoid, F: Field, U) -> np.ndarray:
    v = F.zeros(G.n_arrows)
    for g in U:
        v[g] = F.scalar(1)
    return v


def semigroup_algebra(S: InverseSemigroup, F: Field, contracted: bool = False) -> FiniteDimAlgebra:
    """``kS``, or ``k_0 S`` (the zero identified with 0) when ``contracted``."""
    if contracted and S.zero is None:
        raise NoZero("contracted algebra needs a zero")
    elems = semigroup_basis(S, contracted)
    pos = {s: i for i, s in enumerate(elems)}
    entries = {}
    for s, t in itertools.product(elems, repeat=2):
        st = S.mul[s][t]
        if st in pos:
            entries[(pos[s], pos[t])] = [(pos[st], 1)]
    inv = [pos[S.inv[s]] for s in elems]
    tag = "k0" if contracted else "k"
    return algebra_from_table(F, len(elems), entries, [S.labels[s] for s in elems], inv, name=f"{tag}[{S.name}]")


def semigroup_basis(S: InverseSemigroup, contracted: bool) -> list[int]:
    return [s for s in range(S.n) if not (contracted and s == S.zero)]


def convolve(G: FiniteGroupoid, F: Field, phi, psi) -> np.ndarray:
    """``(phi * psi)(g) = sum over d(h) = d(g) of phi(g h^-1) psi(h)``, evaluated literally."""
    out = F.zeros(G.n_arrows)
    for g in range(G.n_arrows):
        acc = F.scalar(0)
        for h in range(G.n_arrows):
            if G.d[h] == G.d[g]:
                acc = acc + phi[G.compose[g][G.inv[h]]] * psi[h]
        out[g] = acc
    return F.reduce(out)


@dataclass(frozen=True, eq=False)
class GermIsomorphism:
    source: FiniteDimAlgebra
    target: FiniteDimAlgebra
    groupoid: FiniteGroupoid
    matrix: np.ndarray  # row i = image of source basis element i
    elements: tuple[int, ...]  # semigroup element of each source basis vector

    def __call__(self, x) -> np.ndarray:
        return linalg.matmul(linalg.as_matrix(x, self.source.field), self.matrix, self.source.field)[0]


def germ_isomorphism(S: InverseSemigroup, F: Field, contracted: bool = False) -> GermIsomorphism:
    """``s -> sum over chi in D(s*s) of delta_[s, chi]``; bijectivity and multiplicativity verified."""
    G = standard_groupoid(S, "contracted" if contracted else "universal")
    A_S = semigroup_algebra(S, F, contracted)
    A_G = groupoid_algebra(G, F)
    elems = semigroup_basis(S, contracted)
    germ_of = G.action.germ_of
    X = G.action.X
    M = F.zeros((len(elems), G.n_arrows))
    for row, s in enumerate(elems):
        for i, chi in enumerate(X):
            if chi(S.dom(s)):
                M[row, germ_of[(s, i)]] = F.scalar(1)
    if M.shape[0] != M.shape[1] or linalg.rank(M, F) != M.shape[0]:
        raise VerificationFailed("map is not bijective", witness=(M.shape, linalg.rank(M, F)))
    pos = {s: i for i, s in enumerate(elems)}
    for s, t in itertools.product(elems, repeat=2):
        st = S.mul[s][t]
        expected = M[pos[st]] if st in pos else F.zeros(G.n_arrows)
        got = A_G.mul(M[pos[s]], M[pos[t]])
        if np.any(got != expected):
            raise VerificationFailed("map is not multiplicative", witness=(s, t))
    return GermIsomorphism(A_S, A_G, G, M, tuple(elems))


# ---------------------------------------------------------------- subspaces and ideals


def center(A: FiniteDimAlgebra) -> np.ndarray:
    """Basis of ``{x : x b_i = b_i x for all i}``."""
    n = A.dim
    if n == 0:
        return A.field.zeros((0, 0))
    diff = A.field.reduce(A._C_right - A._C_left)  # [l,(i,k)]: x_l (C[l,i,k] - C[i,l,k])
    return linalg.row_basis(linalg.nullspace(diff.T, A.field, n), A.field, n)


def centralizer(A: FiniteDimAlgebra, B) -> np.ndarray:
    """Basis of the elements commuting with every row of ``B``."""
    F = A.field
    n = A.dim
    B = linalg.as_matrix(B, F, n)
    if B.shape[0] == 0:
        return F.eye(n)
    # x b = sum_l x_l (b_l-right) ; b x = sum_l x_l (b left-multiplying b_l)
    xb = A.left_products(B)  # [r, l] = b_l * B[r]
    bx = A.right_products(B)  # [r, l] = B[r] * b_l
    cons = F.reduce(bx - xb)  # [r, l, k]: coefficient of x_l in (B[r] x - x B[r])_k
    M = cons.transpose(1, 0, 2).reshape(n, -1)
    return linalg.row_basis(linalg.nullspace(M.T, F, n), F, n)


def ideal_generated(A: FiniteDimAlgebra, gens) -> np.ndarray:
    """RREF basis of the two-sided ideal generated by the rows of ``gens``."""
    F = A.field
    n = A.dim
    span = linalg.Span(F, n)
    frontier = [v for v in linalg.as_matrix(gens, F, n) if span.add(v)]
    while frontier:
        W = np.array(frontier, dtype=frontier[0].dtype)
        candidates = np.concatenate(
            [A.left_products(W).reshape(-1, n), A.right_products(W).reshape(-1, n)]
        )
        frontier = [v for v in candidates if span.add(v)]
    return span.basis()


def left_ideal_generated(A: FiniteDimAlgebra, gens) -> np.ndarray:
    F = A.field
    n = A.dim
    span = linalg.Span(F, n)
    frontier = [v for v in linalg.as_matrix(gens, F, n) if span.add(v)]
    while frontier:
        W = np.array(frontier, dtype=frontier[0].dtype)
        frontier = [v for v in A.left_products(W).reshape(-1, n) if span.add(v)]
    return span.basis()


def is_ideal(A: FiniteDimAlgebra, I) -> bool:
    F, n = A.field, A.dim
    I = linalg.as_matrix(I, F, n)
    if I.shape[0] == 0:
        return True
    prods = np.concatenate([A.left_products(I).reshape(-1, n), A.right_products(I).reshape(-1, n)])
    return linalg.span_contains(I, prods, F, n)


def subspace_product(A: FiniteDimAlgebra, U, V) -> np.ndarray:
    """Basis of ``span{u v}``."""
    F, n = A.field, A.dim
    U = linalg.as_matrix(U, F, n)
    V = linalg.as_matrix(V, F, n)
    if U.shape[0] == 0 or V.shape[0] == 0:
        return F.zeros((0, n))
    # u v = sum_l v_l (u * b_l)
    prods = A.right_products(U)  # [r, l, :] = U[r] * b_l
    out = np.concatenate([linalg.matmul(V, prods[r], F) for r in range(U.shape[0])])
    return linalg.row_basis(out, F, n)


def nilpotency_index(A: FiniteDimAlgebra, I) -> int | None:
    """Least ``k`` with ``I^k = 0``, or ``None`` if the powers stabilise above 0."""
    F, n = A.field, A.dim
    I = linalg.row_basis(I, F, n)
    if I.shape[0] == 0:
        return 0
    power, k = I, 1
    while power.shape[0]:
        nxt = subspace_product(A, power, I)
        k += 1
        if nxt.shape[0] == power.shape[0]:
            return None
        power = nxt
    return k - 1


@dataclass(frozen=True, eq=False)
class Quotient:
    algebra: FiniteDimAlgebra
    projection: np.ndarray  # row j = image of b_j
    complement: tuple[int, ...]  # basis columns kept as the quotient basis


def quotient(A: FiniteDimAlgebra, I) -> Quotient:
    F, n = A.field, A.dim
    R, piv = linalg.rref(linalg.as_matrix(I, F, n), F)
    if R.shape[0] and not is_ideal(A, R):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    comp = linalg.complement_columns(R, piv, n)
    m = len(comp)

    def project(v):
        return linalg.reduce_vector(R, piv, v, F)[comp]

    proj = F.zeros((n, m))
    for j in range(n):
        proj[j] = project(A.basis_vector(j))
    C = F.zeros((m, m, m))
    for a, b in itertools.product(range(m), repeat=2):
        C[a, b] = project(A.C[comp[a], comp[b]])
    Q = FiniteDimAlgebra(F, C, tuple(A.labels[c] for c in comp), None, f"{A.name}/I")
    return Quotient(Q, proj, tuple(comp))


def unitization(A: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """``k ⊕ A`` with the adjoined identity as basis element 0."""
    F, n = A.field, A.dim
    C = F.zeros((n + 1, n + 1, n + 1))
    C[1:, 1:, 1:] = A.C
    one = F.scalar(1)
    C[0, 0, 0] = one
    for i in range(1, n + 1):
        C[0, i, i] = one
        C[i, 0, i] = one
    return FiniteDimAlgebra(F, C, ("1",) + A.labels, None, f"{A.name}+1")


# ---------------------------------------------------------------- radical


def _radical_char0(A: FiniteDimAlgebra) -> np.ndarray:
    """Trace form: ``x`` is in J iff ``tr(L_x) = 0`` and ``tr(L_{x b_j}) = 0`` for all j.

    Traces are taken on the unitization, whose left regular representation is
    faithful; for elements of A they coincide with traces on A itself.
    """
    F, n = A.field, A.dim
    t = F.array([sum(A.C[k, j, j] for j in range(n)) for k in range(n)])
    T = linalg.matmul(A.C.reshape(n * n, n), t.reshape(n, 1), F).reshape(n, n)  # T[i,j] = tr(L_{b_i b_j})
    M = np.concatenate([T, t.reshape(n, 1)], axis=1)  # rows: x coordinates
    return linalg.row_basis(linalg.nullspace(M.T, F, n), F, n)


def _radical_charp(A: FiniteDimAlgebra) -> np.ndarray:
    """Iterated p-trace descent on the unital left regular representation.

    ``I_{-1} = B``, ``I_i = {a in I_{i-1} : g_i(a b) = 0 for all b}`` with
    ``g_i(a) = (Tr(lift(a)^(p^i)) mod p^(i+1)) / p^i``; J(B) = I_l for
    ``l = floor(log_p(dim B))``.
    """
    F = A.field
    p = F.p
    unital = A.unit is not None
    B = A if unital else unitization(A)
    n = B.dim
    L = B.regular_matrices.astype(np.int64)  # (n, n, n), entries in [0, p)
    l = 0
    while p ** (l + 1) <= n:
        l += 1
    basis = F.eye(n)
    for i in range(l + 1):
        if basis.shape[0] == 0:
            break
        mod = p ** (i + 1)
        pw = p**i
        prods = B.right_products(basis)  # [r, s] = a_r b_s
        vals = np.zeros((n, basis.shape[0]), dtype=np.int64)
        for r in range(basis.shape[0]):
            for s in range(n):
                coords = prods[r, s]
                if not np.any(coords):
                    continue
                mat = np.tensordot(coords, L, axes=1) % p  # integer lift of the matrix of a_r b_s
                tr = int(np.trace(_matpow_mod(mat, pw, mod))) % mod
                if tr % pw:
                    raise VerificationFailed("p-trace not divisible as expected", witness=(i, r, s))
                vals[s, r] = (tr // pw) % p
        lam = linalg.nullspace(vals, F, basis.shape[0])
        basis = linalg.row_basis(linalg.matmul(lam, basis, F), F, n) if lam.shape[0] else F.zeros((0, n))
    if not unital:
        if basis.shape[0] and np.any(basis[:, 0] != 0):
            raise VerificationFailed("radical meets the adjoined identity")
        basis = basis[:, 1:]
    return linalg.row_basis(basis, F, A.dim)


def _matpow_mod(M: np.ndarray, e: int, mod: int) -> np.ndarray:
    result = np.eye(M.shape[0], dtype=np.int64)
    base = M % mod
    while e:
        if e & 1:
            result = (result @ base) % mod
        e >>= 1
        if e:
            base = (base @ base) % mod
    return result


def radical_raw(A: FiniteDimAlgebra) -> np.ndarray:
    if A.dim == 0:
        return A.field.zeros((0, 0))
    if isinstance(A.field, Rationals):
        return _radical_char0(A)
    return _radical_charp(A)


def radical(A: FiniteDimAlgebra, verify: bool = True) -> np.ndarray:
    """RREF basis of the Jacobson radical.

    With ``verify`` the result is checked to be a nilpotent two-sided ideal
    whose quotient has zero radical.
    """
    J = radical_raw(A)
    if verify and J.shape[0]:
        if not is_ideal(A, J):
            raise VerificationFailed("radical is not an ideal", witness=A.name)
        if nilpotency_index(A, J) is None:
            raise VerificationFailed("radical is not nilpotent", witness=A.name)
        if radical_raw(quotient(A, J).algebra).shape[0]:
            raise VerificationFailed("quotient by radical is not semiprimitive", witness=A.name)
    return J


def is_semiprimitive(A: FiniteDimAlgebra) -> bool:
    return radical(A).shape[0] == 0


# ---------------------------------------------------------------- idempotents and simplicity


def minpoly(A: FiniteDimAlgebra, x) -> list:
    """Monic minimal polynomial of ``x`` (coefficients lowest first); needs a unit."""
    F, n = A.field, A.dim
    u = A.unit
    if u is None:
        raise ValueError("minimal polynomial needs a unital algebra")
    powers = [u]
    while True:
        nxt = A.mul(powers[-1], x)
        M = np.array(powers, dtype=u.dtype)
        c = linalg.coordinates(M, nxt, F)
        if c is not None:
            one = F.scalar(1)
            return [F.reduce(-ci) for ci in c] + [one]
        powers.append(nxt)
        if len(powers) > n + 1:
            raise VerificationFailed("minimal polynomial degree exceeds dimension")


def evaluate_poly(A: FiniteDimAlgebra, coeffs, x) -> np.ndarray:
    F = A.field
    acc = A.zero()
    for c in reversed(coeffs):
        acc = F.reduce(A.mul(acc, x) + F.scalar(c) * A.unit)
    return acc


def frobenius_fixed_center(A: FiniteDimAlgebra) -> np.ndarray:
    """``{z in Z(A) : z^p = z}``; its dimension counts the blocks of A (F_p only)."""
    F = A.field
    p = F.p
    Z = center(A)
    m = Z.shape[0]
    if m == 0:
        return Z
    Fr = F.zeros((m, m))
    for i in range(m):
        c = linalg.coordinates(Z, A.power(Z[i], p), F)
        if c is None:
            raise VerificationFailed("Frobenius left the center")
        Fr[i] = c
    fixed = linalg.nullspace(F.reduce(Fr - F.eye(m)).T, F, m)
    return linalg.row_basis(linalg.matmul(fixed, Z, F), F, A.dim) if fixed.shape[0] else F.zeros((0, A.dim))


def central_idempotents(A: FiniteDimAlgebra) -> list[np.ndarray]:
    """Primitive central idempotents (F_p, unital A), by splitting with minimal polynomials."""
    F = A.field
    if not isinstance(F, PrimeField):
        raise ValueError("central idempotents are computed over F_p only")
    if A.unit is None:
        return []
    p = F.p
    fixed = frobenius_fixed_center(A)
    idems = [A.unit]
    for z in fixed:
        f = [int(c) for c in minpoly(A, z)]
        factors = [g for g, _ in P.factor(f, p)]
        if len(factors) <= 1:
            continue
        polys = P.crt_idempotents(factors, p)
        pieces = [evaluate_poly(A, q, z) for q in polys]
        refined = []
        for eps in idems:
            for piece in pieces:
                prod = A.mul(eps, piece)
                if np.any(prod != 0):
                    refined.append(prod)
        idems = refined
    if len(idems) != fixed.shape[0]:
        raise VerificationFailed(
            "central idempotent count differs from the Frobenius-fixed dimension",
            witness=(len(idems), fixed.shape[0]),
        )
    return idems


def wedderburn_components(A: FiniteDimAlgebra) -> list[int]:
    """Dimensions of the simple components ``A eps`` (F_p, semisimple A), sorted."""
    if radical(A).shape[0]:
        raise NotSemisimple("algebra has a nonzero radical", witness=A.name)
    if A.dim == 0:
        return []
    dims = []
    for eps in central_idempotents(A):
        dims.append(linalg.rank(A.right_products(eps.reshape(1, -1))[0], A.field))
    if sum(dims) != A.dim:
        raise VerificationFailed("component dimensions do not add up", witness=dims)
    return sorted(dims)


@dataclass(frozen=True)
class SimplicityDecision:
    verdict: str  # "simple" | "not_simple" | "undecided"
    method: str
    witness: dict = field(default_factory=dict)

    @property
    def value(self) -> bool | None:
        return {"simple": True, "not_simple": False}.get(self.verdict)


def is_simple(A: FiniteDimAlgebra, seed: int = 0) -> SimplicityDecision:
    """Complete over F_p; over Q the answer may be ``undecided``."""
    F = A.field
    if A.dim == 0:
        return SimplicityDecision("not_simple", "zero-algebra")
    J = radical(A)
    if J.shape[0]:
        return SimplicityDecision("not_simple", "radical", {"radical_dim": J.shape[0]})
    if isinstance(F, PrimeField):
        blocks = frobenius_fixed_center(A).shape[0]
        verdict = "simple" if blocks == 1 else "not_simple"
        return SimplicityDecision(verdict, "center-splitting", {"blocks": blocks})
    return _is_simple_rational(A, seed)


def _is_simple_rational(A: FiniteDimAlgebra, seed: int) -> SimplicityDecision:
    F, n = A.field, A.dim
    for i in range(n):
        I = ideal_generated(A, A.basis_vector(i).reshape(1, -1))
        if I.shape[0] < n:
            return SimplicityDecision("not_simple", "proper-ideal", {"generator": A.labels[i], "ideal_dim": I.shape[0]})
    Z = center(A)
    if Z.shape[0] == 1:
        return SimplicityDecision("simple", "center-dim-1")
    rng = np.random.default_rng(seed)
    candidates = list(Z) + [
        linalg.matmul(F.array(rng.integers(-3, 4, size=(1, Z.shape[0]))), Z, F)[0] for _ in range(8)
    ]
    for z in candidates:
        f = minpoly(A, z)
        if len(f) > 2:
            roots = P.rational_roots(f)
            if roots:
                return SimplicityDecision(
                    "not_simple", "central-zero-divisor", {"root": str(roots[0]), "minpoly_degree": len(f) - 1}
                )
    return SimplicityDecision("undecided", "rational-search-exhausted", {"center_dim": Z.shape[0]})


# ---------------------------------------------------------------- corners


@dataclass(frozen=True, eq=False)
class Corner:
    algebra: FiniteDimAlgebra
    basis: np.ndarray  # rows in the ambient coordinates


def corner(A: FiniteDimAlgebra, eps) -> Corner:
    """``eps A eps`` for an idempotent ``eps``."""
    F, n = A.field, A.dim
    eps = F.array(eps)
    if np.any(A.mul(eps, eps) != eps):
        raise NotIdempotent("element is not idempotent")
    rows = [A.mul(A.mul(eps, A.basis_vector(i)), eps) for i in range(n)]
    Bm = linalg.row_basis(rows, F, n)
    m = Bm.shape[0]
    C = F.zeros((m, m, m))
    for a, b in itertools.product(range(m), repeat=2):
        c = linalg.coordinates(Bm, A.mul(Bm[a], Bm[b]), F)
        if c is None:
            raise VerificationFailed("corner not closed under multiplication")
        C[a, b] = c
    return Corner(FiniteDimAlgebra(F, C, tuple(f"c{i}" for i in range(m)), None, f"corner({A.name})"), Bm)


# ---------------------------------------------------------------- tight presentation


def minimal_covers(S: InverseSemigroup, e: int) -> list[tuple[int, ...]]:
    """Inclusion-minimal covers of ``e``, as minimal transversals of the sets
    ``{f <= e : z f != 0}`` over nonzero ``z <= e`` (Berge's algorithm)."""
    z0 = S.zero
    below = [f for f in S.idempotents_below(e) if f != z0]
    edges = [frozenset(f for f in below if S.mul[z][f] != z0) for z in below]
    transversals = {frozenset()}
    for H in sorted(set(edges), key=lambda h: (len(h), sorted(h))):
        grown = set()
        for T in transversals:
            if T & H:
                grown.add(T)
            else:
                grown.update(T | {h} for h in H)
        transversals = {T for T in grown if not any(U < T for U in grown)}
    out = sorted((tuple(sorted(T)) for T in transversals), key=lambda t: (len(t), t))
    for T in out:
        assert is_cover(S, e, T)
    return out


@dataclass(frozen=True, eq=False)
class TightPresentation:
    algebra: FiniteDimAlgebra  # k_0 S
    covers: tuple[tuple[int, tuple[int, ...]], ...]
    relators: np.ndarray
    ideal: np.ndarray
    kernel: np.ndarray
    tight_groupoid: FiniteGroupoid
    restriction: np.ndarray  # k_0 S -> k U_T(S)

    @property
    def quotient_dim(self) -> int:
        return self.algebra.dim - self.ideal.shape[0]


def tight_relators(S: InverseSemigroup, F: Field) -> TightPresentation:
    """Relators ``prod_{f in C}(e - f)`` over minimal covers ``C`` of nonzero idempotents.

    The ideal they generate in ``k_0 S`` is checked against the kernel of
    ``k_0 S -> k U_0(S) -> k U_T(S)`` (contracted isomorphism, then restriction
    of functions to germs over tight characters).
    """
    if S.zero is None:
        raise NoZero("tight relators need a zero")
    st = germ_isomorphism(S, F, contracted=True)
    A = st.source
    pos = {s: i for i, s in enumerate(st.elements)}
    covers, relators = [], []
    for e in S.idempotents:
        if e == S.zero:
            continue
        for C in minimal_covers(S, e):
            covers.append((e, C))
            rel = A.basis_vector(pos[e])
            for f in C:
                rel = A.mul(rel, F.reduce(A.basis_vector(pos[e]) - A.basis_vector(pos[f])))
            if np.any(rel != 0):
                relators.append(rel)
    n = A.dim
    rel_mat = np.array(relators, dtype=A.zero().dtype) if relators else F.zeros((0, n))
    ideal = ideal_generated(A, rel_mat)

    U0 = st.groupoid
    tight = set(tight_characters(S))
    T_obj = [i for i, chi in enumerate(U0.action.X) if chi in tight]
    keep = restriction_arrow_map(U0, T_obj)
    R = st.matrix[:, keep]
    kernel = linalg.row_basis(linalg.nullspace(R.T, F, n), F, n)
    if not (
        ideal.shape[0] == kernel.shape[0]
        and linalg.span_contains(kernel, ideal, F, n)
        and linalg.span_contains(ideal, kernel, F, n)
    ):
        raise VerificationFailed(
            "relator ideal differs from the kernel onto the tight groupoid algebra",
            witness=(ideal.shape[0], kernel.shape[0]),
        )
    from .germs import restrict_invariant

    UT = restrict_invariant(U0, T_obj)
    return TightPresentation(A, tuple(covers), rel_mat, ideal, kernel, UT, R)


def unit_supported_subspace(G: FiniteGroupoid, F: Field) -> np.ndarray:
    """Basis of functions supported on the unit space (the diagonal subalgebra)."""
    return np.array([indicator(G, F, [G.unit[x]]) for x in range(G.n_objects)], dtype=F.zeros(0).dtype).reshape(
        G.n_objects, G.n_arrows
    )


def orbit_constant_units(G: FiniteGroupoid, F: Field, orbits) -> np.ndarray:
    return linalg.row_basis(
        [unit_mass(G, F, orbit) for orbit in orbits], F, G.n_arrows
    )

