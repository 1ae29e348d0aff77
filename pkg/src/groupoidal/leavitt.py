"""Graph inverse semigroups of finite acyclic graphs and their Leavitt algebras.

Conventions.  An edge ``x`` runs from ``src(x)`` to ``dst(x)``; a path is read
left to right, ``p = x1 x2 ... xk`` with ``dst(x_i) = src(x_{i+1})``, and each
vertex ``v`` is the empty path at ``v``.  Nonzero elements are ``p q*`` with
``p`` and ``q`` ending at the same vertex.  Products:

    (p q*)(r s*) = p t s*      if r = q t
                 = p (s t)*    if q = r t
                 = 0           otherwise.

So ``x* x = dst(x)`` and ``x x* <= src(x)``.  For the single edge ``u -> v``
the six elements are ``u, v, x, x*, x x*, 0``.
"""
from __future__ import annotations

import graphlib
import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotAcyclic, ValidationError, VerificationFailed
from .fields import Field, PrimeField
from .semigroup import InverseSemigroup, build_from_table


@dataclass(frozen=True)
class DirectedGraph:
    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        for a, b in self.edges:
            if not (0 <= a < self.vertices and 0 <= b < self.vertices):
                raise ValidationError("edge endpoint out of range", witness=(a, b))

    @classmethod
    def from_json(cls, data: dict) -> "DirectedGraph":
        try:
            return cls(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad graph description: {exc}") from None

    def check_acyclic(self) -> None:
        ts = graphlib.TopologicalSorter({v: set() for v in range(self.vertices)})
        for a, b in self.edges:
            ts.add(b, a)
        try:
            tuple(ts.static_order())
        except graphlib.CycleError as exc:
            raise NotAcyclic("graph has a directed cycle", witness=exc.args[1]) from None

    def sinks(self) -> tuple[int, ...]:
        srcs = {a for a, _ in self.edges}
        return tuple(v for v in range(self.vertices) if v not in srcs)

    def paths(self) -> list[tuple[int, tuple[int, ...]]]:
        """All finite paths as ``(start vertex, edge indices)``; vertices first."""
        self.check_acyclic()
        out = [(v, ()) for v in range(self.vertices)]
        frontier = list(out)
        while frontier:
            new = []
            for start, es in frontier:
                end = self.end((start, es))
                for k, (a, b) in enumerate(self.edges):
                    if a == end:
                        new.append((start, es + (k,)))
            out.extend(new)
            frontier = new
        return out

    def end(self, path) -> int:
        start, es = path
        return self.edges[es[-1]][1] if es else start

    def paths_ending_at(self, v: int) -> int:
        return sum(1 for p in self.paths() if self.end(p) == v)


def _strip_prefix(path, prefix):
    """``t`` with ``path = prefix t``, or ``None``."""
    (ps, pe), (qs, qe) = path, prefix
    if ps != qs or pe[: len(qe)] != qe:
        return None
    return pe[len(qe):]


def _concat(p, tail):
    return (p[0], p[1] + tail)


def graph_inverse_semigroup(E: DirectedGraph) -> InverseSemigroup:
    paths = E.paths()
    elems = [(p, q) for p in paths for q in paths if E.end(p) == E.end(q)]
    index = {x: i for i, x in enumerate(elems)}
    zero = len(elems)

    def product(x, y):
        (p, q), (r, s) = x, y
        t = _strip_prefix(r, q)
        if t is not None:
            return index[(_concat(p, t), s)]
        t = _strip_prefix(q, r)
        if t is not None:
            return index[(p, _concat(s, t))]
        return zero

    mul = [[product(x, y) for y in elems] + [zero] for x in elems] + [[zero] * (zero + 1)]

    def word(path):
        start, es = path
        return "".join(f"x{k}" for k in es) if es else f"v{start}"

    def label(x):
        p, q = x
        if p == q and not p[1]:
            return word(p)
        if not q[1]:
            return word(p)
        if not p[1]:
            return word(q) + "*"
        return f"{word(p)}({word(q)})*"

    labels = [label(x) for x in elems] + ["0"]
    S = build_from_table(mul, labels, name="graph_inverse")
    _check_zero_e_unitary(S)
    return S


def _check_zero_e_unitary(S: InverseSemigroup) -> None:
    from .semigroup import classify

    report = classify(S)
    if not (report.is_0_e_unitary and report.is_hausdorff):
        raise VerificationFailed("graph inverse semigroup is not 0-E-unitary", witness=S.name)


@dataclass(frozen=True, eq=False)
class LeavittAlgebra:
    """``k U_T(S_E)`` together with the relator presentation it was checked against.

    ``isomorphism[i]`` is the image in ``algebra`` of the ``i``-th quotient basis
    vector (the class of the contracted basis element ``quotient_basis[i]``).
    """

    graph: DirectedGraph
    semigroup: InverseSemigroup
    algebra: object  # FiniteDimAlgebra
    presentation: object  # TightPresentation
    quotient_basis: tuple[int, ...]
    isomorphism: np.ndarray

    @property
    def dim(self) -> int:
        return self.algebra.dim


def leavitt_algebra(E: DirectedGraph, F: Field) -> LeavittAlgebra:
    """Tight groupoid algebra of the graph inverse semigroup, matched to ``k_0 S_E / I_tight``.

    The map sends the class of ``s`` to its image under ``k_0 S -> k U_T(S)``;
    it is checked to be square, invertible and multiplicative on the quotient
    basis.
    """
    from .algebra import groupoid_algebra, quotient, tight_relators
    from .germs import standard_groupoid

    E.check_acyclic()
    S = graph_inverse_semigroup(E)
    UT = standard_groupoid(S, "tight")
    A = groupoid_algebra(UT, F)
    pres = tight_relators(S, F)
    Q = quotient(pres.algebra, pres.ideal)
    if pres.tight_groupoid.n_arrows != UT.n_arrows:
        raise VerificationFailed("tight groupoids disagree", witness=(pres.tight_groupoid.n_arrows, UT.n_arrows))
    # the restricted germ groupoid and the directly built one share arrow order
    B = pres.algebra
    phi = pres.restriction[list(Q.complement)]
    m = len(Q.complement)
    if m != A.dim or linalg.rank(phi, F) != m:
        raise VerificationFailed("quotient and tight algebra are not linearly isomorphic", witness=(m, A.dim))
    QA = Q.algebra
    for i, j in itertools.product(range(m), repeat=2):
        lhs = linalg.matmul(QA.C[i, j].reshape(1, -1), phi, F).ravel()
        rhs = A.mul(phi[i], phi[j])
        if np.any(lhs != rhs):
            raise VerificationFailed("quotient map is not multiplicative", witness=(B.labels[Q.complement[i]], B.labels[Q.complement[j]]))
    return LeavittAlgebra(E, S, A, pres, tuple(Q.complement), phi)


@dataclass(frozen=True)
class LeavittDimensionReport:
    dim: int
    expected: int
    sink_squares: tuple[int, ...]
    wedderburn: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        squares = tuple(sorted(self.sink_squares))
        return self.dim == self.expected and (self.wedderburn is None or self.wedderburn == squares)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "expected": self.expected,
            "sink_squares": list(self.sink_squares),
            "wedderburn": None if self.wedderburn is None else list(self.wedderburn),
            "ok": self.ok,
        }


def leavitt_dimension_check(E: DirectedGraph, F: Field, L: LeavittAlgebra | None = None) -> LeavittDimensionReport:
    """``dim L = sum over sinks of (paths ending there)^2``; over F_p also the block sizes."""
    from .algebra import wedderburn_components

    L = L or leavitt_algebra(E, F)
    squares = tuple(E.paths_ending_at(v) ** 2 for v in E.sinks())
    wed = tuple(wedderburn_components(L.algebra)) if isinstance(F, PrimeField) else None
    report = LeavittDimensionReport(L.dim, sum(squares), squares, wed)
    if not report.ok:
        raise VerificationFailed("Leavitt dimension check failed", witness=report.to_json())
    return report
