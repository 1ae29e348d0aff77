"""Finite inverse semigroups given by multiplication tables.

Elements are the dense indices ``0..n-1``.  A zero is detected from the table,
never declared.  The trivial one-element semigroup is *not* given a zero, so
all zero-dependent predicates report ``None`` ("not applicable") for it.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    ClosureTooLarge,
    NotAssociative,
    NotIdempotent,
    NotInverse,
    TooLarge,
    ValidationError,
)

DEFAULT_MAX_CLOSURE = 10**5
MAX_CONGRUENCE_SIZE = 8


@dataclass(frozen=True, eq=False)
class InverseSemigroup:
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    zero: int | None
    idempotents: tuple[int, ...]
    labels: tuple[str, ...]
    name: str = ""

    def __len__(self):
        return len(self.mul)

    @property
    def n(self) -> int:
        return len(self.mul)

    def __repr__(self):
        return f"InverseSemigroup({self.name or 'anonymous'}, n={self.n})"

    def m(self, s: int, t: int) -> int:
        return self.mul[s][t]

    def star(self, s: int) -> int:
        return self.inv[s]

    def dom(self, s: int) -> int:
        """The idempotent ``s* s``."""
        return self.mul[self.inv[s]][s]

    def ran(self, s: int) -> int:
        """The idempotent ``s s*``."""
        return self.mul[s][self.inv[s]]

    @cached_property
    def idempotent_set(self) -> frozenset[int]:
        return frozenset(self.idempotents)

    def is_idempotent(self, s: int) -> bool:
        return s in self.idempotent_set

    @cached_property
    def order(self) -> tuple[tuple[bool, ...], ...]:
        return natural_order(self)

    def leq(self, s: int, t: int) -> bool:
        return self.order[s][t]

    def down(self, s: int) -> tuple[int, ...]:
        return tuple(t for t in range(self.n) if self.order[t][s])

    def idempotents_below(self, e: int) -> tuple[int, ...]:
        return tuple(f for f in self.idempotents if self.mul[f][e] == f)

    def is_commutative(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.n) for b in range(a))

    def to_json(self) -> dict:
        return {"n": self.n, "mul": [list(row) for row in self.mul], "labels": list(self.labels)}


@dataclass(frozen=True)
class FiniteGroup:
    """A group table over local indices; ``elements`` are ids in a parent structure."""

    elements: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def inverse(self, i: int) -> int:
        return next(j for j in range(self.order) if self.table[i][j] == self.identity)

    def local(self, element: int) -> int:
        return self.elements.index(element)


@dataclass(frozen=True)
class PartialInjection:
    """Injective partial map on ``range(ambient)``; ``pairs`` lists ``(x, f(x))``."""

    ambient: int
    pairs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        dom = [a for a, _ in pairs]
        img = [b for _, b in pairs]
        if len(set(dom)) != len(dom) or len(set(img)) != len(img):
            raise ValidationError("partial map is not injective", witness=sorted(pairs))
        if any(not (0 <= x < self.ambient) for x in dom + img):
            raise ValidationError("point outside ambient set", witness=sorted(pairs))

    @classmethod
    def from_mapping(cls, ambient: int, mapping: dict) -> "PartialInjection":
        return cls(ambient, frozenset(mapping.items()))

    @property
    def mapping(self) -> dict:
        return dict(self.pairs)

    def inverse(self) -> "PartialInjection":
        return PartialInjection(self.ambient, frozenset((b, a) for a, b in self.pairs))

    def __matmul__(self, other: "PartialInjection") -> "PartialInjection":
        # (self @ other)(x) = self(other(x))
        f = self.mapping
        return PartialInjection(
            self.ambient, frozenset((a, f[b]) for a, b in other.pairs if b in f)
        )

    def label(self) -> str:
        if not self.pairs:
            return "0"
        return "{" + ",".join(f"{a}>{b}" for a, b in sorted(self.pairs)) + "}"


def build_from_table(mul, labels=None, name: str = "") -> InverseSemigroup:
    """Validate a Cayley table and return the inverse semigroup it defines."""
    table = tuple(tuple(int(x) for x in row) for row in mul)
    n = len(table)
    if n == 0:
        raise ValidationError("empty table")
    for row in table:
        if len(row) != n:
            raise ValidationError("table is not square", witness=len(row))
        for x in row:
            if not 0 <= x < n:
                raise ValidationError("table entry out of range", witness=x)
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})", witness=(a, b, c))

    inv = []
    for s in range(n):
        cands = [t for t in range(n) if table[table[s][t]][s] == s and table[table[t][s]][t] == t]
        if len(cands) != 1:
            raise NotInverse(
                f"element {s} has {len(cands)} generalized inverses",
                witness=(s, *cands[:2]),
            )
        inv.append(cands[0])

    idempotents = tuple(s for s in range(n) if table[s][s] == s)
    for e, f in itertools.combinations(idempotents, 2):
        if table[e][f] != table[f][e]:
            raise NotInverse("idempotents do not commute", witness=(e, f, table[e][f]))

    zero = None
    if n >= 2:
        for z in range(n):
            if all(table[z][s] == z == table[s][z] for s in range(n)):
                zero = z
                break
    if labels is None:
        labels = [str(i) for i in range(n)]
    return InverseSemigroup(table, tuple(inv), zero, idempotents, tuple(labels), name)


def _max_closure() -> int:
    env = os.environ.get("GROUPOIDAL_MAX_CLOSURE")
    return int(env) if env else DEFAULT_MAX_CLOSURE


def build_from_partial_injections(gens, max_size: int | None = None, name: str = "") -> InverseSemigroup:
    """Inverse subsemigroup of the symmetric inverse monoid generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValidationError("no generators")
    ambient = gens[0].ambient
    if any(g.ambient != ambient for g in gens):
        raise ValidationError("generators over different ambient sets")
    cap = max_size if max_size is not None else _max_closure()

    gset = list(dict.fromkeys(gens + [g.inverse() for g in gens]))
    elements = list(gset)
    index = {g: i for i, g in enumerate(elements)}
    frontier = list(elements)
    while frontier:
        new = []
        for x in frontier:
            for g in gset:
                y = x @ g
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    new.append(y)
                    if len(elements) > cap:
                        raise ClosureTooLarge(f"closure exceeds {cap} elements", witness=cap)
        frontier = new
    elements.sort(key=lambda f: (-len(f.pairs), sorted(f.pairs)))
    index = {g: i for i, g in enumerate(elements)}
    table = [[index[a @ b] for b in elements] for a in elements]
    return build_from_table(table, [f.label() for f in elements], name=name)


def natural_order(S: InverseSemigroup) -> tuple[tuple[bool, ...], ...]:
    """``leq[s][t]`` iff ``s = t e`` for some idempotent ``e``.

    The left-handed form ``s = f t`` is computed as well and must agree.
    """
    n = S.n
    right = [[False] * n for _ in range(n)]
    left = [[False] * n for _ in range(n)]
    for t in range(n):
        for e in S.idempotents:
            right[S.mul[t][e]][t] = True
            left[S.mul[e][t]][t] = True
    if right != left:
        raise ValidationError("natural order definitions disagree")
    return tuple(tuple(row) for row in right)


def maximal_subgroup(S: InverseSemigroup, e: int) -> FiniteGroup:
    """The group ``G_e = {s : s*s = e = ss*}``."""
    if not S.is_idempotent(e):
        raise NotIdempotent(f"{e} is not idempotent", witness=e)
    elems = tuple(s for s in range(S.n) if S.dom(s) == e and S.ran(s) == e)
    local = {s: i for i, s in enumerate(elems)}
    table = tuple(tuple(local[S.mul[a][b]] for b in elems) for a in elems)
    return FiniteGroup(elems, table, local[e])


def is_simple_group(G: FiniteGroup) -> bool:
    """Nontrivial with no proper nontrivial normal subgroup (normal closures)."""
    if G.order < 2:
        return False
    n = G.order
    for g in range(n):
        if g == G.identity:
            continue
        closure = {G.identity, g}
        frontier = [g]
        while frontier:
            new = []
            for x in frontier:
                for h in range(n):
                    conj = G.table[G.table[h][x]][G.inverse(h)]
                    for y in [conj] + [G.table[conj][c] for c in list(closure)]:
                        if y not in closure:
                            closure.add(y)
                            new.append(y)
            frontier = new
        if len(closure) != n:
            return False
    return True


def _as_group(S: InverseSemigroup) -> FiniteGroup | None:
    if len(S.idempotents) != 1:
        return None
    return maximal_subgroup(S, S.idempotents[0])


def maximal_elements(S: InverseSemigroup, elems) -> tuple[int, ...]:
    elems = list(elems)
    return tuple(
        x for x in elems if not any(y != x and S.leq(x, y) for y in elems)
    )


@dataclass(frozen=True)
class SemigroupPropertyReport:
    is_e_unitary: bool
    is_0_e_unitary: bool | None
    is_hausdorff: bool
    hausdorff_witness: dict
    is_fundamental: bool
    is_0_disjunctive: bool | None
    is_0_simple: bool | None
    is_congruence_free: bool
    is_tight: bool | None
    is_pseudofinite: bool
    pseudofinite_witness: dict
    maximal_subgroup_orders: dict

    def to_json(self, S: InverseSemigroup | None = None) -> dict:
        def lab(i):
            return S.labels[i] if S is not None else i

        return {
            "is_e_unitary": self.is_e_unitary,
            "is_0_e_unitary": self.is_0_e_unitary,
            "is_hausdorff": self.is_hausdorff,
            "hausdorff_witness": {str(lab(s)): [lab(x) for x in w] for s, w in self.hausdorff_witness.items()},
            "is_fundamental": self.is_fundamental,
            "is_0_disjunctive": self.is_0_disjunctive,
            "is_0_simple": self.is_0_simple,
            "is_congruence_free": self.is_congruence_free,
            "is_tight": self.is_tight,
            "is_pseudofinite": self.is_pseudofinite,
            "pseudofinite_witness": {str(lab(e)): [lab(x) for x in w] for e, w in self.pseudofinite_witness.items()},
            "maximal_subgroup_orders": {str(lab(e)): k for e, k in self.maximal_subgroup_orders.items()},
        }


def classify(S: InverseSemigroup) -> SemigroupPropertyReport:
    from .spectrum import is_cover

    n = S.n
    E = S.idempotents
    z = S.zero

    e_unitary = all(S.is_idempotent(s) for s in range(n) for e in E if S.leq(e, s))
    zero_e_unitary = None
    if z is not None:
        zero_e_unitary = all(
            S.is_idempotent(s) for s in range(n) for e in E if e != z and S.leq(e, s)
        )

    # (s*s)↓ ∩ s↓ is a lower set of E; finite here, so its maximal elements generate it
    hausdorff_witness = {}
    for s in range(n):
        lower = [e for e in E if S.leq(e, S.dom(s)) and S.leq(e, s)]
        hausdorff_witness[s] = maximal_elements(S, lower)
    pseudofinite_witness = {
        e: maximal_elements(S, [f for f in S.idempotents_below(e) if f != e]) for e in E
    }

    centralizer = [s for s in range(n) if all(S.mul[s][e] == S.mul[e][s] for e in E)]
    fundamental = sorted(centralizer) == sorted(E)

    disjunctive = None
    simple0 = None
    tight = None
    if z is not None:
        disjunctive = True
        for e, f in itertools.permutations(E, 2):
            if e != z and S.mul[e][f] == e:  # 0 < e < f
                if not any(
                    g not in (z, f) and S.mul[g][f] == g and S.mul[e][g] == z for g in E
                ):
                    disjunctive = False
                    break
        simple0 = all(
            {S.mul[S.mul[a][s]][b] for a in range(n) for b in range(n)} == set(range(n))
            for s in range(n)
            if s != z
        )
        # By monotonicity of covers, some cover of e avoids e iff the set of
        # all idempotents strictly below e is one.
        tight = all(
            not is_cover(S, e, [f for f in S.idempotents_below(e) if f != e])
            for e in E
            if e != z
        )

    if z is not None:
        congruence_free = bool(simple0 and fundamental and disjunctive)
    else:
        # A finite inverse semigroup without zero has a group kernel of order >= 2,
        # whose Rees congruence is proper unless S is that group.
        G = _as_group(S)
        congruence_free = G is not None and is_simple_group(G)

    orders = {e: maximal_subgroup(S, e).order for e in E}
    return SemigroupPropertyReport(
        is_e_unitary=e_unitary,
        is_0_e_unitary=zero_e_unitary,
        is_hausdorff=True,  # every lower set of a finite E is finitely generated
        hausdorff_witness=hausdorff_witness,
        is_fundamental=fundamental,
        is_0_disjunctive=disjunctive,
        is_0_simple=simple0,
        is_congruence_free=congruence_free,
        is_tight=tight,
        is_pseudofinite=True,  # the witness sets above are finite
        pseudofinite_witness=pseudofinite_witness,
        maximal_subgroup_orders=orders,
    )


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def labels(self) -> tuple[int, ...]:
        return tuple(self.find(x) for x in range(len(self.parent)))


def _congruence_closure(S: InverseSemigroup, pairs) -> tuple[int, ...]:
    """Canonical labelling of the congruence generated by ``pairs``."""
    n = S.n
    uf = _UnionFind(n)
    pending = list(pairs)
    while pending:
        a, b = pending.pop()
        if uf.union(a, b):
            for u in range(n):
                pending.append((S.mul[u][a], S.mul[u][b]))
                pending.append((S.mul[a][u], S.mul[b][u]))
    return uf.labels()


def _partition_pairs(labels) -> list[tuple[int, int]]:
    return [(x, r) for x, r in enumerate(labels) if x != r]


def principal_congruence(S: InverseSemigroup, a: int, b: int) -> tuple[int, ...]:
    return _congruence_closure(S, [(a, b)])


def enumerate_congruences(S: InverseSemigroup) -> list[tuple[int, ...]]:
    """All congruences of ``S`` as canonical labellings (label = least class member).

    Computed as the join-closure of the principal congruences.
    """
    if S.n > MAX_CONGRUENCE_SIZE:
        raise TooLarge(f"congruence enumeration capped at |S| <= {MAX_CONGRUENCE_SIZE}", witness=S.n)
    principals = {principal_congruence(S, a, b) for a, b in itertools.combinations(range(S.n), 2)}
    equality = tuple(range(S.n))
    found = {equality}
    frontier = [equality]
    while frontier:
        new = []
        for c in frontier:
            for p in principals:
                j = _congruence_closure(S, _partition_pairs(c) + _partition_pairs(p))
                if j not in found:
                    found.add(j)
                    new.append(j)
        frontier = new
    return sorted(found)
