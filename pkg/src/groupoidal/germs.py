"""Finite discrete groupoids, in particular groupoids of germs ``S ⋉ X``.

Objects and arrows are dense indices; ``objects`` and ``arrows`` hold labels
(``Character``/``Germ`` for germ groupoids, plain strings otherwise).  The
composition table uses ``-1`` for non-composable pairs and
``compose[g][h] = gh`` is defined exactly when ``d(g) == r(h)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InternalInconsistency, NotABisection, NotInvariant, NoZero, VerificationFailed
from .semigroup import FiniteGroup, InverseSemigroup, maximal_subgroup
from .spectrum import (
    Character,
    act_character,
    all_characters,
    fixed_and_interior,
    proper_characters,
    tight_characters,
    ultrafilter_characters,
)

NONE = -1


@dataclass(frozen=True)
class Germ:
    rep: int
    base: int  # object index
    members: frozenset

    def label(self, S: InverseSemigroup, X) -> str:
        return f"[{S.labels[self.rep]},{X[self.base].label(S)}]"


@dataclass(frozen=True)
class GermAction:
    """Records that a groupoid is ``S ⋉ X``; ``germ_of[(s, i)]`` is the arrow of ``[s, X[i]]``."""

    S: InverseSemigroup
    X: tuple[Character, ...]
    germ_of: dict = field(repr=False)


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    objects: tuple
    arrows: tuple
    d: tuple[int, ...]
    r: tuple[int, ...]
    compose: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    unit: tuple[int, ...]
    name: str = ""
    action: GermAction | None = None

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def __repr__(self):
        return f"FiniteGroupoid({self.name or 'anonymous'}, objects={self.n_objects}, arrows={self.n_arrows})"

    def mul(self, g: int, h: int) -> int:
        return self.compose[g][h]

    @cached_property
    def unit_set(self) -> frozenset[int]:
        return frozenset(self.unit)

    def is_unit(self, g: int) -> bool:
        return g in self.unit_set

    def arrows_from(self, x: int) -> tuple[int, ...]:
        return tuple(g for g in range(self.n_arrows) if self.d[g] == x)

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return tuple(g for g in range(self.n_arrows) if self.d[g] == x and self.r[g] == y)

    def arrow_label(self, g: int) -> str:
        a = self.arrows[g]
        if isinstance(a, Germ) and self.action is not None:
            return a.label(self.action.S, self.action.X)
        return str(a)

    def object_label(self, x: int) -> str:
        o = self.objects[x]
        if isinstance(o, Character) and self.action is not None:
            return o.label(self.action.S)
        return str(o)

    def validate(self) -> None:
        """Check every groupoid axiom; raise ``VerificationFailed`` on the first failure."""
        n = self.n_arrows
        for x, u in enumerate(self.unit):
            if self.d[u] != x or self.r[u] != x:
                raise VerificationFailed("unit has wrong endpoints", witness=x)
        for g, h in itertools.product(range(n), repeat=2):
            gh = self.compose[g][h]
            if (gh != NONE) != (self.d[g] == self.r[h]):
                raise VerificationFailed("composition defined on wrong pairs", witness=(g, h))
            if gh != NONE and (self.d[gh] != self.d[h] or self.r[gh] != self.r[g]):
                raise VerificationFailed("composite has wrong endpoints", witness=(g, h))
        for g in range(n):
            if self.compose[g][self.unit[self.d[g]]] != g or self.compose[self.unit[self.r[g]]][g] != g:
                raise VerificationFailed("units are not identities", witness=g)
            gi = self.inv[g]
            if self.compose[g][gi] != self.unit[self.r[g]] or self.compose[gi][g] != self.unit[self.d[g]]:
                raise VerificationFailed("inverse fails", witness=g)
        for g, h in itertools.product(range(n), repeat=2):
            gh = self.compose[g][h]
            if gh == NONE:
                continue
            for k in range(n):
                hk = self.compose[h][k]
                if hk != NONE and self.compose[gh][k] != self.compose[g][hk]:
                    raise VerificationFailed("composition not associative", witness=(g, h, k))


def build_groupoid(objects, arrows, d, r, product, inverse, unit, name="", action=None, validate=True):
    """Assemble a groupoid from a product function ``product(g, h)`` on composable pairs."""
    n = len(arrows)
    compose = tuple(
        tuple(product(g, h) if d[g] == r[h] else NONE for h in range(n)) for g in range(n)
    )
    G = FiniteGroupoid(
        tuple(objects), tuple(arrows), tuple(d), tuple(r), compose,
        tuple(inverse), tuple(unit), name, action,
    )
    if validate:
        G.validate()
    return G


# ---------------------------------------------------------------- germs


def _check_invariant(S: InverseSemigroup, X) -> dict:
    index = {chi: i for i, chi in enumerate(X)}
    for s in range(S.n):
        for chi in X:
            if chi(S.dom(s)):
                moved = act_character(S, s, chi)
                if moved not in index:
                    raise NotInvariant(
                        f"{S.labels[s]} moves {chi.label(S)} outside the set",
                        witness=(s, chi.minimum),
                    )
    return index


def germ_classes(S: InverseSemigroup, chi: Character) -> list[frozenset]:
    """Germ classes at ``chi``: s ~ t iff some u <= s, t has chi(u*u) = 1."""
    dom = [s for s in range(S.n) if chi(S.dom(s))]
    live = 0
    for u in dom:
        live |= 1 << u
    down = [0] * S.n
    for s in dom:
        for u in S.down(s):
            down[s] |= 1 << u
    classes: list[list[int]] = []
    for s in dom:
        for cls in classes:
            if down[s] & down[cls[0]] & live:
                cls.append(s)
                break
        else:
            classes.append([s])
    return [frozenset(c) for c in classes]


def germ_groupoid(S: InverseSemigroup, X, name: str = "") -> FiniteGroupoid:
    """The groupoid of germs of the action of ``S`` on the invariant set ``X``."""
    X = tuple(X)
    index = _check_invariant(S, X)
    arrows: list[Germ] = []
    germ_of: dict[tuple[int, int], int] = {}
    for i, chi in enumerate(X):
        for cls in germ_classes(S, chi):
            g = len(arrows)
            arrows.append(Germ(min(cls), i, cls))
            for s in cls:
                germ_of[(s, i)] = g

    d = [a.base for a in arrows]
    r = [index[act_character(S, a.rep, X[a.base])] for a in arrows]
    inverse = [germ_of[(S.inv[a.rep], r[g])] for g, a in enumerate(arrows)]
    unit = [germ_of[(chi.minimum, i)] for i, chi in enumerate(X)]

    def product(g, h):
        return germ_of[(S.mul[arrows[g].rep][arrows[h].rep], arrows[h].base)]

    return build_groupoid(
        X, arrows, d, r, product, inverse, unit, name=name,
        action=GermAction(S, X, germ_of),
    )


def character_set(S: InverseSemigroup, kind: str):
    if kind == "universal":
        return all_characters(S)
    if S.zero is None:
        raise NoZero(f"the {kind} groupoid needs a zero")
    if kind == "contracted":
        return proper_characters(S)
    if kind == "tight":
        return tight_characters(S)
    if kind == "ultrafilter":
        return ultrafilter_characters(S)
    raise ValueError(f"unknown groupoid kind {kind!r}")


def standard_groupoid(S: InverseSemigroup, kind: str) -> FiniteGroupoid:
    """``kind`` is one of universal, contracted, tight, ultrafilter."""
    G = germ_groupoid(S, character_set(S, kind), name=f"{kind}({S.name})")
    expected = {"universal": S.n, "contracted": S.n - 1}.get(kind)
    if expected is not None and G.n_arrows != expected:
        raise VerificationFailed(
            f"{kind} groupoid has {G.n_arrows} arrows, expected {expected}", witness=G.n_arrows
        )
    return G


# ---------------------------------------------------------------- abstract groupoids


def pair_groupoid(n: int) -> FiniteGroupoid:
    """One arrow ``(i, j): j -> i`` for each ordered pair."""
    arrows = [(i, j) for i in range(n) for j in range(n)]
    idx = {a: k for k, a in enumerate(arrows)}
    return build_groupoid(
        [f"p{i}" for i in range(n)],
        [f"({i},{j})" for i, j in arrows],
        [j for _, j in arrows],
        [i for i, _ in arrows],
        lambda g, h: idx[(arrows[g][0], arrows[h][1])],
        [idx[(j, i)] for i, j in arrows],
        [idx[(i, i)] for i in range(n)],
        name=f"pair({n})",
    )


def discrete_groupoid(n: int) -> FiniteGroupoid:
    return build_groupoid(
        [f"p{i}" for i in range(n)], [f"1_{i}" for i in range(n)],
        list(range(n)), list(range(n)), lambda g, h: g, list(range(n)), list(range(n)),
        name=f"discrete({n})",
    )


def group_groupoid(G: FiniteGroup, name: str = "") -> FiniteGroupoid:
    m = G.order
    return build_groupoid(
        ["*"], [f"g{i}" for i in range(m)], [0] * m, [0] * m,
        lambda g, h: G.table[g][h], [G.inverse(i) for i in range(m)], [G.identity],
        name=name or f"group({m})",
    )


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(range(n)), tuple(tuple((i + j) % n for j in range(n)) for i in range(n)), 0)


def symmetric_group(n: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    table = tuple(tuple(idx[tuple(p[q[x]] for x in range(n))] for q in perms) for p in perms)
    return FiniteGroup(tuple(range(len(perms))), table, idx[tuple(range(n))])


def disjoint_union(G: FiniteGroupoid, H: FiniteGroupoid) -> FiniteGroupoid:
    no, na = G.n_objects, G.n_arrows

    def product(g, h):
        if g < na:
            return G.compose[g][h]
        return H.compose[g - na][h - na] + na

    return build_groupoid(
        [f"L{o}" for o in range(no)] + [f"R{o}" for o in range(H.n_objects)],
        [f"L:{G.arrow_label(g)}" for g in range(na)] + [f"R:{H.arrow_label(h)}" for h in range(H.n_arrows)],
        list(G.d) + [x + no for x in H.d],
        list(G.r) + [x + no for x in H.r],
        product,
        list(G.inv) + [h + na for h in H.inv],
        list(G.unit) + [u + na for u in H.unit],
        name=f"{G.name}+{H.name}",
    )


# ---------------------------------------------------------------- orbits and isotropy


@dataclass(frozen=True)
class OrbitData:
    orbits: tuple[tuple[int, ...], ...]
    orbit_of: tuple[int, ...]
    isotropy: tuple[FiniteGroup, ...]  # group elements are arrow indices


def orbits_and_isotropy(G: FiniteGroupoid) -> OrbitData:
    orbit_of = list(range(G.n_objects))

    def find(x):
        while orbit_of[x] != x:
            orbit_of[x] = orbit_of[orbit_of[x]]
            x = orbit_of[x]
        return x

    for g in range(G.n_arrows):
        a, b = find(G.d[g]), find(G.r[g])
        if a != b:
            orbit_of[max(a, b)] = min(a, b)
    roots = [find(x) for x in range(G.n_objects)]
    blocks: dict[int, list[int]] = {}
    for x, root in enumerate(roots):
        blocks.setdefault(root, []).append(x)
    orbits = tuple(tuple(b) for b in blocks.values())
    which = [0] * G.n_objects
    for k, b in enumerate(orbits):
        for x in b:
            which[x] = k

    isotropy = []
    for x in range(G.n_objects):
        elems = G.hom(x, x)
        local = {g: i for i, g in enumerate(elems)}
        table = tuple(tuple(local[G.compose[g][h]] for h in elems) for g in elems)
        isotropy.append(FiniteGroup(elems, table, local[G.unit[x]]))
    return OrbitData(orbits, tuple(which), tuple(isotropy))


def action_orbits(G: FiniteGroupoid) -> tuple[tuple[int, ...], ...]:
    """Orbits ``{s chi : chi in D(s*s)}`` computed on the semigroup side."""
    if G.action is None:
        raise ValueError("groupoid was not built from an action")
    S, X = G.action.S, G.action.X
    index = {chi: i for i, chi in enumerate(X)}
    seen: set[int] = set()
    out = []
    for i, chi in enumerate(X):
        if i in seen:
            continue
        orbit = sorted({index[act_character(S, s, chi)] for s in range(S.n) if chi(S.dom(s))})
        seen.update(orbit)
        out.append(tuple(orbit))
    return tuple(out)


def bisection_orbits(G: FiniteGroupoid) -> tuple[tuple[int, ...], ...]:
    """Orbits of the partial action of local bisections on objects.

    Every local bisection is a union of singletons, so the singleton
    bisections generate the same orbits.
    """
    reach = [{x} for x in range(G.n_objects)]
    changed = True
    while changed:
        changed = False
        for g in range(G.n_arrows):
            # the bisection {g} sends d(g) to r(g)
            src, dst = G.d[g], G.r[g]
            if not reach[dst] <= reach[src]:
                reach[src] |= reach[dst]
                changed = True
    out = []
    seen: set[int] = set()
    for x in range(G.n_objects):
        if x not in seen:
            seen |= reach[x]
            out.append(tuple(sorted(reach[x])))
    return tuple(out)


def principal_isotropy_isomorphism(G: FiniteGroupoid, chi_index: int) -> dict[int, int]:
    """Map ``G_e -> G_{chi_e}``, ``s -> [s, chi_e]``; verified to be a group isomorphism."""
    if G.action is None:
        raise ValueError("groupoid was not built from an action")
    S, X, germ_of = G.action.S, G.action.X, G.action.germ_of
    e = X[chi_index].minimum
    Ge = maximal_subgroup(S, e)
    phi = {s: germ_of[(s, chi_index)] for s in Ge.elements}
    iso = set(G.hom(chi_index, chi_index))
    if set(phi.values()) != iso or len(set(phi.values())) != len(phi):
        raise VerificationFailed("maximal subgroup is not in bijection with isotropy", witness=e)
    for s, t in itertools.product(Ge.elements, repeat=2):
        if phi[S.mul[s][t]] != G.compose[phi[s]][phi[t]]:
            raise VerificationFailed("maximal subgroup map is not a homomorphism", witness=(s, t))
    return phi


def is_minimal(G: FiniteGroupoid) -> bool:
    return len(orbits_and_isotropy(G).orbits) == 1


def effective_by_isotropy(G: FiniteGroupoid) -> bool:
    return all(G.is_unit(g) for g in range(G.n_arrows) if G.d[g] == G.r[g])


def effective_by_action(G: FiniteGroupoid) -> bool:
    """``X_s = Fix(s)`` for every s (interiors are trivial in a discrete space)."""
    S, X = G.action.S, G.action.X
    for s in range(S.n):
        fixed, interior = fixed_and_interior(S, s, X)
        if set(fixed) != set(interior):
            return False
    return True


def is_effective(G: FiniteGroupoid) -> bool:
    first = effective_by_isotropy(G)
    if G.action is not None:
        second = effective_by_action(G)
        if first != second:
            raise InternalInconsistency(
                "isotropy and fixed-point tests for effectiveness disagree", witness=(first, second)
            )
    return first


# ---------------------------------------------------------------- local bisections


@dataclass(frozen=True)
class LocalBisection:
    arrows: frozenset

    @staticmethod
    def of(G: FiniteGroupoid, arrows) -> "LocalBisection":
        U = frozenset(arrows)
        if not is_bisection(G, U):
            raise NotABisection("source or range map is not injective on the set", witness=sorted(U))
        return LocalBisection(U)


def is_bisection(G: FiniteGroupoid, U) -> bool:
    U = list(U)
    return len({G.d[g] for g in U}) == len(U) == len({G.r[g] for g in U})


def bisection_product(G: FiniteGroupoid, U, V) -> frozenset:
    return frozenset(
        G.compose[u][v] for u in U for v in V if G.compose[u][v] != NONE
    )


def bisection_star(G: FiniteGroupoid, U) -> frozenset:
    return frozenset(G.inv[u] for u in U)


@dataclass(frozen=True)
class BisectionOps:
    product: frozenset
    star: frozenset
    is_valid: bool


def bisection_ops(G: FiniteGroupoid, U, V) -> BisectionOps:
    U, V = frozenset(U), frozenset(V)
    prod = bisection_product(G, U, V)
    valid = is_bisection(G, U) and is_bisection(G, V) and is_bisection(G, prod)
    return BisectionOps(prod, bisection_star(G, U), valid)


def all_bisections(G: FiniteGroupoid, limit: int | None = None) -> list[frozenset]:
    """Every local bisection, including the empty one, up to ``limit`` of them."""
    out: list[frozenset] = []

    def extend(start, current, used_d, used_r):
        out.append(frozenset(current))
        if limit is not None and len(out) >= limit:
            return True
        for g in range(start, G.n_arrows):
            if G.d[g] in used_d or G.r[g] in used_r:
                continue
            current.append(g)
            used_d.add(G.d[g])
            used_r.add(G.r[g])
            stop = extend(g + 1, current, used_d, used_r)
            current.pop()
            used_d.discard(G.d[g])
            used_r.discard(G.r[g])
            if stop:
                return True
        return False

    extend(0, [], set(), set())
    return out


def random_bisection(G: FiniteGroupoid, rng) -> frozenset:
    order = rng.permutation(G.n_arrows)
    keep = rng.random(G.n_arrows) < 0.5
    used_d, used_r, U = set(), set(), []
    for g, k in zip(order, keep):
        g = int(g)
        if k and G.d[g] not in used_d and G.r[g] not in used_r:
            U.append(g)
            used_d.add(G.d[g])
            used_r.add(G.r[g])
    return frozenset(U)


# ---------------------------------------------------------------- restriction


def restrict(G: FiniteGroupoid, Y) -> FiniteGroupoid:
    """Full subgroupoid on the objects ``Y`` (no invariance needed)."""
    return _restrict(G, Y, keep_action=False)


def is_invariant(G: FiniteGroupoid, Y) -> bool:
    Y = set(Y)
    return all((G.d[g] in Y) == (G.r[g] in Y) for g in range(G.n_arrows))


def restrict_invariant(G: FiniteGroupoid, Y) -> FiniteGroupoid:
    """Restriction to an invariant object set; germ data is kept."""
    Y = set(Y)
    for g in range(G.n_arrows):
        if (G.d[g] in Y) != (G.r[g] in Y):
            raise NotInvariant("object set is not invariant", witness=g)
    return _restrict(G, Y, keep_action=True)


def _restrict(G: FiniteGroupoid, Y, keep_action: bool) -> FiniteGroupoid:
    Y = sorted(set(Y))
    obj = {x: i for i, x in enumerate(Y)}
    keep = [g for g in range(G.n_arrows) if G.d[g] in obj and G.r[g] in obj]
    arr = {g: i for i, g in enumerate(keep)}
    action = None
    if keep_action and G.action is not None:
        X = tuple(G.action.X[x] for x in Y)
        germ_of = {(s, obj[x]): arr[g] for (s, x), g in G.action.germ_of.items() if x in obj}
        action = GermAction(G.action.S, X, germ_of)
        arrows = tuple(
            Germ(G.arrows[g].rep, obj[G.arrows[g].base], G.arrows[g].members) for g in keep
        )
        objects = X
    else:
        arrows = tuple(G.arrow_label(g) for g in keep)
        objects = tuple(G.object_label(x) for x in Y)
    return build_groupoid(
        objects, arrows,
        [obj[G.d[g]] for g in keep], [obj[G.r[g]] for g in keep],
        lambda a, b: arr[G.compose[keep[a]][keep[b]]],
        [arr[G.inv[g]] for g in keep], [arr[G.unit[x]] for x in Y],
        name=f"{G.name}|{len(Y)}", action=action,
    )


def restriction_arrow_map(G: FiniteGroupoid, Y) -> list[int]:
    """Arrows of ``G`` kept by ``restrict(G, Y)``, in the order used there."""
    Y = set(Y)
    return [g for g in range(G.n_arrows) if G.d[g] in Y and G.r[g] in Y]
