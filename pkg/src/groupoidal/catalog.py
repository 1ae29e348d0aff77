"""Named example semigroups, groupoids and graphs.

Names use a call syntax, e.g. ``brandt(2)`` or ``tight:diamond`` for the tight
groupoid of a catalog semigroup.  ``catalog_get(name, params)`` also accepts the
bare name with a parameter tuple.
"""
from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import BadParams, UnknownName
from .semigroup import InverseSemigroup, PartialInjection, build_from_partial_injections, build_from_table


def brandt(n: int) -> InverseSemigroup:
    """Matrix units ``e_ij`` (index ``(i-1)n + (j-1)``) plus a zero at the end."""
    _need(n >= 1, "brandt needs n >= 1")
    z = n * n
    mul = [[z] * (z + 1) for _ in range(z + 1)]
    for a, b in itertools.product(range(z), repeat=2):
        i, j = divmod(a, n)
        k, l = divmod(b, n)
        if j == k:
            mul[a][b] = i * n + l
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)] + ["0"]
    return build_from_table(mul, labels, name=f"brandt({n})")


def brandt_group(n: int, m: int) -> InverseSemigroup:
    """Brandt semigroup over the cyclic group of order ``m``: triples ``(i, g, j)`` plus zero."""
    _need(n >= 1 and m >= 1, "brandt_group needs n, m >= 1")
    elems = [(i, g, j) for i in range(n) for g in range(m) for j in range(n)]
    idx = {x: k for k, x in enumerate(elems)}
    z = len(elems)
    mul = [[z] * (z + 1) for _ in range(z + 1)]
    for (a, x), (b, y) in itertools.product(enumerate(elems), repeat=2):
        if x[2] == y[0]:
            mul[a][b] = idx[(x[0], (x[1] + y[1]) % m, y[2])]
    labels = [f"({i + 1},{g},{j + 1})" for i, g, j in elems] + ["0"]
    return build_from_table(mul, labels, name=f"brandt_group({n},{m})")


def truncated_clifford(n: int) -> InverseSemigroup:
    """Elements ``e, a, 0, 1, ..., n`` with ``a^2 = e`` the identity, ``a i = i a = i``, ``i j = 0`` for i != j."""
    _need(n >= 0, "truncated_clifford needs n >= 0")
    E, A = 0, 1
    size = n + 3

    def level(x):  # 0..n for the semilattice part
        return x - 2

    mul = [[0] * size for _ in range(size)]
    for x, y in itertools.product(range(size), repeat=2):
        if x in (E, A) and y in (E, A):
            mul[x][y] = E if x == y else A
        elif x in (E, A):
            mul[x][y] = y
        elif y in (E, A):
            mul[x][y] = x
        else:
            mul[x][y] = x if x == y else 2
    labels = ["e", "a"] + [str(level(x)) for x in range(2, size)]
    return build_from_table(mul, labels, name=f"truncated_clifford({n})")


def chain(n: int) -> InverseSemigroup:
    """The chain ``0 < 1 < ... < n-1`` under minimum."""
    _need(n >= 1, "chain needs n >= 1")
    return build_from_table(
        [[min(i, j) for j in range(n)] for i in range(n)], [str(i) for i in range(n)], name=f"chain({n})"
    )


def diamond() -> InverseSemigroup:
    """``1 > a, b > 0`` with ``ab = 0``; elements ordered ``[1, a, b, 0]``."""
    top, a, b, z = range(4)
    mul = [
        [top, a, b, z],
        [a, a, z, z],
        [b, z, b, z],
        [z, z, z, z],
    ]
    return build_from_table(mul, ["1", "a", "b", "0"], name="diamond")


def semilattice_from_poset(n: int, less) -> InverseSemigroup:
    """Meet semilattice on ``0..n-1`` generated by the relations ``i < j`` in ``less``."""
    _need(n >= 1, "poset needs at least one point")
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in less:
        _need(0 <= i < n and 0 <= j < n, f"relation {i}<{j} out of range")
        leq[i][j] = True
    for k, i, j in itertools.product(range(n), repeat=3):
        if leq[i][k] and leq[k][j]:
            leq[i][j] = True
    for i, j in itertools.combinations(range(n), 2):
        _need(not (leq[i][j] and leq[j][i]), f"relations form a cycle through {i} and {j}")
    mul = [[0] * n for _ in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        lower = [k for k in range(n) if leq[k][i] and leq[k][j]]
        glb = [k for k in lower if all(leq[m][k] for m in lower)]
        _need(len(glb) == 1, f"{i} and {j} have no meet")
        mul[i][j] = glb[0]
    rel = ",".join(f"{i}<{j}" for i, j in less)
    return build_from_table(mul, name=f"semilattice_from_poset({n};{rel})")


def sym_inverse(n: int) -> InverseSemigroup:
    """All partial injections of an ``n``-set; composition applies the right factor first."""
    _need(0 <= n <= 4, "sym_inverse supports 0 <= n <= 4")
    if n == 0:
        return build_from_table([[0]], ["0"], name="sym_inverse(0)")
    maps = []
    for k in range(n + 1):
        for dom in itertools.combinations(range(n), k):
            for img in itertools.permutations(range(n), k):
                maps.append(PartialInjection(n, frozenset(zip(dom, img))))
    S = build_from_partial_injections(maps)
    return _renamed(S, f"sym_inverse({n})")


def cyclic_group(n: int) -> InverseSemigroup:
    _need(n >= 1, "cyclic_group needs n >= 1")
    return build_from_table(
        [[(i + j) % n for j in range(n)] for i in range(n)], [f"g{i}" for i in range(n)], name=f"cyclic_group({n})"
    )


def symmetric_group(n: int) -> InverseSemigroup:
    _need(1 <= n <= 4, "symmetric_group supports 1 <= n <= 4")
    gens = [PartialInjection(n, frozenset((i, i) for i in range(n)))]
    for i in range(n - 1):
        swap = {k: k for k in range(n)}
        swap[i], swap[i + 1] = i + 1, i
        gens.append(PartialInjection.from_mapping(n, swap))
    return _renamed(build_from_partial_injections(gens), f"symmetric_group({n})")


def graph_inverse(graph: str) -> InverseSemigroup:
    from .leavitt import graph_inverse_semigroup

    return _renamed(graph_inverse_semigroup(named_graph(graph)), f"graph_inverse({graph})")


def _renamed(S: InverseSemigroup, name: str) -> InverseSemigroup:
    return InverseSemigroup(S.mul, S.inv, S.zero, S.idempotents, S.labels, name)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


# ---------------------------------------------------------------- graphs

NAMED_GRAPHS = {
    "vertex": (1, []),
    "two_vertices": (2, []),
    "edge": (2, [(0, 1)]),
    "parallel": (2, [(0, 1), (0, 1)]),
    "path2": (3, [(0, 1), (1, 2)]),
    "star": (4, [(0, 1), (0, 2), (0, 3)]),
    "in_star": (3, [(0, 2), (1, 2)]),
    "edge_plus_vertex": (3, [(0, 1)]),
    "diamond_graph": (4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
}


def named_graph(name: str):
    from .leavitt import DirectedGraph

    if name not in NAMED_GRAPHS:
        raise UnknownName(f"unknown graph {name!r}", witness=sorted(NAMED_GRAPHS))
    n, edges = NAMED_GRAPHS[name]
    return DirectedGraph(n, tuple(edges))


# ---------------------------------------------------------------- registry

SEMIGROUPS = {
    "brandt": (brandt, (int,)),
    "brandt_group": (brandt_group, (int, int)),
    "truncated_clifford": (truncated_clifford, (int,)),
    "chain": (chain, (int,)),
    "diamond": (diamond, ()),
    "sym_inverse": (sym_inverse, (int,)),
    "cyclic_group": (cyclic_group, (int,)),
    "symmetric_group": (symmetric_group, (int,)),
    "semilattice_from_poset": (semilattice_from_poset, None),
    "graph_inverse": (graph_inverse, (str,)),
}

GROUPOID_KINDS = ("universal", "contracted", "tight", "ultrafilter")

DEFAULT_SEMIGROUPS = (
    "brandt(1)",
    "brandt(2)",
    "brandt(3)",
    "brandt_group(2,2)",
    "truncated_clifford(1)",
    "truncated_clifford(2)",
    "truncated_clifford(3)",
    "truncated_clifford(4)",
    "chain(1)",
    "chain(2)",
    "chain(3)",
    "chain(4)",
    "diamond",
    "semilattice_from_poset(5;0<1,0<2,0<3,1<4,2<4,3<4)",
    "semilattice_from_poset(4;0<1,0<2,1<3)",
    "sym_inverse(1)",
    "sym_inverse(2)",
    "sym_inverse(3)",
    "cyclic_group(1)",
    "cyclic_group(2)",
    "cyclic_group(3)",
    "symmetric_group(3)",
    "graph_inverse(edge)",
    "graph_inverse(parallel)",
    "graph_inverse(path2)",
)

ABSTRACT_GROUPOIDS = (
    "pair(1)",
    "pair(2)",
    "pair(3)",
    "discrete(2)",
    "group(cyclic_group(2))",
    "group(cyclic_group(3))",
    "group(symmetric_group(3))",
    "union(pair(2),group(cyclic_group(2)))",
)

_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\((.*)\))?\s*$")


def parse_name(text: str) -> tuple[str, str | None]:
    m = _CALL.match(text)
    if not m:
        raise UnknownName(f"cannot parse catalog name {text!r}")
    return m.group(1), m.group(2)


def _parse_args(name: str, raw: str | None, types):
    if types is None:  # semilattice_from_poset(n;i<j,...)
        if raw is None:
            raise BadParams(f"{name} needs parameters")
        head, _, rest = raw.partition(";")
        try:
            n = int(head)
            less = [tuple(int(x) for x in r.split("<")) for r in rest.split(",") if r.strip()]
        except ValueError:
            raise BadParams(f"bad parameters for {name}: {raw!r}") from None
        if any(len(r) != 2 for r in less):
            raise BadParams(f"bad relation in {raw!r}")
        return (n, less)
    parts = [p.strip() for p in raw.split(",")] if raw not in (None, "") else []
    if len(parts) != len(types):
        raise BadParams(f"{name} takes {len(types)} parameter(s), got {len(parts)}")
    try:
        return tuple(t(p) for t, p in zip(types, parts))
    except ValueError:
        raise BadParams(f"bad parameters for {name}: {raw!r}") from None


def catalog_get(name: str, params: tuple | None = None) -> InverseSemigroup:
    """Semigroup by name, e.g. ``catalog_get("brandt(2)")`` or ``catalog_get("brandt", (2,))``."""
    if params is not None:
        base = name
        if base not in SEMIGROUPS:
            raise UnknownName(f"unknown catalog semigroup {base!r}", witness=sorted(SEMIGROUPS))
        return SEMIGROUPS[base][0](*params)
    return _cached_semigroup(name.replace(" ", ""))


@lru_cache(maxsize=None)
def _cached_semigroup(name: str) -> InverseSemigroup:
    base, raw = parse_name(name)
    if base not in SEMIGROUPS:
        raise UnknownName(f"unknown catalog semigroup {base!r}", witness=sorted(SEMIGROUPS))
    fn, types = SEMIGROUPS[base]
    return fn(*_parse_args(base, raw, types))


def _split_top(raw: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in raw:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def groupoid_get(name: str):
    """Groupoid by name: ``<kind>:<semigroup>``, ``pair(n)``, ``discrete(n)``,
    ``group(<group semigroup>)`` or ``union(<groupoid>,<groupoid>)``."""
    return _cached_groupoid(name.replace(" ", ""))


@lru_cache(maxsize=None)
def _cached_groupoid(name: str):
    from . import germs
    from .semigroup import maximal_subgroup

    if ":" in name:
        kind, sg = name.split(":", 1)
        if kind not in GROUPOID_KINDS:
            raise UnknownName(f"unknown groupoid kind {kind!r}", witness=list(GROUPOID_KINDS))
        return germs.standard_groupoid(catalog_get(sg), kind)
    base, raw = parse_name(name)
    if base in ("pair", "discrete"):
        (n,) = _parse_args(base, raw, (int,))
        _need(n >= 1, f"{base} needs n >= 1")
        return germs.pair_groupoid(n) if base == "pair" else germs.discrete_groupoid(n)
    if base == "group":
        S = catalog_get(raw or "")
        if len(S.idempotents) != 1:
            raise BadParams(f"{raw} is not a group")
        return germs.group_groupoid(maximal_subgroup(S, S.idempotents[0]), name=f"group({raw})")
    if base == "union":
        parts = _split_top(raw or "")
        _need(len(parts) == 2, "union takes two groupoids")
        return germs.disjoint_union(groupoid_get(parts[0]), groupoid_get(parts[1]))
    raise UnknownName(f"unknown groupoid {name!r}")


def default_groupoids(max_semigroup: int = 30) -> list[str]:
    """Standard groupoids of the default semigroups plus the abstract examples."""
    out = []
    for sg in DEFAULT_SEMIGROUPS:
        S = catalog_get(sg)
        if S.n > max_semigroup:
            continue
        kinds = ["universal"] + (["contracted", "tight"] if S.zero is not None else [])
        out.extend(f"{k}:{sg}" for k in kinds)
    return out + list(ABSTRACT_GROUPOIDS)


def catalog_list() -> dict:
    return {
        "semigroups": list(DEFAULT_SEMIGROUPS),
        "semigroup_families": sorted(SEMIGROUPS),
        "groupoids": default_groupoids(),
        "graphs": sorted(NAMED_GRAPHS),
    }
