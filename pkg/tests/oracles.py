"""Brute-force reference computations, written without the package's algorithms.

Each oracle works directly from a multiplication table or a structure tensor
and enumerates everything, so it only scales to tiny inputs.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


# ---------------------------------------------------------------- semigroups


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def congruences_by_partition_scan(mul):
    """Every partition of the element set compatible with multiplication on both sides."""
    n = len(mul)
    out = []
    for part in set_partitions(range(n)):
        block = {}
        for b, members in enumerate(part):
            for x in members:
                block[x] = b
        ok = all(
            block[mul[a][c]] == block[mul[b][c]] and block[mul[c][a]] == block[mul[c][b]]
            for members in part
            for a, b in itertools.combinations(members, 2)
            for c in range(n)
        )
        if ok:
            out.append(part)
    return out


def idempotents(mul):
    return [e for e in range(len(mul)) if mul[e][e] == e]


def leq_idem(mul, e, f):
    return mul[e][f] == e


def filters_by_subset_scan(mul, zero=None):
    """Nonempty up-closed, meet-closed subsets of E, skipping those containing ``zero``."""
    E = idempotents(mul)
    out = []
    for r in range(1, len(E) + 1):
        for sub in itertools.combinations(E, r):
            s = set(sub)
            if zero is not None and zero in s:
                continue
            up = all(f in s for e in s for f in E if leq_idem(mul, e, f))
            meet = all(mul[a][b] in s for a in s for b in s)
            if up and meet:
                out.append(frozenset(s))
    return out


def covers_by_subset_scan(mul, e, zero):
    """Subsets ``C`` of ``e``-down such that every nonzero ``z <= e`` meets some member of ``C``."""
    E = idempotents(mul)
    below = [f for f in E if leq_idem(mul, f, e)]
    nonzero = [z for z in below if z != zero]
    out = []
    for r in range(len(below) + 1):
        for C in itertools.combinations(below, r):
            if all(any(mul[z][f] != zero for f in C) for z in nonzero):
                out.append(frozenset(C))
    return out


def tight_filters_by_definition(mul, zero):
    """Proper filters meeting every cover of each of their members."""
    covers = {e: covers_by_subset_scan(mul, e, zero) for e in idempotents(mul)}
    return [
        F for F in filters_by_subset_scan(mul, zero)
        if all(C & F for e in F for C in covers[e])
    ]


def inverse_of(mul, s):
    n = len(mul)
    return next(t for t in range(n) if mul[mul[s][t]][s] == s and mul[mul[t][s]][t] == t)


def germs_equal(mul, s, t, filt):
    """``[s, F] = [t, F]``: some idempotent of ``F`` below which ``s`` and ``t`` agree."""
    return any(mul[s][e] == mul[t][e] for e in filt)


def universal_arrow_count(mul, zero=None):
    """Number of germs ``[s, F]`` with ``s*s`` in ``F``, over all (proper) filters."""
    count = 0
    for F in filters_by_subset_scan(mul, zero):
        dom = [s for s in range(len(mul)) if mul[inverse_of(mul, s)][s] in F]
        classes = []
        for s in dom:
            if not any(germs_equal(mul, s, t, F) for t in classes):
                classes.append(s)
        count += len(classes)
    return count


# ---------------------------------------------------------------- algebras


def tensor_mul(C, x, y, p=None):
    n = len(x)
    out = [0] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * int(C[i][j][k]) if p else x[i] * y[j] * Fraction(C[i][j][k])
    return [v % p for v in out] if p else out


def is_nilpotent(C, x, p):
    y = list(x)
    for _ in range(len(x) + 1):
        if not any(y):
            return True
        y = tensor_mul(C, y, x, p)
    return not any(y)


def largest_nil_left_ideal(C, p):
    """All ``x`` with ``(lambda + a) x`` nilpotent for every scalar ``lambda`` and every ``a``.

    This is the Jacobson radical of a finite-dimensional F_p algebra (unital or
    not), found by enumerating all ``p^dim`` elements.
    """
    n = len(C)
    elems = [list(v) for v in itertools.product(range(p), repeat=n)]
    rad = []
    for x in elems:
        ok = True
        for lam in range(p):
            for a in elems:
                y = [(lam * xi + v) % p for xi, v in zip(x, tensor_mul(C, a, x, p))]
                if not is_nilpotent(C, y, p):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            rad.append(tuple(x))
    return rad


def groupoid_convolution(n_arrows, compose, phi, psi):
    """``(phi * psi)(k) = sum over g h = k of phi(g) psi(h)`` with dicts of arrow -> coefficient."""
    out = {}
    for g, h in itertools.product(range(n_arrows), repeat=2):
        k = compose[g][h]
        if k >= 0:
            out[k] = out.get(k, 0) + phi.get(g, 0) * psi.get(h, 0)
    return out
