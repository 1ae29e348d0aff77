"""Univariate polynomials over F_p and rational roots over Q.

Polynomials are plain lists of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np

from . import linalg
from .fields import PrimeField


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f) -> int:
    return len(f) - 1


def monic(f, p):
    f = trim(f)
    if not f:
        return f
    c = pow(f[-1], -1, p)
    return [(x * c) % p for x in f]


def add(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def sub(f, g, p):
    return add(f, [(-x) % p for x in g], p)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def divmod_poly(f, g, p):
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    inv = pow(g[-1], -1, p)
    while len(r) >= len(g) and r:
        c = (r[-1] * inv) % p
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        r = trim(r)
    return trim(q), r


def mod(f, g, p):
    return divmod_poly(f, g, p)[1]


def gcd(f, g, p):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def powmod(f, e: int, m, p):
    result = [1]
    base = mod(f, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def derivative(f, p):
    return trim([(i * f[i]) % p for i in range(1, len(f))])


def _pth_root(f, p):
    # f(x) = g(x^p) in characteristic p; coefficients are fixed by Frobenius on F_p
    return trim([f[i] for i in range(0, len(f), p)])


def squarefree_factorization(f, p):
    """Pairs ``(g, k)`` with ``f = lc * prod g^k`` and each ``g`` squarefree."""
    f = monic(f, p)
    if len(f) <= 1:
        return []
    out = []
    df = derivative(f, p)
    if not df:
        return [(g, k * p) for g, k in squarefree_factorization(_pth_root(f, p), p)]
    c = gcd(f, df, p)
    w = divmod_poly(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_poly(w, y, p)[0]
        if len(z) > 1:
            out.append((monic(z, p), i))
        i += 1
        w = y
        c = divmod_poly(c, y, p)[0]
    if len(c) > 1:
        out.extend((g, k * p) for g, k in squarefree_factorization(_pth_root(c, p), p))
    return out


def berlekamp(f, p, seed: int = 0):
    """Monic irreducible factors of a monic squarefree ``f`` over F_p."""
    f = monic(f, p)
    n = degree(f)
    if n <= 1:
        return [f] if n == 1 else []
    F = PrimeField(p)
    # Row i of Q is x^(i p) mod f; fixed vectors g satisfy g (Q - I) = 0.
    Q = np.zeros((n, n), dtype=np.int64)
    xp = powmod([0, 1], p, f, p)
    row = [1]
    for i in range(n):
        for j, c in enumerate(row):
            Q[i, j] = c
        row = mod(mul(row, xp, p), f, p)
    kernel = linalg.nullspace(F.reduce((Q - np.eye(n, dtype=np.int64)).T), F)
    k = kernel.shape[0]
    if k == 1:
        return [f]
    basis = [trim([int(c) for c in v]) for v in kernel]
    factors = [f]
    rng = random.Random(seed)
    small = p <= 257
    while len(factors) < k:
        if small:
            for g in basis:
                if len(g) <= 1:
                    continue
                refined = []
                for h in factors:
                    if degree(h) == 1:
                        refined.append(h)
                        continue
                    # h is the product of gcd(h, g - s) over s in F_p
                    left = degree(h)
                    for s in range(p):
                        d = gcd(h, sub(g, [s], p), p)
                        if degree(d) >= 1:
                            refined.append(d)
                            left -= degree(d)
                            if left == 0:
                                break
                factors = refined
                if len(factors) == k:
                    break
        else:
            g = [0]
            for v in basis:
                g = add(g, [(rng.randrange(p) * c) % p for c in v], p)
            refined = []
            for h in factors:
                if degree(h) == 1:
                    refined.append(h)
                    continue
                t = sub(powmod(g, (p - 1) // 2, h, p), [1], p)
                d = gcd(h, t, p)
                if 1 <= degree(d) < degree(h):
                    refined.extend([d, divmod_poly(h, d, p)[0]])
                else:
                    refined.append(h)
            factors = refined
    return sorted((monic(h, p) for h in factors), key=lambda h: (len(h), h))


def factor(f, p):
    """Irreducible factorization ``[(g, multiplicity), ...]`` of ``f`` over F_p."""
    out = []
    for g, k in squarefree_factorization(f, p):
        out.extend((h, k) for h in berlekamp(g, p))
    return sorted(out, key=lambda t: (len(t[0]), t[0]))


def is_irreducible(f, p) -> bool:
    fs = factor(f, p)
    return len(fs) == 1 and fs[0][1] == 1


def crt_idempotents(factors, p):
    """Polynomials ``e_i`` with ``e_i = 1 mod f_i`` and ``e_i = 0 mod f_j``.

    ``factors`` must be pairwise coprime; the results live modulo their product.
    """
    total = [1]
    for f in factors:
        total = mul(total, f, p)
    out = []
    for f in factors:
        rest = divmod_poly(total, f, p)[0]
        # solve u * rest = 1 mod f via extended Euclid
        u = _inverse_mod(rest, f, p)
        out.append(mod(mul(u, rest, p), total, p))
    return out


def _inverse_mod(a, m, p):
    r0, r1 = trim(m), mod(a, m, p)
    s0, s1 = [], [1]
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
    if len(r0) != 1:
        raise ValueError("not invertible")
    c = pow(r0[0], -1, p)
    return [(x * c) % p for x in s0]


def rational_roots(coeffs, limit: int = 10**12) -> list[Fraction]:
    """Rational roots of a polynomial with rational coefficients (lowest first).

    Candidates come from the rational root theorem; coefficients whose size
    exceeds ``limit`` make the search give up and return the roots found so far.
    """
    coeffs = [Fraction(c) for c in trim(coeffs)]
    if len(coeffs) <= 1:
        return []
    roots = []
    while coeffs and coeffs[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > limit or an > limit:
        return roots
    for q in _divisors(an):
        for pp in _divisors(a0):
            for sign in (1, -1):
                x = Fraction(sign * pp, q)
                if x not in roots and _eval(coeffs, x) == 0:
                    roots.append(x)
    return sorted(roots)


def _eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)
