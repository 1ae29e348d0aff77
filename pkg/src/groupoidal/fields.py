"""Exact coefficient fields: the rationals and prime fields F_p.

Elements live in numpy arrays: ``object`` arrays of ``Fraction`` for Q and
``int64`` arrays reduced into ``[0, p)`` for F_p, so the same elimination code
serves both.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadParams

_to_fraction = np.frompyfunc(Fraction, 1, 1)


@dataclass(frozen=True)
class Rationals:
    characteristic = 0
    dtype = object

    def __str__(self):
        return "q"

    def scalar(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        if arr.size == 0:
            return arr
        return _to_fraction(arr).astype(object)

    def zeros(self, shape) -> np.ndarray:
        return np.full(shape, Fraction(0), dtype=object)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def reduce(self, a):
        return a

    def inv(self, x):
        return Fraction(1) / x

    def random_element(self, rng, bound: int = 3) -> Fraction:
        return Fraction(int(rng.integers(-bound, bound + 1)))


@dataclass(frozen=True)
class PrimeField:
    p: int
    dtype = np.int64

    def __post_init__(self):
        if not (2 <= self.p < 2**16) or not _is_prime(self.p):
            raise BadParams(f"{self.p} is not a prime below 2^16", witness=self.p)

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return f"fp:{self.p}"

    def scalar(self, x) -> int:
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data)
        if arr.dtype == object:
            flat = [self.scalar(x) for x in arr.ravel()]
            return np.array(flat, dtype=np.int64).reshape(arr.shape)
        return np.asarray(arr, dtype=np.int64) % self.p

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def reduce(self, a):
        return a % self.p

    def inv(self, x) -> int:
        return pow(int(x), -1, self.p)

    def random_element(self, rng, bound: int | None = None) -> int:
        return int(rng.integers(0, self.p))

    def elements(self):
        return range(self.p)


Field = Rationals | PrimeField

QQ = Rationals()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def parse_field(text: str) -> Field:
    """Parse ``q`` or ``fp:<p>``."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise BadParams(f"bad prime in field spec {text!r}") from None
        return PrimeField(p)
    raise BadParams(f"unknown field spec {text!r}; expected q or fp:<p>")
