"""Arithmetic in GF(2^ell).

Elements are plain ints holding ``ell``-bit masks (bit i is the coefficient
of x^i).  Bulk operations on numpy arrays go through lookup tables cached on
:class:`FieldParams`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_ELL = 30
_TABLE_MAX_ELL = 10


def field_degree_for(k: int) -> int:
    """Field degree used for paths/trees on ``k`` vertices: ceil(log2 k) + 3."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return math.ceil(math.log2(k)) + 3


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` divided by ``m`` in GF(2)[x]."""
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible(mask: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = mask.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for div in range(1 << d, 1 << (d + 1)):
            if poly_mod(mask, div) == 0:
                return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(ell: int) -> int:
    for mask in range(1 << ell, 1 << (ell + 1)):
        if is_irreducible(mask):
            return mask
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldParams:
    ell: int
    modpoly: int
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if not 1 <= self.ell <= MAX_ELL:
            raise ValueError(f"ell must be in [1, {MAX_ELL}], got {self.ell}")
        if self.modpoly >> self.ell != 1:
            raise ValueError(f"modpoly {self.modpoly:#x} is not monic of degree {self.ell}")

    @property
    def order(self) -> int:
        return 1 << self.ell

    @property
    def dtype(self):
        return np.uint8 if self.ell <= 8 else (np.uint16 if self.ell <= 16 else np.uint32)

    def mul_table(self) -> np.ndarray:
        """Full ``order x order`` multiplication table (only for small fields)."""
        tab = self._cache.get("mul")
        if tab is None:
            if self.ell > _TABLE_MAX_ELL:
                raise ValueError(f"multiplication table too large for ell={self.ell}")
            a = np.arange(self.order, dtype=np.int64)
            prod = np.zeros((self.order, self.order), dtype=np.int64)
            for bit in range(self.ell):
                prod ^= ((a[None, :] >> bit) & 1) * (a[:, None] << bit)
            tab = self.reduce_array(prod).astype(self.dtype)
            self._cache["mul"] = tab
        return tab

    def reduce_array(self, x: np.ndarray) -> np.ndarray:
        """Reduce an array of GF(2)[x] polynomials (degree < 2*ell - 1) mod ``modpoly``."""
        x = np.asarray(x, dtype=np.int64).copy()
        for bit in range(2 * self.ell - 2, self.ell - 1, -1):
            hit = (x >> bit) & 1
            x ^= hit * (self.modpoly << (bit - self.ell))
        return x

    def mul_array(self, a, b) -> np.ndarray:
        """Elementwise product of broadcastable arrays of field elements."""
        a = np.asarray(a)
        b = np.asarray(b)
        if self.ell <= _TABLE_MAX_ELL:
            return self.mul_table()[a, b]
        a64 = a.astype(np.int64)
        b64 = b.astype(np.int64)
        prod = np.zeros(np.broadcast(a64, b64).shape, dtype=np.int64)
        for bit in range(self.ell):
            prod ^= ((b64 >> bit) & 1) * (a64 << bit)
        return self.reduce_array(prod).astype(self.dtype)


def find_irreducible(ell: int) -> FieldParams:
    """Lexicographically smallest monic irreducible polynomial of degree ``ell``."""
    if not 1 <= ell <= MAX_ELL:
        raise ValueError(f"ell must be in [1, {MAX_ELL}], got {ell}")
    return FieldParams(ell, _smallest_irreducible(ell))


@lru_cache(maxsize=None)
def field_for_k(k: int) -> FieldParams:
    return find_irreducible(field_degree_for(k))


def gf_add(a: int, b: int) -> int:
    return a ^ b


def gf_mul(a: int, b: int, p: FieldParams) -> int:
    return poly_mod(clmul(a, b), p.modpoly)


def gf_pow(a: int, e: int, p: FieldParams) -> int:
    out = 1
    while e:
        if e & 1:
            out = gf_mul(out, a, p)
        a = gf_mul(a, a, p)
        e >>= 1
    return out


def gf_random(rng: np.random.Generator, p: FieldParams, size=None):
    """Uniform field element(s); an int when ``size`` is None, else an array."""
    if size is None:
        return int(rng.integers(0, p.order))
    return rng.integers(0, p.order, size=size).astype(p.dtype)
