"""The truncated ring (F[Z_2^k])[z] with F = GF(2^ell).

A ring element is a dense ``(2**k, cap)`` table of field elements: row ``u``
is the group vector (a k-bit mask, group product = XOR), column ``d`` the
power of z.  Degrees ``>= cap`` are dropped after every product.

The ``*_arrays`` helpers operate on stacks of tables with arbitrary leading
axes; the solvers use them to process all graph vertices at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.fft

from .gf2e import FieldParams, field_for_k

# float FFT products are exact below this magnitude*length budget
_FFT_BUDGET = 2.0**45


@dataclass(frozen=True)
class RingParams:
    k: int
    field: FieldParams
    cap: int

    def __post_init__(self):
        if self.k < 1 or self.cap < 1:
            raise ValueError(f"need k >= 1 and cap >= 1, got k={self.k}, cap={self.cap}")

    @classmethod
    def for_k(cls, k: int, cap: int) -> "RingParams":
        return cls(k, field_for_k(k), cap)

    @property
    def group_size(self) -> int:
        return 1 << self.k

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.group_size, self.cap)


class RingElement:
    __slots__ = ("params", "coeff")

    def __init__(self, params: RingParams, coeff: np.ndarray):
        coeff = np.asarray(coeff)
        if coeff.shape != params.shape:
            raise ValueError(f"coefficient table has shape {coeff.shape}, expected {params.shape}")
        self.params = params
        self.coeff = coeff.astype(params.field.dtype, copy=False)

    @classmethod
    def zero(cls, params: RingParams) -> "RingElement":
        return cls(params, np.zeros(params.shape, dtype=params.field.dtype))

    @classmethod
    def one(cls, params: RingParams) -> "RingElement":
        out = cls.zero(params)
        out.coeff[0, 0] = 1
        return out

    @classmethod
    def from_terms(cls, params: RingParams, terms) -> "RingElement":
        """Build from ``{(group_mask, degree): field_value}``."""
        out = cls.zero(params)
        for (v, d), c in terms.items():
            out.coeff[v, d] ^= c
        return out

    @classmethod
    def random(cls, params: RingParams, rng: np.random.Generator) -> "RingElement":
        return cls(params, rng.integers(0, params.field.order, size=params.shape))

    def is_zero(self) -> bool:
        return not self.coeff.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.coeff, other.coeff)

    def __add__(self, other: "RingElement") -> "RingElement":
        return ra_add(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ra_mul_fast(self, other)

    def __repr__(self) -> str:
        nz = np.count_nonzero(self.coeff)
        return f"RingElement(k={self.params.k}, cap={self.params.cap}, nonzero={nz})"


def _check_same(p: RingElement, q: RingElement):
    if p.params != q.params:
        raise ValueError(f"mismatched ring parameters: {p.params} vs {q.params}")


def ra_add(p: RingElement, q: RingElement) -> RingElement:
    _check_same(p, q)
    return RingElement(p.params, p.coeff ^ q.coeff)


# ---------------------------------------------------------------------------
# monomial multiplication: y * z^w * (1_G + v)


def shift_degrees(a: np.ndarray, w: int) -> np.ndarray:
    """Multiply by z^w along the last axis, dropping overflow."""
    if w == 0:
        return a.copy()
    out = np.zeros_like(a)
    if w < a.shape[-1]:
        out[..., w:] = a[..., : a.shape[-1] - w]
    return out


def lift_arrays(a: np.ndarray, vs) -> np.ndarray:
    """Multiply each table ``a[i]`` (shape ``(n, G, D)``) by ``1_G + vs[i]``."""
    vs = np.asarray(vs, dtype=np.int64)
    G = a.shape[-2]
    idx = np.arange(G)[None, :] ^ vs[:, None]
    return a ^ a[np.arange(len(vs))[:, None], idx]


def ra_mul_monomial(p: RingElement, y: int, v: int, w: int) -> RingElement:
    """Return ``y * z^w * (1_G + v) * p``."""
    params = p.params
    if not 0 <= w < params.cap:
        raise ValueError(f"degree shift {w} outside [0, {params.cap})")
    lifted = p.coeff ^ p.coeff[np.arange(params.group_size) ^ v]
    scaled = params.field.mul_array(np.asarray(y, dtype=params.field.dtype), lifted)
    return RingElement(params, shift_degrees(scaled, w))


# ---------------------------------------------------------------------------
# general products


def ra_mul_naive(p: RingElement, q: RingElement) -> RingElement:
    """Direct convolution over Z_2^k x [cap] using the field multiplication table."""
    _check_same(p, q)
    params = p.params
    G, D = params.shape
    out = np.zeros(params.shape, dtype=params.field.dtype)
    rows = np.arange(G)
    for v in range(G):
        qperm = q.coeff[rows ^ v]
        for d1 in np.flatnonzero(p.coeff[v]):
            c = p.coeff[v, d1]
            out[:, d1:] ^= params.field.mul_array(c, qperm[:, : D - d1])
    return RingElement(params, out)


def _wht(x: np.ndarray) -> np.ndarray:
    """Unnormalised integer Walsh-Hadamard transform along axis -2."""
    *lead, G, L = x.shape
    h = 1
    while h < G:
        y = x.reshape(*lead, G // (2 * h), 2, h, L)
        a = y[..., 0, :, :]
        b = y[..., 1, :, :]
        x = np.stack((a + b, a - b), axis=-3).reshape(*lead, G, L)
        h *= 2
    return x


def _lift_bits(a: np.ndarray, ell: int) -> np.ndarray:
    # (..., G, D) field masks -> (..., G, D * (2 ell - 1)) integer bit coefficients
    width = 2 * ell - 1
    out = np.zeros(a.shape + (width,), dtype=np.int64)
    out[..., :ell] = (a[..., None].astype(np.int64) >> np.arange(ell)) & 1
    return out.reshape(*a.shape[:-1], a.shape[-1] * width)


def _conv_truncated(A: np.ndarray, B: np.ndarray, bound: float) -> np.ndarray:
    """Linear convolution along the last axis, keeping the first L entries."""
    L = A.shape[-1]
    n = scipy.fft.next_fast_len(2 * L - 1, real=True)
    if bound * n < _FFT_BUDGET:
        fa = scipy.fft.rfft(A.astype(np.float64), n)
        fb = scipy.fft.rfft(B.astype(np.float64), n)
        C = scipy.fft.irfft(fa * fb, n)[..., :L]
        R = np.rint(C)
        if np.abs(C - R).max(initial=0.0) > 0.25:
            raise ArithmeticError("floating-point convolution lost exactness")
        return R.astype(np.int64)
    # int64 schoolbook: wraps mod 2^64, which preserves the bits read back later
    C = np.zeros(A.shape, dtype=np.int64)
    for t in np.flatnonzero(A.reshape(-1, L).any(axis=0)):
        C[..., t:] += A[..., t : t + 1] * B[..., : L - t]
    return C


def mul_fast_arrays(a: np.ndarray, b: np.ndarray, params: RingParams) -> np.ndarray:
    """Products of stacked ring tables via exact integer transforms.

    Field elements are lifted to integer polynomials in x, interleaved with
    the z-degree so that one 1-D convolution handles both; the group axis
    goes through an integer Walsh-Hadamard transform.  Parity of the result
    (after dividing out 2^k) gives the GF(2)[x] product, then reduced.
    """
    k, ell, D = params.k, params.field.ell, params.cap
    if k >= 62:
        raise OverflowError(f"k={k} too large for 64-bit accumulators")
    width = 2 * ell - 1
    A = _wht(_lift_bits(a, ell))
    B = _wht(_lift_bits(b, ell))
    C = _conv_truncated(A, B, bound=float(4**k) * D * ell)
    S = _wht(C)
    bits = ((S >> k) & 1).reshape(*S.shape[:-1], D, width)
    polys = (bits << np.arange(width)).sum(axis=-1)
    return params.field.reduce_array(polys).astype(params.field.dtype)


def ra_mul_fast(p: RingElement, q: RingElement) -> RingElement:
    _check_same(p, q)
    return RingElement(p.params, mul_fast_arrays(p.coeff, q.coeff, p.params))


# ---------------------------------------------------------------------------
# queries and utilities


def min_degree_arrays(a: np.ndarray) -> Optional[int]:
    degs = np.flatnonzero(a.reshape(-1, a.shape[-1]).any(axis=0))
    return int(degs[0]) if len(degs) else None


def ra_min_degree(p: RingElement) -> Optional[Tuple[int, int, int]]:
    """Smallest degree with a nonzero entry as ``(degree, group_mask, value)``.

    The witness is the nonzero entry with the smallest group mask.
    """
    d = min_degree_arrays(p.coeff)
    if d is None:
        return None
    u = int(np.flatnonzero(p.coeff[:, d])[0])
    return d, u, int(p.coeff[u, d])


def ra_product_of_lifted_vectors(vs: Sequence[int], params: Optional[RingParams] = None) -> RingElement:
    """Product of ``(1_G + v)`` over ``vs``, in F[G] (cap 1 by default)."""
    if params is None:
        params = RingParams.for_k(len(vs), 1)
    out = RingElement.one(params)
    for v in vs:
        out = ra_mul_monomial(out, 1, int(v), 0)
    return out


def all_ones(params: RingParams) -> RingElement:
    """J: every group vector with coefficient 1 at degree 0."""
    out = RingElement.zero(params)
    out.coeff[:, 0] = 1
    return out


def gf2_rank(masks: Sequence[int]) -> int:
    """Rank over GF(2) of bit-mask row vectors."""
    basis = {}  # leading bit -> reduced row
    for m in masks:
        m = int(m)
        while m:
            top = m.bit_length() - 1
            if top not in basis:
                basis[top] = m
                break
            m ^= basis[top]
    return len(basis)


def is_linearly_independent(masks: Sequence[int]) -> bool:
    return gf2_rank(masks) == len(masks)
