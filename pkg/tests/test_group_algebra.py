import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import minkpath.group_algebra as ga
from minkpath.group_algebra import (
    RingElement,
    RingParams,
    all_ones,
    gf2_rank,
    is_linearly_independent,
    ra_add,
    ra_min_degree,
    ra_mul_fast,
    ra_mul_monomial,
    ra_mul_naive,
    ra_product_of_lifted_vectors,
)


def lifted(params, v, y=1, w=0):
    """y * z^w * (1_G + v) as an explicit element."""
    if v == 0:
        return RingElement.zero(params)
    return RingElement.from_terms(params, {(0, w): y, (v, w): y})


def test_add_examples(rng):
    P = RingParams.for_k(3, 4)
    p = RingElement.random(P, rng)
    assert ra_add(p, RingElement.zero(P)) == p
    assert ra_add(p, p).is_zero()


def test_monomial_examples():
    P = RingParams.for_k(3, 5)
    one = RingElement.one(P)
    assert ra_mul_monomial(one, 1, 0, 0).is_zero()
    r = ra_mul_monomial(one, 1, 0b101, 3)
    expected = RingElement.from_terms(P, {(0, 3): 1, (0b101, 3): 1})
    assert r == expected


def test_mul_identity_and_zero(rng):
    P = RingParams.for_k(4, 6)
    p = RingElement.random(P, rng)
    for mul in (ra_mul_naive, ra_mul_fast):
        assert mul(p, RingElement.one(P)) == p
        assert mul(p, RingElement.zero(P)).is_zero()


def test_hand_convolution_k1():
    P = RingParams.for_k(1, 2)
    p = RingElement.from_terms(P, {(0, 0): 1, (1, 1): 1})
    expected = RingElement.from_terms(P, {(0, 0): 1})
    assert ra_mul_naive(p, p) == expected
    assert ra_mul_fast(p, p) == expected


def test_fast_matches_naive_both_convolutions(rng, monkeypatch):
    P = RingParams.for_k(5, 20)
    pairs = [(RingElement.random(P, rng), RingElement.random(P, rng)) for _ in range(5)]
    want = [ra_mul_naive(p, q) for p, q in pairs]
    assert [ra_mul_fast(p, q) for p, q in pairs] == want
    monkeypatch.setattr(ga, "_FFT_BUDGET", 0.0)
    assert [ra_mul_fast(p, q) for p, q in pairs] == want


def test_fast_wide_field(rng):
    # ell = 16 is past the lookup-table limit
    from minkpath.gf2e import find_irreducible

    P = RingParams(3, find_irreducible(16), 6)
    p, q = RingElement.random(P, rng), RingElement.random(P, rng)
    assert ra_mul_fast(p, q) == ra_mul_naive(p, q)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_ring_commutative_associative(seed):
    r = np.random.default_rng(seed)
    P = RingParams.for_k(3, 5)
    a, b, c = (RingElement.random(P, r) for _ in range(3))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_mismatched_params_rejected(rng):
    with pytest.raises(ValueError):
        ra_add(RingElement.zero(RingParams.for_k(2, 3)), RingElement.zero(RingParams.for_k(3, 3)))


def test_min_degree():
    P = RingParams.for_k(3, 10)
    assert ra_min_degree(RingElement.zero(P)) is None
    assert ra_min_degree(RingElement.one(P)) == (0, 0, 1)
    assert ra_min_degree(RingElement.from_terms(P, {(5, 7): 3})) == (7, 5, 3)


def test_product_examples():
    k = 4
    basis = [1 << i for i in range(k)]
    assert ra_product_of_lifted_vectors(basis) == all_ones(RingParams.for_k(k, 1))
    assert ra_product_of_lifted_vectors([3, 5, 3, 8]).is_zero()
    assert ra_product_of_lifted_vectors([1, 2, 3, 8]).is_zero()


def test_rank():
    assert gf2_rank([]) == 0
    assert gf2_rank([1, 2, 3]) == 2
    assert is_linearly_independent([1, 2, 4])
    assert not is_linearly_independent([5, 5])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_product_vanishes_iff_dependent_exhaustive(k):
    P = RingParams.for_k(k, 1)
    J = all_ones(P)
    for code in range((1 << k) ** k):
        vs = [(code >> (k * i)) & ((1 << k) - 1) for i in range(k)]
        prod = ra_product_of_lifted_vectors(vs, P)
        assert prod == (J if is_linearly_independent(vs) else RingElement.zero(P))


def test_monomial_matches_naive_product(rng):
    P = RingParams.for_k(3, 6)
    p = RingElement.random(P, rng)
    for v in range(P.group_size):
        for y in (1, 5):
            for w in (0, 2, 5):
                assert ra_mul_monomial(p, y, v, w) == ra_mul_naive(p, lifted(P, v, y, w))
