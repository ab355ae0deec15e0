
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermlcd.code import (
    codewords,
    from_generator,
    hermitian_dual,
    hermitian_dual_distance,
    minimum_weight,
    pack,
    packed_span,
    low_mask,
    projective_points,
    puncture,
    simplex_code,
    unpack,
    weight_distribution,
    zero_coordinates,
)
from hermlcd.errors import CapacityError, DomainError
from hermlcd.gf4 import W
from hermlcd.lcd import is_hermitian_lcd
from hermlcd.linalg import F4Matrix, hermitian_gram
from hermlcd.search import enumerate_codes, random_code

from conftest import all_vectors, brute_herm, brute_min_weight, code

C3 = code("101", "011")


def test_from_generator_examples():
    full = from_generator(F4Matrix.identity(2))
    assert (full.n, full.k) == (2, 2)
    c = from_generator([[1, 1], [W, W]])
    assert c.k == 1 and c.gen.rows == ((1, 1),)
    assert C3.gen.rows == ((1, 0, 1), (0, 1, 1))
    with pytest.raises(DomainError):
        from_generator(F4Matrix.zeros(2, 3))


def test_minimum_weight_examples():
    assert minimum_weight(from_generator(F4Matrix.identity(2))) == 1
    assert brute_min_weight(C3) == 2
    assert minimum_weight(C3) == 2
    assert minimum_weight(simplex_code(3)) == 16


def test_minimum_weight_matches_brute_force():
    for n in range(1, 4):
        for k in range(1, n + 1):
            for c in enumerate_codes(n, k):
                assert minimum_weight(c) == brute_min_weight(c)


def test_capacity_limit():
    big = from_generator(F4Matrix.identity(13))
    with pytest.raises(CapacityError):
        minimum_weight(big)


def test_codeword_order_is_base4_counter():
    words = list(codewords(C3))
    assert words[0] == (0, 0, 0)
    assert words[1] == (0, 1, 1)  # last basis row fastest
    assert words[4] == (1, 0, 1)
    assert len(set(words)) == 16


@given(st.integers(1, 12), st.integers(0, 2**31))
def test_packed_span_matches_codewords(n, seed):
    k = 1 + seed % min(n, 4)
    c = random_code(n, k, seed)
    span = packed_span([pack(r) for r in c.gen.rows], low_mask(n))
    assert [unpack(w, n) for w in span] == list(codewords(c))


def test_hermitian_dual_examples():
    assert hermitian_dual(C3) == code("111")
    assert hermitian_dual(from_generator(F4Matrix.identity(3))) is None
    assert hermitian_dual(code("11")) == code("11")


def _brute_dual(c):
    words = list(codewords(c))
    return {v for v in all_vectors(c.n) if all(brute_herm(v, y) == 0 for y in words)}


def test_hermitian_dual_matches_brute_force():
    for n in range(1, 4):
        for k in range(1, n):
            for c in enumerate_codes(n, k):
                assert set(codewords(hermitian_dual(c))) == _brute_dual(c)


def test_dual_distance_examples():
    assert hermitian_dual_distance(C3) == 3
    assert hermitian_dual_distance(code("1010", "0110")) == 1
    assert hermitian_dual_distance(from_generator(F4Matrix.identity(2))) == 3


def test_dual_invariants_exhaustive():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for c in enumerate_codes(n, k):
                dual = hermitian_dual(c)
                if k == n:
                    assert dual is None and hermitian_dual_distance(c) == n + 1
                    continue
                assert dual.k == n - k
                assert hermitian_dual(dual) == c
                assert (hermitian_dual_distance(c) == 1) == bool(zero_coordinates(c))


def test_zero_coordinates():
    assert zero_coordinates(code("1010", "0110")) == [3]
    assert zero_coordinates(from_generator(F4Matrix.identity(3))) == []
    assert zero_coordinates(code("1000", "0100")) == [2, 3]


def test_puncture_examples():
    assert puncture(code("1010", "0110"), [3]) == C3
    assert puncture(C3, []) == C3
    assert puncture(code("11"), [1]) == code("1")
    with pytest.raises(DomainError):
        puncture(C3, [3])
    with pytest.raises(DomainError):
        puncture(C3, [0, 1, 2])


def test_puncture_zero_coordinates_preserves_structure():
    for n in range(2, 6):
        for k in (1, 2, 3):
            if k >= n:
                continue
            for c in enumerate_codes(n, k):
                zs = zero_coordinates(c)
                if not zs or len(zs) == n:
                    continue
                p = puncture(c, zs)
                assert p.k == c.k
                assert minimum_weight(p) == minimum_weight(c)
                assert hermitian_gram(p.gen) == hermitian_gram(c.gen)
                assert is_hermitian_lcd(p) == is_hermitian_lcd(c)


def test_weight_distribution_examples():
    assert weight_distribution(code("11")) == [1, 0, 3]
    assert weight_distribution(code("1")) == [1, 3]
    dist = weight_distribution(simplex_code(3))
    assert dist[0] == 1 and dist[16] == 63 and sum(dist) == 64


@given(st.integers(1, 8), st.integers(0, 2**31))
def test_weight_distribution_properties(n, seed):
    c = random_code(n, 1 + seed % n, seed)
    dist = weight_distribution(c)
    assert sum(dist) == 4**c.k and dist[0] == 1
    assert next(w for w in range(1, n + 1) if dist[w]) == minimum_weight(c)


def test_simplex_codes():
    s2 = simplex_code(2)
    assert (s2.n, s2.k) == (5, 2)
    assert weight_distribution(s2) == [1, 0, 0, 0, 15, 0]
    s3 = simplex_code(3)
    assert (s3.n, s3.k) == (21, 3)
    assert hermitian_gram(s3.gen).is_zero()
    # the Gram sum over points, computed from the raw columns
    pts = projective_points(3)
    raw = F4Matrix(tuple(tuple(p[i] for p in pts) for i in range(3)), 21)
    assert hermitian_gram(raw).is_zero()
    for k in (1, 5):
        with pytest.raises(DomainError):
            simplex_code(k)
