import random

import pytest

from hermlcd.code import from_generator, hermitian_dual_distance, minimum_weight, zero_coordinates
from hermlcd.errors import DomainError, PreconditionError
from hermlcd.gf4 import MUL, W, W2
from hermlcd.lcd import (
    extend_lcd,
    extension_generator,
    find_anisotropic_codeword,
    hermitian_decompose,
    is_hermitian_lcd,
    is_hermitian_lcd_oracle,
    promote_dual_distance,
)
from hermlcd.linalg import F4Matrix, det, hamming_weight, hermitian_gram, hermitian_inner_product
from hermlcd.search import enumerate_codes, random_code

from conftest import all_vectors, brute_herm, code, in_row_space

C3 = code("101", "011")
FULL2 = from_generator(F4Matrix.identity(2))


def _brute_lcd(c):
    """C meets its Hermitian dual trivially, by scanning GF(4)^n."""
    words = [v for v in all_vectors(c.n) if any(v) and in_row_space(v, c)]
    return not any(all(brute_herm(v, y) == 0 for y in words) for v in words)


def test_lcd_examples():
    assert not is_hermitian_lcd(code("11"))
    assert is_hermitian_lcd(FULL2)
    assert is_hermitian_lcd(C3)
    assert not is_hermitian_lcd_oracle(code("11"))
    assert is_hermitian_lcd_oracle(FULL2)
    assert is_hermitian_lcd_oracle(C3)


def test_lcd_criterion_matches_brute_force():
    for n in range(1, 4):
        for k in range(1, n + 1):
            for c in enumerate_codes(n, k):
                assert is_hermitian_lcd(c) == _brute_lcd(c) == is_hermitian_lcd_oracle(c)


def test_one_dimensional_lcd_iff_anisotropic():
    for n in range(1, 5):
        for c in enumerate_codes(n, 1):
            g = c.gen.rows[0]
            assert is_hermitian_lcd(c) == (hermitian_inner_product(g, g) != 0)


def test_find_anisotropic_examples():
    assert find_anisotropic_codeword(FULL2) == (1, 0)
    assert find_anisotropic_codeword(C3) == (1, W, W2)
    with pytest.raises(PreconditionError):
        find_anisotropic_codeword(code("11"))


def test_anisotropic_codeword_is_odd_weight_codeword():
    for n in range(2, 6):
        for k in (2, 3):
            if k > n:
                continue
            for c in enumerate_codes(n, k):
                if not is_hermitian_lcd(c):
                    continue
                x = find_anisotropic_codeword(c)
                assert hermitian_inner_product(x, x) != 0
                assert hamming_weight(x) % 2 == 1
                assert in_row_space(x, c)


def test_decompose_examples():
    d = hermitian_decompose(FULL2)
    assert d.x == (1, 0) and d.rest.rows == ((0, 1),) and d.x_prime is None
    d = hermitian_decompose(C3)
    assert d.x == (1, W, W2) and d.rest.rows == ((1, W2, W),)
    assert d.violations() == []
    with pytest.raises(PreconditionError):
        hermitian_decompose(code("1100", "0011"))
    with pytest.raises(DomainError):
        hermitian_decompose(code("1"))


@pytest.mark.parametrize("n,k", [(3, 3), (4, 3), (5, 3), (4, 4), (5, 4)])
def test_decomposition_soundness(n, k):
    for c in enumerate_codes(n, k):
        if not is_hermitian_lcd(c):
            continue
        dec = hermitian_decompose(c)
        assert dec.violations() == []
        assert (dec.x_prime is not None) == (k >= 3)
        assert from_generator(dec.generator()) == c
        assert det(hermitian_gram(dec.rest)) != 0


def test_extend_example():
    e = extend_lcd(C3)
    assert (e.n, e.k) == (4, 2)
    assert is_hermitian_lcd(e)
    assert minimum_weight(e) in (2, 3)
    assert hermitian_dual_distance(e) >= 2
    g, _ = extension_generator(C3)
    assert det(hermitian_gram(g)) == 1


def test_extend_k3_determinant_identity():
    seen = 0
    for c in enumerate_codes(4, 3):
        if is_hermitian_lcd(c) and not zero_coordinates(c):
            g, dec = extension_generator(c)
            assert det(hermitian_gram(g)) == det(hermitian_gram(dec.rest)) != 0
            # h = (1, 1, 0): the last column
            assert tuple(r[-1] for r in g.rows) == (1, 1, 0)
            seen += 1
    assert seen > 0


def test_extend_preconditions():
    with pytest.raises(PreconditionError, match="LCD"):
        extend_lcd(code("1100", "0011"))
    with pytest.raises(PreconditionError, match="dual distance"):
        extend_lcd(code("1010", "0110"))
    with pytest.raises(PreconditionError, match="k >= 2"):
        extend_lcd(code("111"))


def test_extension_of_full_code():
    e = extend_lcd(from_generator(F4Matrix.identity(3)))
    assert (e.n, e.k) == (4, 3) and is_hermitian_lcd(e) and not zero_coordinates(e)


def test_promote_examples():
    c = code("1010", "0110")
    p = promote_dual_distance(c)
    assert (p.n, p.k) == (4, 2)
    assert is_hermitian_lcd(p)
    assert minimum_weight(p) in (2, 3)
    assert hermitian_dual_distance(p) >= 2

    with pytest.raises(PreconditionError):
        promote_dual_distance(C3)

    padded = code("10100", "01100")
    assert zero_coordinates(padded) == [3, 4]
    p = promote_dual_distance(padded)
    assert (p.n, p.k) == (5, 2)
    assert minimum_weight(p) >= 2 and hermitian_dual_distance(p) >= 2


def test_promotion_with_exact_dual_distance():
    for n in range(3, 6):
        for c in enumerate_codes(n, 2):
            if is_hermitian_lcd(c) and zero_coordinates(c):
                p = promote_dual_distance(c)
                assert hermitian_dual_distance(p) >= 2
                assert minimum_weight(p) >= minimum_weight(c)


def _monomial(c, rng):
    perm = list(range(c.n))
    rng.shuffle(perm)
    scales = [rng.randrange(1, 4) for _ in range(c.n)]
    rows = tuple(tuple(MUL[scales[j]][r[perm[j]]] for j in range(c.n)) for r in c.gen.rows)
    return F4Matrix(rows, c.n)


def test_monomial_invariance():
    rng = random.Random(11)
    for seed in range(200):
        n = rng.randrange(2, 9)
        c = random_code(n, rng.randrange(1, n + 1), seed)
        want = is_hermitian_lcd(c)
        for _ in range(5):
            g = _monomial(c, rng)
            assert (det(hermitian_gram(g)) != 0) == want
            assert is_hermitian_lcd(from_generator(g)) == want
