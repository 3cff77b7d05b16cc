import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ogschubert.linalg import rank
from ogschubert.poly import RationalPoly, is_perfect_square
from ogschubert.shapes import contains, partitions_in_box, strict_partitions, tilde
from ogschubert.wronski import (
    INF,
    Subspace,
    SubspaceError,
    bilinear,
    cayley,
    check_points,
    flag,
    gram_matrix,
    in_schubert_gr,
    in_schubert_og,
    intersect_dim,
    is_isotropic,
    parse_point,
    random_isotropic,
    random_isotropic_at,
    random_subspace,
    random_subspace_at,
    seed_isotropic,
    verify_divisibility,
    wronskian,
    wronskian_multiplicity,
)

z = sympy.symbols("z")


def monomials(*ks, n=2):
    return Subspace(n, tuple(RationalPoly.monomial(k) for k in ks))


def test_wronskian_of_top_monomials():
    x = monomials(3, 4)
    assert wronskian(x) == RationalPoly.monomial(6)


def test_wronskian_matches_sympy():
    for seed in range(5):
        x = random_subspace(2, seed)
        exprs = [sum(sympy.Rational(c.numerator, c.denominator) * z ** k for k, c in enumerate(p.coeffs))
                 for p in x.basis]
        theirs = sympy.Poly(sympy.wronskian(exprs, z), z).monic()
        ours = wronskian(x)
        assert theirs.all_coeffs()[::-1] == [sympy.Rational(c.numerator, c.denominator) for c in ours.coeffs]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_wronskian_basis_invariance(seed, m):
    x = random_subspace(2, seed)
    f, g = x.basis
    if m[0] * m[3] - m[1] * m[2] == 0:
        return
    other = Subspace(2, (f * m[0] + g * m[1], f * m[2] + g * m[3]))
    assert other == x
    assert wronskian(other) == wronskian(x)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_wronskian_degree_bound(n):
    for seed in range(5):
        w = wronskian(random_subspace(n, seed))
        assert w and w.degree <= n * (n + 1) and w.leading == 1


def test_subspace_rejects_dependent_basis():
    with pytest.raises(SubspaceError):
        Subspace(1, (RationalPoly((1,)), RationalPoly((2,))))


def test_bilinear_examples():
    assert bilinear(RationalPoly.monomial(4), RationalPoly.monomial(0), 2) == 24
    assert bilinear(RationalPoly.monomial(3), RationalPoly.monomial(4), 2) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_form_is_symmetric_and_nondegenerate(n):
    g = gram_matrix(n)
    assert all(g[i][j] == g[j][i] for i in range(2 * n + 1) for j in range(2 * n + 1))
    assert rank(g) == 2 * n + 1


def test_isotropic_examples():
    assert is_isotropic(monomials(3, 4))
    # z pairs with itself to -1 when n = 1
    assert not is_isotropic(Subspace(1, (RationalPoly.monomial(1),)))
    assert is_isotropic(seed_isotropic(3))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a", [Fraction(0), Fraction(-3, 2), Fraction(2), INF])
def test_flags_nested_and_paired(n, a):
    for i in range(2 * n + 1):
        assert flag(i, a, n).dim == i
        assert intersect_dim(flag(i, a, n), flag(i + 1, a, n)) == i
    for i in range(2 * n + 2):
        for f in flag(i, a, n).basis:
            for g in flag(2 * n + 1 - i, a, n).basis:
                assert bilinear(f, g, n) == 0


def test_schubert_membership_of_top_monomials():
    x = monomials(3, 4)
    assert in_schubert_gr(x, (3, 3), Fraction(0))
    assert not in_schubert_gr(x, (1,), INF)
    assert in_schubert_og(x, (2, 1), Fraction(0))


def test_schubert_monotonicity():
    rng = random.Random(7)
    box = partitions_in_box(2, 3)
    for seed in range(6):
        a = Fraction(rng.randint(-3, 3))
        x = random_subspace_at(2, a, seed)
        for lam in box:
            if in_schubert_gr(x, lam, a):
                for mu in box:
                    if contains(lam, mu):
                        assert in_schubert_gr(x, mu, a)


def test_og_schubert_matches_tilde_condition():
    for seed in range(4):
        y = random_isotropic_at(2, Fraction(1), seed)
        for sigma in strict_partitions(2):
            assert in_schubert_og(y, sigma, Fraction(1)) == in_schubert_gr(y, tilde(sigma, 2), Fraction(1))
        assert in_schubert_og(y, (), Fraction(1))
    x = random_subspace(2, 1)
    assert not is_isotropic(x) and not in_schubert_og(x, (), Fraction(0))


def test_cayley_is_an_isometry():
    rng = random.Random(1)
    from ogschubert.wronski import random_skew_isometry

    q = random_skew_isometry(2, rng)
    g = gram_matrix(2)
    qt = [list(r) for r in zip(*q)]
    from ogschubert.linalg import matmul

    assert matmul(matmul(qt, g), q) == g
    assert cayley([[Fraction(0)] * 3 for _ in range(3)]) == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def test_random_isotropic_with_zero_generator_is_seed():
    zero = [[Fraction(0)] * 5 for _ in range(5)]
    assert random_isotropic(2, 0, s=zero) == seed_isotropic(2)


@pytest.mark.parametrize("n", [2, 3])
def test_isotropic_wronskians_are_squares(n):
    for seed in range(20):
        y = random_isotropic(n, seed)
        assert is_isotropic(y)
        assert is_perfect_square(wronskian(y))


def test_generic_wronskians_are_not_squares():
    assert sum(not is_perfect_square(wronskian(random_subspace(2, s))) for s in range(10)) >= 8


def test_random_sampling_is_deterministic():
    assert random_isotropic(3, 11) == random_isotropic(3, 11)
    assert random_subspace(2, 5) == random_subspace(2, 5)


def test_verify_divisibility_examples():
    r = verify_divisibility(monomials(3, 4), Fraction(0))
    assert (r.multiplicity, r.max_lambda, r.max_sigma) == (6, (3, 3), (2, 1))
    assert r.passed
    x = random_subspace(2, 3)
    a = Fraction(97, 3)
    assert wronskian_multiplicity(x, a) == 0
    assert verify_divisibility(x, a).passed


def test_divisibility_at_every_root():
    rng = random.Random(2)
    for _ in range(8):
        a = Fraction(rng.randint(-3, 3))
        for x in (random_subspace_at(2, a, rng.randrange(10**6)), random_isotropic_at(2, a, rng.randrange(10**6))):
            for point in check_points(x):
                assert verify_divisibility(x, point).passed


def test_parse_point():
    assert parse_point("inf") is INF
    assert parse_point("-3/2") == Fraction(-3, 2)
    with pytest.raises(ValueError, match="'q'"):
        parse_point("q")
