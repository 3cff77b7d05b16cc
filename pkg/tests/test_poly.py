from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ogschubert.linalg import matmul, poly_det, rank, rref, solve
from ogschubert.poly import (
    RationalPoly,
    from_roots,
    is_perfect_square,
    parse_poly,
    format_poly,
    poly_gcd,
    rational_roots,
    root_multiplicity,
    squarefree_decomposition,
)

z = sympy.symbols("z")
small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small_fracs, min_size=1, max_size=6).map(lambda c: RationalPoly(tuple(c)))


def to_sympy(p: RationalPoly):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])) or [0], z)


def test_arithmetic():
    p = RationalPoly((1, 1))
    assert p * p == RationalPoly((1, 2, 1))
    assert (p * p).exact_div(p) == p
    assert RationalPoly((0, 0, 3)).derivative() == RationalPoly((0, 6))
    assert RationalPoly(()).degree == -1
    assert p(Fraction(-1)) == 0


@given(polys, polys)
def test_divmod_identity(a, b):
    if not b:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60)
@given(polys, polys)
def test_gcd_matches_sympy(a, b):
    if not a or not b:
        return
    ours = poly_gcd(a, b)
    theirs = sympy.gcd(to_sympy(a), to_sympy(b)).monic()
    assert sympy.expand(to_sympy(ours).as_expr() - theirs.as_expr()) == 0


@settings(max_examples=60)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6), st.integers(1, 3))
def test_squarefree_decomposition_multiplicities(roots, c):
    p = from_roots(roots) * c
    factors = squarefree_decomposition(p)
    product = RationalPoly((1,))
    for f, k in factors:
        product = product * f ** k
    assert product == p.monic()
    counts = {}
    for r in roots:
        counts[r] = counts.get(r, 0) + 1
    assert rational_roots(p) == {Fraction(-r): k for r, k in counts.items()}
    for r, k in counts.items():
        assert root_multiplicity(p, r) == k


def test_perfect_square_examples():
    assert is_perfect_square(RationalPoly((1, 2, 1)))
    assert is_perfect_square(RationalPoly.monomial(6))
    assert not is_perfect_square(RationalPoly((0, 1, 1)))
    assert is_perfect_square(RationalPoly((7,)))
    with pytest.raises(ValueError):
        is_perfect_square(RationalPoly(()))


def test_parse_and_format():
    p = parse_poly("1,-3/2,0,0,1")
    assert p.coeffs == (1, Fraction(-3, 2), 0, 0, 1)
    assert format_poly(p, 6) == "1,-3/2,0,0,1,0"
    with pytest.raises(ValueError, match="'x'"):
        parse_poly("1,x,2")


matrices = st.integers(1, 5).flatmap(
    lambda m: st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=m, max_size=m))


@given(matrices)
def test_rank_matches_rref_and_sympy(rows):
    assert rank(rows) == len(rref(rows)) == sympy.Matrix(rows).rank()


def test_solve_and_matmul():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    b = [[Fraction(1)], [Fraction(2)]]
    assert matmul(a, solve(a, b)) == b
    with pytest.raises(ZeroDivisionError):
        solve([[1, 2], [2, 4]], b)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_poly_det_matches_sympy(m):
    ours = poly_det(m)
    theirs = sympy.Matrix([[to_sympy(p).as_expr() for p in row] for row in m]).det()
    assert sympy.expand(to_sympy(ours).as_expr() - theirs) == 0
