"""Subspaces of C_2n[z], Wronskians, the orthogonal form and Schubert conditions.

Polynomials are stored in the monomial basis.  The symmetric form pairs
divided-power coordinates a_m = m!·c_m:

    <f, g> = sum_{m=0}^{2n} (-1)^m a_m b_{2n-m}

Points of the projective line are rationals or :data:`INF`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .linalg import Matrix, identity, matmul, poly_det, rank, rref, solve
from .poly import RationalPoly, is_perfect_square, rational_roots, root_multiplicity
from .shapes import (
    Partition,
    check_lambda,
    part,
    partitions_in_box,
    strict_partition,
    strict_partitions,
    tilde,
)


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtPoint = Fraction | _Infinity


def parse_point(text: str) -> ExtPoint:
    text = text.strip().lower()
    if text in ("inf", "infinity", "∞"):
        return INF
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed point {text!r}; expected a rational or 'inf'") from None


class SubspaceError(ValueError):
    pass


@dataclass(frozen=True)
class Subspace:
    """A subspace of C_2n[z] kept as the reduced row echelon form of its basis."""

    n: int
    basis: tuple[RationalPoly, ...] = field(default=())

    def __post_init__(self) -> None:
        length = 2 * self.n + 1
        rows = [p.padded(length) for p in self.basis]
        reduced = rref(rows)
        if len(reduced) != len(rows):
            raise SubspaceError(f"{len(rows)} polynomials span only a {len(reduced)}-dimensional space")
        object.__setattr__(self, "basis", tuple(RationalPoly(tuple(r)) for r in reduced))

    @classmethod
    def span(cls, polys: Iterable[RationalPoly], n: int) -> "Subspace":
        """Span of possibly dependent polynomials."""
        rows = [p.padded(2 * n + 1) for p in polys]
        return cls(n, tuple(RationalPoly(tuple(r)) for r in rref(rows)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def rows(self) -> list[list[Fraction]]:
        return [list(p.padded(2 * self.n + 1)) for p in self.basis]


def wronskian(x: Subspace) -> RationalPoly:
    """The monic Wronskian of x, i.e. det(f_j^{(i)}) normalized."""
    if x.dim == 0:
        raise SubspaceError("the zero subspace has no Wronskian")
    derivs = []
    for f in x.basis:
        col = [f]
        for _ in range(x.dim - 1):
            col.append(col[-1].derivative())
        derivs.append(col)
    det = poly_det([[derivs[j][i] for j in range(x.dim)] for i in range(x.dim)])
    if not det:
        raise SubspaceError("Wronskian vanishes: the basis is dependent")
    return det.monic()


def divided_powers(p: RationalPoly, n: int) -> list[Fraction]:
    return [factorial(m) * c for m, c in enumerate(p.padded(2 * n + 1))]


def bilinear(f: RationalPoly, g: RationalPoly, n: int) -> Fraction:
    a, b = divided_powers(f, n), divided_powers(g, n)
    return sum(((-1) ** m * a[m] * b[2 * n - m] for m in range(2 * n + 1)), Fraction(0))


def gram_matrix(n: int) -> Matrix:
    """The form on divided-power coordinates: entry (k, l) is (-1)^k when k + l = 2n."""
    size = 2 * n + 1
    return [[Fraction((-1) ** k) if k + l == 2 * n else Fraction(0) for l in range(size)] for k in range(size)]


def is_isotropic(x: Subspace) -> bool:
    return all(bilinear(f, g, x.n) == 0 for i, f in enumerate(x.basis) for g in x.basis[i:])


def shifted_basis(a: ExtPoint, n: int) -> list[RationalPoly]:
    """(z+a)^k / k! for k = 0..2n; at infinity the plain divided powers z^k / k!.

    For rational a the form has the same Gram matrix in this basis, since
    sum (-1)^m f^(m)(t) g^(2n-m)(t) does not depend on t.
    """
    base = RationalPoly((0, 1)) if a is INF else RationalPoly.linear(a)
    return [base ** k * Fraction(1, factorial(k)) for k in range(2 * n + 1)]


@lru_cache(maxsize=None)
def flag(i: int, a: ExtPoint, n: int) -> Subspace:
    """F_i(a): multiples of (z+a)^{2n+1-i} in C_2n[z]; F_i(∞) = C_{i-1}[z]."""
    if not 0 <= i <= 2 * n + 1:
        raise ValueError(f"flag index {i} outside 0..{2 * n + 1}")
    if a is INF:
        return Subspace(n, tuple(RationalPoly.monomial(k) for k in range(i)))
    lin = RationalPoly.linear(a)
    return Subspace(n, tuple(lin ** (2 * n + 1 - i + j) for j in range(i)))


def intersect_dim(x: Subspace, f: Subspace) -> int:
    if x.n != f.n:
        raise SubspaceError("subspaces live in different ambient spaces")
    return x.dim + f.dim - rank(x.rows() + f.rows())


def in_schubert_gr(x: Subspace, lam: Sequence[int], a: ExtPoint) -> bool:
    """x ∈ X_λ(a): dim(x ∩ F_{n+1-λ^i+i}(a)) ≥ i for i = 1..n."""
    n = x.n
    lam = check_lambda(lam, n)
    return all(intersect_dim(x, flag(n + 1 - part(lam, i - 1) + i, a, n)) >= i
               for i in range(1, n + 1) if part(lam, i - 1))


def in_schubert_og(y: Subspace, sigma: Sequence[int], a: ExtPoint) -> bool:
    """y ∈ Y_σ(a) = Y ∩ X_σ̃(a)."""
    sigma = strict_partition(sigma, y.n)
    return is_isotropic(y) and in_schubert_gr(y, tilde(sigma, y.n), a)


def wronskian_multiplicity(x: Subspace, a: ExtPoint) -> int:
    """Order of vanishing of Wr(x) at -a; at ∞ the degree deficit from n(n+1)."""
    return point_multiplicity(wronskian(x), a, x.n)


def point_multiplicity(p: RationalPoly, a: ExtPoint, n: int) -> int:
    """Root multiplicity with the Wronskian convention for ∞ (target degree n(n+1))."""
    if a is INF:
        if not p:
            raise ValueError("root multiplicity of the zero polynomial is undefined")
        return n * (n + 1) - p.degree
    return root_multiplicity(p, a)


# -- sampling ------------------------------------------------------------------

def _coords_to_polys(cols: Matrix, basis: list[RationalPoly]) -> list[RationalPoly]:
    out = []
    for col in cols:
        p = RationalPoly()
        for c, b in zip(col, basis):
            if c:
                p = p + b * c
        out.append(p)
    return out


def cayley(s: Matrix) -> Matrix:
    """(I - S)^{-1} (I + S)."""
    n = len(s)
    eye = identity(n)
    minus = [[eye[i][j] - s[i][j] for j in range(n)] for i in range(n)]
    plus = [[eye[i][j] + s[i][j] for j in range(n)] for i in range(n)]
    return solve(minus, plus)


def random_skew_isometry(n: int, rng: random.Random, lower: bool = False, bound: int = 9) -> Matrix:
    """Cayley transform of S = G·A with A a random integer skew matrix.

    Such S satisfies SᵀG + GS = 0, so the result preserves the form.  With
    ``lower`` the entries of A with row + column > 2n vanish, which makes S
    and the isometry lower triangular: it then fixes the flag at the
    expansion point.
    """
    size = 2 * n + 1
    g = gram_matrix(n)
    while True:
        a = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                if lower and i + j > 2 * n:
                    continue
                v = rng.randint(-bound, bound)
                a[i][j], a[j][i] = Fraction(v), Fraction(-v)
        s = matmul(g, a)
        try:
            return cayley(s)
        except ZeroDivisionError:
            continue


def seed_isotropic(n: int) -> Subspace:
    """span{z^{n+1}, ..., z^{2n}}."""
    return Subspace(n, tuple(RationalPoly.monomial(k) for k in range(n + 1, 2 * n + 1)))


def random_isotropic(n: int, seed: int, s: Matrix | None = None) -> Subspace:
    """Image of the seed isotropic subspace under a random rational isometry.

    Pass ``s`` to use a specific G-skew matrix instead of a random one.
    """
    if n < 1:
        raise ValueError("n must be positive")
    q = cayley(s) if s is not None else random_skew_isometry(n, random.Random(seed))
    basis = shifted_basis(Fraction(0), n)
    cols = [[q[row][k] for row in range(2 * n + 1)] for k in range(n + 1, 2 * n + 1)]
    return Subspace(n, tuple(_coords_to_polys(cols, basis)))


def random_isotropic_at(n: int, a: Fraction, seed: int) -> Subspace:
    """A random isotropic subspace lying in a random Schubert cell at a.

    Start from a coordinate isotropic subspace in the basis (z+a)^k/k!,
    which picks one of k, 2n-k for each k < n, then apply a random isometry
    fixing the flag at a.
    """
    rng = random.Random(seed)
    ks = sorted(rng.choice((k, 2 * n - k)) for k in range(n))
    q = random_skew_isometry(n, rng, lower=True)
    cols = [[q[row][k] for row in range(2 * n + 1)] for k in ks]
    return Subspace(n, tuple(_coords_to_polys(cols, shifted_basis(a, n))))


def random_subspace_at(n: int, a: Fraction, seed: int, bound: int = 9) -> Subspace:
    """A random n-dimensional subspace in a random Schubert cell at a (not isotropic in general)."""
    rng = random.Random(seed)
    ks = sorted(rng.sample(range(2 * n + 1), n))
    basis = shifted_basis(a, n)
    polys = []
    for k in ks:
        p = basis[k]
        for l in range(k + 1, 2 * n + 1):
            p = p + basis[l] * rng.randint(-bound, bound)
        polys.append(p)
    return Subspace(n, tuple(polys))


def random_subspace(n: int, seed: int, bound: int = 9) -> Subspace:
    """A random n-dimensional subspace with small integer coefficients."""
    rng = random.Random(seed)
    while True:
        polys = [RationalPoly(tuple(rng.randint(-bound, bound) for _ in range(2 * n + 1))) for _ in range(n)]
        if rank([p.padded(2 * n + 1) for p in polys]) == n:
            return Subspace(n, tuple(polys))


# -- divisibility reports --------------------------------------------------------

@dataclass
class DivisibilityReport:
    point: ExtPoint
    multiplicity: int
    max_lambda: Partition
    isotropic: bool
    max_sigma: Partition | None = None

    @property
    def gr_ok(self) -> bool:
        return self.multiplicity == sum(self.max_lambda)

    @property
    def og_ok(self) -> bool:
        if not self.isotropic:
            return True
        return self.multiplicity % 2 == 0 and self.multiplicity // 2 == sum(self.max_sigma or ())

    @property
    def passed(self) -> bool:
        return self.gr_ok and self.og_ok

    def as_dict(self) -> dict:
        return {
            "point": str(self.point),
            "multiplicity": self.multiplicity,
            "max_lambda": list(self.max_lambda),
            "isotropic": self.isotropic,
            "max_sigma": None if self.max_sigma is None else list(self.max_sigma),
            "passed": self.passed,
        }


def verify_divisibility(x: Subspace, a: ExtPoint) -> DivisibilityReport:
    """Compare the root multiplicity of Wr(x) at a with the deepest Schubert condition x meets there."""
    n = x.n
    k = wronskian_multiplicity(x, a)
    best = max((lam for lam in partitions_in_box(n, n + 1) if in_schubert_gr(x, lam, a)), key=sum)
    iso = is_isotropic(x)
    report = DivisibilityReport(a, k, best, iso)
    if iso:
        report.max_sigma = max((s for s in strict_partitions(n) if in_schubert_og(x, s, a)), key=sum)
    return report


def check_points(x: Subspace) -> list[ExtPoint]:
    """Every rational root point a (Wr vanishing at -a) together with ∞."""
    return [-r for r in rational_roots(wronskian(x))] + [INF]


def wronskian_is_square(x: Subspace) -> bool:
    return is_perfect_square(wronskian(x))
