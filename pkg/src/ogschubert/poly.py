"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Number = int | Fraction


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RationalPoly:
    """Coefficients low degree first, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "RationalPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def linear(cls, a: Number) -> "RationalPoly":
        """z + a."""
        return cls((a, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def padded(self, length: int) -> tuple[Fraction, ...]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit {length} coefficients")
        return self.coeffs + (Fraction(0),) * (length - len(self.coeffs))

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        k = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(k)))

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: "RationalPoly | Number") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return RationalPoly(tuple(c * other for c in self.coeffs))
        if not self or not other:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        out = RationalPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading
        for shift in range(len(quot) - 1, -1, -1):
            c = rem[shift + other.degree] / lead
            quot[shift] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] -= c * b
        return RationalPoly(tuple(quot)), RationalPoly(tuple(rem))

    def __floordiv__(self, other: "RationalPoly") -> "RationalPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RationalPoly") -> "RationalPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "RationalPoly") -> "RationalPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "RationalPoly":
        if not self:
            raise ZeroDivisionError("the zero polynomial has no monic form")
        return self * (1 / self.leading)

    def __str__(self) -> str:
        return format_poly(self)


ZERO = RationalPoly()
ONE = RationalPoly((1,))


def primitive_integer(p: RationalPoly) -> list[int]:
    """Scale ``p`` to a primitive integer polynomial with positive leading coefficient."""
    if not p:
        return []
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = gcd(*ints)
    sign = 1 if ints[-1] > 0 else -1
    return [sign * x // g for x in ints]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (low degree first)."""
    a = a[:]
    lb = b[-1]
    while len(a) >= len(b) and a:
        la, shift = a[-1], len(a) - len(b)
        a = [x * lb for x in a]
        for j, bj in enumerate(b):
            a[shift + j] -= la * bj
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    """Monic gcd via the primitive pseudo-remainder sequence over the integers."""
    a, b = primitive_integer(p), primitive_integer(q)
    if not a:
        return RationalPoly(tuple(b)).monic() if b else ZERO
    while b:
        r = _prem(a, b)
        a, b = b, primitive_integer(RationalPoly(tuple(r))) if r else []
    return RationalPoly(tuple(a)).monic()


def squarefree_decomposition(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Yun's algorithm: monic square-free, pairwise coprime factors with multiplicities.

    ``p`` equals its leading coefficient times the product of ``f**k``.
    """
    if not p:
        raise ValueError("the zero polynomial has no square-free decomposition")
    out = []
    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df) if df else f
    b = f.exact_div(a)
    c = df.exact_div(a) if df else ZERO
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if d else b
        if a.degree > 0:
            out.append((a, k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        k += 1
    return out


def is_perfect_square(p: RationalPoly) -> bool:
    """True iff p = c·q² for a rational c and a rational polynomial q."""
    return all(k % 2 == 0 for _, k in squarefree_decomposition(p))


def root_multiplicity(p: RationalPoly, a: Number) -> int:
    """Multiplicity of -a as a root of p, i.e. the power of (z + a) dividing p."""
    if not p:
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    factor = RationalPoly.linear(a)
    k = 0
    q, r = divmod(p, factor)
    while not r:
        k += 1
        p = q
        q, r = divmod(p, factor)
    return k


def rational_roots(p: RationalPoly) -> dict[Fraction, int]:
    """Rational roots of p with multiplicities.

    Candidates come from the rational root test on the square-free factors,
    so only the trailing and leading coefficients need factoring; sympy
    does the integer factorization.
    """
    from sympy import divisors

    roots: dict[Fraction, int] = {}
    for f, k in squarefree_decomposition(p):
        ints = primitive_integer(f)
        if ints[0] == 0:
            roots[Fraction(0)] = k
            ints = ints[1:]
        lo, hi = abs(ints[0]), abs(ints[-1])
        for num in divisors(lo):
            for den in divisors(hi):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and f(cand) == 0:
                        roots[cand] = k
    return dict(sorted(roots.items()))


def parse_poly(text: str) -> RationalPoly:
    """Parse ``"c0,c1,...,cd"`` with exact rationals such as ``3/2``."""
    try:
        return RationalPoly(tuple(Fraction(tok.strip()) for tok in text.strip().split(",")))
    except (ValueError, ZeroDivisionError):
        bad = next(tok for tok in text.split(",") if not _is_rational(tok))
        raise ValueError(f"malformed coefficient {bad.strip()!r}") from None


def _is_rational(tok: str) -> bool:
    try:
        Fraction(tok.strip())
        return True
    except (ValueError, ZeroDivisionError):
        return False


def format_poly(p: RationalPoly, length: int | None = None) -> str:
    coeffs = p.padded(length) if length is not None else (p.coeffs or (Fraction(0),))
    return ",".join(str(c) for c in coeffs)


def from_roots(roots: Iterable[Number]) -> RationalPoly:
    out = ONE
    for a in roots:
        out = out * RationalPoly.linear(a)
    return out
