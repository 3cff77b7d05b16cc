"""Littlewood-Richardson numbers for Gr(n, 2n+1) and OG(n, 2n+1).

The primary routes count dual equivalence classes of skew tableaux.  Two
independent oracles check them: the lattice-word rule for the Grassmannian
and an exact Schur P-function expansion for the orthogonal Grassmannian.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .jdt import fingerprint, rectification_shape
from .shapes import (
    Partition,
    SkewShape,
    check_lambda,
    contains,
    partition,
    partitions_in_box,
    partitions_of,
    rectangle,
    staircase,
    strict_partition,
    strict_partitions,
)
from .tableaux import Tableau, enumerate_shifted, enumerate_standard, subtableau

GRASSMANNIAN = "grassmannian"
ORTHOGONAL = "orthogonal"

#: largest |κ| the P-function oracle accepts
P_ORACLE_CAP = 12


class OracleError(ArithmeticError):
    """A basis change produced a non-integral or negative coefficient."""


@dataclass(frozen=True)
class LRQuery:
    kind: str
    first: Partition
    second: Partition
    target: Partition
    n: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (GRASSMANNIAN, ORTHOGONAL):
            raise ValueError(f"unknown query kind {self.kind!r}")
        shapes = (self.first, self.second, self.target)
        if self.kind == ORTHOGONAL:
            shapes = tuple(strict_partition(s, self.n) for s in shapes)
        elif self.n is not None:
            shapes = tuple(check_lambda(s, self.n) for s in shapes)
        else:
            shapes = tuple(partition(s) for s in shapes)
        object.__setattr__(self, "first", shapes[0])
        object.__setattr__(self, "second", shapes[1])
        object.__setattr__(self, "target", shapes[2])

    @property
    def degree_ok(self) -> bool:
        return sum(self.first) + sum(self.second) == sum(self.target)


# -- dual equivalence counting ---------------------------------------------------

@lru_cache(maxsize=None)
def skew_class_table(outer: Partition, inner: Partition, shifted: bool) -> Counter:
    """Number of dual equivalence classes of the skew shape, keyed by rectification shape.

    Every member of a class shares its rectification shape, and Û lives
    on ``outer`` minus that shape, so distinct Û are counted per shape.
    """
    shape = SkewShape(outer, inner, shifted)
    tabs = enumerate_shifted(shape, cap=len(shape)) if shifted else enumerate_standard(shape, cap=len(shape))
    seen: dict[Tableau, Partition] = {}
    for t in tabs:
        u_hat = fingerprint(t)
        seen.setdefault(u_hat, u_hat.shape.inner)
    return Counter(seen.values())


def lr_gr(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], n: int | None = None) -> int:
    """c^ν_{λμ}: dual equivalence classes of SYT(ν/μ) with rectification shape λ."""
    q = LRQuery(GRASSMANNIAN, tuple(lam), tuple(mu), tuple(nu), n)
    if not q.degree_ok or not contains(q.target, q.second):
        return 0
    return skew_class_table(q.target, q.second, False)[q.first]


def lr_og(sigma: Sequence[int], tau: Sequence[int], kappa: Sequence[int], n: int | None = None) -> int:
    """c^κ_{στ} on OG(n, 2n+1): dual equivalence classes of SST(κ/τ) with rectification shape σ."""
    q = LRQuery(ORTHOGONAL, tuple(sigma), tuple(tau), tuple(kappa), n)
    if not q.degree_ok or not contains(q.target, q.second):
        return 0
    return skew_class_table(q.target, q.second, True)[q.first]


def dual_strict(kappa: Sequence[int], n: int) -> Partition:
    """The Poincaré dual κ∨, read off as the rectification shape of SST(Δ_n/κ).

    Cross-checked against the complement of κ's parts in {1..n}; a
    disagreement raises.
    """
    kappa = strict_partition(kappa, n)
    shape = SkewShape(staircase(n), kappa, shifted=True)
    first = enumerate_shifted(shape, cap=len(shape))[0]
    dual = rectification_shape(first)
    complement = tuple(p for p in range(n, 0, -1) if p not in kappa)
    if dual != complement:
        raise ArithmeticError(f"rectification gives {dual} but the part complement of {kappa} is {complement}")
    return dual


def _multiply(classes: dict[Partition, int], factor: dict[Partition, int],
              targets: list[Partition], coefficient) -> dict[Partition, int]:
    out: Counter = Counter()
    for a, ca in classes.items():
        for b, cb in factor.items():
            for k in targets:
                if sum(k) == sum(a) + sum(b):
                    c = coefficient(a, b, k)
                    if c:
                        out[k] += ca * cb * c
    return dict(out)


def pieri_power_table(n: int) -> dict[Partition, int]:
    """For each σ ∈ Σ_n, the coefficient of [Y_σ] in [Y_1]^{|σ|}, by repeated lr_og."""
    targets = strict_partitions(n)
    powers = {(): 1}
    table = {(): 1}
    for _ in range(n * (n + 1) // 2):
        powers = _multiply(powers, {(1,): 1}, targets, lambda a, b, k: lr_og(a, b, k, n))
        table.update(powers)
    return table


def og_power_coefficient(n: int) -> int:
    """∫_Y [Y_1]^{n(n+1)/2}, the coefficient of [Y_Δ] in the top power."""
    return pieri_power_table(n).get(staircase(n), 0)


def segment_class_count(composition: Sequence[int], n: int) -> int:
    """Classes of SYT(n x (n+1)) under segment-wise dual equivalence.

    The composition cuts 1..n(n+1) into consecutive segments; two tableaux
    are equivalent when their restrictions to every segment have equal
    shapes and are dual equivalent.
    """
    rect = rectangle(n)
    if any(c <= 0 for c in composition) or sum(composition) != sum(rect):
        raise ValueError(f"composition {tuple(composition)} must be positive and sum to {sum(rect)}")
    bounds = []
    lo = 1
    for c in composition:
        bounds.append((lo, lo + c - 1))
        lo += c
    keys = set()
    for t in enumerate_standard(rect, cap=sum(rect)):
        key = []
        for a, b in bounds:
            seg = subtableau(t, a, b)
            key.append((seg.shape, fingerprint(seg)))
        keys.add(tuple(key))
    return len(keys)


def segment_intersection_number(composition: Sequence[int], n: int) -> int:
    """∫_X ∏_l (Σ_{λ ⊢ c_l} [X_λ]) on Gr(n, 2n+1), by iterated lr_gr."""
    box = partitions_in_box(n, n + 1)
    classes = {(): 1}
    for c in composition:
        factor = {lam: 1 for lam in box if sum(lam) == c}
        classes = _multiply(classes, factor, box, lambda a, b, k: lr_gr(a, b, k, n))
    return classes.get(rectangle(n), 0)


# -- oracle: lattice words -------------------------------------------------------

def lr_gr_oracle(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Count semistandard fillings of ν/μ with content λ and lattice reverse reading word."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, mu):
        return 0
    shape = SkewShape(nu, mu)
    # reverse reading order: rows top to bottom, each right to left
    order = [(r, c) for r in range(len(nu)) for c in reversed(shape.row_span(r))]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(lam) + 1)

    def rec(i: int) -> int:
        if i == len(order):
            return 1
        r, c = order[i]
        lo = filling.get((r - 1, c), 0) + 1
        hi = filling.get((r, c + 1), len(lam))
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] == lam[v - 1] or (v > 1 and counts[v] == counts[v - 1]):
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(i + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


# -- oracle: Schur P-functions ---------------------------------------------------
#
# A marked shifted tableau uses the alphabet 1' < 1 < 2' < 2 < ...; rows and
# columns weakly increase, an unprimed letter repeats in no column, a
# primed one in no row, and P-normalization leaves the diagonal unprimed.
# Letter k' is encoded as 2k-1 and k as 2k.

@lru_cache(maxsize=None)
def p_monomial_coefficient(lam: Partition, content: Partition) -> int:
    """Coefficient of x^content in P_λ: the number of marked shifted tableaux of that content."""
    cells = SkewShape(lam, (), shifted=True).cells()
    budget = list(content)
    filled: dict[tuple[int, int], int] = {}

    def rec(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        left, up = filled.get((r, c - 1), 0), filled.get((r - 1, c), 0)
        total = 0
        for code in range(max(left, up, 1), 2 * len(budget) + 1):
            k = (code + 1) // 2
            primed = code % 2 == 1
            if budget[k - 1] == 0:
                continue
            if primed and (r == c or left == code):
                continue
            if not primed and up == code:
                continue
            budget[k - 1] -= 1
            filled[(r, c)] = code
            total += rec(i + 1)
            del filled[(r, c)]
            budget[k - 1] += 1
        return total

    return rec(0)


def _sym_coeff(lam: Partition, alpha: Sequence[int]) -> int:
    return p_monomial_coefficient(lam, partition(sorted((a for a in alpha if a), reverse=True)))


def _product_coefficient(sigma: Partition, tau: Partition, nu: Partition) -> int:
    """Coefficient of x^ν in P_σ·P_τ, summing over splittings ν = α + β."""
    total = 0
    for alpha in product(*(range(p + 1) for p in nu)):
        if sum(alpha) != sum(sigma):
            continue
        beta = [p - a for p, a in zip(nu, alpha)]
        ca = _sym_coeff(sigma, alpha)
        if ca:
            total += ca * _sym_coeff(tau, beta)
    return total


@lru_cache(maxsize=None)
def p_product_expansion(sigma: Partition, tau: Partition) -> dict[Partition, int]:
    """P_σ·P_τ = Σ c_κ P_κ, by peeling dominance-leading monomials.

    Works in m = |σ|+|τ| variables so every monomial of that degree is
    visible.  Reverse lexicographic order refines dominance, and P_κ has
    leading monomial x^κ with coefficient 1.
    """
    m = sum(sigma) + sum(tau)
    if m > P_ORACLE_CAP:
        raise ValueError(f"P-function oracle is capped at degree {P_ORACLE_CAP}, got {m}")
    residual = {nu: Fraction(_product_coefficient(sigma, tau, nu)) for nu in partitions_of(m)}
    result = {}
    for nu in partitions_of(m):  # reverse lex: leading terms first
        c = residual[nu]
        if c == 0:
            continue
        if c < 0 or c.denominator != 1 or any(a == b for a, b in zip(nu, nu[1:])):
            raise OracleError(f"coefficient {c} at monomial {nu} while expanding P_{sigma}·P_{tau}")
        result[nu] = int(c)
        for mu in partitions_of(m):
            residual[mu] -= c * p_monomial_coefficient(nu, mu)
    return result


def lr_og_oracle(sigma: Sequence[int], tau: Sequence[int], kappa: Sequence[int]) -> int:
    """Coefficient of P_κ in P_σ·P_τ."""
    sigma, tau, kappa = (strict_partition(s) for s in (sigma, tau, kappa))
    if sum(sigma) + sum(tau) != sum(kappa):
        return 0
    return p_product_expansion(sigma, tau).get(kappa, 0)
