"""Verification suites: each one sweeps an identity and returns a RunReport."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from . import lr
from .jdt import classify, rectification_shape, switch
from .shapes import (
    SkewShape,
    contains,
    count_sst,
    count_syt,
    partitions_in_box,
    rectangle,
    staircase,
    strict_partitions,
)
from .tableaux import (
    double,
    enumerate_shifted,
    is_symmetrical,
    symmetrical_tableaux,
    undouble,
)
from .wronski import (
    check_points,
    is_isotropic,
    random_isotropic,
    random_isotropic_at,
    random_subspace_at,
    verify_divisibility,
    wronskian,
)
from .poly import format_poly, is_perfect_square

MAX_FAILURES_KEPT = 5


@dataclass
class RunReport:
    suite: str
    attempted: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.passed == self.attempted

    def check(self, condition: bool, detail: Callable[[], str] | str) -> None:
        self.attempted += 1
        if condition:
            self.passed += 1
        elif len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(detail() if callable(detail) else detail)

    def line(self, timing: bool = False) -> str:
        text = f"{'PASS' if self.ok else 'FAIL'}  {self.suite}  {self.passed}/{self.attempted}"
        if timing:
            text += f"  {self.seconds:.2f}s"
        if self.failures:
            text += "\n    first failure: " + self.failures[0].replace("\n", "\n    ")
        return text

    def as_dict(self, timing: bool = False) -> dict:
        out = {"suite": self.suite, "attempted": self.attempted, "passed": self.passed,
               "ok": self.ok, "failures": self.failures}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(name: str):
    def wrap(fn):
        def run(*args, **kwargs) -> RunReport:
            report = RunReport(name)
            start = time.perf_counter()
            fn(report, *args, **kwargs)
            report.seconds = time.perf_counter() - start
            return report
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _strict_pairs(n: int) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    sigmas = strict_partitions(n)
    for s in sigmas:
        for t in sigmas:
            if contains(s, t):
                yield s, t


@_timed("doubling bijection")
def doubling_bijection(report: RunReport, n_max: int) -> None:
    """Symmetrical rectangular tableaux versus SST(Δ_n), with round trips."""
    for n in range(1, n_max + 1):
        sym = symmetrical_tableaux(n)
        shifted = enumerate_shifted(staircase(n), cap=n * (n + 1) // 2)
        counted = count_sst(staircase(n))
        report.check(len(sym) == len(shifted) == counted,
                     lambda: f"n={n}: {len(sym)} symmetrical, {len(shifted)} enumerated, {counted} counted")
        doubled = sorted((double(t) for t in shifted), key=lambda t: t.rows)
        report.check(doubled == sym, f"n={n}: doubling SST(Δ_n) does not give the symmetrical tableaux")
        for t in shifted:
            report.check(undouble(double(t)) == t, lambda: f"undouble(double(T)) != T for\n{t}")
        for t in sym:
            report.check(is_symmetrical(t) and double(undouble(t)) == t,
                         lambda: f"double(undouble(T)) != T for\n{t}")


@_timed("switching commutes with doubling")
def switching_commutation(report: RunReport, n: int) -> None:
    for sigma, tau in _strict_pairs(n):
        skew = SkewShape(sigma, tau, shifted=True)
        outer = enumerate_shifted(skew, cap=len(skew))
        inner = enumerate_shifted(SkewShape(tau, (), shifted=True), cap=sum(tau))
        for t, u in product(outer, inner):
            plain = switch(u, t)
            paths: list = []
            doubled = switch(double(u), double(t), paths)
            same = doubled.inner == double(plain.inner) and doubled.outer == double(plain.outer)
            report.check(same, lambda: f"σ={sigma} τ={tau}\nT=\n{t}\nU=\n{u}")
            report.check(_paths_symmetric(paths), lambda: f"asymmetric slide paths for σ={sigma} τ={tau}")


def _paths_symmetric(paths: list[list[tuple[int, int]]]) -> bool:
    """Slides come in pairs (2k, then 2k-1); the first stays right of the diagonal, the second mirrors it."""
    for first, second in zip(paths[::2], paths[1::2]):
        if any(c <= r for r, c in first):
            return False
        if second != [(c - 1, r) for r, c in first]:
            return False
    return True


@_timed("trivial dual equivalence classes")
def trivial_dual_classes(report: RunReport, n_max: int) -> None:
    for n in range(1, n_max + 1):
        delta = staircase(n)
        for tau in strict_partitions(n):
            for shape in (SkewShape(tau, (), shifted=True), SkewShape(delta, tau, shifted=True)):
                classes = classify(enumerate_shifted(shape, cap=len(shape)))
                report.check(len(classes) == 1, lambda: f"{shape} splits into {len(classes)} classes")


def _og_query_check(report: RunReport, sigma, tau, kappa, n: int) -> None:
    got, want = lr.lr_og(sigma, tau, kappa, n), lr.lr_og_oracle(sigma, tau, kappa)
    report.check(got == want, lambda: f"σ={sigma} τ={tau} κ={kappa}: classes {got}, P-oracle {want}")


@_timed("OG Littlewood-Richardson rule vs P-function oracle")
def og_rule_vs_oracle(report: RunReport, n: int, sample_n: int | None = None,
                      samples: int = 0, seed: int = 0) -> None:
    """Exhaustive over κ ⊆ Δ_n; then random queries with κ ⊆ Δ_sample_n."""
    sigmas = strict_partitions(n)
    for kappa in sigmas:
        for sigma in sigmas:
            for tau in sigmas:
                if sum(sigma) + sum(tau) == sum(kappa):
                    _og_query_check(report, sigma, tau, kappa, n)
    if sample_n and samples:
        rng = random.Random(seed)
        pool = strict_partitions(sample_n)
        drawn = 0
        while drawn < samples:
            kappa = rng.choice(pool)
            tau = rng.choice([t for t in pool if contains(kappa, t)])
            sizes = [s for s in pool if sum(s) == sum(kappa) - sum(tau)]
            sigma = rng.choice(sizes)
            _og_query_check(report, sigma, tau, kappa, sample_n)
            drawn += 1


@_timed("Gr Littlewood-Richardson rule vs lattice words")
def gr_rule_vs_oracle(report: RunReport, rows: int, cols: int, max_size: int) -> None:
    box = [lam for lam in partitions_in_box(rows, cols) if sum(lam) <= max_size]
    for nu in box:
        for mu in box:
            if not contains(nu, mu):
                continue
            for lam in box:
                if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
                    continue
                got, want = lr.lr_gr(lam, mu, nu), lr.lr_gr_oracle(lam, mu, nu)
                report.check(got == want, lambda: f"λ={lam} μ={mu} ν={nu}: classes {got}, lattice words {want}")


@_timed("Poincaré duality")
def duality(report: RunReport, n_max: int) -> None:
    for n in range(1, n_max + 1):
        delta = staircase(n)
        for kappa in strict_partitions(n):
            complement = tuple(p for p in range(n, 0, -1) if p not in kappa)
            shape = SkewShape(delta, kappa, shifted=True)
            shapes = {rectification_shape(t) for t in enumerate_shifted(shape, cap=len(shape))}
            report.check(shapes == {complement},
                         lambda: f"n={n} κ={kappa}: rectification shapes {shapes}, complement {complement}")
            report.check(lr.dual_strict(kappa, n) == complement, f"n={n} κ={kappa}: dual_strict disagrees")
            report.check(lr.lr_og(kappa, complement, delta, n) == 1,
                         lambda: f"n={n}: c(κ={kappa}, κ∨={complement}; Δ) = {lr.lr_og(kappa, complement, delta, n)}")


@_timed("fiber count [Y_1]^N = |SST(Δ_n)|")
def fiber_count(report: RunReport, n_max: int) -> None:
    for n in range(1, n_max + 1):
        table = lr.pieri_power_table(n)
        for sigma in strict_partitions(n):
            got = table.get(sigma, 0)
            want = count_sst(sigma)
            report.check(got == want, lambda: f"n={n} σ={sigma}: [Y_1]^{sum(sigma)} coefficient {got}, SST {want}")


def compositions(total: int) -> Iterable[tuple[int, ...]]:
    for cuts in product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


@_timed("segment class counts vs intersection numbers")
def class_counting(report: RunReport, n: int) -> None:
    for comp in compositions(n * (n + 1)):
        got = lr.segment_class_count(comp, n)
        want = lr.segment_intersection_number(comp, n)
        report.check(got == want, lambda: f"composition {comp}: {got} classes, intersection number {want}")
    ones = lr.segment_class_count((1,) * (n * (n + 1)), n)
    report.check(ones == count_syt(rectangle(n)), f"all-ones composition gives {ones}")


@_timed("perfect-square Wronskians")
def perfect_squares(report: RunReport, ns: Iterable[int], samples: int, seed: int) -> None:
    for n in ns:
        for k in range(samples):
            y = random_isotropic(n, seed * 100003 + k)
            w = wronskian(y)
            report.check(is_isotropic(y) and w.leading == 1 and is_perfect_square(w),
                         lambda: f"n={n} sample {k}: Wr = {format_poly(w)}")


@_timed("Wronskian divisibility")
def divisibility(report: RunReport, n: int, samples: int, seed: int) -> None:
    rng = random.Random(seed)
    for k in range(samples):
        a = Fraction(rng.randint(-4, 4))
        for x in (random_subspace_at(n, a, rng.randrange(2**32)),
                  random_isotropic_at(n, a, rng.randrange(2**32))):
            for point in check_points(x):
                r = verify_divisibility(x, point)
                report.check(r.passed, lambda: f"sample {k} at {point}: {r.as_dict()}")


def verify_all(n: int, seed: int) -> list[RunReport]:
    """Every suite at a scale governed by n (n ≤ 4)."""
    if not 1 <= n <= 4:
        raise ValueError(f"verify_all supports 1 ≤ n ≤ 4, got {n}")
    return [
        doubling_bijection(n),
        switching_commutation(min(n, 3)),
        trivial_dual_classes(n),
        og_rule_vs_oracle(min(n, 3), sample_n=n + 1 if n < 4 else 4, samples=50 if n >= 3 else 10, seed=seed),
        gr_rule_vs_oracle(n, n + 1, min(n * (n + 1), 10)),
        duality(n),
        fiber_count(n),
        class_counting(min(n, 2)),
        perfect_squares([m for m in (2, 3) if m <= max(n, 2)], 100, seed),
        divisibility(2, 50, seed),
    ]


def describe(reports: list[RunReport]) -> str:
    return "\n".join(r.line() for r in reports)

