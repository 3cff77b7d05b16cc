"""Tableau switching, rectification and dual equivalence.

One slide rule serves plain and shifted diagrams alike: an inner entry
trades places with the smaller of the outer entries immediately to its
right and immediately below it, until neither exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .shapes import Cell, Partition, ShapeError, SkewShape, shape_from_cells
from .tableaux import (
    Tableau,
    enumerate_shifted,
    enumerate_standard,
    row_superstandard,
)


@dataclass(frozen=True)
class SwitchResult:
    inner: Tableau  # T̂: the outer tableau's entries, now on the inside
    outer: Tableau  # Û: the inner tableau's entries, now on the outside


def switch(u: Tableau, t: Tableau, paths: list[list[Cell]] | None = None) -> SwitchResult:
    """Switch ``u`` (on μ, or on μ/ρ) with ``t`` (on λ/μ).

    Entries of ``u`` are slid through ``t`` largest first.  When ``paths``
    is a list, the cells visited by each slide are appended to it in slide
    order.
    """
    if u.shifted != t.shifted:
        raise ShapeError("cannot switch a shifted tableau with an unshifted one")
    if u.shape.outer != t.shape.inner:
        raise ShapeError(f"inner tableau shape {u.shape} does not fit inside {t.shape}")
    grid = dict(t.cells)
    final: dict[Cell, int] = {}
    for x, pos in sorted(u.positions.items(), reverse=True):
        path = [pos]
        while True:
            r, c = pos
            right, below = grid.get((r, c + 1)), grid.get((r + 1, c))
            if right is None and below is None:
                break
            nxt = (r, c + 1) if below is None or (right is not None and right < below) else (r + 1, c)
            grid[pos] = grid.pop(nxt)
            pos = nxt
            path.append(pos)
        final[pos] = x
        if paths is not None:
            paths.append(path)
    rho = u.shape.inner
    t_hat_shape = shape_from_cells(grid, rho, t.shifted)
    u_hat_shape = SkewShape(t.shape.outer, t_hat_shape.outer, t.shifted)
    return SwitchResult(Tableau.from_cells(t_hat_shape, grid), Tableau.from_cells(u_hat_shape, final))


def canonical_inner(t: Tableau) -> Tableau:
    """The row-superstandard tableau of t's inner shape."""
    return row_superstandard(SkewShape(t.shape.inner, (), t.shifted))


def rectify(t: Tableau) -> Tableau:
    if t.shape.is_straight:
        return t
    return switch(canonical_inner(t), t).inner


def rectification_shape(t: Tableau) -> Partition:
    return rectify(t).shape.outer


def fingerprint(t: Tableau, u: Tableau | None = None) -> Tableau:
    """Û from switching ``u`` (default: the canonical inner tableau) with ``t``.

    Entries of ``t`` are normalized first, so order-isomorphic fillings
    are compared fairly.
    """
    u = canonical_inner(t) if u is None else u
    return switch(u, t.normalized()).outer


def inner_tableaux(t: Tableau) -> list[Tableau]:
    shape = SkewShape(t.shape.inner, (), t.shifted)
    return enumerate_shifted(shape) if t.shifted else enumerate_standard(shape)


def dual_equivalent(t1: Tableau, t2: Tableau, all_u: bool = False) -> bool:
    """Haiman's dual equivalence, via one fixed inner tableau.

    With ``all_u`` every inner tableau is tried as well; the two readings
    of the definition must agree or a :class:`RuntimeError` is raised.
    """
    if t1.shape != t2.shape:
        raise ShapeError(f"shapes differ: {t1.shape} vs {t2.shape}")
    some = fingerprint(t1) == fingerprint(t2)
    if not all_u:
        return some
    every = all(fingerprint(t1, u) == fingerprint(t2, u) for u in inner_tableaux(t1))
    if every != some:
        raise RuntimeError(f"dual equivalence depends on the inner tableau for\n{t1}\nand\n{t2}")
    return every


def classify(tableaux: Iterable[Tableau]) -> list[list[Tableau]]:
    """Group tableaux of a common shape by their Û fingerprint, in first-seen order."""
    groups: dict[Tableau, list[Tableau]] = {}
    for t in tableaux:
        groups.setdefault(fingerprint(t), []).append(t)
    return list(groups.values())


def dual_classes(shape: SkewShape, cap: int | None = None) -> list[list[Tableau]]:
    """Dual equivalence classes of SYT(shape) or SST(shape), ordered by smallest member."""
    tabs = enumerate_shifted(shape, cap) if shape.shifted else enumerate_standard(shape, cap)
    return classify(tabs)
