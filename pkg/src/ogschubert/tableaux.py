"""Standard and shifted standard tableaux, doubling and the symmetry test."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .shapes import (
    Cell,
    Partition,
    ShapeError,
    SkewShape,
    part,
    rectangle,
    shape_from_cells,
    tilde,
)

#: enumeration refuses shapes larger than this unless told otherwise
ENUMERATION_CAP = 16


class TableauError(ValueError):
    """Raised for fillings that are not standard or do not match their shape."""


class NotSymmetricalError(TableauError):
    pass


@dataclass(frozen=True)
class Tableau:
    """A standard filling of a (shifted) skew shape by distinct integers.

    ``rows[r]`` lists the entries of the skew cells of row ``r`` from left
    to right.  Entries need not be ``1..m``; any distinct integers will do.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        rows = rows[: len(self.shape.outer)]
        rows += ((),) * (len(self.shape.outer) - len(rows))
        object.__setattr__(self, "rows", rows)
        for r, row in enumerate(rows):
            if len(row) != len(self.shape.row_span(r)):
                raise TableauError(f"row {r + 1} has {len(row)} entries, shape {self.shape} needs "
                                   f"{len(self.shape.row_span(r))}")
        values = [x for row in rows for x in row]
        if len(set(values)) != len(values):
            raise TableauError("entries are not distinct")
        cells = self.cells
        for (r, c), x in cells.items():
            left, up = cells.get((r, c - 1)), cells.get((r - 1, c))
            if (left is not None and left >= x) or (up is not None and up >= x):
                raise TableauError(f"entry {x} at row {r + 1}, column {c + 1} breaks standardness")

    @classmethod
    def from_cells(cls, shape: SkewShape, cells: Mapping[Cell, int]) -> "Tableau":
        if set(cells) != set(shape.cells()):
            raise TableauError(f"cells do not cover the shape {shape}")
        return cls(shape, tuple(tuple(cells[(r, c)] for c in shape.row_span(r))
                                for r in range(len(shape.outer))))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], shifted: bool = False) -> "Tableau":
        """A straight tableau given by its rows."""
        rows = tuple(tuple(row) for row in rows if row)
        return cls(SkewShape(tuple(len(row) for row in rows), (), shifted), rows)

    @cached_property
    def cells(self) -> dict[Cell, int]:
        return {cell: x for cell, x in zip(self.shape.cells(), (x for row in self.rows for x in row))}

    @cached_property
    def positions(self) -> dict[int, Cell]:
        return {x: cell for cell, x in self.cells.items()}

    @property
    def shifted(self) -> bool:
        return self.shape.shifted

    @property
    def entries(self) -> list[int]:
        return sorted(self.positions)

    def __len__(self) -> int:
        return len(self.shape)

    def normalized(self) -> "Tableau":
        """The order-isomorphic tableau with entries 1..m."""
        rank = {x: i + 1 for i, x in enumerate(self.entries)}
        return Tableau(self.shape, tuple(tuple(rank[x] for x in row) for row in self.rows))

    def shift_entries(self, delta: int) -> "Tableau":
        return Tableau(self.shape, tuple(tuple(x + delta for x in row) for row in self.rows))

    def __str__(self) -> str:
        return format_tableau(self)


def subtableau(t: Tableau, lo: int, hi: int) -> Tableau:
    """T_I for the integer interval I = [lo, hi], keeping entry values.

    Its shape is (inner ∪ {entries ≤ hi}) / (inner ∪ {entries < lo}).
    """
    below = [cell for cell, x in t.cells.items() if x < lo]
    inner = shape_from_cells(below, t.shape.inner, t.shifted).outer
    keep = {cell: x for cell, x in t.cells.items() if lo <= x <= hi}
    shape = shape_from_cells(keep, inner, t.shifted)
    return Tableau.from_cells(shape, keep)


def row_superstandard(shape: SkewShape) -> Tableau:
    """Fill the skew cells with 1, 2, ... row by row, left to right."""
    cells = shape.cells()
    return Tableau.from_cells(shape, {cell: i + 1 for i, cell in enumerate(cells)})


def _standard_fillings(shape: SkewShape) -> Iterator[dict[Cell, int]]:
    cells = set(shape.cells())
    m = len(cells)
    filled: dict[Cell, int] = {}

    def ready(cell: Cell) -> bool:
        r, c = cell
        return all(nb not in cells or nb in filled for nb in ((r, c - 1), (r - 1, c)))

    def rec(k: int) -> Iterator[dict[Cell, int]]:
        if k > m:
            yield dict(filled)
            return
        for cell in sorted(cells - filled.keys()):
            if ready(cell):
                filled[cell] = k
                yield from rec(k + 1)
                del filled[cell]

    yield from rec(1)


def _enumerate(shape: SkewShape, cap: int | None) -> list[Tableau]:
    cap = ENUMERATION_CAP if cap is None else cap
    if len(shape) > cap:
        raise ShapeError(f"{shape} has {len(shape)} cells, over the enumeration cap {cap}")
    out = [Tableau.from_cells(shape, f) for f in _standard_fillings(shape)]
    out.sort(key=lambda t: t.rows)
    return out


def enumerate_standard(shape: SkewShape | Partition, cap: int | None = None) -> list[Tableau]:
    """All of SYT(shape) in row-reading lexicographic order."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    if shape.shifted:
        raise ShapeError("enumerate_standard expects an unshifted shape")
    return _enumerate(shape, cap)


def enumerate_shifted(shape: SkewShape | Partition, cap: int | None = None) -> list[Tableau]:
    """All of SST(shape) in row-reading lexicographic order."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape), (), shifted=True)
    if not shape.shifted:
        raise ShapeError("enumerate_shifted expects a shifted shape")
    return _enumerate(shape, cap)


# -- doubling ---------------------------------------------------------------
#
# A shifted cell (r, c), c >= r, carrying entry k becomes two cells of the
# tilde shape: 2k-1 at the transposed cell (c, r) and 2k at (r, c+1).

def double(t: Tableau) -> Tableau:
    """T -> T*: the symmetrical tableau on tilde(σ)/tilde(τ) whose even entries, halved, give T."""
    if not t.shifted:
        raise TableauError("double expects a shifted tableau")
    n = max(t.shape.outer[:1] + t.shape.inner[:1], default=0)
    outer, inner = tilde(t.shape.outer, n), tilde(t.shape.inner, n)
    cells = {}
    for (r, c), k in t.cells.items():
        cells[(c, r)] = 2 * k - 1
        cells[(r, c + 1)] = 2 * k
    return Tableau.from_cells(SkewShape(outer, inner), cells)


def _pairing_violation(t: Tableau, diagonal: bool = False) -> str | None:
    pos = t.positions
    for x in sorted(pos):
        partner = x - 1 if x % 2 == 0 else x + 1
        if partner not in pos:
            return f"entry {x} has no partner {partner}"
    for x in sorted(pos):
        if x % 2:
            continue
        (i1, j1), (i2, j2) = pos[x - 1], pos[x]
        if i2 != j1 or j2 != i1 + 1:
            # 1-based in messages
            return (f"entries {x - 1} at ({i1 + 1},{j1 + 1}) and {x} at ({i2 + 1},{j2 + 1}) "
                    f"violate i_{x} = j_{x - 1}, j_{x} = i_{x - 1} + 1")
        if diagonal and j1 > i1:
            return f"entry {x - 1} at ({i1 + 1},{j1 + 1}) lies right of the diagonal"
    return None


def is_symmetrical(t: Tableau) -> bool:
    """True iff entry 2k sits at (j, i+1) whenever 2k-1 sits at (i, j), for every k."""
    if t.shifted:
        raise TableauError("is_symmetrical expects an unshifted tableau")
    if len(t) % 2:
        raise TableauError(f"a symmetrical tableau needs an even number of entries, got {len(t)}")
    return _pairing_violation(t) is None


def undouble(t: Tableau) -> Tableau:
    """Inverse of :func:`double`: keep the even entries, halved, on the shifted diagram."""
    if t.shifted:
        raise TableauError("undouble expects an unshifted tableau")
    problem = _pairing_violation(t, diagonal=True)
    if problem:
        raise NotSymmetricalError(problem)
    cells = {(r, c - 1): x // 2 for x, (r, c) in t.positions.items() if x % 2 == 0}
    inner_cells = [(r, c - 1) for r, c in t.shape.inner_cells() if c > r]
    try:
        inner = shape_from_cells(inner_cells, (), True).outer
        shape = shape_from_cells(cells, inner, True)
        return Tableau.from_cells(shape, cells)
    except (ShapeError, TableauError) as exc:
        raise NotSymmetricalError(f"even entries do not form a shifted tableau: {exc}") from None


def symmetrical_tableaux(n: int) -> list[Tableau]:
    """Every symmetrical tableau in SYT(n x (n+1)).

    Entries are placed in increasing order over the rectangle; a branch is
    abandoned as soon as a completed pair (2k-1, 2k) breaks the relation.
    This never consults the doubling map.
    """
    lam = rectangle(n)
    shape = SkewShape(lam)
    m = sum(lam)
    row_fill = [0] * n
    where: dict[int, Cell] = {}
    found = []

    def rec(k: int) -> None:
        if k > m:
            found.append(Tableau.from_cells(shape, {cell: x for x, cell in where.items()}))
            return
        for r in range(n):
            c = row_fill[r]
            if c == lam[r] or (r > 0 and row_fill[r - 1] <= c):
                continue
            if k % 2 == 0:
                i1, j1 = where[k - 1]
                if (r, c) != (j1, i1 + 1):
                    continue
            row_fill[r] += 1
            where[k] = (r, c)
            rec(k + 1)
            del where[k]
            row_fill[r] -= 1

    rec(1)
    found.sort(key=lambda t: t.rows)
    return found


# -- text format --------------------------------------------------------------

def parse_tableau(text: str, shifted: bool = False) -> Tableau:
    """Parse the row format: whitespace-separated entries, "." for skipped cells.

    A first line reading ``shifted`` selects a shifted tableau; in that case
    row j (1-based) carries j-1 leading dots for the diagonal indent, then
    one dot per inner cell.
    """
    lines = [line.strip() for line in text.strip().splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if lines and lines[0].lower() == "shifted":
        shifted = True
        lines = lines[1:]
    inner, outer, rows = [], [], []
    for r, line in enumerate(lines):
        toks = line.split()
        dots = 0
        while dots < len(toks) and toks[dots] == ".":
            dots += 1
        indent = r if shifted else 0
        if dots < indent:
            raise TableauError(f"shifted row {r + 1} needs at least {indent} leading dots")
        try:
            entries = tuple(int(tok) for tok in toks[dots:])
        except ValueError:
            bad = next(tok for tok in toks[dots:] if not tok.lstrip("-").isdigit())
            raise TableauError(f"malformed tableau entry {bad!r} in row {r + 1}") from None
        inner.append(dots - indent)
        outer.append(dots - indent + len(entries))
        rows.append(entries)
    while outer and outer[-1] == 0:
        outer.pop()
        inner.pop()
        rows.pop()
    try:
        shape = SkewShape(tuple(outer), tuple(inner), shifted)
    except ShapeError as exc:
        raise TableauError(f"rows do not describe a skew shape: {exc}") from None
    return Tableau(shape, tuple(rows))


def format_tableau(t: Tableau) -> str:
    lines = ["shifted"] if t.shifted else []
    for r, row in enumerate(t.rows):
        dots = t.shape.offset(r) + part(t.shape.inner, r)
        lines.append(" ".join(["."] * dots + [str(x) for x in row]))
    return "\n".join(lines)
