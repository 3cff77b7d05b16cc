"""Partitions, strict partitions and skew shapes.

Partitions are plain tuples of positive integers with trailing zeros
trimmed, so ``(3, 1, 0)`` and ``(3, 1)`` are the same shape.  Cells are
``(row, column)`` pairs, 0-based.  In a shifted diagram row ``r`` starts
at column ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]


class ShapeError(ValueError):
    """Raised for malformed or out-of-range shapes."""


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a trimmed partition, validating monotonicity."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ShapeError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"parts of {parts} are not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def strict_partition(parts: Iterable[int], n: int | None = None) -> Partition:
    """Normalize a strict partition; with ``n`` given, require it lies in Σ_n."""
    lam = partition(parts)
    if any(a == b for a, b in zip(lam, lam[1:])):
        raise ShapeError(f"{lam} is not strict")
    if n is not None and lam and lam[0] > n:
        raise ShapeError(f"{lam} has a part larger than n={n}")
    return lam


def is_strict(lam: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def part(lam: Sequence[int], i: int) -> int:
    """The ``i``-th part (0-based), zero past the end."""
    return lam[i] if i < len(lam) else 0


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff ``inner`` fits inside ``outer`` componentwise."""
    return len(inner) <= len(outer) and all(b <= a for a, b in zip(outer, inner))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def staircase(n: int) -> Partition:
    return tuple(range(n, 0, -1))


def rectangle(n: int) -> Partition:
    """The largest partition in Λ_n: n rows of length n+1."""
    return (n + 1,) * n


def in_box(lam: Sequence[int], rows: int, cols: int) -> bool:
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def check_lambda(lam: Sequence[int], n: int) -> Partition:
    """Validate ``lam`` as an element of Λ_n (at most n rows, parts ≤ n+1)."""
    lam = partition(lam)
    if not in_box(lam, n, n + 1):
        raise ShapeError(f"{lam} does not fit the {n}x{n + 1} box")
    return lam


def tilde(sigma: Sequence[int], n: int) -> Partition:
    """The partition σ̃ attached to a strict partition σ ∈ Σ_n.

    Row i (1-based) of σ̃ has σ^i + #{j : j ≤ i < j + σ^j} boxes.  The
    result only depends on σ; ``n`` bounds the admissible input.
    """
    sigma = strict_partition(sigma, n)
    rows = []
    for i in range(1, n + 1):
        extra = sum(1 for j in range(1, i + 1) if i < j + part(sigma, j - 1))
        rows.append(part(sigma, i - 1) + extra)
    return partition(rows)


def tilde_decomposition(sigma: Sequence[int]) -> tuple[set[Cell], set[Cell]]:
    """Split the diagram of σ̃ into the images of σ's shifted diagram.

    The shifted cell (r, c) of σ (c ≥ r) lands at (r, c+1) in the upper
    copy and at (c, r) in the transposed lower copy.
    """
    upper, lower = set(), set()
    for r, c in SkewShape(tuple(sigma), (), shifted=True).cells():
        upper.add((r, c + 1))
        lower.add((c, r))
    return upper, lower


def partitions_of(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            yield (first,) + rest


def strict_partitions_of(m: int, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in strict_partitions_of(m - first, first - 1):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Every partition with at most ``rows`` parts, each at most ``cols``."""
    out = []

    def rec(prefix: tuple[int, ...], cap: int) -> None:
        out.append(partition(prefix))
        if len(prefix) == rows:
            return
        for p in range(1, cap + 1):
            rec(prefix + (p,), p)

    rec((), cols)
    return sorted(set(out), key=lambda lam: (sum(lam), [-p for p in lam]))


def strict_partitions(n: int) -> list[Partition]:
    """Σ_n: strict partitions with largest part at most n, by size then reverse lex."""
    out = [()]
    for m in range(1, n * (n + 1) // 2 + 1):
        out.extend(strict_partitions_of(m, n))
    return out


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram ``outer/inner``, plain or shifted."""

    outer: Partition
    inner: Partition = ()
    shifted: bool = False

    def __post_init__(self) -> None:
        outer, inner = partition(self.outer), partition(self.inner)
        if self.shifted and not (is_strict(outer) and is_strict(inner)):
            raise ShapeError(f"shifted shape {outer}/{inner} needs strict partitions")
        if not contains(outer, inner):
            raise ShapeError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def offset(self, r: int) -> int:
        return r if self.shifted else 0

    def row_span(self, r: int) -> range:
        """Columns of the skew cells in row ``r``."""
        off = self.offset(r)
        return range(off + part(self.inner, r), off + part(self.outer, r))

    def cells(self) -> list[Cell]:
        """Skew cells in row-reading order."""
        return [(r, c) for r in range(len(self.outer)) for c in self.row_span(r)]

    def inner_cells(self) -> set[Cell]:
        return {(r, c) for r in range(len(self.inner))
                for c in range(self.offset(r), self.offset(r) + self.inner[r])}

    def __len__(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def __str__(self) -> str:
        text = format_partition(self.outer)
        if self.inner:
            text += "/" + format_partition(self.inner)
        return text + (" (shifted)" if self.shifted else "")


def shape_from_cells(cells: Iterable[Cell], inner: Partition, shifted: bool) -> SkewShape:
    """Recover the skew shape whose cells are ``cells`` sitting on top of ``inner``."""
    rows: dict[int, int] = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    length = max([len(inner)] + [r + 1 for r in rows])
    outer = [part(inner, r) + rows.get(r, 0) for r in range(length)]
    return SkewShape(partition(outer), inner, shifted)


def hook_length_count(lam: Sequence[int]) -> int:
    """|SYT(λ)| for a straight unshifted shape by the hook-length formula."""
    lam = partition(lam)
    conj = conjugate(lam)
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(lam)) // hooks


def count_linear_extensions(shape: SkewShape) -> int:
    """Count standard fillings of a (shifted) skew shape.

    Memoized recursion over the per-row fill counts; a cell can be filled
    once the cell above it is filled or lies in the inner shape.
    """
    nrows = len(shape.outer)
    lengths = tuple(len(shape.row_span(r)) for r in range(nrows))
    starts = tuple(shape.row_span(r).start for r in range(nrows))

    @lru_cache(maxsize=None)
    def rec(filled: tuple[int, ...]) -> int:
        if filled == lengths:
            return 1
        total = 0
        for r in range(nrows):
            f = filled[r]
            if f == lengths[r]:
                continue
            col = starts[r] + f
            if r > 0 and col >= starts[r - 1] + filled[r - 1] and col in shape.row_span(r - 1):
                continue
            total += rec(filled[:r] + (f + 1,) + filled[r + 1:])
        return total

    return rec((0,) * nrows)


def count_syt(shape: SkewShape | Sequence[int]) -> int:
    """|SYT(shape)|: hook lengths for straight shapes, exhaustive count otherwise."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    if shape.shifted:
        raise ShapeError("count_syt expects an unshifted shape; use count_sst")
    if shape.is_straight:
        return hook_length_count(shape.outer)
    return count_linear_extensions(shape)


def count_sst(shape: SkewShape | Sequence[int]) -> int:
    """|SST(shape)| for a shifted (skew) shape."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape), (), shifted=True)
    if not shape.shifted:
        raise ShapeError("count_sst expects a shifted shape")
    return count_linear_extensions(shape)


def parse_partition(text: str, strict: bool = False) -> Partition:
    """Parse ``"4,3,1"`` (or ``"-"`` for the empty partition)."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    parts = []
    for tok in text.split(","):
        try:
            parts.append(int(tok))
        except ValueError:
            raise ShapeError(f"malformed part {tok.strip()!r} in partition literal {text!r}") from None
    return strict_partition(parts) if strict else partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"
