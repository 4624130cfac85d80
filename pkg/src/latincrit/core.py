"""Latin square and partial Latin square types plus the grid text format.

Grid text format (the unit of exchange for the CLI and all fixtures):
line 1 is the order n, lines 2..n+1 hold n whitespace-separated tokens,
each "." (empty) or an integer 1..n.  "0" is accepted as a synonym for
"." on input; canonical output uses ".", single spaces, and a trailing
newline.

Coordinates are 1-indexed in all external formats and in Triple values;
the internal grid tuples are 0-indexed with 0 marking an empty cell.
All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

# Symbol masks for rows/columns must fit a machine word.
MAX_ORDER = 31


class GridError(ValueError):
    """Malformed grid: bad dimensions, out-of-range symbol, row/column
    duplicate, or an edit that does not apply."""


class Triple(NamedTuple):
    """One filled cell, 1-indexed: symbol `sym` in cell (`row`, `col`)."""

    row: int
    col: int
    sym: int


class PartialLatinSquare:
    """An n x n grid over 1..n where each symbol occurs at most once per
    row and at most once per column.  Violations are rejected at
    construction time, so an instance is always Latin-property-respecting.

    `grid` is a tuple of row tuples with 0 for empty cells.
    """

    __slots__ = ("order", "grid")

    def __init__(self, rows: Iterable[Iterable[int | None]]):
        grid = tuple(tuple(0 if v is None else int(v) for v in row) for row in rows)
        n = len(grid)
        if not 1 <= n <= MAX_ORDER:
            raise GridError(f"order {n} outside supported range 1..{MAX_ORDER}")
        for i, row in enumerate(grid):
            if len(row) != n:
                raise GridError(f"row {i + 1}: expected {n} entries, got {len(row)}")
        for i, row in enumerate(grid):
            seen = 0
            for v in row:
                if v == 0:
                    continue
                if not 1 <= v <= n:
                    raise GridError(f"row {i + 1}: symbol {v} out of range 1..{n}")
                bit = 1 << (v - 1)
                if seen & bit:
                    raise GridError(f"symbol {v} repeated in row {i + 1}")
                seen |= bit
        for j in range(n):
            seen = 0
            for i in range(n):
                v = grid[i][j]
                if v == 0:
                    continue
                bit = 1 << (v - 1)
                if seen & bit:
                    raise GridError(f"symbol {v} repeated in column {j + 1}")
                seen |= bit
        self.order = n
        self.grid = grid

    @classmethod
    def empty(cls, order: int) -> "PartialLatinSquare":
        return cls([[0] * order for _ in range(order)])

    @classmethod
    def from_triples(cls, order: int, triples: Iterable[Triple | tuple]) -> "PartialLatinSquare":
        rows = [[0] * order for _ in range(order)]
        for row, col, sym in triples:
            if not (1 <= row <= order and 1 <= col <= order):
                raise GridError(f"cell ({row},{col}) outside order-{order} grid")
            if rows[row - 1][col - 1]:
                raise GridError(f"cell ({row},{col}) assigned twice")
            rows[row - 1][col - 1] = sym
        return cls(rows)

    @property
    def size(self) -> int:
        """Number of filled cells."""
        return sum(1 for row in self.grid for v in row if v)

    @property
    def shape(self) -> frozenset:
        """The set of filled cell coordinates, 1-indexed."""
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.grid)
            for j, v in enumerate(row)
            if v
        )

    def triples(self) -> tuple[Triple, ...]:
        """Filled cells as 1-indexed triples in row-major order."""
        return tuple(
            Triple(i + 1, j + 1, v)
            for i, row in enumerate(self.grid)
            for j, v in enumerate(row)
            if v
        )

    def is_complete(self) -> bool:
        return all(v for row in self.grid for v in row)

    def to_latin(self) -> "LatinSquare":
        if not self.is_complete():
            raise GridError(f"square is incomplete ({self.size} of {self.order ** 2} cells)")
        return LatinSquare(self.grid)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialLatinSquare):
            return NotImplemented
        return self.order == other.order and self.grid == other.grid

    def __hash__(self) -> int:
        return hash((self.order, self.grid))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(order={self.order}, size={self.size})"


class LatinSquare(PartialLatinSquare):
    """A complete square: every row and column is a permutation of 1..n."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Iterable[int | None]]):
        super().__init__(rows)
        for i, row in enumerate(self.grid):
            if 0 in row:
                raise GridError(f"row {i + 1}: empty cell in a complete square")
        # n distinct symbols per row/column and no empties already imply
        # each row and column is a permutation of 1..n.


def parse_partial(text: str) -> PartialLatinSquare:
    """Parse grid text.  Rejects dimension mismatches, out-of-range
    symbols, and row/column duplicates."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GridError("empty input")
    head = lines[0].split()
    if len(head) != 1:
        raise GridError("first line must contain only the order")
    try:
        n = int(head[0])
    except ValueError:
        raise GridError(f"order is not an integer: {head[0]!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise GridError(f"order {n} outside supported range 1..{MAX_ORDER}")
    if len(lines) - 1 != n:
        raise GridError(f"expected {n} grid rows, got {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise GridError(f"row {i}: expected {n} entries, got {len(tokens)}")
        row = []
        for tok in tokens:
            if tok in (".", "0"):
                row.append(0)
            else:
                try:
                    v = int(tok)
                except ValueError:
                    raise GridError(f"row {i}: bad token {tok!r}") from None
                if not 1 <= v <= n:
                    raise GridError(f"row {i}: symbol {v} out of range 1..{n}")
                row.append(v)
        rows.append(row)
    return PartialLatinSquare(rows)


def serialize(p: PartialLatinSquare) -> str:
    """Canonical grid text: single spaces, "." for empty, trailing newline.
    Round-trips byte-identically through parse_partial."""
    lines = [str(p.order)]
    for row in p.grid:
        lines.append(" ".join("." if v == 0 else str(v) for v in row))
    return "\n".join(lines) + "\n"


def remove_entry(p: PartialLatinSquare, cell: tuple[int, int]) -> PartialLatinSquare:
    """Copy of `p` with the given 1-indexed cell emptied."""
    row, col = cell
    if not (1 <= row <= p.order and 1 <= col <= p.order):
        raise GridError(f"cell ({row},{col}) outside order-{p.order} grid")
    if p.grid[row - 1][col - 1] == 0:
        raise GridError(f"cell ({row},{col}) is already empty")
    rows = [list(r) for r in p.grid]
    rows[row - 1][col - 1] = 0
    return PartialLatinSquare(rows)


def with_entry(p: PartialLatinSquare, triple: Triple | tuple) -> PartialLatinSquare:
    """Copy of `p` with one more entry; rejects overwrites and conflicts."""
    row, col, sym = triple
    if not (1 <= row <= p.order and 1 <= col <= p.order):
        raise GridError(f"cell ({row},{col}) outside order-{p.order} grid")
    if p.grid[row - 1][col - 1] != 0:
        raise GridError(f"cell ({row},{col}) is already filled")
    rows = [list(r) for r in p.grid]
    rows[row - 1][col - 1] = sym
    return PartialLatinSquare(rows)


def relabel(
    p: PartialLatinSquare,
    row_perm: Sequence[int],
    col_perm: Sequence[int],
    sym_perm: Sequence[int],
) -> PartialLatinSquare:
    """Apply row, column, and symbol permutations (0-indexed images):
    cell (i, j) holding s moves to (row_perm[i], col_perm[j]) holding
    sym_perm[s-1]+1.  Preserves the Latin property, size, and criticality.
    """
    n = p.order
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = p.grid[i][j]
            if v:
                rows[row_perm[i]][col_perm[j]] = sym_perm[v - 1] + 1
    return p.__class__(rows)
