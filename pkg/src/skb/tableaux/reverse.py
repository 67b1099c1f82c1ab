"""Reverse semistandard Young tableaux, in English notation: row 1 is the top, longest row."""
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from ..compositions import Partition, check_partition
from ..utils import CompositionError
from .skyline import weight_of


@dataclass(frozen=True)
class ReverseSSYT:
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]):
        return cls(tuple(tuple(row) for row in rows if row))

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    def values(self):
        for row in self.rows:
            yield from row

    def width(self):
        return len(self.rows[0]) if self.rows else 0

    def column(self, col):
        """Entries of column col (1-based), top to bottom."""
        return [row[col - 1] for row in self.rows if len(row) >= col]

    def columns(self):
        return [self.column(col) for col in range(1, self.width() + 1)]

    def column_sets(self):
        return tuple(frozenset(column) for column in self.columns())

    def weight(self, n):
        return weight_of(self.values(), n)

    def relabel(self, mapping):
        return ReverseSSYT(tuple(tuple(mapping(v) for v in row) for row in self.rows))

    def is_valid(self):
        check_partition(self.shape)
        for row in self.rows:
            if any(x < y for x, y in zip(row, row[1:])) or any(v < 1 for v in row):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(x <= y for x, y in zip(upper, lower)):
                return False
        return True

    def to_json(self):
        return {"shape": list(self.shape), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data):
        tableau = cls.from_rows(data["rows"])
        if "shape" in data and tuple(data["shape"]) != tableau.shape:
            raise CompositionError("Declared shape {} does not match rows {}".format(data["shape"], data["rows"]))
        return tableau

    def __str__(self):
        return " / ".join(" ".join(map(str, row)) for row in self.rows) or "(empty)"


def _fill(lam, n, strict_decrease):
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    grid = [[0] * length for length in lam]

    def candidates(r, c):
        if strict_decrease:
            high = n
            if c > 0:
                high = min(high, grid[r][c - 1])
            if r > 0:
                high = min(high, grid[r - 1][c] - 1)
            # leave room for the strictly smaller entries below
            low = 1 + sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c)
            return range(high, low - 1, -1)
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        high = n - sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c)
        return range(low, high + 1)

    def backtrack(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        for value in candidates(r, c):
            grid[r][c] = value
            yield from backtrack(k + 1)
        grid[r][c] = 0

    yield from backtrack(0)


def enumerate_revssyt(lam: Partition, n: int) -> Iterator[ReverseSSYT]:
    """Reverse SSYT of shape lam with entries in 1..n, largest entries first."""
    lam = tuple(lam)
    check_partition(lam)
    for rows in _fill(lam, n, strict_decrease=True):
        yield ReverseSSYT(rows)


def enumerate_ssyt(lam: Partition, n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Ordinary SSYT (rows weakly increase, columns strictly increase) as tuples of rows."""
    lam = tuple(lam)
    check_partition(lam)
    yield from _fill(lam, n, strict_decrease=False)


def complement(rows, n):
    """i -> n + 1 - i, exchanging SSYT and reverse SSYT with entries at most n."""
    return ReverseSSYT(tuple(tuple(n + 1 - v for v in row) for row in rows))
