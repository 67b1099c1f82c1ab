"""
Skyline diagrams, fillings and triples.

Rows are numbered from 1 at the bottom, columns from 1 at the left. Column 0 is
the basement, present in every row when a model asks for it.
"""
from collections import namedtuple
from dataclasses import dataclass
from typing import Dict, Iterator, Sequence, Tuple

from ..compositions import WeakComposition
from ..utils import CompositionError

Box = Tuple[int, int]

Triple = namedtuple("Triple", ["kind", "gamma", "alpha", "beta"])


def boxes(shape: WeakComposition) -> Iterator[Box]:
    for row, length in enumerate(shape, start=1):
        for col in range(1, length + 1):
            yield row, col


def _exists(shape, box, basement):
    row, col = box
    if not 1 <= row <= len(shape):
        return False
    if col == 0:
        return basement
    return 1 <= col <= shape[row - 1]


def triples_of(shape: WeakComposition, basement: bool = False):
    """
    All Type A and Type B triples of D(shape), over every pair of rows.

    Type A: gamma=(R,c), alpha=(R,c+1), beta=(R',c+1) with R' > R and a_R >= a_R'.
    Type B: gamma=(R,c), alpha=(R,c+1), beta=(R',c) with R' < R and a_R > a_R'.
    With basement, gamma and beta may sit in column 0.
    """
    n = len(shape)
    first_col = 0 if basement else 1
    result = []
    for low in range(1, n + 1):
        for high in range(low + 1, n + 1):
            # Type A: gamma, alpha in the lower row, beta above alpha
            if shape[low - 1] >= shape[high - 1]:
                for c in range(first_col, shape[high - 1]):
                    gamma, alpha, beta = (low, c), (low, c + 1), (high, c + 1)
                    if all(_exists(shape, box, basement) for box in (gamma, alpha, beta)):
                        result.append(Triple("A", gamma, alpha, beta))
            # Type B: gamma, alpha in the higher row, beta below gamma
            if shape[high - 1] > shape[low - 1]:
                for c in range(first_col, shape[low - 1] + 1):
                    gamma, alpha, beta = (high, c), (high, c + 1), (low, c)
                    if all(_exists(shape, box, basement) for box in (gamma, alpha, beta)):
                        result.append(Triple("B", gamma, alpha, beta))
    return result


def is_inversion_values(gamma, alpha, beta) -> bool:
    return beta > gamma >= alpha or gamma >= alpha > beta


@dataclass(frozen=True)
class SkylineFilling:
    """
    A filling of D(shape); rows[r - 1] holds the entries of row r from left to right.
    The basement, when used, carries entry r in row r unless a model supplies its own.
    """
    shape: WeakComposition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.shape) or any(len(row) != length for row, length in zip(self.rows, self.shape)):
            raise CompositionError("Rows {} do not fill shape {}".format(self.rows, self.shape))

    @classmethod
    def from_rows(cls, shape: Sequence[int], rows: Dict[int, Sequence[int]]):
        """Builds a filling from {row index: entries}; missing rows are empty."""
        shape = tuple(shape)
        return cls(shape, tuple(tuple(rows.get(r, ())) for r in range(1, len(shape) + 1)))

    @property
    def n(self):
        return len(self.shape)

    def entry(self, box: Box, basement=None) -> int:
        """basement maps (row, n) to the column 0 entry."""
        row, col = box
        if col == 0:
            return row if basement is None else basement(row, self.n)
        return self.rows[row - 1][col - 1]

    def cells(self):
        for row, col in boxes(self.shape):
            yield row, col, self.rows[row - 1][col - 1]

    def values(self):
        for row in self.rows:
            yield from row

    def first_column(self) -> Dict[int, int]:
        return {r: row[0] for r, row in enumerate(self.rows, start=1) if row}

    def width(self):
        return max(self.shape, default=0)

    def column(self, col):
        return [row[col - 1] for row in self.rows if len(row) >= col]

    def column_sets(self):
        return tuple(frozenset(self.column(col)) for col in range(1, self.width() + 1))

    def weight(self, n=None):
        return weight_of(self.values(), self.n if n is None else n)

    def relabel(self, mapping):
        return SkylineFilling(self.shape, tuple(tuple(mapping(v) for v in row) for row in self.rows))

    def to_json(self):
        return {"shape": list(self.shape),
                "rows": {str(r): list(row) for r, row in enumerate(self.rows, start=1) if row}}

    @classmethod
    def from_json(cls, data):
        return cls.from_rows(data["shape"], {int(r): entries for r, entries in data["rows"].items()})

    def __str__(self):
        parts = ["r{}: {}".format(r, " ".join(map(str, self.rows[r - 1])))
                 for r in range(self.n, 0, -1) if self.rows[r - 1]]
        return " | ".join(parts) if parts else "(empty)"


def is_inversion(t: Triple, f: SkylineFilling, basement=None) -> bool:
    return is_inversion_values(*(f.entry(box, basement) for box in (t.gamma, t.alpha, t.beta)))


def weight_of(values, n: int) -> WeakComposition:
    wt = [0] * n
    for v in values:
        if not 1 <= v <= n:
            raise CompositionError("Entry {} outside 1..{}".format(v, n))
        wt[v - 1] += 1
    return tuple(wt)


def weight(x, n: int) -> WeakComposition:
    """Weight of a filling, a reverse tableau, or a pair of them."""
    if isinstance(x, tuple):
        return tuple(sum(parts) for parts in zip(*(weight(part, n) for part in x)))
    return weight_of(x.values(), n)
