"""
Littlewood-Richardson skyline fillings: skew skyline fillings of D(b)/D(c) whose
inner boxes and basement hold asterisks.
"""
import logging
from collections import Counter, deque
from dataclasses import dataclass
from typing import List, Tuple, Union

from ..compositions import (WeakComposition, compositions, dominates, flat, flat_dominating,
                            prefix_key)
from ..tableaux.skyline import triples_of
from ..utils import CompositionError, SwapError

logger = logging.getLogger(__name__)

STAR = "*"

Entry = Union[int, str]


def lambda_star(lam) -> Tuple[int, ...]:
    """1 repeated lambda_l times, 2 repeated lambda_(l-1) times, ..., l repeated lambda_1 times."""
    lam = tuple(lam)
    length = len(lam)
    return tuple(j for j in range(1, length + 1) for _ in range(lam[length - j]))


@dataclass(frozen=True)
class LRSFilling:
    inner: WeakComposition
    outer: WeakComposition
    rows: Tuple[Tuple[Entry, ...], ...]

    @classmethod
    def from_rows(cls, inner, outer, rows):
        """rows maps a row index to its entries, asterisks included."""
        inner, outer = tuple(inner), tuple(outer)
        if len(inner) != len(outer):
            raise CompositionError("Inner {} and outer {} differ in length".format(inner, outer))
        return cls(inner, outer, tuple(tuple(rows.get(r, ())) for r in range(1, len(outer) + 1)))

    @property
    def n(self):
        return len(self.outer)

    def entry(self, box):
        row, col = box
        if col == 0:
            return STAR
        return self.rows[row - 1][col - 1]

    def numbers(self):
        for row in self.rows:
            for v in row:
                if v != STAR:
                    yield v

    def content(self):
        return tuple(sorted(self.numbers()))

    def to_json(self):
        return {"inner": list(self.inner), "outer": list(self.outer),
                "rows": {str(r): list(row) for r, row in enumerate(self.rows, start=1) if row}}

    @classmethod
    def from_json(cls, data):
        return cls.from_rows(data["inner"], data["outer"], {int(r): v for r, v in data["rows"].items()})

    def __str__(self):
        parts = ["r{}: {}".format(r, " ".join(map(str, self.rows[r - 1])))
                 for r in range(self.n, 0, -1) if self.rows[r - 1]]
        return " | ".join(parts) if parts else "(empty)"


def _compare(filling, x_box, y_box):
    """-1, 0 or 1 comparing the cells, asterisks being infinite."""
    x, y = filling.entry(x_box), filling.entry(y_box)
    if x != STAR and y != STAR:
        return (x > y) - (x < y)
    if x != STAR:
        return -1
    if y != STAR:
        return 1
    (x_row, x_col), (y_row, y_col) = x_box, y_box
    if x_row != y_row and x_col == y_col:
        # asterisks in one column increase from top to bottom
        return 1 if x_row < y_row else -1
    return 0


def _is_inversion(filling, triple):
    beta_gamma = _compare(filling, triple.beta, triple.gamma)
    gamma_alpha = _compare(filling, triple.gamma, triple.alpha)
    alpha_beta = _compare(filling, triple.alpha, triple.beta)
    return (beta_gamma > 0 and gamma_alpha >= 0) or (gamma_alpha >= 0 and alpha_beta > 0)


def column_word(filling: LRSFilling) -> Tuple[int, ...]:
    """Rightmost column first, each column read bottom to top, asterisks skipped."""
    width = max(filling.outer, default=0)
    word = []
    for col in range(width, 0, -1):
        for row in filling.rows:
            if len(row) >= col and row[col - 1] != STAR:
                word.append(row[col - 1])
    return tuple(word)


def is_contre_lattice(word) -> bool:
    if not word:
        return True
    top = max(word)
    counts = Counter()
    for letter in word:
        counts[letter] += 1
        if any(counts[k] < counts[k - 1] for k in range(2, top + 1)):
            return False
    return True


def is_valid_lrs(filling: LRSFilling) -> bool:
    inner, outer = filling.inner, filling.outer
    if len(inner) != len(outer) or any(c > b for c, b in zip(inner, outer)):
        return False
    for row, c, b in zip(filling.rows, inner, outer):
        if len(row) != b or any(v != STAR for v in row[:c]):
            return False
        numbers = row[c:]
        if any(v == STAR or v < 1 for v in numbers):
            return False
        if any(x < y for x, y in zip(numbers, numbers[1:])):
            return False
    for col in range(1, max(outer, default=0) + 1):
        column = [row[col - 1] for row in filling.rows if len(row) >= col and row[col - 1] != STAR]
        if len(set(column)) != len(column):
            return False
    return all(_is_inversion(filling, t) for t in triples_of(outer, basement=True))


def swap_row(filling: LRSFilling, i: int, direction: str) -> LRSFilling:
    """Moves row i to row i + 1 ("up") or i - 1 ("down"); the destination must be empty."""
    if direction not in ("up", "down"):
        raise SwapError("Direction must be 'up' or 'down', got {!r}".format(direction))
    j = i + 1 if direction == "up" else i - 1
    n = filling.n
    if not 1 <= i <= n or filling.outer[i - 1] == 0:
        raise SwapError("Row {} is not occupied".format(i))
    if not 1 <= j <= n:
        raise SwapError("Row {} is outside 1..{}".format(j, n))
    if filling.outer[j - 1] != 0:
        raise SwapError("Row {} is occupied".format(j))

    def exchanged(seq):
        seq = list(seq)
        seq[i - 1], seq[j - 1] = seq[j - 1], seq[i - 1]
        return tuple(seq)

    return LRSFilling(exchanged(filling.inner), exchanged(filling.outer), exchanged(filling.rows))


def _admissible_inner(a, inner):
    return dominates(inner, a) and flat(inner) == flat(a)


def in_lrs_union(filling: LRSFilling, a: WeakComposition) -> bool:
    """Membership in the union over d of LRS(a, d), contre-lattice words included."""
    return (len(filling.inner) == len(a) and _admissible_inner(a, filling.inner)
            and is_valid_lrs(filling) and is_contre_lattice(column_word(filling)))


def _fill_free_cells(inner, outer, content):
    """Backtracking over free cells row by row with a fixed multiset of entries."""
    cells = [(r, col) for r in range(1, len(outer) + 1) for col in range(inner[r - 1] + 1, outer[r - 1] + 1)]
    remaining = Counter(content)
    grid = {r: [STAR] * inner[r - 1] for r in range(1, len(outer) + 1)}
    columns = {}

    def backtrack(k):
        if k == len(cells):
            yield LRSFilling(tuple(inner), tuple(outer), tuple(tuple(grid[r]) for r in range(1, len(outer) + 1)))
            return
        r, col = cells[k]
        left = grid[r][-1] if col > inner[r - 1] + 1 else None
        used = columns.setdefault(col, set())
        for value in sorted(remaining, reverse=True):
            if remaining[value] == 0 or value in used or (left is not None and value > left):
                continue
            remaining[value] -= 1
            used.add(value)
            grid[r].append(value)
            yield from backtrack(k + 1)
            grid[r].pop()
            used.discard(value)
            remaining[value] += 1

    yield from backtrack(0)


def enumerate_lrs(a: WeakComposition, b: WeakComposition, content, inner=None) -> List[LRSFilling]:
    """
    LRS(a, b) with the given content: valid fillings of shape b/c for every admissible
    inner shape c (c >= a, flat(c) = flat(a), c <= b), contre-lattice column word.

    :param inner: restrict to this single inner shape
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise CompositionError("{} and {} differ in length".format(a, b))
    content = tuple(content)
    if sum(b) - sum(a) != len(content):
        return []
    inners = [tuple(inner)] if inner is not None else flat_dominating(a)
    found = []
    for c in inners:
        if not _admissible_inner(a, c) or any(ci > bi for ci, bi in zip(c, b)):
            continue
        for filling in _fill_free_cells(c, b, content):
            if is_valid_lrs(filling) and is_contre_lattice(column_word(filling)):
                found.append(filling)
    found.sort(key=lambda f: (prefix_key(f.inner), str(f)))
    return found


def lrs_union(a: WeakComposition, content, n: int = None) -> List[LRSFilling]:
    """All of LRS(a, d) over outer shapes d of length n."""
    a = tuple(a)
    n = len(a) if n is None else n
    result = []
    for d in compositions(sum(a) + len(content), n):
        result.extend(enumerate_lrs(a, d, content))
    return result


def is_highest_weight(filling: LRSFilling, a: WeakComposition) -> bool:
    for i in range(1, filling.n + 1):
        if filling.outer[i - 1] == 0:
            continue
        if i == filling.n or filling.outer[i] != 0:
            continue
        if in_lrs_union(swap_row(filling, i, "up"), a):
            return False
    return True


def swap_closure(filling: LRSFilling, a: WeakComposition) -> List[LRSFilling]:
    """Everything reachable by swaps that stay inside the union of the LRS(a, d)."""
    seen = {filling}
    queue = deque([filling])
    while queue:
        current = queue.popleft()
        for i in range(1, current.n + 1):
            for direction in ("up", "down"):
                try:
                    moved = swap_row(current, i, direction)
                except SwapError:
                    continue
                if moved not in seen and in_lrs_union(moved, a):
                    seen.add(moved)
                    queue.append(moved)
    return sorted(seen, key=lambda f: prefix_key(f.outer))
