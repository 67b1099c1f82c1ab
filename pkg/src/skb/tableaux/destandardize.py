"""
Destandardization maps and the particle-highest / quasi-Yamanouchi predicates.

All of them only look at the column of each labelled cell. A pair (S, T) is read
with the columns of T placed strictly right of every column of S, and "first
column" always means the first column of the leading object.
"""
from typing import List, Tuple

from ..compositions import WeakComposition, slides
from .reverse import ReverseSSYT
from .skyline import SkylineFilling, weight


def _cells(x) -> List[Tuple[int, int]]:
    """(column, value) for every cell, in a fixed traversal order."""
    if isinstance(x, tuple):
        first, second = x
        offset = first.width()
        return _cells(first) + [(col + offset, v) for col, v in _cells(second)]
    if isinstance(x, SkylineFilling):
        return [(col, v) for _, col, v in x.cells()]
    if isinstance(x, ReverseSSYT):
        return [(col, v) for row in x.rows for col, v in enumerate(row, start=1)]
    raise TypeError("Cannot destandardize {!r}".format(type(x)))


def _rebuild(x, values):
    values = iter(values)
    if isinstance(x, tuple):
        first, second = x
        head = [next(values) for _ in _cells(first)]
        return _rebuild(first, head), _rebuild(second, values)
    if isinstance(x, SkylineFilling):
        return SkylineFilling(x.shape, tuple(tuple(next(values) for _ in row) for row in x.rows))
    return ReverseSSYT(tuple(tuple(next(values) for _ in row) for row in x.rows))


def _successor(labels, i, quasi):
    larger = [label for label in labels if label > i]
    if not larger:
        return None
    return i + 1 if quasi else larger[0]


def _blocked(cells, i, quasi):
    """True when label i may not be bumped."""
    labels = sorted({v for _, v in cells})
    leftmost = min(col for col, v in cells if v == i)
    if leftmost == 1:
        return True
    target = _successor(labels, i, quasi)
    if target is None:
        return True
    return any(v == target and col >= leftmost for col, v in cells)


def _destandardize(x, quasi, n=None):
    cells = _cells(x)
    while True:
        for i in sorted({v for _, v in cells}):
            if n is not None and i >= n:
                continue
            if not _blocked(cells, i, quasi):
                cells = [(col, v + 1 if v == i else v) for col, v in cells]
                break
        else:
            return _rebuild(x, [v for _, v in cells])


def dst(x, n: int = None):
    """
    Repeatedly replace every i by i + 1 when the leftmost i is not in the first
    column and no i^ (the next larger label present) sits weakly right of it.
    """
    return _destandardize(x, quasi=False, n=n)


def dst_q(x, n: int = None):
    """As dst, comparing against i + 1 instead of i^."""
    return _destandardize(x, quasi=True, n=n)


def is_particle_highest(x) -> bool:
    cells = _cells(x)
    return all(_blocked(cells, i, quasi=False) for i in {v for _, v in cells})


def is_quasi_yamanouchi(x) -> bool:
    cells = _cells(x)
    return all(_blocked(cells, i, quasi=True) for i in {v for _, v in cells})


def _nonzero_blocks(c: WeakComposition):
    """(start, end) label ranges ending at each nonzero position of c, 1-based."""
    blocks = []
    previous = 0
    for pos, part in enumerate(c, start=1):
        if part:
            blocks.append((previous + 1, pos))
            previous = pos
    return blocks


def dst_preimages(x, n: int):
    """
    For each fixed slide b of the weight of x, the object obtained by relabelling
    the cells of each label, right to left, with the labels of its block as b dictates.
    Only meaningful for dst-fixed x.
    """
    c = weight(x, n)
    cells = _cells(x)
    result = {}
    for b in sorted(slides(c, fixed=True)):
        values = [v for _, v in cells]
        for start, end in _nonzero_blocks(c):
            positions = sorted((k for k, (_, v) in enumerate(cells) if v == end),
                               key=lambda k: cells[k][0], reverse=True)
            labels = [label for label in range(start, end + 1) for _ in range(b[label - 1])]
            for k, label in zip(positions, labels):
                values[k] = label
        result[b] = _rebuild(x, values)
    return result
