"""
Bijections between reverse SSYT, atom skyline fillings and column quasi-key tableaux.

All three families share column sets: the c-th column of each object holds the
same set of entries.
"""
from typing import List, Tuple

from .tableaux.reverse import ReverseSSYT
from .tableaux.skyline import SkylineFilling

Run = Tuple[int, Tuple[int, ...]]


def _columns(v: ReverseSSYT) -> List[List[int]]:
    return [list(column) for column in v.columns()]


def _largest_entry(v: ReverseSSYT):
    return max(v.values(), default=0)


def _to_filling(runs: List[Run], n: int) -> SkylineFilling:
    rows = {row: entries for row, entries in runs}
    return SkylineFilling.from_rows(tuple(len(rows.get(r, ())) for r in range(1, n + 1)), rows)


def column_fill(v: ReverseSSYT, n: int = None) -> SkylineFilling:
    """
    First column: entry i goes to row i. Every later column is filled from its
    largest entry down, each placed as low as the decreasing rows allow.
    """
    n = _largest_entry(v) if n is None else n
    rows = {}
    for c, column in enumerate(_columns(v), start=1):
        for value in sorted(column, reverse=True):
            if c == 1:
                rows[value] = [value]
                continue
            for r in sorted(rows):
                row = rows[r]
                if len(row) == c - 1 and row[-1] >= value:
                    row.append(value)
                    break
            else:
                raise ValueError("Column set {} of {} cannot be placed".format(c, v))
    return _to_filling([(r, tuple(row)) for r, row in rows.items()], n)


def left_runs(v: ReverseSSYT) -> List[Run]:
    """Runs of the left row-filling, in the order they are built."""
    columns = _columns(v)
    runs = []
    while columns and columns[0]:
        start = min(columns[0])
        columns[0].remove(start)
        run = [start]
        for column in columns[1:]:
            choices = [x for x in column if x <= run[-1]]
            if not choices:
                break
            run.append(max(choices))
            column.remove(run[-1])
        runs.append((start, tuple(run)))
    return runs


def right_runs(v: ReverseSSYT) -> List[Run]:
    """Runs of the right row-filling: increasing runs read from the rightmost column."""
    columns = _columns(v)
    runs = []
    while any(columns):
        k = max(c for c, column in enumerate(columns) if column)
        run = [min(columns[k])]
        columns[k].remove(run[0])
        for column in reversed(columns[:k]):
            choice = min(x for x in column if x >= run[-1])
            column.remove(choice)
            run.append(choice)
        run.reverse()
        runs.append((run[0], tuple(run)))
    return runs


def left_row_fill(v: ReverseSSYT, n: int = None) -> SkylineFilling:
    return _to_filling(left_runs(v), _largest_entry(v) if n is None else n)


def right_row_fill(v: ReverseSSYT, n: int = None) -> SkylineFilling:
    return _to_filling(right_runs(v), _largest_entry(v) if n is None else n)


def top_justify(f: SkylineFilling) -> ReverseSSYT:
    """Sorts every column set decreasingly and stacks the columns from the top."""
    columns = [sorted(f.column(c), reverse=True) for c in range(1, f.width() + 1)]
    depth = max((len(column) for column in columns), default=0)
    return ReverseSSYT.from_rows([[column[k] for column in columns if len(column) > k] for k in range(depth)])


def phi(t: SkylineFilling) -> ReverseSSYT:
    """Inverse of right_row_fill on column quasi-key tableaux."""
    return top_justify(t)


def inverse_column_fill(s: SkylineFilling) -> ReverseSSYT:
    return top_justify(s)


def assf_to_qkt1(s: SkylineFilling) -> SkylineFilling:
    return right_row_fill(inverse_column_fill(s), s.n)


def qkt1_to_assf(t: SkylineFilling) -> SkylineFilling:
    return column_fill(phi(t), t.n)


def run_decomposition(v: ReverseSSYT, side: str = "left") -> List[Run]:
    if side == "left":
        return left_runs(v)
    if side == "right":
        return right_runs(v)
    raise ValueError("side must be 'left' or 'right', got {!r}".format(side))


def duality_report(v: ReverseSSYT, n: int = None):
    """Both run decompositions of v and the images they build, side by side."""
    n = _largest_entry(v) if n is None else n
    return {
        "input": v.to_json(),
        "left_runs": [{"row": row, "entries": list(entries)} for row, entries in left_runs(v)],
        "right_runs": [{"row": row, "entries": list(entries)} for row, entries in right_runs(v)],
        "column_fill": column_fill(v, n).to_json(),
        "left_row_fill": left_row_fill(v, n).to_json(),
        "right_row_fill": right_row_fill(v, n).to_json(),
        "phi_of_right_row_fill": phi(right_row_fill(v, n)).to_json(),
    }
