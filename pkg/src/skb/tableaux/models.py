"""
Tableau models on skyline diagrams.

Each model is a class in the same family, the way embedders refine one another:
the base class holds the semi-skyline rules and the backtracking generator, the
subclasses add their first-column rule and their extra conditions.
"""
import logging
from functools import lru_cache
from typing import List

from ..compositions import WeakComposition
from ..utils import UnknownModelError
from .skyline import SkylineFilling, is_inversion, triples_of

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _cached_triples(shape, basement):
    return tuple(triples_of(shape, basement=basement))


def _rows_weakly_decrease(f):
    return all(x >= y for row in f.rows for x, y in zip(row, row[1:]))


def _columns_distinct(f):
    return all(len(set(f.column(col))) == len(f.column(col)) for col in range(1, f.width() + 1))


def _higher_rows_strictly_larger(f):
    occupied = [row for row in f.rows if row]
    return all(upper[-1] > lower[0] for k, lower in enumerate(occupied) for upper in occupied[k + 1:])


def _first_column_increases_upward(f):
    firsts = list(f.first_column().values())
    return all(x < y for x, y in zip(firsts, firsts[1:]))


def _first_column_is_row_index(f):
    return all(value == r for r, value in f.first_column().items())


class SkylineModel:
    """
    Semi-skyline fillings: weakly decreasing rows, distinct column entries and
    inversion triples, with the first column at most the row index.
    """
    model_id = None
    first_column_fixed = False
    uses_triples = True
    basement = False

    def __init__(self, check_triples=True):
        self.check_triples = check_triples and self.uses_triples

    def get_attributes(self):
        return {"model": self.model_id, "check_triples": self.check_triples, "basement": self.basement}

    def basement_entry(self, r: int, n: int) -> int:
        return r

    def _first_column_ok(self, f):
        if self.basement:
            return all(value <= self.basement_entry(r, f.n) for r, value in f.first_column().items())
        if self.first_column_fixed:
            return _first_column_is_row_index(f)
        return (all(value <= r for r, value in f.first_column().items())
                and _first_column_increases_upward(f))

    def _extra_rules_ok(self, f):
        return True

    def _triples_ok(self, f):
        return all(is_inversion(t, f, self.basement_entry) for t in _cached_triples(f.shape, self.basement))

    def is_valid(self, f: SkylineFilling) -> bool:
        if any(v < 1 for v in f.values()):
            return False
        if not (_rows_weakly_decrease(f) and _columns_distinct(f) and self._first_column_ok(f)):
            return False
        if not self._extra_rules_ok(f):
            return False
        return not self.check_triples or self._triples_ok(f)

    def _candidates(self, grid, r, c, last_first):
        """Values to try at (r, c), largest first."""
        if c == 1:
            if self.basement:
                return range(self.basement_entry(r, len(grid)), 0, -1)
            if self.first_column_fixed:
                return [r]
            return range(r, last_first, -1)
        return range(grid[r][c - 1], 0, -1)

    def enumerate(self, a: WeakComposition) -> List[SkylineFilling]:
        a = tuple(a)
        cells = [(r, c) for r in range(1, len(a) + 1) for c in range(1, a[r - 1] + 1)]
        grid = {r: {} for r in range(1, len(a) + 1)}
        used = {}
        found = []

        def backtrack(k, last_first):
            if k == len(cells):
                f = SkylineFilling(a, tuple(tuple(grid[r][c] for c in range(1, a[r - 1] + 1))
                                            for r in range(1, len(a) + 1)))
                if self.is_valid(f):
                    found.append(f)
                return
            r, c = cells[k]
            column = used.setdefault(c, set())
            for value in self._candidates(grid, r, c, last_first):
                if value in column:
                    continue
                grid[r][c] = value
                column.add(value)
                backtrack(k + 1, value if c == 1 else last_first)
                column.discard(value)
            grid[r].pop(c, None)

        backtrack(0, 0)
        logger.debug("%s(%s): %d fillings", self.model_id, a, len(found))
        return sorted(found, key=_canonical_key, reverse=True)


def _canonical_key(f):
    return tuple(reversed(f.rows))


class AtomModel(SkylineModel):
    model_id = "ASSF"
    first_column_fixed = True


class AtomBasementModel(SkylineModel):
    """Basement entry r in row r, with row and triple conditions running through it."""
    model_id = "ASSF_basement"
    basement = True


class KeySkylineModel(AtomBasementModel):
    """
    Basement entry n - r + 1 in row r. Read on the reversed diagram, these fillings
    generate the Demazure character: shape (a_n, ..., a_1) gives the key of a.
    """
    model_id = "KSSF"

    def basement_entry(self, r, n):
        return n - r + 1


class QuasiKeySkylineModel(SkylineModel):
    model_id = "QSSF"


class FundamentalSkylineModel(QuasiKeySkylineModel):
    model_id = "FSSF"

    def _extra_rules_ok(self, f):
        return _higher_rows_strictly_larger(f)


class MonomialSkylineModel(QuasiKeySkylineModel):
    model_id = "MSSF"

    def _extra_rules_ok(self, f):
        return all(len(set(row)) <= 1 for row in f.rows)


class ParticleSkylineModel(AtomModel):
    model_id = "LSSF"

    def _extra_rules_ok(self, f):
        return _higher_rows_strictly_larger(f)


class QuasiKeyTableauModel(SkylineModel):
    """
    Quasi-key tableaux. These are not subject to the triple conditions; instead
        - no entry of row i exceeds i and the first column increases upward,
        - an entry i above a larger k in the same column needs a label j > i right after k,
        - when the higher of two rows is strictly longer, an entry in column c of the
          lower row is smaller than the entry in column c + 1 of the higher row.
    """
    model_id = "qKT"
    uses_triples = False

    def _first_column_ok(self, f):
        return _first_column_increases_upward(f) and (not self.first_column_fixed or _first_column_is_row_index(f))

    def _extra_rules_ok(self, f):
        shape = f.shape
        if any(v > r for r, _, v in f.cells()):
            return False
        for low in range(1, f.n + 1):
            for high in range(low + 1, f.n + 1):
                for c in range(1, min(shape[low - 1], shape[high - 1]) + 1):
                    above, below = f.entry((high, c)), f.entry((low, c))
                    if above < below and not (c < shape[low - 1] and f.entry((low, c + 1)) > above):
                        return False
                if shape[high - 1] > shape[low - 1]:
                    for c in range(1, min(shape[low - 1], shape[high - 1] - 1) + 1):
                        if not f.entry((low, c)) < f.entry((high, c + 1)):
                            return False
        return True


class ColumnQuasiKeyTableauModel(QuasiKeyTableauModel):
    model_id = "qKT1"
    first_column_fixed = True


class QuasiYamanouchiTableauModel(QuasiKeyTableauModel):
    model_id = "QqKT"

    def _extra_rules_ok(self, f):
        return super()._extra_rules_ok(f) and is_quasi_yamanouchi_qkt(f)


def is_quasi_yamanouchi_qkt(f: SkylineFilling) -> bool:
    """The leftmost i of a quasi-key tableau lies in row i or weakly left of some i + 1."""
    leftmost = {}
    for r, c, v in f.cells():
        if v not in leftmost or c < leftmost[v][1]:
            leftmost[v] = (r, c)
    for value, (r, c) in leftmost.items():
        if r == value:
            continue
        if not any(v == value + 1 and cc >= c for _, cc, v in f.cells()):
            return False
    return True


AVAILABLE_MODELS = {
    "ASSF": AtomModel,
    "ASSF_basement": AtomBasementModel,
    "KSSF": KeySkylineModel,
    "QSSF": QuasiKeySkylineModel,
    "FSSF": FundamentalSkylineModel,
    "MSSF": MonomialSkylineModel,
    "LSSF": ParticleSkylineModel,
    "qKT": QuasiKeyTableauModel,
    "qKT1": ColumnQuasiKeyTableauModel,
    "QqKT": QuasiYamanouchiTableauModel,
}


def get_model(model_id: str, **kwargs) -> SkylineModel:
    if model_id not in AVAILABLE_MODELS:
        raise UnknownModelError("Unknown model {!r}, expected one of {}".format(model_id, sorted(AVAILABLE_MODELS)))
    return AVAILABLE_MODELS[model_id](**kwargs)


def is_valid(model_id: str, a: WeakComposition, f: SkylineFilling) -> bool:
    if tuple(f.shape) != tuple(a):
        return False
    return get_model(model_id).is_valid(f)


@lru_cache(maxsize=4096)
def _enumerate_cached(model_id, a):
    return tuple(get_model(model_id).enumerate(a))


def enumerate_fillings(model_id: str, a: WeakComposition) -> List[SkylineFilling]:
    """All fillings of D(a) valid for the model, in canonical order."""
    return list(_enumerate_cached(model_id, tuple(a)))


def generating_weights(model_id: str, a: WeakComposition):
    return [f.weight() for f in enumerate_fillings(model_id, a)]
