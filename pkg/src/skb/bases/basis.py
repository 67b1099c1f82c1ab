import logging
from functools import lru_cache
from importlib import import_module

from ..polynomial import Polynomial
from ..utils import CompositionError, UnknownModelError, timeit

logger = logging.getLogger(__name__)


class Basis:
    """
    A family of polynomials indexed by weak compositions.

    Subclasses list their combinatorial descriptions in `methods` (the first one is
    the default) and implement each as `_method_<name>(index, n)`.
    """
    basis_id = None
    methods = ()
    top_row = None

    def __init__(self, method: str = None, *args, **kwargs):
        """
        :param method: which description to compute elements with, default first of `methods`
        """
        if method is None:
            method = self.methods[0]
        if method not in self.methods:
            raise UnknownModelError("Unknown method {!r} for {}, expected one of {}"
                                    .format(method, self.basis_id, list(self.methods)))
        self.method = method
        self.times = {}

    def get_attributes(self):
        self.times["total"] = sum(v for k, v in self.times.items() if k != "total")
        return {
            "basis": self.basis_id,
            "method": self.method,
            "exec_times": self.times
        }

    def _check_index(self, index, n):
        index = tuple(index)
        if any(part < 0 for part in index):
            raise CompositionError("Negative part in {}".format(index))
        if n is None:
            n = len(index)
        if len(index) != n:
            raise CompositionError("{} index {} does not have length {}".format(self.basis_id, index, n))
        return index, n

    @timeit(var_name="element")
    def element(self, index, n: int = None) -> Polynomial:
        index, n = self._check_index(index, n)
        return getattr(self, "_method_" + self.method)(index, n)

    def __call__(self, index, n: int = None) -> Polynomial:
        return basis_element(self.basis_id, tuple(index), n, self.method)

    def generator(self, n: int = None):
        """Index -> element, the shape expand_in_basis expects."""
        return lambda index: self(index, n)


AVAILABLE_BASES = {
    "monomial": ("skb.bases.slide", "Monomial"),
    "monomial_slide": ("skb.bases.slide", "MonomialSlide"),
    "fundamental_slide": ("skb.bases.slide", "FundamentalSlide"),
    "particle": ("skb.bases.slide", "FundamentalParticle"),
    "atom": ("skb.bases.demazure", "DemazureAtom"),
    "qkey": ("skb.bases.demazure", "QuasiKey"),
    "qkey1": ("skb.bases.demazure", "ColumnQuasiKey"),
    "key": ("skb.bases.demazure", "DemazureCharacter"),
    "schur": ("skb.bases.stable", "Schur"),
    "quasi_schur": ("skb.bases.stable", "QuasiSchur"),
}


def get_basis(basis_id: str, method: str = None) -> Basis:
    if basis_id not in AVAILABLE_BASES:
        raise UnknownModelError("Unknown basis {!r}, expected one of {}".format(basis_id, sorted(AVAILABLE_BASES)))
    module_name, class_name = AVAILABLE_BASES[basis_id]
    basis_class = getattr(import_module(module_name), class_name)
    return basis_class(method=method)


@lru_cache(maxsize=4096)
def _cached_element(basis_id, index, n, method):
    return get_basis(basis_id, method).element(index, n)


def basis_element(basis_id: str, index, n: int = None, method: str = None) -> Polynomial:
    """
    The polynomial of basis `basis_id` at `index` in n variables.

    :param basis_id: one of AVAILABLE_BASES
    :param index: weak composition, or partition/strong composition for schur and quasi_schur
    :param n: number of variables, defaults to len(index)
    :param method: description to use, defaults to the basis default
    :return: Polynomial
    """
    if method is None:
        method = get_basis(basis_id).method
    return _cached_element(basis_id, tuple(index), n, method)
