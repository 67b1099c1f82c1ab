"""
Schur and quasi-Schur polynomials, and the finite-variable probe of stable limits.
"""
import logging

from ..compositions import check_partition, flat_class, prepend_zeros
from ..polynomial import Polynomial, truncate_tail
from ..tableaux.reverse import complement, enumerate_revssyt, enumerate_ssyt
from ..utils import CompositionError, format_int_list
from .basis import Basis, basis_element, get_basis

logger = logging.getLogger(__name__)


class Schur(Basis):
    """s_lambda(x_1..x_n) from reverse SSYT; ordinary SSYT read through i -> n+1-i as cross-check."""
    basis_id = "schur"
    methods = ("revssyt", "ssyt")
    top_row = True

    def _check_index(self, index, n):
        index = tuple(index)
        check_partition(index)
        if n is None:
            n = len(index)
        return index, n

    def _method_revssyt(self, index, n):
        return Polynomial.from_exponents(n, (t.weight(n) for t in enumerate_revssyt(index, n)))

    def _method_ssyt(self, index, n):
        return Polynomial.from_exponents(n, (complement(rows, n).weight(n) for rows in enumerate_ssyt(index, n)))


class QuasiSchur(Basis):
    basis_id = "quasi_schur"
    methods = ("qkey", "atoms")
    top_row = True

    def _check_index(self, index, n):
        index = tuple(index)
        if any(part <= 0 for part in index):
            raise CompositionError("Quasi-Schur index must be a strong composition: {}".format(index))
        if n is None:
            n = len(index)
        if n < len(index):
            raise CompositionError("{} has more than {} parts".format(index, n))
        return index, n

    def _method_qkey(self, index, n):
        return basis_element("qkey", prepend_zeros(index, n - len(index)), n)

    def _method_atoms(self, index, n):
        total = Polynomial.zero(n)
        for b in flat_class(index, n):
            total = total + basis_element("atom", b, n)
        return total


def _first_index_from(values, predicate):
    """Smallest k such that predicate holds for every values[k:], None if it fails at the end."""
    start = None
    for k in range(len(values) - 1, -1, -1):
        if predicate(k):
            start = k
        else:
            break
    return start


def stable_limit_probe(basis_id: str, a, m_max: int):
    """
    Computes f_{0^m x a} in len(a) + m variables for m = 0..m_max, restricted to the
    first len(a) variables.

    :return: report dict with the truncations, the first m from which they no longer
        change and the first m from which they all vanish
    """
    a = tuple(a)
    n = len(a)
    truncations = []
    for m in range(m_max + 1):
        element = basis_element(basis_id, prepend_zeros(a, m), n + m)
        truncations.append(truncate_tail(element, n))
        logger.debug("%s_%s: %d terms after truncation", basis_id, format_int_list(prepend_zeros(a, m)),
                     len(truncations[-1]))

    stable_from = _first_index_from(truncations,
                                    lambda k: k == len(truncations) - 1 or truncations[k] == truncations[k + 1])
    vanishes_from = _first_index_from(truncations, lambda k: truncations[k].is_zero())
    stable = stable_from is not None and stable_from < m_max
    vanishes = vanishes_from is not None
    top_row = get_basis(basis_id).top_row
    if top_row:
        as_expected = stable and not truncations[-1].is_zero()
    else:
        as_expected = vanishes or not any(a)
    return {
        "basis": basis_id,
        "index": format_int_list(a),
        "m_max": m_max,
        "top_row": top_row,
        "truncations": [t.to_json() for t in truncations],
        "stable_from": stable_from,
        "vanishes_from": vanishes_from,
        "stable": stable,
        "vanishes": vanishes,
        "as_expected": as_expected,
    }
