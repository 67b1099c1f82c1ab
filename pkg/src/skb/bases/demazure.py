"""Demazure atoms, quasi-key polynomials and Demazure characters."""
from ..compositions import (bruhat_leq, flat_dominating, lswap_closure, qlswap, shuffles,
                            sorting_perm)
from ..polynomial import Polynomial
from ..tableaux.models import generating_weights
from .basis import Basis, basis_element


def _sum_of(basis_id, indices, n):
    total = Polynomial.zero(n)
    for b in indices:
        total = total + basis_element(basis_id, b, n)
    return total


class DemazureAtom(Basis):
    basis_id = "atom"
    methods = ("ASSF", "ASSF_basement", "qKT1")
    top_row = False

    def _method_ASSF(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("ASSF", index))

    def _method_ASSF_basement(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("ASSF_basement", index))

    def _method_qKT1(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("qKT1", index))


class ColumnQuasiKey(Basis):
    basis_id = "qkey1"
    methods = ("qKT1", "atom")
    top_row = False

    def _method_qKT1(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("qKT1", index))

    def _method_atom(self, index, n):
        return basis_element("atom", index, n)


class QuasiKey(Basis):
    """
    Quasi-key polynomials. The default sums atoms over b >= a with flat(b) = flat(a);
    the tableau models and the column quasi-key sum are kept for cross-checks.
    """
    basis_id = "qkey"
    methods = ("atoms", "qKT", "QSSF", "qkey1")
    top_row = True

    def _method_atoms(self, index, n):
        return _sum_of("atom", flat_dominating(index), n)

    def _method_qKT(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("qKT", index))

    def _method_QSSF(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("QSSF", index))

    def _method_qkey1(self, index, n):
        return _sum_of("qkey1", flat_dominating(index), n)


class DemazureCharacter(Basis):
    basis_id = "key"
    methods = ("lswap", "qlswap", "bruhat", "KSSF")
    top_row = True

    def _method_lswap(self, index, n):
        return _sum_of("atom", lswap_closure(index), n)

    def _method_qlswap(self, index, n):
        return _sum_of("qkey", qlswap(index), n)

    def _method_bruhat(self, index, n):
        w = sorting_perm(index)
        return _sum_of("atom", (b for b in shuffles(index) if bruhat_leq(sorting_perm(b), w)), n)

    def _method_KSSF(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("KSSF", tuple(reversed(index))))
