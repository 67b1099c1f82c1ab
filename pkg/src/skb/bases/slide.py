"""Monomials, monomial and fundamental slides, fundamental particles."""
from ..compositions import compositions, dominates, flat, refines, slides
from ..polynomial import Polynomial
from ..tableaux.models import generating_weights
from .basis import Basis


class Monomial(Basis):
    basis_id = "monomial"
    methods = ("definition",)
    top_row = False

    def _method_definition(self, index, n):
        return Polynomial.monomial(index)


class MonomialSlide(Basis):
    basis_id = "monomial_slide"
    methods = ("dominance", "MSSF")
    top_row = True

    def _method_dominance(self, index, n):
        alpha = flat(index)
        return Polynomial.from_exponents(n, (b for b in compositions(sum(index), n)
                                             if flat(b) == alpha and dominates(b, index)))

    def _method_MSSF(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("MSSF", index))


class FundamentalSlide(Basis):
    basis_id = "fundamental_slide"
    methods = ("dominance", "FSSF", "slides")
    top_row = True

    def _method_dominance(self, index, n):
        alpha = flat(index)
        return Polynomial.from_exponents(n, (b for b in compositions(sum(index), n)
                                             if refines(flat(b), alpha) and dominates(b, index)))

    def _method_FSSF(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("FSSF", index))

    def _method_slides(self, index, n):
        return Polynomial.from_exponents(n, slides(index))


class FundamentalParticle(Basis):
    """Generating function of the fixed slides of the index."""
    basis_id = "particle"
    methods = ("fixed_slides", "LSSF")
    top_row = False

    def _method_fixed_slides(self, index, n):
        return Polynomial.from_exponents(n, slides(index, fixed=True))

    def _method_LSSF(self, index, n):
        return Polynomial.from_exponents(n, generating_weights("LSSF", index))
