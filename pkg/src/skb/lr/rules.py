"""
Products f_a * s_lambda expanded in the basis of f, by the three positive rules,
plus the brute-force route they are checked against.
"""
import logging

from ..bases import basis_element, get_basis
from ..compositions import check_partition, compositions
from ..polynomial import BasisExpansion, expand_in_basis, multiply
from ..tableaux.destandardize import dst
from ..tableaux.models import enumerate_fillings
from ..tableaux.reverse import enumerate_revssyt
from ..tableaux.skyline import weight
from ..utils import CompositionError, UnknownModelError, timeit
from .lrs import enumerate_lrs, is_highest_weight, lambda_star

logger = logging.getLogger(__name__)


def pairs(a, lam, n: int):
    """Pairs (S, T) with S a particle skyline filling of a and T a reverse SSYT of shape lam."""
    return [(s, t) for s in enumerate_fillings("LSSF", tuple(a)) for t in enumerate_revssyt(tuple(lam), n)]


def dst_pair(s, t, n: int):
    return dst((s, t), n)


def hpairs(a, lam, n: int):
    return [pair for pair in pairs(a, lam, n) if dst(pair, n) == pair]


class ProductRule:
    """
    Expansion of f_a * s_lambda in the basis of f. Subclasses implement
    `_certificates(a, lam, n)`, returning a map from index to the objects it counts.
    """
    basis_id = None

    def __init__(self, *args, **kwargs):
        self.times = {}
        self.n_certificates = None

    def get_attributes(self):
        return {"basis": self.basis_id, "n_certificates": self.n_certificates, "exec_times": self.times}

    def _certificates(self, a, lam, n):
        raise NotImplementedError

    @timeit(var_name="expand")
    def expand(self, a, lam, n: int = None, witnesses: bool = False):
        a, lam = tuple(a), tuple(lam)
        check_partition(lam)
        n = len(a) if n is None else n
        if len(a) != n:
            raise CompositionError("Index {} does not have length {}".format(a, n))
        certificates = self._certificates(a, lam, n)
        self.n_certificates = sum(len(found) for found in certificates.values())
        expansion = BasisExpansion(self.basis_id, {b: len(found) for b, found in certificates.items()})
        logger.debug("%s rule for %s x s_%s: %d certificates", self.basis_id, a, lam, self.n_certificates)
        if witnesses:
            return expansion, certificates
        return expansion


class AtomRule(ProductRule):
    """Coefficient of A_b: LRS of shape b/a with content lambda* and contre-lattice word."""
    basis_id = "atom"

    def _certificates(self, a, lam, n):
        content = lambda_star(lam)
        found = {}
        for b in compositions(sum(a) + len(content), n):
            fillings = enumerate_lrs(a, b, content, inner=a)
            if fillings:
                found[b] = fillings
        return found


class QuasiKeyRule(ProductRule):
    """Coefficient of Q_b: highest-weight elements of LRS(a, b)."""
    basis_id = "qkey"

    def _certificates(self, a, lam, n):
        content = lambda_star(lam)
        found = {}
        for b in compositions(sum(a) + len(content), n):
            fillings = [f for f in enumerate_lrs(a, b, content) if is_highest_weight(f, a)]
            if fillings:
                found[b] = fillings
        return found


class ParticleRule(ProductRule):
    """Coefficient of L_b: dst-fixed pairs of weight b."""
    basis_id = "particle"

    def _certificates(self, a, lam, n):
        found = {}
        for pair in hpairs(a, lam, n):
            found.setdefault(weight(pair, n), []).append(pair)
        return found


AVAILABLE_RULES = {
    "atom": AtomRule,
    "qkey": QuasiKeyRule,
    "particle": ParticleRule,
}


def product_expansion(basis_id: str, a, lam, n: int = None, witnesses: bool = False):
    """
    f_a * s_lambda(x_1..x_n) in the basis of f, for atoms, quasi-keys and particles.

    :param witnesses: also return {index: certificates}
    """
    if basis_id not in AVAILABLE_RULES:
        raise UnknownModelError("No product rule for {!r}, expected one of {}".format(basis_id, sorted(AVAILABLE_RULES)))
    return AVAILABLE_RULES[basis_id]().expand(a, lam, n, witnesses=witnesses)


def product_expansion_generic(basis_id: str, a, lam, n: int = None) -> BasisExpansion:
    """Multiply, then expand by triangular elimination."""
    a = tuple(a)
    n = len(a) if n is None else n
    product = multiply(basis_element(basis_id, a, n), basis_element("schur", tuple(lam), n))
    return expand_in_basis(product, get_basis(basis_id).generator(n), basis_id)
