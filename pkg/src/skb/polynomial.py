"""
Exact sparse polynomials over the integers, keyed by exponent weak compositions,
and the triangular change-of-basis engine every expansion is checked against.
"""
import logging
from collections import Counter
from typing import Callable, Dict, Iterable

from .compositions import (WeakComposition, canonical_sorted, dominates, flat, flat_class, prefix_key,
                           shuffles)
from .utils import BasisContractError, CompositionError, format_int_list, parse_int_list

logger = logging.getLogger(__name__)


class Polynomial:

    def __init__(self, nvars: int, terms: Dict[WeakComposition, int] = None):
        """
        :param nvars: number of variables, the length of every exponent
        :param terms: exponent -> coefficient; zero coefficients are dropped
        """
        self.nvars = nvars
        self.terms = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise CompositionError("Exponent {} does not have {} parts".format(exp, nvars))
            if coeff:
                self.terms[exp] = self.terms.get(exp, 0) + coeff
        self.terms = {exp: coeff for exp, coeff in self.terms.items() if coeff}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def from_exponents(cls, nvars, exponents: Iterable[WeakComposition]):
        """Generating function of a multiset of weights: each occurrence adds x^exp."""
        return cls(nvars, Counter(tuple(exp) for exp in exponents))

    def _check_compatible(self, other):
        if self.nvars != other.nvars:
            raise CompositionError("nvars mismatch: {} vs {}".format(self.nvars, other.nvars))

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def support(self):
        return canonical_sorted(self.terms)

    def degree(self):
        if not self.terms:
            return None
        return max(sum(exp) for exp in self.terms)

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        return len({sum(exp) for exp in self.terms}) <= 1

    def homogeneous_components(self):
        components = {}
        for exp, coeff in self.terms.items():
            components.setdefault(sum(exp), {})[exp] = coeff
        return {deg: Polynomial(self.nvars, terms) for deg, terms in sorted(components.items())}

    def is_quasisymmetric(self):
        for exp, coeff in self.terms.items():
            if any(self.coefficient(other) != coeff for other in flat_class(flat(exp), self.nvars)):
                return False
        return True

    def is_symmetric(self):
        for exp, coeff in self.terms.items():
            if any(self.coefficient(other) != coeff for other in shuffles(exp)):
                return False
        return True

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return Polynomial(self.nvars, terms)

    def __neg__(self):
        return Polynomial(self.nvars, {exp: -coeff for exp, coeff in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return Polynomial(self.nvars, {exp: other * coeff for exp, coeff in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in self.support():
            coeff = self.terms[exp]
            parts.append("{}x^{}".format("" if coeff == 1 else "{}*".format(coeff), "".join(map(str, exp))))
        return " + ".join(parts)

    def as_dict(self):
        """String-keyed coefficient map in canonical order, e.g. {"0,1": 1}."""
        return {format_int_list(exp): self.terms[exp] for exp in self.support()}

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(exp), "coeff": self.terms[exp]} for exp in self.support()]
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["nvars"], {tuple(term["exp"]): term["coeff"] for term in data["terms"]})


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check_compatible(q)
    terms = {}
    for exp_p, coeff_p in p.terms.items():
        for exp_q, coeff_q in q.terms.items():
            exp = tuple(x + y for x, y in zip(exp_p, exp_q))
            terms[exp] = terms.get(exp, 0) + coeff_p * coeff_q
    return Polynomial(p.nvars, terms)


def truncate_tail(p: Polynomial, n: int) -> Polynomial:
    """Sets x_i = 0 for i > n."""
    if n > p.nvars:
        raise CompositionError("Cannot truncate {} variables to {}".format(p.nvars, n))
    return Polynomial(n, {exp[:n]: coeff for exp, coeff in p.terms.items() if not any(exp[n:])})


class BasisExpansion:

    def __init__(self, basis_id: str, coeffs: Dict[WeakComposition, int] = None):
        self.basis_id = basis_id
        self.coeffs = {tuple(index): c for index, c in (coeffs or {}).items() if c}

    def add(self, index, coeff):
        index = tuple(index)
        value = self.coeffs.get(index, 0) + coeff
        if value:
            self.coeffs[index] = value
        else:
            self.coeffs.pop(index, None)

    def is_positive(self):
        return all(c > 0 for c in self.coeffs.values())

    def negative_part(self):
        return {index: c for index, c in self.coeffs.items() if c < 0}

    def resum(self, basis_generator: Callable[[WeakComposition], Polynomial], nvars: int) -> Polynomial:
        total = Polynomial.zero(nvars)
        for index, coeff in self.coeffs.items():
            total = total + coeff * basis_generator(index)
        return total

    def indices(self):
        return canonical_sorted(self.coeffs)

    def as_dict(self):
        """String-keyed coefficient map in canonical order, e.g. {"0,1": 1, "1,0": -1}."""
        return {format_int_list(index): self.coeffs[index] for index in self.indices()}

    def to_json(self):
        return {"basis": self.basis_id, "coeffs": self.as_dict()}

    @classmethod
    def from_json(cls, data):
        return cls(data["basis"], {parse_int_list(key): c for key, c in data["coeffs"].items()})

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self.basis_id == other.basis_id and self.coeffs == other.coeffs

    def __repr__(self):
        return "BasisExpansion({!r}, {})".format(self.basis_id, self.as_dict())


def leading_term_violations(poly: Polynomial, a: WeakComposition):
    """
    Problems with poly as a basis element indexed by a: x^a must appear with
    coefficient 1 and every other exponent must strictly dominate a.
    """
    violations = []
    if poly.coefficient(a) != 1:
        violations.append("coefficient of x^{} is {}".format(format_int_list(a), poly.coefficient(a)))
    for exp in poly.terms:
        if exp != tuple(a) and not dominates(exp, a):
            violations.append("term x^{} does not dominate {}".format(format_int_list(exp), format_int_list(a)))
    return violations


def expand_in_basis(p: Polynomial, basis: Callable[[WeakComposition], Polynomial],
                    basis_id: str = None) -> BasisExpansion:
    """
    Triangular elimination of p against a basis generator.

    :param p: polynomial to expand, possibly of mixed degree
    :param basis: maps an exponent b to the basis element indexed by b
    :param basis_id: label carried by the result
    :return: the exact, possibly signed, expansion
    :raises BasisContractError: when a generated element fails the leading-term contract
    """
    expansion = BasisExpansion(basis_id)
    remaining = p
    steps = 0
    while not remaining.is_zero():
        # prefix_key sorts by degree first, so lower degrees are cleared first
        pivot = min(remaining.terms, key=prefix_key)
        element = basis(pivot)
        violations = leading_term_violations(element, pivot)
        if violations:
            raise BasisContractError("{} at {}: {}".format(basis_id, format_int_list(pivot), "; ".join(violations)))
        coeff = remaining.coefficient(pivot)
        expansion.add(pivot, coeff)
        remaining = remaining - coeff * element
        steps += 1
    logger.debug("Expanded %d terms into %s in %d steps", len(p), basis_id, steps)
    return expansion
