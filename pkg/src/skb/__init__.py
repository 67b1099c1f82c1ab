"""Polynomial bases indexed by weak compositions, their tableau models and positive expansions."""
from .bases import AVAILABLE_BASES, basis_element, stable_limit_probe
from .compositions import format_composition, parse_composition
from .expansions import expand_generic, expand_positive, verify_poset
from .lr import product_expansion
from .polynomial import BasisExpansion, Polynomial, expand_in_basis, multiply

__version__ = "0.1"
