from .basis import AVAILABLE_BASES, Basis, basis_element, get_basis
from .stable import stable_limit_probe
