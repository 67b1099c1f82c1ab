from .lrs import (LRSFilling, STAR, column_word, enumerate_lrs, is_contre_lattice, is_highest_weight,
                  is_valid_lrs, lambda_star, lrs_union, swap_closure, swap_row)
from .rules import AVAILABLE_RULES, dst_pair, hpairs, pairs, product_expansion, product_expansion_generic
