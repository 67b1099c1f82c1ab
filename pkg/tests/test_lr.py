import pytest

from skb.compositions import flat_dominating, partitions_upto, prefix_key, weak_compositions_upto
from skb.lr import (STAR, LRSFilling, column_word, enumerate_lrs, hpairs, is_contre_lattice, is_highest_weight,
                    is_valid_lrs, lambda_star, lrs_union, product_expansion, product_expansion_generic,
                    swap_closure, swap_row)
from skb.lr.lrs import in_lrs_union
from skb.tableaux import ReverseSSYT
from skb.utils import CompositionError, SwapError, UnknownModelError

A = (0, 1, 0, 3)

LEFT = LRSFilling.from_rows(A, (0, 2, 1, 4), {2: [STAR, 2], 3: [1], 4: [STAR, STAR, STAR, 2]})
RIGHT = LRSFilling.from_rows(A, (0, 2, 1, 4), {2: [STAR, 1], 3: [2], 4: [STAR, STAR, STAR, 2]})

CHAIN = [
    LRSFilling.from_rows((1, 0, 0, 3), (1, 2, 0, 4), {1: [STAR], 2: [2, 1], 4: [STAR, STAR, STAR, 2]}),
    LRSFilling.from_rows((1, 0, 0, 3), (1, 0, 2, 4), {1: [STAR], 3: [2, 1], 4: [STAR, STAR, STAR, 2]}),
    LRSFilling.from_rows((0, 1, 0, 3), (0, 1, 2, 4), {2: [STAR], 3: [2, 1], 4: [STAR, STAR, STAR, 2]}),
]


def test_lambda_star():
    assert lambda_star((2, 1)) == (1, 2, 2)
    assert lambda_star((1,)) == (1,)
    assert lambda_star((3, 3)) == (1, 1, 1, 2, 2, 2)


def test_column_word():
    assert column_word(LEFT) == (2, 2, 1)
    assert column_word(RIGHT) == (2, 1, 2)
    assert column_word(LRSFilling.from_rows((0, 2), (0, 2), {2: [STAR, STAR]})) == ()


@pytest.mark.parametrize("word, expected", [
    ((4, 4, 3, 2, 3, 1, 4, 2, 1, 3), True),
    ((2, 2, 1), True),
    ((1,), True),
    ((), True),
    ((1, 2), False),
    ((2, 1, 1), False),
])
def test_contre_lattice(word, expected):
    assert is_contre_lattice(word) == expected


def test_valid_fillings():
    assert is_valid_lrs(LEFT)
    assert is_valid_lrs(RIGHT)
    assert LEFT.content() == (1, 2, 2)
    coinversion = LRSFilling.from_rows((0, 1), (1, 1), {1: [1], 2: [STAR]})
    assert not is_valid_lrs(coinversion)
    increasing = LRSFilling.from_rows((0, 0), (0, 2), {2: [1, 2]})
    assert not is_valid_lrs(increasing)


def test_enumerate_lrs():
    fillings = enumerate_lrs(A, (0, 2, 1, 4), lambda_star((2, 1)))
    assert LEFT in fillings and RIGHT in fillings
    assert enumerate_lrs(A, (0, 2, 1, 4), (1, 2)) == []
    assert len(enumerate_lrs((0, 1), (0, 2), (1,))) == 1
    with pytest.raises(CompositionError):
        enumerate_lrs((0, 1), (0, 1, 1), (1,))


def test_swap_chain():
    assert swap_row(CHAIN[0], 2, "up") == CHAIN[1]
    assert swap_row(CHAIN[1], 1, "up") == CHAIN[2]
    assert swap_row(CHAIN[1], 3, "down") == CHAIN[0]
    assert all(is_valid_lrs(L) and in_lrs_union(L, A) for L in CHAIN)
    assert len({column_word(L) for L in CHAIN}) == 1
    assert [is_highest_weight(L, A) for L in CHAIN] == [False, False, True]
    assert is_highest_weight(LEFT, A) and is_highest_weight(RIGHT, A)


def test_swap_errors():
    with pytest.raises(SwapError):
        swap_row(LEFT, 2, "sideways")
    with pytest.raises(SwapError):
        swap_row(LEFT, 3, "up")
    with pytest.raises(SwapError):
        swap_row(LEFT, 1, "up")
    with pytest.raises(SwapError):
        swap_row(LEFT, 4, "up")


def test_swap_closure_reaches_the_whole_chain():
    closure = swap_closure(CHAIN[2], A)
    assert set(CHAIN) <= set(closure)
    assert sum(is_highest_weight(L, A) for L in closure) == 1


@pytest.mark.parametrize("a", [(0, 1), (1, 0), (0, 2), (1, 1), (0, 1, 1)])
def test_swap_classes_have_one_highest_weight_element(a):
    content = lambda_star((1,))
    union = lrs_union(a, content)
    seen = set()
    for filling in union:
        if filling in seen:
            continue
        members = swap_closure(filling, a)
        seen.update(members)
        highest = [L for L in members if is_highest_weight(L, a)]
        assert len(highest) == 1
        outers = sorted((L.outer for L in members), key=prefix_key)
        assert outers == sorted(flat_dominating(outers[0]), key=prefix_key)


@pytest.mark.parametrize("basis_id, expected", [
    ("atom", {(0, 2): 1}),
    ("qkey", {(0, 2): 1, (1, 1): 1}),
    ("particle", {(0, 2): 1}),
])
def test_product_with_a_single_box(basis_id, expected):
    expansion = product_expansion(basis_id, (0, 1), (1,), 2)
    assert expansion.coeffs == expected
    assert expansion == product_expansion_generic(basis_id, (0, 1), (1,), 2)


def test_product_witnesses():
    expansion, certificates = product_expansion("atom", A, (2, 1), witnesses=True)
    assert {b: len(found) for b, found in certificates.items()} == expansion.coeffs
    assert LEFT in certificates[(0, 2, 1, 4)] and RIGHT in certificates[(0, 2, 1, 4)]
    _, pairs = product_expansion("particle", (0, 1), (1,), 2, witnesses=True)
    assert list(pairs[(0, 2)][0][1].rows) == [(2,)]


def test_highest_pairs():
    found = hpairs((0, 1), (1,), 2)
    assert len(found) == 1
    assert found[0][1] == ReverseSSYT.from_rows([[2]])


def test_product_errors():
    with pytest.raises(UnknownModelError):
        product_expansion("key", (0, 1), (1,))
    with pytest.raises(CompositionError):
        product_expansion("atom", (0, 1), (1, 2))
    with pytest.raises(CompositionError):
        product_expansion("atom", (0, 1), (1,), 3)


@pytest.mark.parametrize("basis_id", ["atom", "qkey", "particle"])
def test_rules_match_multiply_then_eliminate(basis_id):
    for a in weak_compositions_upto(2, 2):
        for lam in partitions_upto(2, min_size=1):
            if len(lam) > len(a):
                continue
            rule = product_expansion(basis_id, a, lam)
            assert rule.is_positive()
            assert rule == product_expansion_generic(basis_id, a, lam), (a, lam)


@pytest.mark.slow
@pytest.mark.parametrize("basis_id", ["atom", "qkey", "particle"])
def test_rules_match_multiply_then_eliminate_acceptance_range(basis_id):
    for a in weak_compositions_upto(3, 3):
        for lam in partitions_upto(3, min_size=1):
            if len(lam) > len(a):
                continue
            assert product_expansion(basis_id, a, lam) == product_expansion_generic(basis_id, a, lam), (a, lam)


@pytest.mark.parametrize("basis_id", ["monomial", "monomial_slide", "fundamental_slide"])
def test_schur_products_stay_positive(basis_id):
    for a in weak_compositions_upto(2, 2):
        assert product_expansion_generic(basis_id, a, (1,)).is_positive(), a
