import pytest

from skb.bases import AVAILABLE_BASES, basis_element, get_basis, stable_limit_probe
from skb.bases.basis import _cached_element
from skb.compositions import lswap_closure, partitions_upto, weak_compositions_upto
from skb.polynomial import Polynomial, leading_term_violations
from skb.utils import CompositionError, UnknownModelError


def _c(*words):
    return {tuple(int(ch) for ch in word) for word in words}


def support(basis_id, index):
    p = basis_element(basis_id, index)
    assert all(c == 1 for c in p.terms.values())
    return set(p.terms)


QKEY_0302 = ("0302", "1202", "2102", "0311", "1211", "2111", "2201", "1301", "3002", "3011", "3101",
             "0320", "1220", "2120", "2210", "1310", "3020", "3110", "3200")


def test_golden_polynomials():
    assert support("atom", (0, 1, 0, 3)) == _c("0103", "0112", "0202", "1102", "0121", "0211", "1111")
    assert support("monomial_slide", (0, 1, 0, 3)) == _c("0103", "1003", "0130", "1030", "1300")
    assert support("fundamental_slide", (0, 1, 0, 3)) == _c(
        "0103", "1003", "0130", "1030", "1300", "0112", "1012", "1102", "1120", "0121", "1021", "1201", "1210",
        "1111")
    assert support("particle", (0, 3, 0, 2)) == _c("0302", "1202", "2102", "0311", "1211", "2111")
    assert support("qkey", (0, 3, 0, 2)) == _c(*QKEY_0302)
    assert support("qkey1", (0, 3, 0, 2)) == _c(*QKEY_0302[:8])
    assert basis_element("particle", (2, 1)) == Polynomial.monomial((2, 1))


def test_key_from_decreasing_basement_fillings():
    assert "KSSF" in get_basis("key").methods
    expected = Polynomial.from_exponents(3, [(0, 2, 1), (1, 1, 1), (1, 2, 0), (2, 1, 0), (2, 0, 1)])
    assert basis_element("key", (0, 2, 1), method="KSSF") == expected
    assert basis_element("key", (0, 2, 1)) == expected
    assert basis_element("key", (1, 0, 1), method="KSSF") == Polynomial.from_exponents(3, [(1, 1, 0), (1, 0, 1)])


def test_key_is_the_sum_of_its_lswap_atoms():
    atoms = Polynomial.zero(4)
    for b in lswap_closure((0, 1, 0, 3)):
        atoms = atoms + basis_element("atom", b)
    assert len(lswap_closure((0, 1, 0, 3))) == 10
    for method in get_basis("key").methods:
        assert basis_element("key", (0, 1, 0, 3), method=method) == atoms


@pytest.mark.parametrize("basis_id", sorted(b for b in AVAILABLE_BASES if len(get_basis(b).methods) > 1
                                            and b not in ("schur", "quasi_schur")))
def test_methods_agree(basis_id):
    methods = get_basis(basis_id).methods
    for a in weak_compositions_upto(4, 3):
        reference = basis_element(basis_id, a, method=methods[0])
        for method in methods[1:]:
            assert basis_element(basis_id, a, method=method) == reference, (a, method)


@pytest.mark.slow
@pytest.mark.parametrize("basis_id", ["atom", "qkey", "key", "fundamental_slide", "monomial_slide", "particle"])
def test_methods_agree_acceptance_range(basis_id):
    methods = get_basis(basis_id).methods
    for a in weak_compositions_upto(6, 4):
        reference = basis_element(basis_id, a, method=methods[0])
        for method in methods[1:]:
            assert basis_element(basis_id, a, method=method) == reference, (a, method)


@pytest.mark.parametrize("basis_id", ["monomial", "monomial_slide", "fundamental_slide", "particle", "atom",
                                      "qkey", "qkey1", "key"])
def test_leading_term(basis_id):
    for a in weak_compositions_upto(4, 3):
        assert leading_term_violations(basis_element(basis_id, a), a) == [], a


def test_schur_is_symmetric():
    for lam in partitions_upto(4):
        for n in range(max(len(lam), 1), 4):
            s = basis_element("schur", lam, n)
            assert s.is_symmetric()
            assert s == basis_element("schur", lam, n, method="ssyt")
    assert sum(basis_element("schur", (2, 1), 3).terms.values()) == 8


def test_quasi_schur_is_quasisymmetric():
    for alpha in [(1,), (2,), (1, 1), (1, 2), (2, 1), (1, 3), (2, 1, 1)]:
        for n in range(len(alpha), 4):
            q = basis_element("quasi_schur", alpha, n)
            assert q.is_quasisymmetric(), (alpha, n)
            assert q == basis_element("quasi_schur", alpha, n, method="atoms")
    assert not basis_element("quasi_schur", (1, 2), 3).is_symmetric()


def test_index_errors():
    with pytest.raises(UnknownModelError):
        basis_element("schubert", (0, 1))
    with pytest.raises(UnknownModelError):
        basis_element("atom", (0, 1), method="divided_differences")
    with pytest.raises(CompositionError):
        basis_element("atom", (0, 1), n=3)
    with pytest.raises(CompositionError):
        basis_element("schur", (1, 2), 2)
    with pytest.raises(CompositionError):
        basis_element("quasi_schur", (1, 0), 2)


def test_basis_attributes_carry_timings():
    basis = get_basis("fundamental_slide", method="slides")
    basis.element((0, 2))
    attributes = basis.get_attributes()
    assert attributes["method"] == "slides"
    assert set(attributes["exec_times"]) == {"element", "total"}


def test_element_cache_is_bounded():
    basis_element("atom", (0, 1))
    info = _cached_element.cache_info()
    assert info.maxsize == 4096
    assert 0 < info.currsize <= info.maxsize


def test_stable_limits_of_bottom_row_vanish():
    report = stable_limit_probe("particle", (0, 1), 3)
    assert report["vanishes_from"] == 1
    assert report["as_expected"]
    assert stable_limit_probe("monomial", (1, 3), 3)["vanishes_from"] == 1


def test_stable_limits_of_top_row_stabilize():
    report = stable_limit_probe("fundamental_slide", (1, 3), 3)
    assert report["stable_from"] == 0
    assert report["as_expected"]
    assert all(t == Polynomial.monomial((1, 3)).to_json() for t in report["truncations"])
    assert stable_limit_probe("key", (0, 1), 3)["as_expected"]
