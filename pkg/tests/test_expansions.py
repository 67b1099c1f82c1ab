import networkx as nx
import pytest

from skb.bases import basis_element, get_basis
from skb.compositions import lswap_closure, weak_compositions_upto
from skb.expansions import (POSET, POSET_BASES, expand_generic, expand_positive, incomparable_pairs, is_relation,
                            route, verify_poset)
from skb.polynomial import BasisExpansion
from skb.utils import NotInPosetError


def _ones(*words):
    return {tuple(int(ch) for ch in word): 1 for word in words}


@pytest.mark.parametrize("source, target, index, expected", [
    ("qkey", "atom", (0, 3, 0, 2), _ones("0302", "3002", "0320", "3020", "3200")),
    ("key", "atom", (0, 1, 0, 3), {b: 1 for b in lswap_closure((0, 1, 0, 3))}),
    ("key", "qkey", (0, 1, 0, 3), _ones("0103", "0301")),
    ("qkey", "fundamental_slide", (0, 3, 0, 2), _ones("0302", "2201", "1301")),
    ("fundamental_slide", "monomial_slide", (0, 1, 0, 3), _ones("0103", "0112", "0121", "1111")),
    ("fundamental_slide", "particle", (0, 3, 0, 2), _ones("0302", "3002", "0320", "3020", "3200")),
    ("atom", "particle", (0, 1, 0, 3), _ones("0103", "0202")),
])
def test_positive_expansions(source, target, index, expected):
    expansion = expand_positive(source, target, index)
    assert expansion.coeffs == expected
    assert expansion == expand_generic(source, target, index)
    assert expansion.resum(get_basis(target).generator(len(index)), len(index)) == basis_element(source, index)


@pytest.mark.parametrize("source, target, index, expected", [
    ("atom", "monomial_slide", (0, 1), {(0, 1): 1, (1, 0): -1}),
    ("fundamental_slide", "atom", (1, 3), {(1, 3): 1, (2, 2): -1}),
    ("monomial_slide", "atom", (0, 2), {(0, 2): 1, (2, 0): 1, (1, 1): -1}),
    ("monomial_slide", "particle", (0, 2), {(0, 2): 1, (2, 0): 1, (1, 1): -1}),
    ("particle", "particle", (0, 3, 0, 2), {(0, 3, 0, 2): 1}),
])
def test_generic_expansions(source, target, index, expected):
    assert expand_generic(source, target, index).coeffs == expected


def test_poset_structure():
    assert nx.is_directed_acyclic_graph(POSET)
    assert is_relation("key", "monomial")
    assert is_relation("qkey1", "particle")
    assert not is_relation("particle", "atom")
    assert incomparable_pairs() == [("atom", "fundamental_slide"), ("atom", "monomial_slide"),
                                    ("monomial_slide", "particle")]
    with pytest.raises(NotInPosetError):
        route("atom", "monomial_slide")
    with pytest.raises(NotInPosetError):
        expand_positive("particle", "atom", (0, 1))
    with pytest.raises(NotInPosetError):
        expand_positive("qkey", "particle", (0, 1), path=["qkey", "particle"])


def test_qkey1_routes_through_atoms():
    assert route("qkey1", "particle") == [("qkey1", "atom"), ("atom", "particle")]
    assert expand_positive("qkey", "qkey1", (0, 3, 0, 2)) == BasisExpansion(
        "qkey1", _ones("0302", "3002", "0320", "3020", "3200"))


@pytest.mark.parametrize("source, target", [("key", "particle"), ("key", "monomial"), ("qkey", "monomial"),
                                            ("fundamental_slide", "monomial")])
def test_every_poset_path_gives_the_same_expansion(source, target):
    paths = list(nx.all_simple_paths(POSET, source, target))
    assert len(paths) > 1
    for a in weak_compositions_upto(3, 3):
        expansions = [expand_positive(source, target, a, path=path) for path in paths]
        assert all(e == expansions[0] for e in expansions), a
        assert expansions[0] == expand_generic(source, target, a)


def test_key_to_qkey_then_atom_is_key_to_atom():
    for a in weak_compositions_upto(4, 3):
        composed = expand_positive("key", "atom", a, path=["key", "qkey", "atom"])
        assert composed == expand_positive("key", "atom", a), a


def test_verify_poset_on_single_variable():
    report = verify_poset(1, 1, verbose=0)
    assert report["ok"]
    statuses = {(p["source"], p["target"]): p["status"] for p in report["pairs"]}
    assert len(statuses) == len(POSET_BASES) * (len(POSET_BASES) - 1)
    assert statuses[("atom", "fundamental_slide")] == "inconclusive"
    assert statuses[("key", "monomial")] == "ok"
    assert report["triangularity_failures"] == []


def test_verify_poset_finds_witnesses_for_incomparable_pairs():
    report = verify_poset(4, 2, verbose=0)
    assert report["ok"]
    for pair in report["pairs"]:
        if pair["kind"] == "incomparable":
            assert pair["status"] == "ok", pair
            assert any(c < 0 for c in pair["witness"]["negative_witness"].values())
        if pair["kind"] == "positive":
            assert pair["failures"] == []
        if pair["kind"] == "reverse" and pair["status"] == "ok":
            assert any(c < 0 for c in pair["witness"]["negative_witness"].values())
    assert any(p["kind"] == "reverse" and p["witness"] for p in report["pairs"])
    assert set(report["exec_times"]) == {"expansions", "transition_matrices", "total"}


@pytest.mark.slow
def test_verify_poset_acceptance_range():
    report = verify_poset(4, 3, workers=2, verbose=0)
    assert report["ok"]
    assert all(p["status"] == "ok" for p in report["pairs"] if p["kind"] != "reverse")
