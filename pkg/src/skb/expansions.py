"""
Positive change-of-basis formulas along the positivity poset, generic signed
expansions, and the sweep that checks the poset is exactly the positivity relation.
"""
import logging
import multiprocessing as mp
from collections import Counter
from itertools import permutations, repeat

import networkx as nx
import numpy as np
from tqdm import tqdm

from .bases import basis_element, get_basis
from .compositions import (canonical_sorted, compositions, flat, flat_dominating, lswap_closure,
                           qlswap, refines, slides, strongly_dominates, weak_compositions_upto)
from .polynomial import BasisExpansion, expand_in_basis
from .tableaux.destandardize import is_particle_highest
from .tableaux.models import enumerate_fillings
from .utils import NotInPosetError, format_int_list, timeit

logger = logging.getLogger(__name__)

POSET_BASES = ("key", "qkey", "fundamental_slide", "atom", "monomial_slide", "particle", "monomial")

HASSE_EDGES = [
    ("key", "qkey"),
    ("qkey", "fundamental_slide"),
    ("qkey", "atom"),
    ("fundamental_slide", "monomial_slide"),
    ("fundamental_slide", "particle"),
    ("monomial_slide", "monomial"),
    ("atom", "particle"),
    ("particle", "monomial"),
]


def build_poset():
    poset = nx.DiGraph()
    poset.add_nodes_from(POSET_BASES)
    poset.add_edges_from(HASSE_EDGES)
    return poset


POSET = build_poset()


def _canonical(basis_id):
    # the column quasi-key basis is the atom basis
    return "atom" if basis_id == "qkey1" else basis_id


def is_relation(source: str, target: str) -> bool:
    """True when source >= target in the poset."""
    source, target = _canonical(source), _canonical(target)
    return source == target or target in nx.descendants(POSET, source)


def incomparable_pairs():
    return sorted(tuple(sorted(pair)) for pair in
                  {frozenset((s, t)) for s in POSET_BASES for t in POSET_BASES
                   if s != t and not is_relation(s, t) and not is_relation(t, s)})


def _ones(indices):
    return Counter(tuple(b) for b in indices)


def _qkey_to_fundamental(a):
    return Counter(f.weight() for f in enumerate_fillings("QqKT", a))


def _fundamental_to_monomial_slide(a):
    alpha = flat(a)
    return _ones(b for b in compositions(sum(a), len(a))
                 if refines(flat(b), alpha) and strongly_dominates(b, a))


def _atom_to_particle(a):
    return Counter(f.weight() for f in enumerate_fillings("ASSF", a) if is_particle_highest(f))


POSITIVE_RULES = {
    ("key", "qkey"): lambda a: _ones(qlswap(a)),
    ("key", "atom"): lambda a: _ones(lswap_closure(a)),
    ("qkey", "atom"): lambda a: _ones(flat_dominating(a)),
    ("qkey", "qkey1"): lambda a: _ones(flat_dominating(a)),
    ("qkey", "fundamental_slide"): _qkey_to_fundamental,
    ("fundamental_slide", "monomial_slide"): _fundamental_to_monomial_slide,
    ("fundamental_slide", "particle"): lambda a: _ones(flat_dominating(a)),
    ("atom", "particle"): _atom_to_particle,
    ("monomial_slide", "monomial"): lambda a: _ones(flat_dominating(a)),
    ("particle", "monomial"): lambda a: _ones(slides(a, fixed=True)),
    ("atom", "qkey1"): lambda a: _ones([a]),
    ("qkey1", "atom"): lambda a: _ones([a]),
}


def route(source: str, target: str):
    """Edges to compose for source -> target: a direct rule if there is one, else a shortest Hasse path."""
    if (source, target) in POSITIVE_RULES:
        return [(source, target)]
    if not is_relation(source, target):
        raise NotInPosetError("{} does not expand positively in {}; use expand_generic".format(source, target))
    path = nx.shortest_path(POSET, _canonical(source), _canonical(target))
    edges = list(zip(path, path[1:]))
    if source == "qkey1":
        edges.insert(0, ("qkey1", "atom"))
    if target == "qkey1":
        edges.append(("atom", "qkey1"))
    return edges


def _apply(edges, a):
    coeffs = Counter({tuple(a): 1})
    for edge in edges:
        step = Counter()
        for index, coeff in coeffs.items():
            for b, c in POSITIVE_RULES[edge](index).items():
                step[b] += coeff * c
        coeffs = step
    return coeffs


def expand_positive(source: str, target: str, a, path=None) -> BasisExpansion:
    """
    Positive expansion of f_a (basis `source`) in basis `target`.

    :param path: optional sequence of basis ids from source to target along Hasse edges
    :raises NotInPosetError: when source is not above target
    """
    a = tuple(a)
    if source == target:
        return BasisExpansion(target, {a: 1})
    if path is not None:
        edges = list(zip(path, path[1:]))
        if path[0] != source or path[-1] != target or any(edge not in POSITIVE_RULES for edge in edges):
            raise NotInPosetError("{} is not a path of positive rules from {} to {}".format(path, source, target))
    else:
        edges = route(source, target)
    return BasisExpansion(target, _apply(edges, a))


def expand_generic(source: str, target: str, a, n: int = None) -> BasisExpansion:
    """Signed expansion by triangular elimination against the target basis."""
    a = tuple(a)
    n = len(a) if n is None else n
    return expand_in_basis(basis_element(source, a, n), get_basis(target).generator(n), target)


def _relation_kind(source, target):
    if is_relation(source, target):
        return "positive"
    if is_relation(target, source):
        return "reverse"
    return "incomparable"


def _check_index(a, pairs):
    """Every check for one index; runs in worker processes."""
    results = []
    for source, target in pairs:
        kind = _relation_kind(source, target)
        generic = expand_generic(source, target, a)
        entry = {"source": source, "target": target, "index": format_int_list(a), "kind": kind,
                 "coefficients": generic.coeffs, "failure": None}
        if kind == "positive":
            positive = expand_positive(source, target, a)
            if not positive.is_positive():
                entry["failure"] = "non-positive coefficient"
            elif positive.coeffs != generic.coeffs:
                entry["failure"] = "positive rule disagrees with elimination"
            elif positive.resum(get_basis(target).generator(len(a)), len(a)) != basis_element(source, a):
                entry["failure"] = "inexact re-summation"
        results.append(entry)
    return results


class PosetVerifier:

    def __init__(self, max_weight: int, max_len: int, workers: int = 1, verbose: int = 1):
        self.max_weight = max_weight
        self.max_len = max_len
        self.workers = workers
        self.verbose = verbose
        self.n_indices = None
        self.times = {}

    def get_attributes(self):
        self.times["total"] = sum(v for k, v in self.times.items() if k != "total")
        return {
            "max_weight": self.max_weight,
            "max_len": self.max_len,
            "workers": self.workers,
            "n_indices": self.n_indices,
            "exec_times": self.times
        }

    @timeit(var_name="expansions")
    def _expand_all(self, indices, pairs):
        if self.workers > 1:
            with mp.Pool(self.workers) as pool:
                res = pool.starmap_async(func=_check_index, iterable=zip(indices, repeat(pairs)))
                per_index = res.get()
        else:
            per_index = [_check_index(a, pairs) for a in tqdm(indices, disable=self.verbose < 1)]
        return [entry for entries in per_index for entry in entries]

    @timeit(var_name="transition_matrices")
    def _triangularity(self, entries, indices):
        """Transition matrices per (pair, length, degree) block must be unitriangular in canonical order."""
        blocks = {}
        for entry in entries:
            a = tuple(int(part) for part in entry["index"].split(","))
            blocks.setdefault((entry["source"], entry["target"], len(a), sum(a)), []).append((a, entry))
        failures = []
        for (source, target, length, degree), members in sorted(blocks.items()):
            order = canonical_sorted(compositions(degree, length))
            position = {b: k for k, b in enumerate(order)}
            matrix = np.zeros((len(order), len(order)), dtype=np.int64)
            for a, entry in members:
                for b, c in entry["coefficients"].items():
                    matrix[position[a], position[b]] = c
            rows = [position[a] for a, _ in members]
            sub = matrix[rows]
            below = np.tril(matrix, -1)[rows]
            if np.any(below != 0) or np.any(sub[np.arange(len(rows)), rows] != 1):
                failures.append({"source": source, "target": target, "length": length, "degree": degree})
        return failures

    def run(self, pairs=None):
        if pairs is None:
            pairs = [(s, t) for s, t in permutations(POSET_BASES, 2)]
        indices = list(weak_compositions_upto(self.max_weight, self.max_len))
        self.n_indices = len(indices)
        logger.info("Checking %d ordered pairs on %d indices", len(pairs), len(indices))
        entries = self._expand_all(indices, pairs)

        report_pairs = []
        for source, target in pairs:
            mine = [e for e in entries if e["source"] == source and e["target"] == target]
            kind = _relation_kind(source, target)
            failures = [{"index": e["index"], "failure": e["failure"]} for e in mine if e["failure"]]
            witness = None
            if kind != "positive":
                negatives = [e for e in mine if any(c < 0 for c in e["coefficients"].values())]
                if negatives:
                    witness = {"index": negatives[0]["index"],
                               "negative_witness": _string_keys(negatives[0]["coefficients"])}
            if failures:
                status = "failed"
            elif kind != "positive" and witness is None:
                status = "inconclusive"
            else:
                status = "ok"
            report_pairs.append({"source": source, "target": target, "kind": kind, "n_checked": len(mine),
                                 "status": status, "failures": failures, "witness": witness})
            if status != "ok":
                logger.warning("%s -> %s: %s", source, target, status)

        triangularity = self._triangularity(entries, indices)
        return {
            **self.get_attributes(),
            "pairs": report_pairs,
            "triangularity_failures": triangularity,
            "ok": not triangularity and all(p["status"] != "failed" for p in report_pairs),
        }


def _string_keys(coeffs):
    return {format_int_list(b): coeffs[b] for b in canonical_sorted(coeffs)}


def verify_poset(max_weight: int, max_len: int, workers: int = 1, verbose: int = 1):
    """
    Positivity of every poset relation and a negative witness for every other
    ordered pair, over all indices within the bounds.
    """
    return PosetVerifier(max_weight, max_len, workers=workers, verbose=verbose).run()
