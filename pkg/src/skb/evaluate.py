"""
Verification pipelines. Each suite sweeps a bounded range of indices, compares the
combinatorial rules against brute-force polynomial arithmetic and returns a JSON
report with an "ok" flag.
"""
import logging
from collections import Counter
from importlib import import_module

from tqdm import tqdm

from .bases import AVAILABLE_BASES, basis_element, get_basis, stable_limit_probe
from .bijections import column_fill, left_row_fill, phi, right_row_fill
from .compositions import compositions, partitions_upto, weak_compositions_upto
from .expansions import verify_poset
from .lr import product_expansion, product_expansion_generic
from .polynomial import BasisExpansion
from .tableaux import (dst, dst_q, enumerate_fillings, enumerate_revssyt, is_particle_highest,
                       is_quasi_yamanouchi, is_valid)
from .utils import format_int_list, timeit

logger = logging.getLogger(__name__)

DEFAULT_PARAMS = {
    "max_weight": 4,
    "max_len": 3,
    "lr_max_weight": 3,
    "lr_max_len": 3,
    "lr_max_lambda": 2,
    "model_max_weight": 4,
    "model_max_len": 3,
    "bijection_max_size": 4,
    "bijection_max_entry": 3,
    "stable_indices": [[0, 1], [1, 3], [0, 2, 1]],
    "stable_m_max": 3,
    "workers": 1,
}

LR_RULE_BASES = ("atom", "qkey", "particle")
LR_GENERIC_BASES = ("monomial", "monomial_slide", "fundamental_slide")
TOP_ROW = ("qkey", "fundamental_slide", "monomial_slide", "key")
BOTTOM_ROW = ("atom", "particle", "monomial")


class Suite:
    """Base class of the verification suites; subclasses implement `_run`."""
    name = None

    def __init__(self, verbose=1, **params):
        self.verbose = verbose
        self.params = {key: params.get(key, value) for key, value in DEFAULT_PARAMS.items()}
        self.n_checks = 0
        self.times = {}

    def get_attributes(self):
        self.times["total"] = sum(v for k, v in self.times.items() if k != "total")
        return {
            "suite": self.name,
            "n_checks": self.n_checks,
            "exec_times": self.times
        }

    def _iter(self, iterable):
        return tqdm(list(iterable), desc=self.name, disable=self.verbose < 1)

    def _run(self):
        raise NotImplementedError

    @timeit(var_name="run")
    def _timed_run(self):
        return self._run()

    def run(self):
        logger.info("Running %s suite...", self.name)
        failures = self._timed_run()
        if failures:
            logger.warning("%s suite: %d failures", self.name, len(failures))
        else:
            logger.info("%s suite passed %d checks", self.name, self.n_checks)
        return {**self.get_attributes(), "failures": failures, "ok": not failures}


class PosetSuite(Suite):
    """Positivity of every poset relation, negative witnesses for every other pair."""
    name = "poset"

    def run(self):
        report = verify_poset(self.params["max_weight"], self.params["max_len"],
                              workers=self.params["workers"], verbose=self.verbose)
        self.n_checks = sum(p["n_checked"] for p in report["pairs"])
        self.times.update(report["exec_times"])
        return {**report, **self.get_attributes()}


class LittlewoodRichardsonSuite(Suite):
    """Product rules against multiply-then-eliminate."""
    name = "lr"

    def _run(self):
        failures = []
        cases = [(a, lam) for a in weak_compositions_upto(self.params["lr_max_weight"], self.params["lr_max_len"])
                 for lam in partitions_upto(self.params["lr_max_lambda"], min_size=1) if len(lam) <= len(a)]
        for a, lam in self._iter(cases):
            for basis_id in LR_RULE_BASES:
                self.n_checks += 1
                rule = product_expansion(basis_id, a, lam)
                oracle = product_expansion_generic(basis_id, a, lam)
                if not rule.is_positive() or rule != oracle:
                    failures.append({"basis": basis_id, "index": format_int_list(a),
                                     "lambda": format_int_list(lam), "rule": rule.as_dict(),
                                     "oracle": oracle.as_dict()})
            for basis_id in LR_GENERIC_BASES:
                self.n_checks += 1
                expansion = product_expansion_generic(basis_id, a, lam)
                if not expansion.is_positive():
                    failures.append({"basis": basis_id, "index": format_int_list(a),
                                     "lambda": format_int_list(lam),
                                     "negative": BasisExpansion(basis_id, expansion.negative_part()).as_dict()})
        return failures


def _indices_for(basis_id, max_weight, max_len):
    """(index, n) pairs a basis accepts within the bounds."""
    if basis_id == "schur":
        return [(lam, n) for lam in partitions_upto(max_weight) for n in range(max(len(lam), 1), max_len + 1)]
    if basis_id == "quasi_schur":
        return [(a, n) for a in weak_compositions_upto(max_weight, max_len, min_len=0) if all(a)
                for n in range(max(len(a), 1), max_len + 1)]
    return [(a, len(a)) for a in weak_compositions_upto(max_weight, max_len)]


class ModelAgreementSuite(Suite):
    """Every description of a basis gives the same polynomial; LSSF is ASSF intersected with FSSF."""
    name = "models"

    def _run(self):
        failures = []
        max_weight, max_len = self.params["model_max_weight"], self.params["model_max_len"]
        for basis_id in self._iter(sorted(AVAILABLE_BASES)):
            methods = get_basis(basis_id).methods
            if len(methods) < 2:
                continue
            for index, n in _indices_for(basis_id, max_weight, max_len):
                self.n_checks += 1
                reference = basis_element(basis_id, index, n, method=methods[0])
                for method in methods[1:]:
                    if basis_element(basis_id, index, n, method=method) != reference:
                        failures.append({"basis": basis_id, "index": format_int_list(index), "n": n,
                                         "methods": [methods[0], method]})
        for a in weak_compositions_upto(max_weight, max_len):
            self.n_checks += 1
            particle = set(enumerate_fillings("LSSF", a))
            both = set(enumerate_fillings("ASSF", a)) & set(enumerate_fillings("FSSF", a))
            if particle != both:
                failures.append({"index": format_int_list(a), "models": ["LSSF", "ASSF & FSSF"],
                                 "difference": sorted(str(f) for f in particle ^ both)})
        return failures


class StableLimitSuite(Suite):
    """Top-row truncations stabilize, bottom-row truncations vanish."""
    name = "stable"

    def _run(self):
        failures = []
        for a in self._iter(tuple(a) for a in self.params["stable_indices"]):
            for basis_id in TOP_ROW + BOTTOM_ROW:
                self.n_checks += 1
                report = stable_limit_probe(basis_id, a, self.params["stable_m_max"])
                if not report["as_expected"]:
                    failures.append(report)
        return failures


def _same_family(images):
    """True when no two distinct objects share all column sets."""
    seen = {}
    for image in images:
        if seen.setdefault(image.column_sets(), image) != image:
            return False
    return True


class BijectionSuite(Suite):
    """Reverse SSYT, atom fillings and column quasi-key tableaux in bijection through column sets."""
    name = "bijections"

    def _check(self, v, n):
        problems = []
        s, t = column_fill(v, n), right_row_fill(v, n)
        if not is_valid("ASSF", s.shape, s):
            problems.append("column_fill is not an atom filling")
        if not is_valid("qKT1", t.shape, t):
            problems.append("right_row_fill is not a column quasi-key tableau")
        if not s.column_sets() == t.column_sets() == v.column_sets():
            problems.append("column sets not preserved")
        if left_row_fill(v, n) != s:
            problems.append("left_row_fill differs from column_fill")
        if phi(t) != v:
            problems.append("phi does not invert right_row_fill")
        if right_row_fill(phi(t), n) != t:
            problems.append("right_row_fill does not invert phi")
        if not is_particle_highest(v) == is_particle_highest(s) == is_particle_highest(t):
            problems.append("particle-highest not preserved")
        if not is_quasi_yamanouchi(v) == is_quasi_yamanouchi(s) == is_quasi_yamanouchi(t):
            problems.append("quasi-Yamanouchi not preserved")
        for name, destandardize in (("dst", dst), ("dst_q", dst_q)):
            image = destandardize(v)
            if column_fill(image, n) != destandardize(s) or right_row_fill(image, n) != destandardize(t):
                problems.append("{} does not commute with the bijections".format(name))
        return problems

    def _run(self):
        failures = []
        n = self.params["bijection_max_entry"]
        tableaux = [v for lam in partitions_upto(self.params["bijection_max_size"], min_size=1)
                    for v in enumerate_revssyt(lam, n)]
        for v in self._iter(tableaux):
            self.n_checks += 1
            problems = self._check(v, n)
            if problems:
                failures.append({"tableau": v.to_json(), "problems": problems})

        families = {"revSSYT": tableaux}
        for model_id in ("ASSF", "qKT1"):
            families[model_id] = [f for total in range(self.params["bijection_max_size"] + 1)
                                  for a in compositions(total, n) for f in enumerate_fillings(model_id, a)]
        for family, members in families.items():
            self.n_checks += 1
            if not _same_family(members):
                failures.append({"family": family, "problems": ["two members share their column sets"]})
        return failures


AVAILABLE_SUITES = {
    "poset": ("skb.evaluate", "PosetSuite"),
    "lr": ("skb.evaluate", "LittlewoodRichardsonSuite"),
    "models": ("skb.evaluate", "ModelAgreementSuite"),
    "stable": ("skb.evaluate", "StableLimitSuite"),
    "bijections": ("skb.evaluate", "BijectionSuite"),
}


def instantiate_suite(name, params, verbose=1):
    suite_module = AVAILABLE_SUITES[name]
    suite_class = getattr(import_module(suite_module[0]), suite_module[1])
    return suite_class(verbose=verbose, **params)


def run_suites(suites=None, verbose=1, **params):
    """
    Runs the named suites (all of them by default) with shared parameters.

    :return: {"suites": {name: report}, "ok": bool}
    """
    suites = list(AVAILABLE_SUITES) if suites is None else list(suites)
    reports = {}
    for name in suites:
        reports[name] = instantiate_suite(name, params, verbose=verbose).run()
    counts = Counter(report["ok"] for report in reports.values())
    logger.info("%d suites passed, %d failed", counts[True], counts[False])
    return {"suites": reports, "ok": all(report["ok"] for report in reports.values())}
