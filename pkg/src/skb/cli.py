"""
Command-line interface: basis elements, expansions, Schur products, tableau
enumeration, bijections, verification sweeps and stable-limit probes.
Results are written to stdout as JSON (or aligned text with --table), logs to stderr.
"""
import argparse
import json
import logging
import sys
from os import path

from .bases import AVAILABLE_BASES, basis_element, stable_limit_probe
from .bijections import duality_report
from .compositions import canonical_sorted, format_composition, parse_composition
from .evaluate import AVAILABLE_SUITES, DEFAULT_PARAMS, run_suites
from .expansions import POSET_BASES, expand_generic, expand_positive, is_relation
from .lr import AVAILABLE_RULES, LRSFilling, product_expansion
from .tableaux import AVAILABLE_MODELS, ReverseSSYT, enumerate_fillings
from .utils import CompositionError, SkbError, load_config, setup_logging

logger = logging.getLogger(__name__)

EXPANDABLE_BASES = POSET_BASES + ("qkey1",)


def _certificate_json(certificate):
    if isinstance(certificate, LRSFilling):
        return certificate.to_json()
    first, second = certificate
    return {"S": first.to_json(), "T": second.to_json()}


def _load_tableau(text):
    """A reverse SSYT from a JSON file path or an inline JSON document."""
    try:
        if path.isfile(text):
            with open(text, 'r') as fin:
                data = json.load(fin)
        else:
            data = json.loads(text)
        if isinstance(data, list):
            data = {"rows": data}
        tableau = ReverseSSYT.from_json(data)
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise CompositionError("Not a tableau document: {!r} ({})".format(text, e))
    assert tableau.is_valid(), "Not a reverse semistandard tableau: {}".format(tableau)
    return tableau


def cmd_basis(args):
    index = parse_composition(args.index)
    return basis_element(args.id, index, args.n, method=args.method).as_dict()


def cmd_expand(args):
    index = parse_composition(args.index)
    if args.generic or not is_relation(args.source, args.target):
        logger.debug("%s -> %s by triangular elimination", args.source, args.target)
        expansion = expand_generic(args.source, args.target, index)
    else:
        expansion = expand_positive(args.source, args.target, index)
    return expansion.as_dict()


def cmd_product(args):
    index = parse_composition(args.index)
    lam = parse_composition(args.lam)
    if not args.witnesses:
        return product_expansion(args.id, index, lam, args.n).as_dict()
    expansion, certificates = product_expansion(args.id, index, lam, args.n, witnesses=True)
    return {
        "coeffs": expansion.as_dict(),
        "witnesses": {format_composition(b): [_certificate_json(c) for c in certificates[b]]
                      for b in canonical_sorted(certificates)}
    }


def cmd_enumerate(args):
    return [f.to_json() for f in enumerate_fillings(args.model, parse_composition(args.index))]


def cmd_biject(args):
    return duality_report(_load_tableau(args.input), args.n)


def cmd_stable(args):
    return stable_limit_probe(args.id, parse_composition(args.index), args.m)


def cmd_verify(args):
    params = dict(DEFAULT_PARAMS)
    suites = list(AVAILABLE_SUITES)
    if args.config:
        cfg = load_config(args.config)
        suites = cfg.pop("suites", suites)
        params.update(cfg)
    for key in ("max_weight", "max_len", "workers"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    if args.suites:
        suites = [name.strip() for name in args.suites.split(",")]

    assert params["max_weight"] >= 0
    assert params["max_len"] >= 1
    assert params["workers"] >= 1
    assert all(name in AVAILABLE_SUITES for name in suites), "Unknown suite in {}".format(suites)
    logger.debug("Config successfully loaded")
    try:
        return run_suites(suites, verbose=args.verbose, **params)
    except Exception as e:
        logger.error("Exception raised while running suites %s:", suites)
        logger.error(str(e))
        return {"suites": {}, "error": str(e), "ok": False}


COMMANDS = {
    "basis": cmd_basis,
    "expand": cmd_expand,
    "product": cmd_product,
    "enumerate": cmd_enumerate,
    "biject": cmd_biject,
    "verify": cmd_verify,
    "stable": cmd_stable,
}


def _table(result):
    if isinstance(result, dict):
        width = max((len(str(key)) for key in result), default=0)
        return "\n".join("{}  {}".format(str(key).ljust(width), value if not isinstance(value, (dict, list))
                                         else json.dumps(value)) for key, value in result.items())
    if isinstance(result, list):
        return "\n".join(json.dumps(item) for item in result)
    return str(result)


def build_parser():
    parser = argparse.ArgumentParser(prog="skb", description="Polynomial bases indexed by weak compositions.")
    parser.add_argument("--verbose", metavar="verbose", type=int, default=1,
                        help="Verbosity, higher value = more messages.")
    parser.add_argument("--table", action="store_true", help="Print aligned text instead of JSON.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    basis = sub.add_parser("basis", help="Monomial expansion of a basis element.")
    basis.add_argument("--id", required=True, choices=sorted(AVAILABLE_BASES))
    basis.add_argument("--index", required=True, help="Comma-separated index, e.g. 0,1,0,3")
    basis.add_argument("--n", type=int, help="Number of variables, defaults to the index length.")
    basis.add_argument("--method", help="Combinatorial description to compute with.")

    expand = sub.add_parser("expand", help="Expansion of one basis element in another basis.")
    expand.add_argument("--from", dest="source", required=True, choices=EXPANDABLE_BASES)
    expand.add_argument("--to", dest="target", required=True, choices=EXPANDABLE_BASES)
    expand.add_argument("--index", required=True)
    expand.add_argument("--generic", action="store_true",
                        help="Use triangular elimination even along a poset relation.")

    product = sub.add_parser("product", help="Expansion of f_a * s_lambda in the basis of f.")
    product.add_argument("--id", required=True, choices=sorted(AVAILABLE_RULES))
    product.add_argument("--index", required=True)
    product.add_argument("--lambda", dest="lam", required=True, help="Comma-separated partition.")
    product.add_argument("--n", type=int)
    product.add_argument("--witnesses", action="store_true", help="Also print the counted tableaux.")

    enumerate_ = sub.add_parser("enumerate", help="Fillings of a skyline diagram valid for a model.")
    enumerate_.add_argument("--model", required=True, choices=sorted(AVAILABLE_MODELS))
    enumerate_.add_argument("--index", required=True)

    biject = sub.add_parser("biject", help="Row-filling images and run decompositions of a reverse SSYT.")
    biject.add_argument("--input", required=True, help="Path to, or inline, JSON {\"rows\": [[...], ...]}")
    biject.add_argument("--n", type=int, help="Number of rows of the images, defaults to the largest entry.")

    verify = sub.add_parser("verify", help="Run the verification suites.")
    verify.add_argument("--config", metavar="config", type=str, nargs="?", help="Path to a .json config.")
    verify.add_argument("--max-weight", dest="max_weight", type=int)
    verify.add_argument("--max-len", dest="max_len", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--suites", help="Comma-separated subset of {}".format(", ".join(AVAILABLE_SUITES)))

    stable = sub.add_parser("stable", help="Truncations of f_{0^m x a} for m up to --m.")
    stable.add_argument("--id", required=True, choices=sorted(AVAILABLE_BASES))
    stable.add_argument("--index", required=True)
    stable.add_argument("--m", type=int, default=4)
    return parser


def main(args):
    error_code = 0
    setup_logging(args.verbose)
    result = None
    try:
        result = COMMANDS[args.command](args)
        if args.command == "verify" and not result["ok"]:
            error_code = 1
    except (SkbError, AssertionError, json.JSONDecodeError) as e:
        logger.error("Invalid request: %s", e)
        return 2
    except Exception as e:
        logger.error("Exception raised while executing %s:", args.command)
        logger.error(str(e))
        error_code = 1
    finally:
        if result is not None:
            sys.stdout.write((_table(result) if args.table else json.dumps(result, indent=2)) + "\n")
    return error_code


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code or 0
    return main(args)


if __name__ == '__main__':
    sys.exit(run())
