import json
import logging
import time
from os import path


class SkbError(Exception):
    """Base class for every error raised by the library."""


class CompositionError(SkbError, ValueError):
    """Malformed or inconsistent composition, partition or permutation."""


class UnknownModelError(SkbError, KeyError):
    """Unknown tableau model, basis id or method id."""


class BasisContractError(SkbError):
    """A basis generator does not have x^a as unique dominance-minimal term."""


class NotInPosetError(SkbError):
    """A positive expansion was requested along a pair that is not a poset relation."""


class SwapError(SkbError):
    """A row swap targets an occupied row or leaves the diagram."""


def timeit(var_name):
    def wrapper(func):
        def timed_f(self, *args, **kwargs):
            start = time.time()
            res = func(self, *args, **kwargs)
            end = time.time()
            self.times[var_name] = end - start
            return res
        return timed_f
    return wrapper


def load_config(cfg_path):
    """
    Loads a .json file as a dict object
    Arguments:
         cfg_path (str): Path to the .json file
    Returns:
        dict: The loaded config, as a dict
    Raises:
        AssertionError: Raised when cfg_path does not exist or is not a path to a .json file
    """
    assert path.exists(cfg_path)
    assert path.isfile(cfg_path)
    assert cfg_path.split('.')[-1] == "json"
    with open(cfg_path, 'r') as fin:
        config = json.load(fin)
    assert isinstance(config, dict)
    return config


def setup_logging(verbose=1):
    if verbose <= 0:
        log_level = logging.ERROR
    elif verbose == 1:
        log_level = logging.INFO
    else:
        log_level = logging.DEBUG
    logging.basicConfig(format='%(levelname)s:\t%(message)s', level=logging.DEBUG)
    logger = logging.getLogger("skb")
    logger.setLevel(log_level)
    return logger


def parse_int_list(text):
    """Parses "0,1,0,3" into (0, 1, 0, 3). Empty text gives ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CompositionError("Not a comma-separated list of integers: {!r}".format(text))
    if any(v < 0 for v in values):
        raise CompositionError("Negative part in {!r}".format(text))
    return values


def format_int_list(values):
    return ",".join(str(v) for v in values)
