"""
Weak compositions, partitions and the order/rewriting structure on them.

Every composition-like value is a plain tuple of ints:
    WeakComposition   (0, 1, 0, 3)   parts >= 0, the length is the number of variables
    StrongComposition (1, 3)         parts >= 1
    Partition         (3, 1)         parts >= 1, weakly decreasing
    Permutation       (3, 2, 4, 1)   one-line notation on 1..n
"""
import logging
from collections import deque
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Set, Tuple

import networkx as nx

from .utils import CompositionError, format_int_list, parse_int_list

logger = logging.getLogger(__name__)

WeakComposition = Tuple[int, ...]
StrongComposition = Tuple[int, ...]
Partition = Tuple[int, ...]
Permutation = Tuple[int, ...]


def _check_same_length(b, a):
    if len(b) != len(a):
        raise CompositionError("Length mismatch: {} vs {}".format(b, a))


def parse_composition(text: str) -> WeakComposition:
    """"0,1,0,3" -> (0, 1, 0, 3)"""
    return parse_int_list(text)


def format_composition(a: WeakComposition) -> str:
    return format_int_list(a)


def flat(a: WeakComposition) -> StrongComposition:
    return tuple(part for part in a if part)


def sort_desc(a: WeakComposition) -> Partition:
    return tuple(sorted(flat(a), reverse=True))


def prefix_sums(a: WeakComposition) -> Tuple[int, ...]:
    sums = []
    total = 0
    for part in a:
        total += part
        sums.append(total)
    return tuple(sums)


def prefix_key(a: WeakComposition):
    """
    Canonical total order on compositions.

    On compositions of equal length and equal sum this is the lexicographic order
    on prefix-sum vectors, a linear extension of dominance. Length and sum come
    first so that mixed collections sort deterministically too.
    """
    return len(a), sum(a), prefix_sums(a)


def canonical_sorted(comps):
    return sorted(comps, key=prefix_key)


def dominates(b: WeakComposition, a: WeakComposition) -> bool:
    _check_same_length(b, a)
    return all(sb >= sa for sb, sa in zip(prefix_sums(b), prefix_sums(a)))


def flat_class(alpha: StrongComposition, n: int) -> Iterator[WeakComposition]:
    """All weak compositions of length n whose flattening is alpha."""
    for positions in combinations(range(n), len(alpha)):
        comp = [0] * n
        for pos, part in zip(positions, alpha):
            comp[pos] = part
        yield tuple(comp)


def flat_dominating(a: WeakComposition) -> Iterator[WeakComposition]:
    """b >= a with flat(b) = flat(a); the index set of several expansions."""
    for b in flat_class(flat(a), len(a)):
        if dominates(b, a):
            yield b


def strongly_dominates(b: WeakComposition, a: WeakComposition) -> bool:
    _check_same_length(b, a)
    if not dominates(b, a):
        return False
    return all(dominates(c, b) for c in flat_class(flat(b), len(a)) if dominates(c, a))


def refines(beta: StrongComposition, alpha: StrongComposition) -> bool:
    if sum(beta) != sum(alpha):
        return False
    k = 0
    block = 0
    for part in beta:
        block += part
        if block == alpha[k]:
            k += 1
            block = 0
        elif block > alpha[k]:
            return False
    return k == len(alpha)


def lswap_closure(a: WeakComposition) -> Set[WeakComposition]:
    """Closure of a under left swaps, i.e. exchanging parts a_i <= a_j with i < j."""
    a = tuple(a)
    seen = {a}
    queue = deque([a])
    while queue:
        current = queue.popleft()
        for i, j in combinations(range(len(current)), 2):
            if current[i] < current[j]:
                swapped = list(current)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                swapped = tuple(swapped)
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    return seen


def qlswap(a: WeakComposition) -> Set[WeakComposition]:
    """
    Elements b of lswap(a) that are dominated by every c in lswap(a) with flat(c) = flat(b).
    """
    closure = lswap_closure(a)
    by_flat = {}
    for b in closure:
        by_flat.setdefault(flat(b), []).append(b)
    result = set()
    for members in by_flat.values():
        for b in members:
            if all(dominates(c, b) for c in members):
                result.add(b)
    return result


def slides(a: WeakComposition, fixed: bool = False) -> Set[WeakComposition]:
    """
    Slide(a), or FixSlide(a) when fixed is set.

    A move replaces adjacent parts (0, k) by (i, j) with i + j = k. For fixed slides,
    when position of k is nonzero in a, j must stay positive.
    """
    a = tuple(a)
    seen = {a}
    queue = deque([a])
    while queue:
        current = queue.popleft()
        for p in range(len(current) - 1):
            k = current[p + 1]
            if current[p] != 0 or k == 0:
                continue
            lowest_j = 1 if (fixed and a[p + 1] != 0) else 0
            for j in range(lowest_j, k):
                moved = list(current)
                moved[p], moved[p + 1] = k - j, j
                moved = tuple(moved)
                if moved not in seen:
                    seen.add(moved)
                    queue.append(moved)
    return seen


def sorting_perm(a: WeakComposition) -> Permutation:
    """
    Minimal length permutation v(a) sending a to sort(a): its i-th entry is the
    position a_i ends up at, equal parts ordered leftmost-first.
    """
    order = sorted(range(len(a)), key=lambda i: (-a[i], i))
    perm = [0] * len(a)
    for position, index in enumerate(order):
        perm[index] = position + 1
    return tuple(perm)


def permutation_length(w: Permutation) -> int:
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def _check_permutation(w):
    if sorted(w) != list(range(1, len(w) + 1)):
        raise CompositionError("Not a permutation: {}".format(w))


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order by the tableau criterion on sorted prefixes."""
    if len(u) != len(w):
        raise CompositionError("Size mismatch: {} vs {}".format(u, w))
    _check_permutation(u)
    _check_permutation(w)
    for k in range(1, len(u)):
        if any(x > y for x, y in zip(sorted(u[:k]), sorted(w[:k]))):
            return False
    return True


@lru_cache(maxsize=None)
def _bruhat_graph(n):
    graph = nx.DiGraph()
    for u in permutations(range(1, n + 1)):
        graph.add_node(u)
        length = permutation_length(u)
        for i, j in combinations(range(n), 2):
            v = list(u)
            v[i], v[j] = v[j], v[i]
            v = tuple(v)
            if permutation_length(v) > length:
                graph.add_edge(u, v)
    return graph


def bruhat_leq_bruteforce(u: Permutation, w: Permutation) -> bool:
    """Bruhat order as reachability by length-increasing transpositions."""
    if len(u) != len(w):
        raise CompositionError("Size mismatch: {} vs {}".format(u, w))
    return nx.has_path(_bruhat_graph(len(u)), tuple(u), tuple(w))


def shuffles(a: WeakComposition) -> Set[WeakComposition]:
    return set(permutations(a))


def prepend_zeros(a: WeakComposition, m: int) -> WeakComposition:
    if m < 0:
        raise CompositionError("Cannot prepend {} zeros".format(m))
    return (0,) * m + tuple(a)


def pad(a: WeakComposition, n: int) -> WeakComposition:
    if len(a) > n:
        raise CompositionError("{} is longer than {}".format(a, n))
    return tuple(a) + (0,) * (n - len(a))


def compositions(total: int, length: int) -> Iterator[WeakComposition]:
    """Weak compositions of `total` with `length` parts, by stars and bars."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + length - 1), length - 1):
        parts = []
        previous = -1
        for bar in bars:
            parts.append(bar - previous - 1)
            previous = bar
        parts.append(total + length - 1 - previous - 1)
        yield tuple(parts)


def weak_compositions_upto(max_weight: int, max_len: int, min_len: int = 1) -> Iterator[WeakComposition]:
    for length in range(min_len, max_len + 1):
        for total in range(max_weight + 1):
            for comp in canonical_sorted(compositions(total, length)):
                yield comp


def partitions(total: int, largest: int = None) -> Iterator[Partition]:
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def partitions_upto(max_size: int, min_size: int = 0) -> Iterator[Partition]:
    for total in range(min_size, max_size + 1):
        yield from partitions(total)


def check_partition(lam: Partition):
    if any(part <= 0 for part in lam) or any(x < y for x, y in zip(lam, lam[1:])):
        raise CompositionError("Not a partition: {}".format(lam))
