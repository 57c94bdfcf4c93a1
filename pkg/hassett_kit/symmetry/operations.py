"""
Symmetry helpers
Admissible transpositions, the group S_A they generate, and the
automorphism groups of Hassett spaces.
"""

import logging
from collections import deque
from itertools import combinations
from math import factorial, prod

from hassett_kit.errors import ConsistencyError, IndexOutOfRange, ResourceLimit
from hassett_kit.models_symmetry import (INFINITE, AutDescriptor, AutKind,
                                         Permutation, PermGroup)
from hassett_kit.models_weights import Mode
from hassett_kit.utils.settings import get_setting
from hassett_kit.weights.operations import kapranov_weights

logger = logging.getLogger(__name__)


def is_admissible_transposition(w, i, j, strict=False):
    """
    Check whether swapping markings i and j preserves every collision pattern

    For every set H of other markings with |H| >= 2 (|H| >= 1 when `strict`),
    a_i + sum(H) <= 1 must hold exactly when a_j + sum(H) <= 1.
    """
    n = w.n
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f'transposition needs two distinct markings in 1..{n}, got {i}, {j}')
    a_i, a_j = w.weight(i), w.weight(j)
    if a_i == a_j:
        return True

    others = [h for h in range(1, n + 1) if h not in (i, j)]
    smallest = 1 if strict else 2
    for size in range(smallest, len(others) + 1):
        for subset in combinations(others, size):
            rest = w.subset_sum(subset)
            if (a_i + rest <= 1) != (a_j + rest <= 1):
                logger.debug('Transposition (%s %s) broken by %s', i, j, subset)
                return False
    return True


def closure(generators, degree, limit=None):
    """Breadth-first closure of the generators under composition"""
    limit = limit or get_setting('MAX_GROUP_ELEMENTS')
    identity = Permutation.identity(degree)
    elements = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            product = generator * current
            if product not in elements:
                elements.add(product)
                if len(elements) > limit:
                    raise ResourceLimit(f'group has more than {limit} elements')
                queue.append(product)
    return frozenset(elements)


def generated_group(generators, degree):
    generators = tuple(generators)
    elements = closure(generators, degree)
    return PermGroup(degree=degree, generators=generators,
                     order=len(elements), elements=elements)


def transposition_components(transpositions, degree):
    """Connected components of the graph whose edges are the transpositions"""
    parent = list(range(degree + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in transpositions:
        parent[find(i)] = find(j)

    components = {}
    for label in range(1, degree + 1):
        components.setdefault(find(label), []).append(label)
    return sorted((tuple(c) for c in components.values()), key=lambda c: (-len(c), c))


def admissible_transpositions(w, strict=False):
    return [(i, j) for i, j in combinations(range(1, w.n + 1), 2)
            if is_admissible_transposition(w, i, j, strict=strict)]


def admissible_factors(w, strict=False, pairs=None):
    """Sizes of the non-trivial transposition components, largest first"""
    if pairs is None:
        pairs = admissible_transpositions(w, strict=strict)
    return tuple(len(c) for c in transposition_components(pairs, w.n) if len(c) > 1)


def admissible_group(w, strict=False, materialize=True):
    """
    The subgroup S_A of S_n generated by admissible transpositions

    The order comes from the transposition graph: a group generated by
    transpositions is the product of the symmetric groups on the components.
    With `materialize` the elements are also enumerated by closure.
    """
    max_degree = get_setting('MAX_GROUP_DEGREE')
    if w.n > max_degree:
        raise ResourceLimit(f'admissible group limited to n <= {max_degree}, got n = {w.n}')

    pairs = admissible_transpositions(w, strict=strict)
    generators = tuple(Permutation.transposition(w.n, i, j) for i, j in pairs)
    order = prod(factorial(k) for k in admissible_factors(w, strict=strict, pairs=pairs))

    elements = None
    if materialize:
        elements = closure(generators, w.n)
    return PermGroup(degree=w.n, generators=generators, order=order,
                     elements=elements, certificate='transposition_components')


def _match_kapranov(w):
    """(r, s) with kapranov_weights(n, r, s) equal to w, or None"""
    n = w.n
    if n < 4:
        return None
    for r in range(1, n - 2):
        for s in range(1, n - r - 1):
            if kapranov_weights(n, r, s).values == w.values:
                return r, s
    return None


def _symmetric_product(*factors):
    factors = tuple(k for k in factors if k > 1)
    return AutDescriptor(kind=AutKind.FINITE_SYMMETRIC_PRODUCT,
                         order=prod(factorial(k) for k in factors), factors=factors)


def _unidentified(w):
    # only the subgroup S_A is known to act
    factors = admissible_factors(w)
    return AutDescriptor(kind=AutKind.UNKNOWN, order=prod(factorial(k) for k in factors),
                         factors=factors)


def _positive_genus(w):
    descriptor = _symmetric_product(*admissible_factors(w))
    if w.n > get_setting('MAX_GROUP_DEGREE') or descriptor.order > get_setting('MAX_GROUP_ELEMENTS'):
        logger.debug('Closure cross-check skipped for n = %s, order %s', w.n, descriptor.order)
        return descriptor
    group = admissible_group(w, materialize=False)
    elements = closure(group.generators, w.n)
    if descriptor.order != len(elements):
        raise ConsistencyError(f'closure order {len(elements)} disagrees with {descriptor.factors}')
    return descriptor


def aut_descriptor(w, stack=False):
    """
    Automorphism group of the Hassett space attached to w

    Kapranov weights in genus 0 follow the closed formulas; for g >= 1 the
    group is S_A, cross-checked by materialized closure while it fits the
    group limits. `stack` asks for the moduli stack rather than the coarse
    space, which differs only for g = 1 and n <= 2.

    Unmatched cases come back as AutKind.UNKNOWN carrying the order of S_A,
    the subgroup generated by admissible transpositions.
    """
    if w.mode is not Mode.STRICT:
        return _unidentified(w)

    g, n = w.genus, w.n
    if g >= 1:
        if g == 1 and n == 2:
            if stack:
                return AutDescriptor(kind=AutKind.TRIVIAL, order=1)
            return AutDescriptor(kind=AutKind.TORUS_SQUARED, order=INFINITE, torus_rank=2)
        if g == 1 and n == 1:
            if stack:
                return AutDescriptor(kind=AutKind.TORUS_ONE, order=INFINITE, torus_rank=1)
            return AutDescriptor(kind=AutKind.PROJECTIVE_LINEAR, order=INFINITE)
        return _positive_genus(w)

    if n >= 5 and all(a == 1 for a in w.values):
        return _symmetric_product(n)

    match = _match_kapranov(w)
    if match is None:
        return _unidentified(w)
    r, s = match
    if n == 4:
        # A_{1,1}[4] is the projective line
        return AutDescriptor(kind=AutKind.PROJECTIVE_LINEAR, order=INFINITE)
    if r == n - 3:
        return _symmetric_product(n)
    if r == 1 and s == n - 3:
        return AutDescriptor(kind=AutKind.SEMIDIRECT_TORUS, order=INFINITE,
                             factors=(2, n - 2), torus_rank=n - 3)
    if 2 <= r <= n - 4:
        if s == 1:
            return _symmetric_product(n - r, r)
        if s == n - r - 2:
            return _symmetric_product(n - r - 1, r + 1)
        return _symmetric_product(n - r - 1, r)
    return _unidentified(w)
