"""
Boundary strata helpers
Classification of marked subsets, the contraction criterion for reduction
morphisms and its factorization into single-divisor blow-downs.
"""

import logging
from collections import Counter
from itertools import combinations

from hassett_kit.errors import (ConsistencyError, IndexOutOfRange,
                                NotAdmissible, NotAReduction)
from hassett_kit.models_strata import BoundaryDivisor, ReductionStep, Tag
from hassett_kit.models_weights import Mode
from hassett_kit.weights.operations import dominates

logger = logging.getLogger(__name__)


def _require_strict(w):
    if w.mode is not Mode.STRICT:
        raise NotAdmissible('boundary combinatorics needs strict weight data', inequality='mode')


def _check_subset(w, subset):
    labels = tuple(subset)
    for label in labels:
        if not isinstance(label, int) or isinstance(label, bool) or not 1 <= label <= w.n:
            raise IndexOutOfRange(f'marking {label!r} is not in {{1..{w.n}}}')
    if len(set(labels)) != len(labels):
        raise IndexOutOfRange(f'subset {list(labels)} repeats a marking')
    return frozenset(labels)


def canonical_form(w, subset):
    """
    Canonical representative (I, J) of D_{I,J}

    For g = 0 the two sides are interchangeable and I is the side without
    the last label n; for g >= 1, I is the genus-0 tail as given.
    """
    tail = _check_subset(w, subset)
    body = frozenset(range(1, w.n + 1)) - tail
    if w.genus == 0 and w.n in tail:
        tail, body = body, tail
    return tuple(sorted(tail)), tuple(sorted(body))


def _classify(w, tail, body):
    if len(tail) < 2 or (w.genus == 0 and len(body) < 2):
        return Tag.NONEXISTENT
    if w.subset_sum(tail) > 1:
        return Tag.NODAL
    return Tag.COINCIDENCE if len(tail) == 2 else Tag.CONTRACTED


def classify_subset(w, subset):
    """
    Classify the boundary divisor D_{I,J} cut out by the marked subset I

    Only the canonical I is weighed; for g = 0 that is the side without
    label n.

    Returns:
        Tag.COINCIDENCE if two markings with weight sum <= 1 collide,
        Tag.CONTRACTED if three or more markings with weight sum <= 1 sit on
        the tail (a stratum of codimension |I| - 1, not a divisor),
        Tag.NODAL for a genuine two-component divisor,
        Tag.NONEXISTENT when a side is too small to carry a stable component.
    """
    _require_strict(w)
    tail, body = canonical_form(w, subset)
    return _classify(w, tail, body)


def boundary_divisor(w, subset):
    _require_strict(w)
    tail, body = canonical_form(w, subset)
    return BoundaryDivisor(tail_markings=tail, body_markings=body,
                           body_genus=w.genus, tag=_classify(w, tail, body))


def _tail_divisor(w, tail):
    # the collapsing tail as given, without canonicalization
    body = tuple(label for label in range(1, w.n + 1) if label not in tail)
    return BoundaryDivisor(tail_markings=tuple(tail), body_markings=body,
                           body_genus=w.genus, tag=_classify(w, tail, body))


def canonical_subsets(w):
    """Every canonical marked subset, by size then lexicographically"""
    labels = range(1, w.n + 1)
    if w.genus == 0:
        # I avoids label n and leaves at least two markings on the other side
        labels = range(1, w.n)
        largest = w.n - 2
    else:
        largest = w.n
    subsets = []
    for size in range(2, largest + 1):
        subsets.extend(combinations(labels, size))
    return subsets


def count_by_tag(w):
    _require_strict(w)
    counts = Counter(classify_subset(w, subset) for subset in canonical_subsets(w))
    return {tag.value: counts.get(tag, 0) for tag in Tag}


def contracted_divisors(a, b):
    """
    Divisors D_{I,J} contracted by the reduction morphism M_{g,A} -> M_{g,B}

    A divisor is contracted when its tail carries r >= 3 markings with
    b-weights summing to at most one while it was a genuine nodal divisor
    under a. Tails are walked as raw subsets, so for g = 0 a tail may hold
    label n. Sorted by decreasing |I|, then lexicographically.
    """
    _require_strict(a)
    _require_strict(b)
    if not dominates(a, b):
        raise NotAReduction('weights do not decrease componentwise, there is no reduction morphism')

    labels = range(1, b.n + 1)
    largest = b.n - 2 if b.genus == 0 else b.n
    steps = []
    for size in range(3, largest + 1):
        for tail in combinations(labels, size):
            if b.subset_sum(tail) > 1:
                continue
            if _tail_divisor(a, tail).tag is not Tag.NODAL:
                continue
            steps.append(ReductionStep(divisor=_tail_divisor(b, tail), tail=tail))

    steps.sort(key=lambda step: (-step.r, step.tail))
    logger.debug('Reduction contracts %s divisors', len(steps))
    return steps


def factor_reduction(a, b):
    """
    Factor a reduction morphism into blow-downs of single divisors

    Larger tails come first, which is compatible with inclusion of the
    blown-up centres; each step records its image codimension |I| - 1.
    """
    chain = contracted_divisors(a, b)
    for earlier, later in zip(chain, chain[1:]):
        if set(later.tail) > set(earlier.tail):
            raise ConsistencyError(f'blow-down of {later.tail} scheduled after {earlier.tail}')
    return chain


def reduction_is_isomorphism(w):
    """With at most two markings every reduction is an isomorphism onto M_{g,n}"""
    return w.n <= 2
