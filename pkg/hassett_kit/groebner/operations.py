"""
Groebner helpers
Buchberger's algorithm, normal forms, quotient dimensions over the monomial
staircase and local multiplicities by stabilization of powers of an ideal.
"""

import heapq
import logging
from fractions import Fraction
from itertools import combinations_with_replacement, product

from hassett_kit.errors import (CoefficientOverflow, InvalidInput, NotIsolated,
                                ShapeMismatch)
from hassett_kit.models_groebner import (INFINITE, GroebnerBasis, MonomialOrder,
                                         QuotientDimension)
from hassett_kit.models_poly import Polynomial, monomial_divides
from hassett_kit.polyalg.operations import translate
from hassett_kit.utils.settings import get_setting

logger = logging.getLogger(__name__)


def _coerce_order(order):
    if isinstance(order, MonomialOrder):
        return order
    try:
        return MonomialOrder(order)
    except ValueError:
        raise InvalidInput(f'unknown monomial order {order!r}, expected "grevlex" or "lex"')


def _common_vars(gens, vars=None):
    for g in gens:
        if vars is None:
            vars = g.vars
        elif g.vars != vars:
            raise ShapeMismatch(f'generators over ({g.vars}) and ({vars}) do not mix')
    if vars is None:
        raise InvalidInput('no generators and no variable set given')
    return vars


def _monic(terms, key):
    lm = max(terms, key=key)
    lc = terms[lm]
    return lm, {e: c / lc for e, c in terms.items()}


def _check_height(terms, cap):
    for c in terms.values():
        if len(str(abs(c.numerator))) > cap or len(str(c.denominator)) > cap:
            raise CoefficientOverflow(f'coefficient height exceeded {cap} digits', limit=cap)


def _reduce(terms, basis, key):
    """Full reduction of `terms` by a list of monic (lm, terms) pairs"""
    pending = dict(terms)
    remainder = {}
    while pending:
        lm = max(pending, key=key)
        c = pending[lm]
        for g_lm, g_terms in basis:
            if monomial_divides(g_lm, lm):
                shift = tuple(a - b for a, b in zip(lm, g_lm))
                for e, gc in g_terms.items():
                    m = tuple(a + b for a, b in zip(e, shift))
                    value = pending.get(m, 0) - c * gc
                    if value:
                        pending[m] = value
                    else:
                        pending.pop(m, None)
                break
        else:
            remainder[lm] = c
            del pending[lm]
    return remainder


def _s_polynomial(f, g):
    (f_lm, f_terms), (g_lm, g_terms) = f, g
    lcm = tuple(max(a, b) for a, b in zip(f_lm, g_lm))
    f_shift = tuple(a - b for a, b in zip(lcm, f_lm))
    g_shift = tuple(a - b for a, b in zip(lcm, g_lm))
    result = {}
    for e, c in f_terms.items():
        m = tuple(a + b for a, b in zip(e, f_shift))
        result[m] = result.get(m, 0) + c
    for e, c in g_terms.items():
        m = tuple(a + b for a, b in zip(e, g_shift))
        result[m] = result.get(m, 0) - c
    return {e: c for e, c in result.items() if c}


def _unit_basis(vars, order, source):
    return GroebnerBasis(vars=vars, generators=(Polynomial.constant(vars, 1),),
                         order=order, source_ideal=source)


def buchberger(gens, order=MonomialOrder.GREVLEX, vars=None):
    """
    Reduced Groebner basis of the ideal generated by `gens`

    S-pairs are taken with the normal strategy (smallest lcm first) and
    pairs with coprime leading monomials are skipped.

    Raises:
        CoefficientOverflow once a coefficient outgrows MAX_COEFFICIENT_DIGITS
    """
    order = _coerce_order(order)
    gens = tuple(gens)
    vars = _common_vars(gens, vars)
    key = order.key
    cap = get_setting('MAX_COEFFICIENT_DIGITS')

    basis = []
    for g in gens:
        if g.is_zero():
            continue
        if g.is_constant():
            return _unit_basis(vars, order, gens)
        entry = _monic(dict(g.terms), key)
        if entry not in basis:
            basis.append(entry)
    if not basis:
        return GroebnerBasis(vars=vars, generators=(), order=order, source_ideal=gens)

    pairs = []

    def push_pairs(j):
        for i in range(j):
            lcm = tuple(max(a, b) for a, b in zip(basis[i][0], basis[j][0]))
            heapq.heappush(pairs, (sum(lcm), key(lcm), i, j))

    for j in range(1, len(basis)):
        push_pairs(j)

    processed = skipped = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if not any(a and b for a, b in zip(basis[i][0], basis[j][0])):
            skipped += 1
            continue
        processed += 1
        remainder = _reduce(_s_polynomial(basis[i], basis[j]), basis, key)
        if not remainder:
            continue
        lm, monic = _monic(remainder, key)
        _check_height(monic, cap)
        if not any(lm):
            logger.debug('Unit ideal after %s S-pairs', processed)
            return _unit_basis(vars, order, gens)
        basis.append((lm, monic))
        push_pairs(len(basis) - 1)

    logger.debug('Buchberger: %s S-pairs reduced, %s skipped, %s elements before reduction',
                 processed, skipped, len(basis))

    minimal = []
    for index, (lm, terms) in enumerate(basis):
        redundant = any(
            monomial_divides(other, lm) and (other != lm or other_index < index)
            for other_index, (other, _) in enumerate(basis) if other_index != index
        )
        if not redundant:
            minimal.append((lm, terms))

    reduced = []
    for index, (lm, terms) in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append((lm, _reduce(terms, others, key)))
    reduced.sort(key=lambda entry: key(entry[0]), reverse=True)

    return GroebnerBasis(vars=vars,
                         generators=tuple(Polynomial(vars, terms) for _, terms in reduced),
                         order=order, source_ideal=gens)


def _entries(gb):
    return [(gb.leading_monomial(g), dict(g.terms)) for g in gb.generators]


def normal_form(p, gb):
    """Remainder of p modulo gb; no monomial is divisible by a leading monomial"""
    if p.vars != gb.vars:
        raise ShapeMismatch(f'polynomial over ({p.vars}) but basis over ({gb.vars})')
    return Polynomial(gb.vars, _reduce(dict(p.terms), _entries(gb), gb.order.key))


def ideal_contains(gb, p):
    return normal_form(p, gb).is_zero()


def leading_monomials(gb):
    return gb.leading_monomials


def quotient_dimension(gb):
    """
    Dimension of K[x]/I read off the leading-term staircase

    Finite exactly when every variable has a pure power among the leading
    monomials; the staircase lists the standard monomials in increasing order.
    """
    vars = gb.vars
    leading = gb.leading_monomials
    if gb.is_unit():
        return QuotientDimension(value=0, staircase=(), vars=vars)

    bounds = []
    for i in range(len(vars)):
        pure = [lm[i] for lm in leading
                if lm[i] and all(e == 0 for j, e in enumerate(lm) if j != i)]
        if not pure:
            return QuotientDimension(value=INFINITE, staircase=None, vars=vars)
        bounds.append(min(pure))

    staircase = [e for e in product(*(range(b) for b in bounds))
                 if not any(monomial_divides(lm, e) for lm in leading)]
    staircase.sort(key=gb.order.key)
    return QuotientDimension(value=len(staircase), staircase=tuple(staircase), vars=vars)


def ideal_power_generators(vars, variables, power):
    """All monomials of degree `power` in the given variables"""
    indices = [vars.index(name) for name in variables]
    monomials = []
    for choice in combinations_with_replacement(indices, power):
        exponents = [0] * len(vars)
        for i in choice:
            exponents[i] += 1
        monomials.append(Polynomial.monomial(vars, exponents))
    return monomials


def local_multiplicity_along(gens, variables, vars=None, order=MonomialOrder.GREVLEX):
    """
    Length of the part of K[x]/J supported on the coordinate subspace where
    `variables` vanish

    d_N = dim K[x]/(J + I^N) for the ideal I of `variables`, N = 1, 2, ...
    The first N with d_N = d_{N+1} gives the answer.

    Raises:
        NotIsolated when some d_N is infinite or nothing stabilizes by
        STABILIZATION_CAP
    """
    gens = tuple(gens)
    vars = _common_vars(gens, vars)
    cap = get_setting('STABILIZATION_CAP')
    base = buchberger(gens, order, vars=vars)
    if base.is_unit():
        return 0
    if not variables:
        dimension = quotient_dimension(base)
        if not dimension.is_finite:
            raise NotIsolated('solution set is not finite')
        return dimension.value

    previous = None
    for power in range(1, cap + 1):
        gb = buchberger(base.generators + tuple(ideal_power_generators(vars, variables, power)),
                        order, vars=vars)
        dimension = quotient_dimension(gb)
        if not dimension.is_finite:
            raise NotIsolated(f'solutions along {list(variables)} = 0 are not isolated',
                              power=power)
        logger.debug('Stabilization N=%s: d_N=%s', power, dimension.value)
        if dimension.value == previous:
            return previous
        previous = dimension.value
    raise NotIsolated(f'no stabilization up to N = {cap}', power=cap)


def local_multiplicity(gens, point, order=MonomialOrder.GREVLEX):
    """
    Local dimension of K[x]/J at a rational point (the Tyurina number when
    J is f with its partials)
    """
    gens = tuple(gens)
    vars = _common_vars(gens)
    point = [Fraction(x) for x in point]
    translated = [translate(g, point) for g in gens]
    return local_multiplicity_along(translated, vars.names, vars=vars, order=order)
