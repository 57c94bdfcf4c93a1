"""
Weight data helpers
Admissibility checks, the Kapranov weight family and the domination order.
"""

import json
import logging
import re
from fractions import Fraction

from hassett_kit.errors import (IndexOutOfRange, InvalidInput, NotAdmissible,
                                ShapeMismatch, WeightOutOfRange)
from hassett_kit.models_weights import Mode, RationalWeight, WeightData

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r'[+-]?[0-9]+(/[0-9]+)?')


def parse_rational(value):
    """Read an exact rational from an int, a Fraction or a 'p/q' string"""
    if isinstance(value, bool):
        raise InvalidInput(f'not a rational number: {value!r}')
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        # Fraction() also accepts decimals, exponents and non-ASCII digits; only p/q literals are exact input here
        if RATIONAL_PATTERN.fullmatch(text):
            try:
                return Fraction(text)
            except ZeroDivisionError:
                raise InvalidInput(f'zero denominator in {value!r}')
    raise InvalidInput(f'not a rational number: {value!r}')


def _coerce_mode(mode):
    if isinstance(mode, Mode):
        return mode
    try:
        return Mode(mode)
    except ValueError:
        raise InvalidInput(f'unknown mode {mode!r}, expected "strict" or "sum_two"')


def validate_weight_data(genus, weights, mode=Mode.STRICT):
    """
    Normalize and validate weight data

    Returns:
        WeightData when every admissibility condition holds

    Raises:
        WeightOutOfRange, NotAdmissible
    """
    mode = _coerce_mode(mode)
    if isinstance(weights, WeightData):
        weights = weights.values
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
        raise InvalidInput(f'genus must be a non-negative integer, got {genus!r}')
    values = [parse_rational(w) for w in weights]
    if not values:
        raise InvalidInput('weight list is empty')

    for label, value in enumerate(values, start=1):
        if value <= 0 or value > 1:
            raise WeightOutOfRange(f'weight a_{label} = {value} violates 0 < a_{label} <= 1',
                                   label=label)

    total = sum(values, Fraction(0))
    if mode is Mode.STRICT:
        if 2 * genus - 2 + total <= 0:
            raise NotAdmissible(f'2g - 2 + sum(a_i) = {2 * genus - 2 + total} is not > 0',
                                inequality='2g-2+sum>0')
    else:
        if genus != 0:
            raise NotAdmissible(f'sum-two weight data requires genus 0, got {genus}',
                                inequality='g=0')
        if total != 2:
            raise NotAdmissible(f'sum(a_i) = {total} is not 2', inequality='sum=2')

    return WeightData(genus, tuple(RationalWeight(v) for v in values), mode)


def kapranov_weights(n, r, s):
    """
    Weights A_{r,s}[n] of the intermediate Kapranov blow-ups

    (1/(n-r-1) repeated n-r-1 times, s/(n-r-1), 1 repeated r times)
    """
    if n < 4:
        raise IndexOutOfRange(f'Kapranov weights need n >= 4, got n = {n}')
    if not 1 <= r <= n - 3:
        raise IndexOutOfRange(f'r = {r} outside [1, {n - 3}]')
    if not 1 <= s <= n - r - 2:
        raise IndexOutOfRange(f's = {s} outside [1, {n - r - 2}] for n = {n}, r = {r}')
    light = Fraction(1, n - r - 1)
    weights = [light] * (n - r - 1) + [s * light] + [Fraction(1)] * r
    return validate_weight_data(0, weights, Mode.STRICT)


def losev_manin_weights(n):
    """Losev-Manin weights A_{1,n-3}[n]"""
    if n < 4:
        raise IndexOutOfRange(f'Losev-Manin weights need n >= 4, got n = {n}')
    return kapranov_weights(n, 1, n - 3)


def kapranov_chain(n):
    """
    Kapranov's map as a chain of reduction morphisms

    Returns (r, s, WeightData) from M_{0,n} (r = n-3) down to P^{n-3}
    (r = s = 1); each entry dominates the next one.
    """
    if n < 4:
        raise IndexOutOfRange(f'Kapranov chain needs n >= 4, got n = {n}')
    chain = []
    for r in range(n - 3, 0, -1):
        for s in range(n - r - 2, 0, -1):
            chain.append((r, s, kapranov_weights(n, r, s)))
    return chain


def moduli_dimension(w):
    """Dimension 3g - 3 + n of the moduli space"""
    return 3 * w.genus - 3 + w.n


def losev_manin_dimension(n):
    """Dimension n - 3 of the Losev-Manin space: chains of P^1 carrying n - 2 free points"""
    return moduli_dimension(losev_manin_weights(n))


def dominates(a, b):
    """True iff a_i >= b_i for every marking, so a reduction morphism exists"""
    if a.genus != b.genus or a.n != b.n:
        raise ShapeMismatch(f'cannot compare (g={a.genus}, n={a.n}) with (g={b.genus}, n={b.n})')
    return all(x >= y for x, y in zip(a.values, b.values))


def weights_from_json(document, genus=None, mode=None):
    """
    Read weight data from its JSON form

    Accepts {"genus": g, "mode": "strict", "weights": [...]} or a bare array;
    explicit genus/mode arguments win over the document.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f'weights are not valid JSON: {exc.msg}')
    if isinstance(document, dict):
        if 'weights' not in document:
            raise InvalidInput('weights object has no "weights" field')
        weights = document['weights']
        genus = document.get('genus', 0) if genus is None else genus
        mode = document.get('mode', Mode.STRICT.value) if mode is None else mode
    elif isinstance(document, list):
        weights = document
    else:
        raise InvalidInput('weights must be a JSON array or object')
    if not isinstance(weights, list):
        raise InvalidInput('"weights" must be a JSON array')
    return validate_weight_data(0 if genus is None else genus, weights,
                                Mode.STRICT if mode is None else mode)


def weights_to_json(w):
    return json.dumps(w.to_dict())
