"""Hypothesis strategies shared by the property suites"""

from fractions import Fraction

from hypothesis import strategies as st

from hassett_kit.models_poly import Polynomial, VariableSet
from hassett_kit.weights.operations import validate_weight_data

XYZ = VariableSet(('x', 'y', 'z'))
XY = VariableSet(('x', 'y'))

positive_weights = st.fractions(min_value=Fraction(1, 12), max_value=1, max_denominator=12)
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polynomials(vars=XYZ, max_exponent=2, max_terms=4, coefficients=small_rationals):
    exponents = st.tuples(*[st.integers(0, max_exponent) for _ in vars])
    return st.dictionaries(exponents, coefficients, max_size=max_terms).map(
        lambda terms: Polynomial(vars, terms))


def weight_data(genus=st.integers(1, 2), n=st.integers(3, 7)):
    """Strict weight data in positive genus, always admissible"""
    return st.tuples(genus, n.flatmap(lambda k: st.lists(positive_weights, min_size=k, max_size=k))).map(
        lambda pair: validate_weight_data(pair[0], pair[1]))


@st.composite
def genus_zero_weights(draw, n=st.integers(5, 7)):
    """Strict genus-0 weight data (sum of weights above 2)"""
    k = draw(n)
    weights = draw(st.lists(positive_weights, min_size=k, max_size=k).filter(lambda w: sum(w) > 2))
    return validate_weight_data(0, weights)


@st.composite
def permutations_of(draw, n):
    images = draw(st.permutations(list(range(1, n + 1))))
    return tuple(images)
