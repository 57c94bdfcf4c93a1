from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hassett_kit.errors import (InvalidInput, PolynomialSyntaxError,
                                ShapeMismatch, UnknownVariable)
from hassett_kit.models_poly import NEG_INF, Polynomial, VariableSet
from hassett_kit.polyalg.operations import (evaluate, jacobian_ideal,
                                            linear_change, parse_bindings,
                                            parse_point, partial_derivative,
                                            substitute, translate)
from hassett_kit.polyalg.parser import parse_poly, parse_poly_list
from strategies import XY, XYZ, polynomials, small_rationals

XYZW = VariableSet.parse('x,y,z,w')
LOCAL_MODEL = 'x^2*w + x*y - z*w'


class TestParsePoly:

    def test_local_model(self):
        p = parse_poly(LOCAL_MODEL, XYZW)
        assert len(p.terms) == 3
        assert p.degree == 3
        assert str(p) == LOCAL_MODEL

    def test_binomial_identity(self):
        p = parse_poly('(x+y)^2 - x^2 - 2*x*y - y^2', XYZW)
        assert p.is_zero()
        assert p.degree is NEG_INF
        assert str(p) == '0'

    def test_fractions_and_unary_minus(self):
        p = parse_poly('-x^2 + 2/4*y - -3', XY)
        assert p == Polynomial(XY, {(2, 0): -1, (0, 1): Fraction(1, 2), (0, 0): 3})
        assert str(p) == '-x^2 + 1/2*y + 3'

    def test_variables_from_text(self):
        assert parse_poly('a*b', 'a,b').vars == VariableSet(('a', 'b'))

    @pytest.mark.parametrize('text,position', [
        ('x^-1', 2),
        ('x y', 2),
        ('x + $', 4),
        ('(x+1', 4),
        ('1/0', 2),
        ('', 0),
        ('x^y', 2),
        ('x +', 3),
        ('x^1001', 2),
    ])
    def test_syntax_errors(self, text, position):
        with pytest.raises(PolynomialSyntaxError) as info:
            parse_poly(text, XYZW)
        assert info.value.position == position
        assert info.value.to_dict()['code'] == 'syntax_error'

    def test_unknown_identifier(self):
        with pytest.raises(UnknownVariable) as info:
            parse_poly('x + q', XYZW)
        assert info.value.details == {'variable': 'q'}

    def test_generator_list(self):
        gens = parse_poly_list('x^2; y^2;', XY)
        assert [str(g) for g in gens] == ['x^2', 'y^2']

    @given(polynomials())
    @settings(max_examples=200, deadline=None)
    def test_print_parse_fixed_point(self, p):
        assert parse_poly(str(p), XYZ) == p
        assert str(parse_poly(str(p), XYZ)) == str(p)


class TestCalculus:

    @pytest.mark.parametrize('variable,expected', [
        ('x', 'x*w + x*w + y'),
        ('w', 'x^2 - z'),
        ('y', 'x'),
        ('z', '-w'),
    ])
    def test_local_model_partials(self, variable, expected):
        f = parse_poly(LOCAL_MODEL, XYZW)
        assert partial_derivative(f, variable) == parse_poly(expected, XYZW)

    def test_first_partial_prints_canonically(self):
        f = parse_poly(LOCAL_MODEL, XYZW)
        assert str(partial_derivative(f, 'x')) == '2*x*w + y'

    def test_constant(self):
        assert partial_derivative(Polynomial.constant(XY, 7), 'x').is_zero()

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            partial_derivative(parse_poly('x', XY), 'z')

    def test_jacobian_ideal(self):
        f = parse_poly(LOCAL_MODEL, XYZW)
        assert [str(g) for g in jacobian_ideal(f)] == [LOCAL_MODEL, '2*x*w + y', 'x', '-w', 'x^2 - z']

    @given(polynomials(), polynomials(), st.sampled_from(XYZ.names))
    @settings(max_examples=200, deadline=None)
    def test_leibniz(self, p, q, variable):
        assert (p * q).derivative(variable) == p.derivative(variable) * q + p * q.derivative(variable)

    @given(polynomials(max_exponent=3))
    @settings(max_examples=200, deadline=None)
    def test_euler_identity(self, p):
        for degree, component in p.homogeneous_components().items():
            euler = sum((Polynomial.variable(XYZ, name) * component.derivative(name) for name in XYZ),
                        Polynomial.zero(XYZ))
            assert euler == component.scale(degree)


class TestRing:

    @given(polynomials(), polynomials(), polynomials())
    @settings(max_examples=200, deadline=None)
    def test_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + q == q + p
        assert p * q == q * p
        assert p - p == 0

    @given(polynomials(), polynomials())
    @settings(max_examples=200, deadline=None)
    def test_degree_is_additive(self, p, q):
        assume(not p.is_zero() and not q.is_zero())
        assert (p * q).degree == p.degree + q.degree

    def test_zero_degree_absorbs(self):
        zero = Polynomial.zero(XY)
        assert (zero * parse_poly('x', XY)).degree is NEG_INF
        assert NEG_INF < -10**9

    def test_powers(self):
        assert parse_poly('x+1', XY) ** 3 == parse_poly('x^3 + 3*x^2 + 3*x + 1', XY)
        with pytest.raises(InvalidInput):
            parse_poly('x', XY) ** -1

    def test_variables_must_match(self):
        with pytest.raises(ShapeMismatch):
            parse_poly('x', XY) + parse_poly('x', XYZ)

    def test_homogeneity(self):
        assert parse_poly(LOCAL_MODEL, XYZW).is_homogeneous() is False
        assert parse_poly('x^3 + x*y*z', XYZ).is_homogeneous()
        assert Polynomial.zero(XY).is_homogeneous()

    def test_homogenize_and_dehomogenize(self):
        p = parse_poly('x^2 + y + 1', XY)
        h = p.homogenize('z')
        assert h == parse_poly('x^2 + y*z + z^2', XYZ)
        assert h.dehomogenize('z') == p


class TestSubstitution:

    def test_eliminate_last_coordinate(self):
        six = VariableSet.indexed('x', 6)
        five = VariableSet.indexed('x', 5)
        cubic = parse_poly(' + '.join(f'{name}^3' for name in six), six)
        bindings = {'x5': parse_poly('-(x0+x1+x2+x3+x4)', five)}
        f = substitute(cubic, bindings, five)
        assert f.vars == five
        assert f.degree == 3 and f.is_homogeneous()
        assert evaluate(f, [1, 1, 1, -1, -1]) == 0

    def test_identity_bindings(self):
        p = parse_poly(LOCAL_MODEL, XYZW)
        assert substitute(p, {name: Polynomial.variable(XYZW, name) for name in XYZW}) == p
        assert substitute(p, {}) == p

    def test_translate(self):
        p = parse_poly('x^2', XY)
        expected = parse_poly('x^2 + 2*x + 1', XY)
        assert substitute(p, {'x': parse_poly('x + 1', XY)}) == expected
        assert translate(p, [1, 0]) == expected

    def test_unbound_variable_outside_target(self):
        with pytest.raises(UnknownVariable):
            substitute(parse_poly('x*y', XY), {'x': 1}, VariableSet(('x', 'z')))

    def test_binding_over_wrong_ring(self):
        with pytest.raises(ShapeMismatch):
            substitute(parse_poly('x', XY), {'x': parse_poly('z', XYZ)}, XY)

    def test_linear_change(self):
        p = parse_poly('x*y', XY)
        assert linear_change(p, [[1, 1], [0, 1]]) == parse_poly('x*y + y^2', XY)
        with pytest.raises(ShapeMismatch):
            linear_change(p, [[1, 0]])

    def test_parse_bindings(self):
        bindings = parse_bindings('x=x+1; y=2*z', XY, 'x,y,z')
        assert bindings == {'x': parse_poly('x+1', XYZ), 'y': parse_poly('2*z', XYZ)}

    @pytest.mark.parametrize('text,error', [
        ('x', InvalidInput),
        ('q=1', UnknownVariable),
        ('x=1; x=2', InvalidInput),
        ('x=1 +', PolynomialSyntaxError),
    ])
    def test_parse_bindings_errors(self, text, error):
        with pytest.raises(error):
            parse_bindings(text, XY, XY)

    @given(polynomials(XY), polynomials(XY), polynomials(XY), st.lists(small_rationals, min_size=2, max_size=2))
    @settings(max_examples=200, deadline=None)
    def test_functoriality(self, p, u, v, point):
        composed = p.substitute({'x': u, 'y': v})
        assert composed.evaluate(point) == p.evaluate([u.evaluate(point), v.evaluate(point)])


class TestEvaluate:

    def test_diagonal_cubic_at_node(self):
        six = VariableSet.indexed('x', 6)
        cubic = parse_poly(' + '.join(f'{name}^3' for name in six), six)
        assert evaluate(cubic, ['1', '1', '1', '-1', '-1', '-1']) == 0

    @given(polynomials())
    @settings(max_examples=50, deadline=None)
    def test_origin_gives_constant_term(self, p):
        assert evaluate(p, [0, 0, 0]) == p.constant_term()

    def test_length_mismatch(self):
        with pytest.raises(ShapeMismatch):
            evaluate(parse_poly('x', XY), [1])

    def test_parse_point(self):
        assert parse_point('1/2, -1,0') == [Fraction(1, 2), -1, 0]
        with pytest.raises(InvalidInput):
            parse_point('1,,2')
