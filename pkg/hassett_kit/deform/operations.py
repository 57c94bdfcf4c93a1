"""
Segre cubic helpers
The ten nodes of the Segre cubic, Tyurina numbers per node and per chart,
and the Euler characteristic ledger for its first-order deformations.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb

from sympy import Matrix, Rational

from hassett_kit.errors import (ConsistencyError, InvalidInput, NotHomogeneous,
                                NotIsolated, NotIsolatedSingularities)
from hassett_kit.groebner.operations import (buchberger, local_multiplicity,
                                             local_multiplicity_along,
                                             quotient_dimension)
from hassett_kit.models_deform import (DeformationLedger, NodeCertificate,
                                       ProjectivePoint, Provenance)
from hassett_kit.models_poly import Polynomial, VariableSet
from hassett_kit.models_symmetry import Permutation
from hassett_kit.models_weights import Mode
from hassett_kit.polyalg.operations import jacobian_ideal
from hassett_kit.polyalg.parser import parse_poly
from hassett_kit.symmetry.operations import admissible_group, generated_group
from hassett_kit.weights.operations import validate_weight_data

logger = logging.getLogger(__name__)

SYMMETRIC_VARS = VariableSet.indexed('x', 6)
SEGRE_VARS = VariableSet.indexed('x', 5)
LOCAL_MODEL = 'x^2*w + x*y - z*w'
LOCAL_MODEL_VARS = VariableSet(('x', 'y', 'z', 'w'))
SEGRE_AUT_ORDER = 720


def segre_symmetric():
    """x0^3 + ... + x5^3 in the six-coordinate model"""
    result = Polynomial.zero(SYMMETRIC_VARS)
    for x in Polynomial.generators(SYMMETRIC_VARS):
        result = result + x ** 3
    return result


def _eliminate(bindings, target):
    return segre_symmetric().substitute(bindings, target)


def segre_cubic():
    """The Segre cubic f_S in x0..x4, obtained by eliminating x5 = -(x0 + ... + x4)"""
    xs = Polynomial.generators(SEGRE_VARS)
    return _eliminate({'x5': -sum(xs, Polynomial.zero(SEGRE_VARS))}, SEGRE_VARS)


def segre_node_points():
    """
    The S_6 orbit of [1:1:1:-1:-1:-1] up to scaling, in six coordinates

    The normalized first coordinate is +1, so the +1 triple contains
    position 0 and two of the remaining five.
    """
    points = []
    for pair in combinations(range(1, 6), 2):
        positive = {0, *pair}
        points.append(ProjectivePoint(tuple(1 if i in positive else -1 for i in range(6))))
    return points


def _rank(rows):
    return Matrix([[Rational(c.numerator, c.denominator) for c in row] for row in rows]).rank()


def hessian_rank(g, point):
    """Rank of the matrix of second partials of g at an affine point"""
    gradient = g.gradient()
    rows = [[d.derivative(name).evaluate(point) for name in g.vars] for d in gradient]
    return _rank(rows)


def certify_point(f, point):
    """
    Node certificate of a point on a projective hypersurface

    The Hessian and the Tyurina number are taken in the affine chart of the
    first nonzero coordinate.
    """
    if not isinstance(point, ProjectivePoint):
        point = ProjectivePoint(tuple(point))
    if len(point.coords) != len(f.vars):
        raise InvalidInput(f'point has {len(point.coords)} coordinates, expected {len(f.vars)}')
    coords = point.coords
    on_hypersurface = f.evaluate(coords) == 0
    partials_vanish = all(d.evaluate(coords) == 0 for d in f.gradient())

    chart = f.dehomogenize(f.vars.names[point.chart])
    affine = point.affine()
    rank = hessian_rank(chart, affine)
    tyurina = local_multiplicity(jacobian_ideal(chart), affine) if on_hypersurface else 0
    return NodeCertificate(point=point, on_hypersurface=on_hypersurface,
                           all_partials_vanish=partials_vanish,
                           hessian_rank=rank, tyurina=tyurina)


def segre_nodes():
    """Certified nodes of the Segre cubic, in the five-coordinate model"""
    f = segre_cubic()
    certificates = []
    for point in segre_node_points():
        certificate = certify_point(f, point.drop(5))
        if not certificate.is_node or certificate.tyurina != 1:
            raise ConsistencyError(f'{point} failed node certification', certificate=certificate.to_dict())
        certificates.append(certificate)
    logger.info('Certified %s Segre nodes', len(certificates))
    return certificates


def singular_audit_charts(f):
    """
    Sum of Tyurina numbers of the singular points in each standard chart

    Chart k counts the points whose first nonzero coordinate is x_k: the
    Tyurina ideal is formed in x_k = 1 and restricted to x_0 = ... = x_{k-1} = 0
    by stabilizing powers of (x_0, ..., x_{k-1}).
    """
    if f.is_zero() or not f.is_homogeneous():
        raise NotHomogeneous('singular audit needs a nonzero homogeneous polynomial')
    names = f.vars.names
    counts = []
    for k, name in enumerate(names):
        chart = f.dehomogenize(name)
        try:
            count = local_multiplicity_along(jacobian_ideal(chart), names[:k], vars=chart.vars)
        except NotIsolated as exc:
            raise NotIsolatedSingularities(f'singular locus is not finite in the chart {name} = 1',
                                           chart=k) from exc
        logger.info('Chart %s = 1: %s', name, count)
        counts.append(count)
    return counts


def singular_audit(f):
    return sum(singular_audit_charts(f))


def _choose(a, b):
    return comb(a, b) if a >= b >= 0 else 0


def hypersurface_chi(n, k, d):
    """chi(O_X(d)) for a hypersurface X of degree k in P^n"""
    if n < 1 or k < 1:
        raise InvalidInput(f'need n >= 1 and k >= 1, got n = {n}, k = {k}')
    return _choose(d + n, n) - _choose(d - k + n, n)


def chi_tangent_ambient(n, k):
    """chi(T_{P^n}|_X) from the Euler sequence restricted to X"""
    if n < 2:
        raise InvalidInput(f'need n >= 2, got n = {n}')
    return (n + 1) * hypersurface_chi(n, k, 1) - hypersurface_chi(n, k, 0)


def local_model_ext1():
    """dim K[x,y,z,w]/(f, df) for the local model f = x^2*w + x*y - z*w"""
    f = parse_poly(LOCAL_MODEL, LOCAL_MODEL_VARS)
    return quotient_dimension(buchberger(jacobian_ideal(f))).value


def build_ledger():
    f = segre_cubic()
    ambient = chi_tangent_ambient(4, 3)
    chi_os3 = hypersurface_chi(4, 3, 3)
    tau_total = singular_audit(f)
    chi_ts = ambient + tau_total - chi_os3
    h0_ts = 0
    h1_ts = h0_ts - chi_ts
    computed, quoted = Provenance.COMPUTED, Provenance.PAPER_INPUT
    return DeformationLedger(
        chi_tangent_ambient_restricted=ambient,
        chi_OS3=chi_os3,
        tau_total=tau_total,
        chi_TS=chi_ts,
        h0_TS=h0_ts,
        h1_TS=h1_ts,
        dim_ext1=h1_ts + tau_total,
        dim_ext2=0,
        local_ext1=local_model_ext1(),
        provenance={
            'chi_tangent_ambient_restricted': computed,
            'chi_OS3': computed,
            'tau_total': computed,
            'chi_TS': computed,
            'h0_TS': quoted,
            'h1_TS': computed,
            'dim_ext1': computed,
            'dim_ext2': quoted,
            'local_ext1': computed,
        },
    )


def _act_on_point(sigma, point):
    """Move coordinate i to position sigma(i)"""
    moved = [None] * len(point.coords)
    for i, c in enumerate(point.coords):
        moved[sigma(i + 1) - 1] = c
    return ProjectivePoint(tuple(moved))


def node_action_group():
    """Permutation group induced on the ten nodes by permuting the six coordinates"""
    nodes = segre_node_points()
    position = {node: index for index, node in enumerate(nodes, start=1)}
    generators = []
    for i in range(1, 6):
        sigma = Permutation.transposition(6, i, i + 1)
        generators.append(Permutation(tuple(position[_act_on_point(sigma, node)] for node in nodes)))
    return generated_group(generators, len(nodes))


def node_orbit(group, start=1):
    orbit = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for generator in group.generators:
            image = generator(current)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return sorted(orbit)


def aut_segre_order():
    """
    |Aut(S)| = |S_6|, checked against the admissible group of six weights 1/3
    and against the action on the nodes
    """
    weights = validate_weight_data(0, [Fraction(1, 3)] * 6, Mode.SUM_TWO)
    admissible = admissible_group(weights)
    nodes = node_action_group()
    if admissible.order != SEGRE_AUT_ORDER or len(admissible.elements) != SEGRE_AUT_ORDER:
        raise ConsistencyError(f'admissible group of (1/3)^6 has order {admissible.order}')
    if nodes.order != SEGRE_AUT_ORDER or len(node_orbit(nodes)) != nodes.degree:
        raise ConsistencyError('S_6 does not act faithfully and transitively on the nodes')
    return SEGRE_AUT_ORDER


HYPERPLANE_SECTIONS = ('clebsch', 'cayley')


def hyperplane_section(kind):
    """
    Cubic surface cut from the Segre cubic by a hyperplane

    'clebsch' is x5 = 0 (the smooth Clebsch diagonal surface), 'cayley' is
    x0 = x1 (Cayley's four-nodal surface).
    """
    if kind == 'clebsch':
        target = VariableSet.indexed('x', 4)
        xs = Polynomial.generators(target)
        f = _eliminate({'x5': 0, 'x4': -sum(xs, Polynomial.zero(target))}, target)
    elif kind == 'cayley':
        target = VariableSet(('x0', 'x2', 'x3', 'x4'))
        x0, x2, x3, x4 = Polynomial.generators(target)
        f = _eliminate({'x1': x0, 'x5': -(x0 * 2 + x2 + x3 + x4)}, target)
    else:
        raise InvalidInput(f'unknown hyperplane section {kind!r}, expected one of {list(HYPERPLANE_SECTIONS)}')
    return f, singular_audit(f)
