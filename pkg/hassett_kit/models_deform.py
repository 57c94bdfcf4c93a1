from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from hassett_kit.errors import ConsistencyError, InvalidInput


# Projective Models
@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """A point of P^m; coordinates scaled so the first nonzero one is 1"""
    coords: tuple

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise InvalidInput('projective point with all coordinates zero')
        object.__setattr__(self, 'coords', tuple(c / lead for c in coords))

    @property
    def chart(self):
        """Index of the first nonzero coordinate"""
        return next(i for i, c in enumerate(self.coords) if c)

    def drop(self, index):
        return ProjectivePoint(self.coords[:index] + self.coords[index + 1:])

    def affine(self):
        """Coordinates in the chart x_chart = 1, that coordinate removed"""
        k = self.chart
        return self.coords[:k] + self.coords[k + 1:]

    def to_list(self):
        return [str(c) for c in self.coords]

    def __str__(self):
        return '[' + ':'.join(str(c) for c in self.coords) + ']'


@dataclass(frozen=True)
class NodeCertificate:
    point: ProjectivePoint
    on_hypersurface: bool
    all_partials_vanish: bool
    hessian_rank: int
    tyurina: int

    @property
    def is_node(self):
        return self.on_hypersurface and self.all_partials_vanish and self.hessian_rank == len(self.point.coords) - 1

    def to_dict(self):
        return {
            'point': self.point.to_list(),
            'chart': self.point.chart,
            'on_hypersurface': self.on_hypersurface,
            'all_partials_vanish': self.all_partials_vanish,
            'hessian_rank': self.hessian_rank,
            'tyurina': self.tyurina,
            'node': self.is_node,
        }


# Ledger Models
class Provenance(Enum):
    COMPUTED = 'computed'
    PAPER_INPUT = 'paper_input'


@dataclass(frozen=True)
class DeformationLedger:
    """
    Euler characteristic bookkeeping for the first-order deformations of a
    nodal threefold; every entry carries its provenance.
    """
    chi_tangent_ambient_restricted: int
    chi_OS3: int
    tau_total: int
    chi_TS: int
    h0_TS: int
    h1_TS: int
    dim_ext1: int
    dim_ext2: int
    local_ext1: int = 1
    provenance: dict = field(default_factory=dict)

    ENTRIES = ('chi_tangent_ambient_restricted', 'chi_OS3', 'tau_total', 'chi_TS',
               'h0_TS', 'h1_TS', 'dim_ext1', 'dim_ext2', 'local_ext1')

    def __post_init__(self):
        if self.chi_TS + self.chi_OS3 != self.chi_tangent_ambient_restricted + self.tau_total:
            raise ConsistencyError('chi(T_S) + chi(O_S(3)) differs from chi(T_P4|S) + sum of Tyurina numbers')
        if self.h0_TS - self.h1_TS != self.chi_TS:
            raise ConsistencyError('h0(T_S) - h1(T_S) differs from chi(T_S)')
        if self.dim_ext1 != self.h1_TS + self.tau_total:
            raise ConsistencyError('dim Ext1 differs from h1(T_S) + sum of Tyurina numbers')
        missing = [name for name in self.ENTRIES if name not in self.provenance]
        if missing:
            raise ConsistencyError(f'ledger entries without provenance: {missing}')

    def to_dict(self):
        data = {name: getattr(self, name) for name in self.ENTRIES}
        data['provenance'] = {name: self.provenance[name].value for name in self.ENTRIES}
        return data
