from dataclasses import dataclass
from enum import Enum


# Boundary Models
class Tag(Enum):
    NODAL = 'nodal'
    COINCIDENCE = 'coincidence'
    CONTRACTED = 'contracted'
    NONEXISTENT = 'nonexistent'


NORMAL_BUNDLE_DESCRIPTOR = '(psi_1_dual)^(r-1)'


@dataclass(frozen=True)
class BoundaryDivisor:
    """D_{I,J}: genus-0 tail carrying I, genus-g body carrying J"""
    tail_markings: tuple
    body_markings: tuple
    body_genus: int
    tag: Tag
    tail_genus: int = 0

    @property
    def codimension(self):
        """1 for a divisor, |I| - 1 for a contracted stratum, None when absent"""
        if self.tag is Tag.NONEXISTENT:
            return None
        if self.tag is Tag.CONTRACTED:
            return len(self.tail_markings) - 1
        return 1

    def to_dict(self):
        return {
            'subset': list(self.tail_markings),
            'tag': self.tag.value,
            'codim': self.codimension,
        }

    def __repr__(self):
        return f'<BoundaryDivisor I={set(self.tail_markings)} {self.tag.value}>'


@dataclass(frozen=True)
class ReductionStep:
    """
    One blow-down in the factorization of a reduction morphism

    `tail` is the side of the divisor whose weights sum to at most one; it
    collapses to a stratum of codimension |tail| - 1.
    """
    divisor: BoundaryDivisor
    tail: tuple

    @property
    def r(self):
        return len(self.tail)

    @property
    def image_codimension(self):
        return self.r - 1

    @property
    def normal_bundle_descriptor(self):
        return NORMAL_BUNDLE_DESCRIPTOR

    def to_dict(self):
        return {
            'subset': list(self.tail),
            'tag': Tag.CONTRACTED.value,
            'codim': self.image_codimension,
            'normal_bundle': self.normal_bundle_descriptor,
        }
