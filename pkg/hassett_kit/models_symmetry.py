from dataclasses import dataclass, field
from enum import Enum
from math import factorial, prod

INFINITE = 'infinite'


# Permutation Models
@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}; images[i-1] is the image of i"""
    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f'not a permutation of 1..{len(self.images)}: {self.images}')

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n, i, j):
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        """Composition self o other: apply other first"""
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self):
        inverse = [0] * self.degree
        for i, image in enumerate(self.images, start=1):
            inverse[image - 1] = i
        return Permutation(tuple(inverse))

    def is_identity(self):
        return all(image == i for i, image in enumerate(self.images, start=1))

    def cycles(self):
        seen = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            result.append(tuple(cycle))
        return result

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(map(str, cycle)) + ')' for cycle in cycles)


@dataclass(frozen=True)
class PermGroup:
    """
    A finitely generated subgroup of S_n

    `elements` is the materialized set when it was computed; `certificate`
    names how `order` was obtained.
    """
    degree: int
    generators: tuple
    order: int
    elements: frozenset = None
    certificate: str = 'closure'

    def __contains__(self, permutation):
        if self.elements is None:
            raise ValueError('group elements were not materialized')
        return permutation in self.elements

    def to_dict(self):
        return {
            'degree': self.degree,
            'order': self.order,
            'generators': [str(g) for g in self.generators],
            'certificate': self.certificate,
        }


# Automorphism Models
class AutKind(Enum):
    FINITE_SYMMETRIC_PRODUCT = 'finite_symmetric_product'
    SEMIDIRECT_TORUS = 'semidirect_torus'
    PROJECTIVE_LINEAR = 'projective_linear'
    TORUS_SQUARED = 'torus_squared'
    TRIVIAL = 'trivial'
    TORUS_ONE = 'torus_one'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class AutDescriptor:
    kind: AutKind
    order: object  # int or INFINITE
    factors: tuple = field(default_factory=tuple)
    torus_rank: int = 0

    def __post_init__(self):
        if self.kind is AutKind.FINITE_SYMMETRIC_PRODUCT:
            expected = prod(factorial(k) for k in self.factors)
            if self.order != expected:
                raise ValueError(f'order {self.order} is not the product of factorials of {self.factors}')

    def to_dict(self):
        data = {
            'kind': self.kind.value,
            'order': self.order,
            'factors': list(self.factors),
        }
        if self.torus_rank:
            data['torus_rank'] = self.torus_rank
        return data
