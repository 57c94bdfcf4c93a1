from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


# Weight Models
class Mode(Enum):
    STRICT = 'strict'
    SUM_TWO = 'sum_two'


@dataclass(frozen=True, order=True)
class RationalWeight:
    """A marking weight 0 < value <= 1, stored in lowest terms"""
    value: Fraction

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f'<RationalWeight {self.value}>'


@dataclass(frozen=True)
class WeightData:
    genus: int
    weights: tuple
    mode: Mode = Mode.STRICT

    @property
    def n(self):
        return len(self.weights)

    @property
    def values(self):
        """Weights as plain fractions, in marking order"""
        return tuple(w.value for w in self.weights)

    def weight(self, label):
        """Weight of marking `label` (1-based)"""
        return self.weights[label - 1].value

    def subset_sum(self, labels):
        return sum((self.weights[i - 1].value for i in labels), Fraction(0))

    @property
    def total(self):
        return sum(self.values, Fraction(0))

    def relabel(self, images):
        """Weights after moving marking i to position images[i-1]"""
        moved = [None] * self.n
        for i, image in enumerate(images):
            moved[image - 1] = self.weights[i]
        return WeightData(self.genus, tuple(moved), self.mode)

    def to_dict(self):
        return {
            'genus': self.genus,
            'mode': self.mode.value,
            'weights': [str(w) for w in self.weights],
        }

    def __repr__(self):
        return f'<WeightData g={self.genus} {[str(w) for w in self.weights]} {self.mode.value}>'
