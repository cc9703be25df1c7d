# point.py
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple


@dataclass(frozen=True)
class Point:
    coords: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable) -> "Point":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def to_tuple(self):
        return self.coords
