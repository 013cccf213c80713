"""Exact arithmetic in (1/2)Z.

A :class:`HalfInt` stores twice its value as a Python integer, so every
operation is exact.  Only the operations that keep us inside (1/2)Z are
provided; anything else (multiplying two half-integers, dividing) is an
error rather than a silent promotion to a float or Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Integral


@total_ordering
class HalfInt:
    __slots__ = ("doubled",)

    def __init__(self, doubled: int):
        if not isinstance(doubled, Integral):
            raise TypeError(f"doubled value must be an integer, got {doubled!r}")
        self.doubled = int(doubled)

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Build from an int, a HalfInt or a Fraction with denominator 1 or 2."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, Integral):
            return cls(2 * int(value))
        f = Fraction(value)
        if f.denominator not in (1, 2):
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(2 * f.numerator // f.denominator)

    # -- predicates / conversions -------------------------------------
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __int__(self) -> int:
        if self.doubled % 2:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __index__(self) -> int:
        return int(self)

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    @property
    def numerator(self) -> int:
        return self.doubled // 2 if self.doubled % 2 == 0 else self.doubled

    @property
    def denominator(self) -> int:
        return 1 if self.doubled % 2 == 0 else 2

    def halve(self) -> "HalfInt":
        if self.doubled % 2:
            raise ValueError(f"cannot halve {self} inside (1/2)Z")
        return HalfInt(self.doubled // 2)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, HalfInt):
            return other.doubled
        if isinstance(other, Integral):
            return 2 * int(other)
        return None

    def __add__(self, other):
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return HalfInt(self.doubled + d)

    __radd__ = __add__

    def __sub__(self, other):
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return HalfInt(self.doubled - d)

    def __rsub__(self, other):
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return HalfInt(d - self.doubled)

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __abs__(self):
        return HalfInt(abs(self.doubled))

    def __mul__(self, other):
        if isinstance(other, Integral):
            return HalfInt(self.doubled * int(other))
        return NotImplemented

    __rmul__ = __mul__

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        d = self._coerce(other)
        if d is None:
            if isinstance(other, Fraction):
                return self.to_fraction() == other
            return NotImplemented
        return self.doubled == d

    def __lt__(self, other):
        d = self._coerce(other)
        if d is None:
            if isinstance(other, Fraction):
                return self.to_fraction() < other
            return NotImplemented
        return self.doubled < d

    def __hash__(self):
        # equal to hash(int) for integral values so HalfInt(4) and 2 collide
        if self.doubled % 2 == 0:
            return hash(self.doubled // 2)
        return hash(Fraction(self.doubled, 2))

    def __bool__(self):
        return self.doubled != 0

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def to_json(self) -> dict:
        return {"num": self.numerator, "den": self.denominator}
