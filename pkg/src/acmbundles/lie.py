"""Root data and weight arithmetic for the classical types B, C and D.

Weights are written in the orthonormal basis e_1, ..., e_n in which

* B_n has positive roots e_i - e_j, e_i + e_j (i < j) and e_i,
* C_n has positive roots e_i - e_j, e_i + e_j (i < j) and 2e_i,
* D_n has positive roots e_i - e_j, e_i + e_j (i < j).

With ``e`` equal to 1/2, 1, 0 for B, C, D the fundamental weights are
``lambda_i = e_1 + ... + e_i`` for ``i <= n - 2 + 2e`` together with

* ``lambda_n = e (e_1 + ... + e_n)`` for B and C,
* ``lambda_{n-1} = (e_1 + ... + e_{n-1} - e_n) / 2`` for D,
* ``lambda_n = (e_1 + ... + e_n) / 2`` for D,

and ``rho = sum_i lambda_i`` has i-th coordinate ``n + e - i``.

Coordinates are half-integers, so an :class:`EpsilonWeight` keeps the
doubled coordinates as plain ints.  The bilinear form is the Euclidean dot
product in this basis.  It is a positive multiple of the Killing form, which
is all that matters for the sign and vanishing tests done here.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .halfint import HalfInt

__all__ = [
    "ValidationError",
    "LieType",
    "FlagSpace",
    "Root",
    "EpsilonWeight",
    "positive_roots",
    "root_matrix",
    "radical_roots",
    "fundamental_weight",
    "rho",
    "pairing",
    "to_epsilon",
    "from_epsilon",
    "dim_flag",
]


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class LieType(str, enum.Enum):
    B = "B"
    C = "C"
    D = "D"

    @property
    def e2(self) -> int:
        """Twice the constant e (1/2, 1, 0 for B, C, D)."""
        return {"B": 1, "C": 2, "D": 0}[self.value]

    def __str__(self):
        return self.value


_MIN_RANK = {LieType.B: 2, LieType.C: 2, LieType.D: 4}

_LOW_RANK_NOTE = {
    ("B", 1): "B_1 ≅ A_1",
    ("C", 1): "C_1 ≅ A_1",
    ("D", 1): "D_1 is abelian",
    ("D", 2): "D_2 ≅ A_1×A_1",
    ("D", 3): "D_3 ≅ A_3",
}


@dataclass(frozen=True)
class FlagSpace:
    """The isotropic Grassmannian G/P(alpha_k) with G of type B_n, C_n or D_n.

    For type D the node k = n - 1 is replaced by k = n (the two quotients are
    isomorphic under the diagram automorphism exchanging the last two nodes).
    ``remapped`` records that this happened; use :meth:`weight` to translate
    a coefficient vector written for the original node.
    """

    lie_type: LieType
    n: int
    k: int
    remapped: bool = field(default=False, compare=False)

    def __post_init__(self):
        try:
            lt = LieType(str(self.lie_type).upper())
        except ValueError:
            raise ValidationError(f"unknown Lie type {self.lie_type!r}; expected B, C or D") from None
        object.__setattr__(self, "lie_type", lt)
        n, k = int(self.n), int(self.k)
        if n < _MIN_RANK[lt]:
            note = _LOW_RANK_NOTE.get((lt.value, n), "")
            msg = f"{lt}_n with n<{_MIN_RANK[lt]} unsupported"
            if note:
                msg += f"; {note}"
            raise ValidationError(msg)
        if not 1 <= k <= n:
            raise ValidationError(f"marked node k={k} outside [1, {n}]")
        if lt is LieType.D and k == n - 1:
            k = n
            object.__setattr__(self, "remapped", True)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)

    @property
    def e2(self) -> int:
        return self.lie_type.e2

    def weight(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        """Validate a full-length coefficient vector and put it in this space's labelling.

        When the space was remapped from k = n-1 the coefficients of
        lambda_{n-1} and lambda_n are exchanged.
        """
        w = tuple(int(a) for a in coeffs)
        if len(w) != self.n:
            raise ValidationError(f"weight has {len(w)} coefficients, expected n={self.n}")
        if self.remapped:
            w = w[:-2] + (w[-1], w[-2])
        return w

    def check_dominant(self, w: Sequence[int]) -> None:
        """Raise unless a_u >= 0 for every u != k."""
        if len(w) != self.n:
            raise ValidationError(f"weight has {len(w)} coefficients, expected n={self.n}")
        bad = [u + 1 for u, a in enumerate(w) if u + 1 != self.k and a < 0]
        if bad:
            raise ValidationError(
                f"weight {list(w)} not dominant off node k={self.k}: a_u<0 for u in {bad}"
            )

    def __str__(self):
        return f"{self.lie_type}_{self.n}/P(α_{self.k})"


@dataclass(frozen=True, order=True)
class Root:
    """A positive root; ``kind`` is one of '-', '+', 'short', 'long'.

    '-' is e_i - e_j, '+' is e_i + e_j (i < j), 'short' is e_i (type B) and
    'long' is 2e_i (type C).  For the last two ``j`` equals ``i``.
    """

    kind: str
    i: int
    j: int

    def vector(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        if self.kind == "-":
            v[self.i - 1], v[self.j - 1] = 1, -1
        elif self.kind == "+":
            v[self.i - 1], v[self.j - 1] = 1, 1
        elif self.kind == "short":
            v[self.i - 1] = 1
        else:
            v[self.i - 1] = 2
        return tuple(v)

    def __str__(self):
        if self.kind == "-":
            return f"e{self.i}-e{self.j}"
        if self.kind == "+":
            return f"e{self.i}+e{self.j}"
        if self.kind == "short":
            return f"e{self.i}"
        return f"2e{self.i}"


@dataclass(frozen=True)
class EpsilonWeight:
    """A vector of half-integers, stored doubled."""

    doubled: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable) -> "EpsilonWeight":
        return cls(tuple(HalfInt.of(v).doubled for v in values))

    @property
    def coords(self) -> tuple[HalfInt, ...]:
        return tuple(HalfInt(d) for d in self.doubled)

    def __len__(self):
        return len(self.doubled)

    def __getitem__(self, i):
        return HalfInt(self.doubled[i])

    def _check(self, other):
        if len(other.doubled) != len(self.doubled):
            raise ValidationError(f"dimension mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: "EpsilonWeight") -> "EpsilonWeight":
        self._check(other)
        return EpsilonWeight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "EpsilonWeight") -> "EpsilonWeight":
        self._check(other)
        return EpsilonWeight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self):
        return EpsilonWeight(tuple(-a for a in self.doubled))

    def __mul__(self, c: int) -> "EpsilonWeight":
        return EpsilonWeight(tuple(c * a for a in self.doubled))

    __rmul__ = __mul__

    def dot(self, other: "EpsilonWeight"):
        """Euclidean product; a multiple of 1/4 in general, returned as a Fraction."""
        self._check(other)
        return Fraction(sum(a * b for a, b in zip(self.doubled, other.doubled)), 4)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@lru_cache(maxsize=None)
def _positive_roots(lie_type: LieType, n: int) -> tuple[Root, ...]:
    roots = [Root("-", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    roots += [Root("+", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if lie_type is LieType.B:
        roots += [Root("short", i, i) for i in range(1, n + 1)]
    elif lie_type is LieType.C:
        roots += [Root("long", i, i) for i in range(1, n + 1)]
    return tuple(roots)


def positive_roots(space: FlagSpace) -> tuple[Root, ...]:
    """Positive roots in canonical order: e_i-e_j, then e_i+e_j, then e_i / 2e_i."""
    return _positive_roots(space.lie_type, space.n)


@lru_cache(maxsize=None)
def _root_matrix(lie_type: LieType, n: int) -> np.ndarray:
    m = np.array([r.vector(n) for r in _positive_roots(lie_type, n)], dtype=np.int64)
    m.setflags(write=False)
    return m


def root_matrix(space: FlagSpace) -> np.ndarray:
    """Positive roots as rows of an integer matrix, in canonical order."""
    return _root_matrix(space.lie_type, space.n)


def fundamental_weight(space: FlagSpace, i: int) -> EpsilonWeight:
    n = space.n
    if not 1 <= i <= n:
        raise ValidationError(f"fundamental weight index {i} outside [1, {n}]")
    lt = space.lie_type
    if lt is LieType.B and i == n:
        return EpsilonWeight((1,) * n)
    if lt is LieType.D and i >= n - 1:
        return EpsilonWeight((1,) * (n - 1) + ((-1,) if i == n - 1 else (1,)))
    return EpsilonWeight((2,) * i + (0,) * (n - i))


def rho(space: FlagSpace) -> EpsilonWeight:
    n, e2 = space.n, space.e2
    return EpsilonWeight(tuple(2 * (n - i) + e2 for i in range(1, n + 1)))


def pairing(mu: EpsilonWeight, alpha: Root) -> HalfInt:
    """(mu, alpha) for the Euclidean form in the e-basis."""
    if max(alpha.i, alpha.j) > len(mu):
        raise ValidationError(f"root {alpha} does not fit in dimension {len(mu)}")
    v = alpha.vector(len(mu))
    return HalfInt(sum(d * c for d, c in zip(mu.doubled, v)))


def to_epsilon(space: FlagSpace, w: Sequence[int]) -> EpsilonWeight:
    """sum_i a_i lambda_i in e-coordinates."""
    n = space.n
    if len(w) != n:
        raise ValidationError(f"weight has {len(w)} coefficients, expected n={n}")
    acc = [0] * n
    for i, a in enumerate(w, start=1):
        if a:
            for p, d in enumerate(fundamental_weight(space, i).doubled):
                acc[p] += a * d
    return EpsilonWeight(tuple(acc))


def from_epsilon(space: FlagSpace, mu: EpsilonWeight) -> tuple[int, ...]:
    """Inverse of :func:`to_epsilon`; raises if ``mu`` is not in the weight lattice."""
    n, d = space.n, mu.doubled
    if len(d) != n:
        raise ValidationError(f"dimension mismatch: {len(d)} vs n={n}")
    lt = space.lie_type
    parities = {x % 2 for x in d}
    if lt is LieType.C and parities != {0}:
        raise ValidationError(f"{mu} is not in the C_{n} weight lattice (coordinates must be integers)")
    if len(parities) > 1:
        raise ValidationError(f"{mu} is not in the {lt}_{n} weight lattice (mixed integer/half-integer coordinates)")
    # a_i = c_i - c_{i+1} for the leading nodes, in doubled units
    a = [(d[i] - d[i + 1]) // 2 for i in range(n - 1)]
    if lt is LieType.B:
        a.append(d[-1])
    elif lt is LieType.C:
        a.append(d[-1] // 2)
    else:
        a.append((d[-2] + d[-1]) // 2)
    return tuple(a)


def radical_roots(space: FlagSpace) -> tuple[Root, ...]:
    """Positive roots pairing non-trivially with lambda_k."""
    lam = np.array(fundamental_weight(space, space.k).doubled, dtype=np.int64)
    mask = root_matrix(space) @ lam != 0
    return tuple(r for r, m in zip(positive_roots(space), mask) if m)


def dim_flag(space: FlagSpace) -> int:
    n, k = space.n, space.k
    if space.lie_type is LieType.D:
        return k * (4 * n - 1 - 3 * k) // 2
    return k * (4 * n + 1 - 3 * k) // 2
