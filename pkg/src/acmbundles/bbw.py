"""Borel-Bott-Weil computations on G/P(alpha_k).

Everything here works directly with the weight lambda + rho - t lambda_k
and its pairings against the positive roots.  Nothing in this module looks
at step matrices; it is the ground truth the step-matrix criterion is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Sequence, Union

import numpy as np

from .lie import (
    EpsilonWeight,
    FlagSpace,
    LieType,
    Root,
    ValidationError,
    dim_flag,
    from_epsilon,
    fundamental_weight,
    positive_roots,
    rho,
    root_matrix,
    to_epsilon,
)

__all__ = [
    "Singular",
    "Regular",
    "Cohomology",
    "twisted_weight",
    "classify",
    "dominant_representative",
    "weyl_dimension",
    "cohomology",
    "twist_window",
    "twist_profile",
    "singular_twists",
    "acm_by_oracle",
]


@dataclass(frozen=True)
class Singular:
    witness: Root


@dataclass(frozen=True)
class Regular:
    index: int


Classification = Union[Singular, Regular]


@dataclass(frozen=True)
class Cohomology:
    """Non-vanishing cohomology of E_lambda(-t): H^degree = G-module of ``weight``.

    ``degree`` is None when all cohomology vanishes.
    """

    degree: Optional[int]
    weight: Optional[tuple[int, ...]] = None
    dimension: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None


def twisted_weight(space: FlagSpace, lam: Sequence[int], t: int) -> EpsilonWeight:
    """lambda + rho - t * lambda_k in e-coordinates."""
    space.check_dominant(tuple(lam))
    return to_epsilon(space, lam) + rho(space) - t * fundamental_weight(space, space.k)


def classify(space: FlagSpace, mu: EpsilonWeight) -> Classification:
    if len(mu) != space.n:
        raise ValidationError(f"dimension mismatch: {len(mu)} vs n={space.n}")
    p = root_matrix(space) @ np.asarray(mu.doubled, dtype=np.int64)
    zeros = np.flatnonzero(p == 0)
    if zeros.size:
        return Singular(positive_roots(space)[zeros[0]])
    return Regular(int((p < 0).sum()))


def dominant_representative(space: FlagSpace, mu: EpsilonWeight) -> tuple[EpsilonWeight, int]:
    """Weyl-group conjugate of a regular weight in the dominant chamber.

    Returns the conjugate together with the number of sign changes used.
    The Weyl group of B_n and C_n is all signed permutations; for D_n only
    an even number of sign changes is allowed, so the sign of the smallest
    coordinate may have to stay negative.
    """
    if isinstance(classify(space, mu), Singular):
        raise ValidationError(f"{mu} is singular; it has no regular dominant conjugate")
    d = mu.doubled
    flips = sum(1 for x in d if x < 0)
    out = sorted((abs(x) for x in d), reverse=True)
    if space.lie_type is LieType.D and flips % 2:
        # an odd number of flips is compensated on the last coordinate
        out[-1] = -out[-1]
        flips += 1
    return EpsilonWeight(tuple(out)), flips


def weyl_dimension(space: FlagSpace, lam_g: Sequence[int]) -> int:
    """Dimension of the irreducible G-module with dominant highest weight lam_g."""
    lam_g = tuple(int(a) for a in lam_g)
    if len(lam_g) != space.n:
        raise ValidationError(f"weight has {len(lam_g)} coefficients, expected n={space.n}")
    if any(a < 0 for a in lam_g):
        raise ValidationError(f"weight {list(lam_g)} is not dominant for G")
    R = root_matrix(space)
    r = rho(space)
    num = R @ np.asarray((to_epsilon(space, lam_g) + r).doubled, dtype=np.int64)
    den = R @ np.asarray(r.doubled, dtype=np.int64)
    value = Fraction(1)
    for a, b in zip(num.tolist(), den.tolist()):
        value *= Fraction(a, b)
    if value.denominator != 1:
        raise ArithmeticError(f"Weyl dimension product for {list(lam_g)} is not integral: {value}")
    return int(value)


def cohomology(space: FlagSpace, lam: Sequence[int], t: int = 0) -> Cohomology:
    """Cohomology of the bundle with highest weight lambda - t*lambda_k."""
    mu = twisted_weight(space, lam, t)
    c = classify(space, mu)
    if isinstance(c, Singular):
        return Cohomology(None)
    dom, _ = dominant_representative(space, mu)
    weight = tuple(a - 1 for a in from_epsilon(space, dom))
    return Cohomology(c.index, weight, weyl_dimension(space, weight))


# -- scanning over twists -------------------------------------------------

def _affine_pairings(space: FlagSpace, lam: Sequence[int]):
    """Pairings of lambda + rho - t lambda_k as base - t * slope (doubled units)."""
    R = root_matrix(space)
    base = R @ np.asarray(twisted_weight(space, lam, 0).doubled, dtype=np.int64)
    slope = R @ np.asarray(fundamental_weight(space, space.k).doubled, dtype=np.int64)
    return base, slope


def twist_window(space: FlagSpace, lam: Sequence[int]) -> tuple[int, int]:
    """Integers t outside [lo, hi] give index 0 (t < lo) or index dim (t > hi).

    Radical roots pair with lambda_k positively, so their pairings decrease
    in t and vanish at base/slope; the remaining pairings do not depend on t.
    The window is the integer hull of those crossing points.
    """
    base, slope = _affine_pairings(space, lam)
    rad = slope != 0
    crossings = [Fraction(int(b), int(s)) for b, s in zip(base[rad], slope[rad])]
    return ceil(min(crossings)), floor(max(crossings))


def twist_profile(space: FlagSpace, lam: Sequence[int], ts) -> tuple[np.ndarray, np.ndarray]:
    """For each t in ``ts``: (is singular, number of negative pairings)."""
    base, slope = _affine_pairings(space, lam)
    ts = np.asarray(ts, dtype=np.int64)
    p = base[:, None] - slope[:, None] * ts[None, :]
    return (p == 0).any(axis=0), (p < 0).sum(axis=0)


def singular_twists(space: FlagSpace, lam: Sequence[int]) -> list[int]:
    """All integers t with lambda + rho - t lambda_k singular."""
    lo, hi = twist_window(space, lam)
    ts = np.arange(lo, hi + 1)
    sing, _ = twist_profile(space, lam, ts)
    return [int(t) for t in ts[sing]]


def acm_by_oracle(space: FlagSpace, lam: Sequence[int]) -> bool:
    """ACM test by scanning every twist: each must be singular or of index 0 or dim."""
    lam = tuple(int(a) for a in lam)
    space.check_dominant(lam)
    if lam[space.k - 1] != 0:
        raise ValidationError(f"weight {list(lam)} is not initialized: a_{space.k} must be 0")
    lo, hi = twist_window(space, lam)
    sing, index = twist_profile(space, lam, np.arange(lo, hi + 1))
    dim = dim_flag(space)
    return bool(np.all(sing | (index == 0) | (index == dim)))
