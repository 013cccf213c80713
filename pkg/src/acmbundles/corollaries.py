"""Closed-form ACM criteria for special weight families, checked against :func:`is_acm`.

Each family fixes which coefficients may be non-zero and gives a box (or a
slightly more general region) of coefficients.  For "iff" families the box
is exactly the ACM locus inside the family; for "sufficient" families every
weight in the box is ACM and nothing is claimed outside it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .acm import is_acm
from .lie import FlagSpace, LieType

__all__ = ["WeightFamily", "CorollaryCheck", "families_for", "validate_corollaries"]


@dataclass(frozen=True)
class WeightFamily:
    name: str
    kind: str  # "iff" or "sufficient"
    support: tuple[int, ...]  # 1-based nodes whose coefficient may be non-zero
    upper: dict  # node -> largest value inside the region (sweep limit before margin)
    region: Callable[[dict], bool]
    description: str


@dataclass
class CorollaryCheck:
    family: WeightFamily
    space: FlagSpace
    swept: int = 0
    inside: int = 0
    acm_outside: int = 0
    violations: list = field(default_factory=list)  # (weight, predicted, actual)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} VIOLATIONS"
        line = (f"{self.space} {self.family.name} [{self.family.kind}]: swept {self.swept}, "
                f"{self.inside} in region, {status}")
        for lam, want, got in self.violations[:5]:
            line += f"\n  lambda={list(lam)} predicted={want} is_acm={got}"
        return line


def _box(bounds: dict) -> Callable[[dict], bool]:
    return lambda a: all(0 <= a[u] <= b for u, b in bounds.items())


def families_for(space: FlagSpace) -> list[WeightFamily]:
    n, k, lt = space.n, space.k, space.lie_type
    fams = []
    if k == 1:
        rest = tuple(range(2, n + 1))
        if lt is LieType.B:
            allowed = [(), (n,)]
            desc = "line bundles and the spinor bundle lambda_n"
        elif lt is LieType.D:
            allowed = [(), (n - 1,), (n,)]
            desc = "line bundles and the spinor bundles lambda_{n-1}, lambda_n"
        else:
            allowed = [()]
            desc = "line bundles only"
        sets = [frozenset(s) for s in allowed]

        def only_spinors(a, sets=sets):
            nz = {u for u, x in a.items() if x}
            return all(a[u] == 1 for u in nz) and frozenset(nz) in sets

        fams.append(WeightFamily("k=1 classification", "iff", rest, {u: 1 for u in rest},
                                 only_spinors, desc))
        return fams

    low = tuple(range(1, k))
    if lt is LieType.B and k < n:
        b = 2 * n - 2 * k
        fams.append(WeightFamily("B low nodes", "sufficient", low, {u: b for u in low},
                                 _box({u: b for u in low}), f"a_u <= {b} for u < k"))
        high = tuple(range(k + 1, n + 1))
        bounds = {u: k - 1 for u in range(k + 1, n)} | {n: 2 * k - 1}
        fams.append(WeightFamily("B high nodes", "iff", high, bounds, _box(bounds),
                                 f"a_u <= {k - 1} for k<u<n and a_n <= {2 * k - 1}"))
    elif lt is LieType.B and k == n:
        mid = tuple(range(2, n - 1))
        fams.append(WeightFamily("B k=n middle nodes", "sufficient", mid, {u: 1 for u in mid},
                                 _box({u: 1 for u in mid}), "a_u <= 1 for 2 <= u <= n-2"))
    elif lt is LieType.C:
        b = 2 * n - 2 * k + 1
        fams.append(WeightFamily("C low nodes", "sufficient", low, {u: b for u in low},
                                 _box({u: b for u in low}), f"a_u <= {b} for u < k"))
        high = tuple(range(k + 1, n + 1))
        bounds = {u: k - 1 for u in high}
        fams.append(WeightFamily("C high nodes", "iff", high, bounds, _box(bounds),
                                 f"a_u <= {k - 1} for u > k"))
    elif lt is LieType.D and k < n - 1:
        b = 2 * n - 2 * k - 1
        fams.append(WeightFamily("D low nodes", "sufficient", low, {u: b for u in low},
                                 _box({u: b for u in low}), f"a_u <= {b} for u < k"))
        high = tuple(range(k + 1, n + 1))
        mid = {u: k - 1 for u in range(k + 1, n - 1)}

        def d_high(a, mid=mid):
            if not _box(mid)(a):
                return False
            x, y = a[n - 1], a[n]
            case_a = 0 <= x <= k - 1 and 0 <= y - x <= 2 * k - 1
            case_b = 0 <= y <= k - 1 and 0 <= x - y <= 2 * k - 1
            return case_a or case_b

        upper = mid | {n - 1: 3 * k - 2, n: 3 * k - 2}
        fams.append(WeightFamily("D high nodes", "iff", high, upper, d_high,
                                 f"a_u <= {k - 1} for k<u<n-1 and (a) or (b) on a_(n-1), a_n"))
    elif lt is LieType.D and k == n:
        mid = tuple(range(3, n - 2))
        fams.append(WeightFamily("D k=n middle nodes", "sufficient", mid, {u: 1 for u in mid},
                                 _box({u: 1 for u in mid}), "a_u <= 1 for 3 <= u <= n-3"))
        ends = (1, n - 1)
        fams.append(WeightFamily("D k=n end nodes", "sufficient", ends, {u: n - 4 for u in ends},
                                 _box({u: n - 4 for u in ends}), f"a_1, a_(n-1) <= {n - 4}"))
    return fams


def _check_family(space: FlagSpace, fam: WeightFamily, margin: int) -> CorollaryCheck:
    res = CorollaryCheck(fam, space)
    ranges = [range(fam.upper[u] + margin + 1) for u in fam.support]
    for values in itertools.product(*ranges):
        a = dict(zip(fam.support, values))
        lam = tuple(a.get(u, 0) for u in range(1, space.n + 1))
        inside = fam.region(a)
        got = is_acm(space, lam).is_acm
        res.swept += 1
        res.inside += inside
        if inside and not got:
            res.violations.append((lam, True, got))
        elif not inside and got:
            if fam.kind == "iff":
                res.violations.append((lam, False, got))
            else:
                res.acm_outside += 1
    return res


def validate_corollaries(space: FlagSpace, margin: int = 2) -> list[CorollaryCheck]:
    """Sweep every family that applies to ``space`` out to ``margin`` past its box."""
    return [_check_family(space, fam, margin) for fam in families_for(space)]
