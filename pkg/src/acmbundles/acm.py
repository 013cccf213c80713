"""ACM decision via step matrices, with certificates."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import step_matrix
from .bbw import acm_by_oracle
from .halfint import HalfInt
from .lie import FlagSpace, dim_flag

__all__ = [
    "AcmVerdict",
    "normalize_initialized",
    "is_acm",
    "initialized_weights",
    "EquivalenceRecord",
    "EquivalenceReport",
    "verify_equivalence",
]


@dataclass(frozen=True)
class AcmVerdict:
    is_acm: bool
    M: HalfInt
    weight: tuple[int, ...]  # the initialized weight the matrix was built from
    twist_applied: int
    witnesses: dict = field(default_factory=dict)  # l -> (block, i, j), only when ACM
    missing: Optional[int] = None
    gaps: tuple[int, ...] = ()  # every missing l, filled only with verbose=True
    step_matrix: Optional[step_matrix.StepMatrix] = field(default=None, repr=False, compare=False)

    def summary(self) -> str:
        if self.is_acm:
            return f"ACM: yes (M={self.M})"
        return f"ACM: no (missing l={self.missing} in [1,{self.M}])"


def normalize_initialized(space: FlagSpace, lam: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Zero the marked coefficient: lambda = lambda' + a_k lambda_k.

    Returns (lambda', a_k).  Negative a_k is allowed.
    """
    lam = tuple(int(a) for a in lam)
    space.check_dominant(lam)
    k = space.k
    twist = lam[k - 1]
    return lam[: k - 1] + (0,) + lam[k:], twist


def is_acm(space: FlagSpace, lam: Sequence[int], verbose: bool = False) -> AcmVerdict:
    """Decide whether E_lambda is ACM: every integer in [1, M] must be an entry.

    Witnesses map each such integer to the first position (in block order,
    row-major) that holds it.
    """
    lam0, twist = normalize_initialized(space, lam)
    sm = step_matrix.build(space, lam0)
    found = {}
    for name, i, j, v in sm.entries():
        if v.is_integer():
            found.setdefault(int(v), (name, i, j))
    top = sm.M.doubled // 2  # floor(M)
    gaps = [l for l in range(1, top + 1) if l not in found]
    if gaps:
        return AcmVerdict(False, sm.M, lam0, twist, missing=gaps[0],
                          gaps=tuple(gaps) if verbose else (), step_matrix=sm)
    witnesses = {l: found[l] for l in range(1, top + 1)}
    return AcmVerdict(True, sm.M, lam0, twist, witnesses=witnesses, step_matrix=sm)


def initialized_weights(space: FlagSpace, sum_bound: int) -> Iterator[tuple[int, ...]]:
    """Initialized dominant weights with sum_{u != k} a_u <= sum_bound, lexicographic."""
    def walk(m, budget):
        if m == 0:
            yield ()
            return
        for a in range(budget + 1):
            for rest in walk(m - 1, budget - a):
                yield (a,) + rest

    k = space.k
    for combo in walk(space.n - 1, sum_bound):
        yield combo[: k - 1] + (0,) + combo[k - 1:]


@dataclass(frozen=True)
class EquivalenceRecord:
    weight: tuple[int, ...]
    acm_theorem: bool
    acm_oracle: bool
    M: HalfInt
    dim: int

    @property
    def agrees(self) -> bool:
        return self.acm_theorem == self.acm_oracle

    def to_json(self) -> str:
        return json.dumps({
            "lambda": list(self.weight),
            "acm_theorem": self.acm_theorem,
            "acm_oracle": self.acm_oracle,
            "M": self.M.to_json(),
            "dim": self.dim,
        }, separators=(",", ":"))


@dataclass
class EquivalenceReport:
    space: FlagSpace
    sum_bound: int
    records: list

    @property
    def mismatches(self) -> list:
        return [r for r in self.records if not r.agrees]

    @property
    def acm_weights(self) -> list:
        return [r.weight for r in self.records if r.acm_theorem]

    def jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)

    def summary(self) -> str:
        bad = self.mismatches
        s = (f"{self.space}: {len(self.records)} weights with sum<= {self.sum_bound}, "
             f"{len(self.acm_weights)} ACM, {len(bad)} mismatches")
        for r in bad:
            s += (f"\n  MISMATCH lambda={list(r.weight)} theorem={r.acm_theorem} "
                  f"oracle={r.acm_oracle} M={r.M} dim={r.dim}")
        return s


def _compare(space: FlagSpace, lam: tuple[int, ...]) -> EquivalenceRecord:
    v = is_acm(space, lam)
    return EquivalenceRecord(lam, v.is_acm, acm_by_oracle(space, lam), v.M, dim_flag(space))


def _compare_chunk(args):
    space, chunk = args
    return [_compare(space, lam) for lam in chunk]


def verify_equivalence(space: FlagSpace, sum_bound: int, jobs: int = 1) -> EquivalenceReport:
    """Run the step-matrix test and the Borel-Bott-Weil scan on every weight up to ``sum_bound``."""
    if sum_bound < 0:
        raise ValueError("sum_bound must be non-negative")
    weights = list(initialized_weights(space, sum_bound))
    if jobs <= 1 or len(weights) < 2:
        records = [_compare(space, lam) for lam in weights]
    else:
        size = max(1, len(weights) // (4 * jobs))
        chunks = [weights[i:i + size] for i in range(0, len(weights), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for part in pool.map(_compare_chunk, [(space, c) for c in chunks]) for r in part]
    return EquivalenceReport(space, sum_bound, records)
