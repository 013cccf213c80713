"""Listing every initialized irreducible homogeneous ACM bundle on G/P(alpha_k).

An ACM weight has all integers 1..M among its step-matrix entries, and there
are only dim(G/P) entries, so M <= dim.  M is affine in the coefficients
with positive slope in every a_u (u != k), which leaves finitely many
candidates.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .acm import is_acm
from .lie import FlagSpace, LieType, dim_flag
from .step_matrix import max_entry_closed_form

__all__ = [
    "EnumerationResult",
    "m_coefficients",
    "candidates",
    "enumerate_acm",
    "spaces_in_range",
    "atlas_rows",
    "emit_atlas",
    "ATLAS_COLUMNS",
]


@dataclass(frozen=True)
class EnumerationResult:
    space: FlagSpace
    acm_weights: tuple[tuple[int, ...], ...]
    candidates_scanned: int
    bound_used: str


def m_coefficients(space: FlagSpace) -> tuple[int, dict]:
    """M as an affine function, doubled: (constant, {u: slope of a_u}) for u != k."""
    n, k = space.n, space.k
    zero = (0,) * n
    c0 = max_entry_closed_form(space, zero).doubled
    slopes = {}
    for u in range(1, n + 1):
        if u == k:
            continue
        unit = tuple(1 if v == u else 0 for v in range(1, n + 1))
        slopes[u] = max_entry_closed_form(space, unit).doubled - c0
    return c0, slopes


def candidates(space: FlagSpace) -> Iterator[tuple[int, ...]]:
    """Initialized dominant weights with M <= dim, in lexicographic order."""
    c0, slopes = m_coefficients(space)
    if any(s <= 0 for s in slopes.values()):
        raise ArithmeticError(f"M has a non-positive coefficient on {space}: {slopes}")
    budget = 2 * dim_flag(space) - c0
    n, k = space.n, space.k

    def walk(u, left):
        if u > n:
            yield ()
            return
        if u == k:
            for rest in walk(u + 1, left):
                yield (0,) + rest
            return
        s = slopes[u]
        for a in range(left // s + 1 if left >= 0 else 0):
            for rest in walk(u + 1, left - a * s):
                yield (a,) + rest

    yield from walk(1, budget)


def _acm_flags(args):
    space, chunk = args
    return [is_acm(space, lam).is_acm for lam in chunk]


def enumerate_acm(space: FlagSpace, jobs: int = 1) -> EnumerationResult:
    cands = list(candidates(space))
    if jobs <= 1 or len(cands) < 2:
        flags = [is_acm(space, lam).is_acm for lam in cands]
    else:
        size = max(1, len(cands) // (4 * jobs))
        chunks = [cands[i:i + size] for i in range(0, len(cands), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = [f for part in pool.map(_acm_flags, [(space, c) for c in chunks]) for f in part]
    found = tuple(lam for lam, ok in zip(cands, flags) if ok)
    return EnumerationResult(space, found, len(cands), f"M <= dim = {dim_flag(space)}")


def spaces_in_range(types: Iterable[str], ranks: Iterable[int], ks: Iterable[int] | None = None):
    """Every valid (type, n, k) in the given ranges; D's k = n-1 is skipped (same as k = n)."""
    out = []
    for t in types:
        lt = LieType(t)
        for n in ranks:
            if n < (4 if lt is LieType.D else 2):
                continue
            for k in (ks if ks is not None else range(1, n + 1)):
                if not 1 <= k <= n or (lt is LieType.D and k == n - 1):
                    continue
                out.append(FlagSpace(lt, n, k))
    return out


ATLAS_COLUMNS = ("type", "n", "k", "lambda", "M_num", "M_den", "dim", "acm")


def atlas_rows(spaces: Sequence[FlagSpace], jobs: int = 1) -> Iterator[dict]:
    for sp in spaces:
        for lam in enumerate_acm(sp, jobs=jobs).acm_weights:
            M = max_entry_closed_form(sp, lam)
            yield {
                "type": str(sp.lie_type),
                "n": sp.n,
                "k": sp.k,
                "lambda": json.dumps(list(lam), separators=(",", ":")),
                "M_num": M.numerator,
                "M_den": M.denominator,
                "dim": dim_flag(sp),
                "acm": True,
            }


def format_atlas(rows: Iterable[dict], fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=ATLAS_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "acm": "true" if r["acm"] else "false"})
        return buf.getvalue()
    if fmt in ("json", "jsonl"):
        return "".join(
            json.dumps({**r, "lambda": json.loads(r["lambda"])}, separators=(",", ":")) + "\n"
            for r in rows
        )
    raise ValueError(f"unknown atlas format {fmt!r}; expected csv or jsonl")


def emit_atlas(spaces: Sequence[FlagSpace], path: str | os.PathLike, fmt: str = "csv", jobs: int = 1) -> str:
    """Write one record per (space, ACM weight) to ``path`` (overwriting) and return the text."""
    text = format_atlas(atlas_rows(spaces, jobs=jobs), fmt)
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write atlas to {os.fspath(path)}: {exc.strerror}") from exc
    return text
