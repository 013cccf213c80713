"""Step matrices of irreducible homogeneous bundles on G/P(alpha_k).

For k < n the step matrix is a triple of blocks (P, Q, R) with P and Q of
shape k x (n-k) and R an upper triangular k x k block.  For k = n it is a
single upper triangular n x n matrix T.  Each entry is given by a closed
formula in the coefficients a_1..a_n of the highest weight; these are
evaluated here exactly, in doubled units.

Positions below the diagonal of R and T (and on the diagonal for type D)
carry no value.  They are stored as ``None`` so that they can never be
mistaken for an entry equal to 0.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .halfint import HalfInt
from .lie import FlagSpace, LieType, ValidationError

__all__ = [
    "StepMatrix",
    "build",
    "max_entry_closed_form",
    "integer_entries",
    "render",
    "latex_body",
]

Block = tuple[tuple[Optional[HalfInt], ...], ...]


def _partial_sums(a: Sequence[int]):
    prefix = [0]
    for x in a:
        prefix.append(prefix[-1] + x)

    def S(lo: int, hi: int) -> int:
        # sum_{u=lo}^{hi} a_u with 1-based indices; empty when lo > hi
        if lo > hi:
            return 0
        return prefix[hi] - prefix[lo - 1]

    return S


def _check_weight(space: FlagSpace, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(a) for a in lam)
    space.check_dominant(lam)
    if lam[space.k - 1] != 0:
        raise ValidationError(
            f"weight {list(lam)} is not initialized: a_k=a_{space.k}={lam[space.k - 1]} must be 0"
        )
    return lam


@dataclass(frozen=True)
class StepMatrix:
    space: FlagSpace
    weight: tuple[int, ...]
    layout: str  # "blocks" or "triangular"
    blocks: dict  # name -> Block; P, Q, R for "blocks", T for "triangular"
    M: HalfInt

    def entries(self) -> Iterator[tuple[str, int, int, HalfInt]]:
        """Stored entries as (block, i, j, value) with 1-based i, j."""
        for name, rows in self.blocks.items():
            for i, row in enumerate(rows, start=1):
                for j, v in enumerate(row, start=1):
                    if v is not None:
                        yield name, i, j, v

    def __getitem__(self, key):
        name, i, j = key
        return self.blocks[name][i - 1][j - 1]

    def max_entry(self) -> HalfInt:
        return max(v for _, _, _, v in self.entries())

    def shape(self, name: str) -> tuple[int, int]:
        rows = self.blocks[name]
        return len(rows), len(rows[0]) if rows else 0


def _blocks(space: FlagSpace, a: tuple[int, ...]) -> dict:
    n, k, e2 = space.n, space.k, space.e2
    S = _partial_sums(a)
    an = a[n - 1]
    D = space.lie_type is LieType.D
    H = HalfInt

    P = tuple(
        tuple(H(2 * (S(1 + k - i, k + j - 1) + j + i - 1)) for j in range(1, n - k + 1))
        for i in range(1, k + 1)
    )
    if D:
        Q = tuple(
            tuple(
                H(2 * (S(k + 1 - i, n - 2) + S(n + 1 - j, n) + n - k + j + i - 2))
                for j in range(1, n - k + 1)
            )
            for i in range(1, k + 1)
        )
        R = tuple(
            tuple(
                H(2 * (n - k - 1) + S(1 + k - i, n - 2) + S(1 + k - j, n) + j + i) if i < j else None
                for j in range(1, k + 1)
            )
            for i in range(1, k + 1)
        )
    else:
        Q = tuple(
            tuple(
                H(2 * (S(k + 1 - i, n - 1) + S(n + 1 - j, n - 1) + e2 * an + n - k + j + i - 2 + e2))
                for j in range(1, n - k + 1)
            )
            for i in range(1, k + 1)
        )
        R = tuple(
            tuple(
                H(2 * (n - k - 1) + e2 + S(1 + k - i, n - 1) + S(1 + k - j, n - 1) + e2 * an + j + i)
                if i <= j
                else None
                for j in range(1, k + 1)
            )
            for i in range(1, k + 1)
        )
    return {"P": P, "Q": Q, "R": R}


def _triangular(space: FlagSpace, a: tuple[int, ...]) -> dict:
    n, e2 = space.n, space.e2
    S = _partial_sums(a)
    an = a[n - 1]
    if space.lie_type is LieType.D:
        T = tuple(
            tuple(
                HalfInt(2 * (S(n - i + 1, n) + S(n - j + 1, n - 2) + j + i - 2)) if i < j else None
                for j in range(1, n + 1)
            )
            for i in range(1, n + 1)
        )
    else:
        # entries carry the factor 1/(2e): 1 for B, 1/2 for C
        scale = 2 // e2
        T = tuple(
            tuple(
                HalfInt(scale * (S(n + 1 - i, n - 1) + S(n + 1 - j, n - 1) + e2 * an + j + i - 2 + e2))
                if i <= j
                else None
                for j in range(1, n + 1)
            )
            for i in range(1, n + 1)
        )
    return {"T": T}


def max_entry_closed_form(space: FlagSpace, lam: Sequence[int]) -> HalfInt:
    """Largest step-matrix entry, from its closed formula."""
    a = _check_weight(space, lam)
    n, k, e2 = space.n, space.k, space.e2
    S = _partial_sums(a)
    if k < n:
        if space.lie_type is LieType.D:
            return HalfInt(2 * (S(1, n) + S(k + 1, n - 2) + 2 * n - k - 2))
        return HalfInt(2 * (S(1, n - 1) + S(k + 1, n - 1) + e2 * a[n - 1] + 2 * n - k - 2 + e2))
    if space.lie_type is LieType.D:
        return HalfInt(2 * (S(1, n) + S(2, n - 2) + 2 * n - 3))
    return HalfInt((2 // e2) * (2 * S(1, n - 1) + e2 * a[n - 1] + 2 * n - 2 + e2))


def build(space: FlagSpace, lam: Sequence[int]) -> StepMatrix:
    """Step matrix of the initialized weight ``lam`` (a_k must be 0)."""
    a = _check_weight(space, lam)
    if space.k < space.n:
        layout, blocks = "blocks", _blocks(space, a)
    else:
        layout, blocks = "triangular", _triangular(space, a)
    return StepMatrix(space, a, layout, blocks, max_entry_closed_form(space, a))


def integer_entries(sm: StepMatrix) -> Counter:
    """Multiset of the integral entries."""
    return Counter(int(v) for _, _, _, v in sm.entries() if v.is_integer())


# -- rendering -----------------------------------------------------------

def _latex_value(v: Optional[HalfInt]) -> str:
    if v is None:
        return "0"
    if v.is_integer():
        return str(v)
    sign = "-" if v.doubled < 0 else ""
    return f"{sign}\\frac{{{abs(v.doubled)}}}{{2}}"


def latex_body(rows: Block) -> str:
    """Body of a pmatrix, e.g. ``1&2\\\\6&7``."""
    return "\\\\".join("&".join(_latex_value(v) for v in row) for row in rows)


def _plain_block(rows: Block) -> str:
    cells = [["·" if v is None else str(v) for v in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=0)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _json_block(rows: Optional[Block]):
    if rows is None:
        return None
    return [[None if v is None else v.to_json() for v in row] for row in rows]


def to_dict(sm: StepMatrix) -> dict:
    sp = sm.space
    return {
        "type": str(sp.lie_type),
        "n": sp.n,
        "k": sp.k,
        "lambda": list(sm.weight),
        "layout": sm.layout,
        "P": _json_block(sm.blocks.get("P")),
        "Q": _json_block(sm.blocks.get("Q")),
        "R": _json_block(sm.blocks.get("R")),
        "T": _json_block(sm.blocks.get("T")),
        "M": sm.M.to_json(),
    }


def render(sm: StepMatrix, fmt: str = "plain") -> str:
    if fmt == "json":
        return json.dumps(to_dict(sm), separators=(",", ":"))
    sp = sm.space
    if fmt == "plain":
        out = [f"{sp}  lambda={list(sm.weight)}"]
        for name, rows in sm.blocks.items():
            out.append(f"{name}:")
            out.append(_plain_block(rows))
        out.append(f"M={sm.M}")
        return "\n".join(out)
    if fmt == "latex":
        sub = f"{sp.k},\\lambda"
        mats = {
            name: f"{name}_{{{sub}}}^{{{sp.lie_type}}}=\\begin{{pmatrix}}{latex_body(rows)}\\end{{pmatrix}}"
            for name, rows in sm.blocks.items()
        }
        lines = []
        if sm.layout == "blocks":
            lines.append(f"T_{{{sub}}}^{{{sp.lie_type}}}=(P_{{{sub}}}^{{{sp.lie_type}}},"
                         f"Q_{{{sub}}}^{{{sp.lie_type}}},R_{{{sub}}}^{{{sp.lie_type}}}),")
        lines.extend(m + "," for m in mats.values())
        lines.append(f"M_{{{sub}}}^{{{sp.lie_type}}}={_latex_value(sm.M)}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}; expected plain, json or latex")
