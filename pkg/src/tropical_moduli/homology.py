"""Exact rational linear algebra and Betti numbers.

No floating point: ranks are computed by sparse exact elimination over the
rationals with a Markowitz-style pivot rule that prefers unit pivots, so on
the (mostly +-1) boundary matrices the arithmetic stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chains import ChainComplex, SparseMatrix, build_chain_complex, euler_from_cells
from .graphs import WeightVector


def rank_exact(matrix: SparseMatrix) -> int:
    """Exact rank over the rationals of a sparse matrix.

    Sparse Gaussian elimination; pivots chosen by (Markowitz cost, prefer
    entries of absolute value 1) to limit fill-in and coefficient growth.
    """
    rows: dict[int, dict[int, Fraction]] = {}
    for (r, c), x in matrix.entries.items():
        if x:
            rows.setdefault(r, {})[c] = Fraction(x)
    rank = 0
    while rows:
        col_count: dict[int, int] = {}
        for row in rows.values():
            for c in row:
                col_count[c] = col_count.get(c, 0) + 1
        best = None
        for r, row in rows.items():
            for c, x in row.items():
                cost = (len(row) - 1) * (col_count[c] - 1)
                key = (cost, 0 if abs(x) == 1 else 1, r, c)
                if best is None or key < best[0]:
                    best = (key, r, c)
        _, pr, pc = best
        pivot_row = rows.pop(pr)
        pv = pivot_row[pc]
        rank += 1
        dead = []
        for r, row in rows.items():
            x = row.get(pc)
            if x is None:
                continue
            factor = x / pv
            for c, y in pivot_row.items():
                val = row.get(c, Fraction(0)) - factor * y
                if val:
                    row[c] = val
                elif c in row:
                    del row[c]
            if not row:
                dead.append(r)
        for r in dead:
            del rows[r]
    return rank


def rank_dense_oracle(matrix: SparseMatrix) -> int:
    """Independent naive dense Gaussian elimination, for cross-checking."""
    m = [
        [Fraction(0)] * matrix.ncols for _ in range(matrix.nrows)
    ]
    for (r, c), x in matrix.entries.items():
        m[r][c] = Fraction(x)
    rank = 0
    row = 0
    for col in range(matrix.ncols):
        pivot = next((r for r in range(row, matrix.nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(matrix.nrows):
            if r != row and m[r][col]:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == matrix.nrows:
            break
    return rank


@dataclass(frozen=True)
class BettiProfile:
    """Betti numbers and Euler characteristics of one chain complex."""

    g: int
    w: WeightVector
    filter_name: str
    betti: tuple[int, ...]
    reduced_betti: tuple[int, ...]
    euler: int
    reduced_euler: int

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "w": [f"{x.numerator}/{x.denominator}" for x in self.w],
            "filter": self.filter_name,
            "betti": list(self.betti),
            "reduced_betti": list(self.reduced_betti),
            "euler": self.euler,
            "reduced_euler": self.reduced_euler,
        }

    def to_table(self) -> str:
        lines = [
            f"g = {self.g}, w = ({', '.join(str(x) for x in self.w)}), "
            f"filter = {self.filter_name}",
            f"{'degree':>8} {'betti':>8} {'reduced':>8}",
        ]
        for k, (b, rb) in enumerate(zip(self.betti, self.reduced_betti)):
            lines.append(f"{k:>8} {b:>8} {rb:>8}")
        lines.append(
            f"euler = {self.euler}, reduced euler = {self.reduced_euler}"
        )
        return "\n".join(lines) + "\n"

    def is_point_like(self) -> bool:
        return all(b == 0 for b in self.reduced_betti)


def betti_numbers(cc: ChainComplex) -> BettiProfile:
    """Betti numbers b_k = dim C_k - rank d_k - rank d_{k+1}.

    The reduced variant replaces d_0 = 0 with the augmentation map.  For an
    empty complex all Betti numbers are 0 and the reduced Euler
    characteristic is -1 (the empty space).
    """
    top = cc.top_dimension
    dims = cc.dims()
    ranks = [rank_exact(cc.boundaries[p]) for p in range(1, top + 1)] + [0]
    aug_rank = rank_exact(cc.augmentation)

    betti = []
    reduced = []
    for k in range(top + 1):
        below = ranks[k - 1] if k >= 1 else 0
        betti.append(dims[k] - below - ranks[k])
        below_red = ranks[k - 1] if k >= 1 else aug_rank
        reduced.append(dims[k] - below_red - ranks[k])
    euler = sum((-1) ** k * b for k, b in enumerate(betti))
    reduced_euler = euler - 1
    return BettiProfile(
        g=cc.g,
        w=cc.w,
        filter_name=cc.filter_name,
        betti=tuple(betti),
        reduced_betti=tuple(reduced),
        euler=euler,
        reduced_euler=reduced_euler,
    )


def verify_simple_connectivity_shadow(
    g: int, w: WeightVector, budget: Optional[int] = None, workers: int = 1
) -> dict:
    """Check b_0 = 1 and b_1 = 0, the rational shadow of simple connectivity.

    This is a NECESSARY condition only: vanishing first rational homology
    does not by itself imply a trivial fundamental group.
    """
    if g < 1:
        raise ValueError("the check applies to genus >= 1")
    cc = build_chain_complex(g, w, "all", budget=budget, workers=workers)
    profile = betti_numbers(cc)
    b0 = profile.betti[0] if profile.betti else 0
    b1 = profile.betti[1] if len(profile.betti) > 1 else 0
    report = {
        "g": g,
        "w": [str(x) for x in w],
        "b0": b0,
        "b1": b1,
        "connected": b0 == 1,
        "b1_vanishes": b1 == 0,
        "pass": b0 == 1 and b1 == 0,
        "note": (
            "necessary condition only: b0 = 1 and b1 = 0 over the rationals "
            "do not determine the fundamental group"
        ),
    }
    if not report["pass"]:
        report["warning"] = (
            "COUNTEREXAMPLE CANDIDATE: rational shadow of simple "
            "connectivity failed; this contradicts the expected theory"
        )
    return report
