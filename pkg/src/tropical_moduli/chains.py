"""Rational cellular chain complexes of the moduli space and its subcomplexes.

Cells are isomorphism classes of stable graphs with p + 1 edges; a cell is
degenerate (contributes no rational generator) when an automorphism permutes
its edges oddly.  The boundary of a cell contracts each edge in canonical
order with alternating signs, times the sign of the permutation matching
the induced edge order to the canonical order of the target representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .enumeration import CanonicalCell, enumerate_all, max_edge_count
from .graphs import (
    StableGraph,
    WeightVector,
    _permutation_parity,
    canonicalize,
    check_moduli_condition,
    one_ends,
)

FILTER_NAMES = ("all", "lw", "mlw", "q")


class FilterClosureError(ValueError):
    """A subcomplex filter kept a cell but dropped one of its contractions."""


def _predicate(name: str) -> Callable[[StableGraph], bool]:
    if name == "all":
        return lambda g: True
    if name == "lw":
        return lambda g: g.has_loop() or g.has_positive_weight()
    if name == "mlw":
        return lambda g: (
            g.has_loop() or g.has_positive_weight() or g.has_parallel_edges()
        )
    raise ValueError(f"unknown filter {name!r}; expected one of {FILTER_NAMES}")


@dataclass(frozen=True)
class SparseMatrix:
    """Exact sparse matrix with integer/rational entries, dict-of-keys."""

    nrows: int
    ncols: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def row_dicts(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [dict() for _ in range(self.nrows)]
        for (r, c), x in self.entries.items():
            rows[r][c] = x
        return rows

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row: dict[int, dict[int, Fraction]] = {}
        for (r, k), x in self.entries.items():
            by_row.setdefault(r, {})[k] = x
        other_rows: dict[int, dict[int, Fraction]] = {}
        for (k, c), y in other.entries.items():
            other_rows.setdefault(k, {})[c] = y
        out: dict[tuple[int, int], Fraction] = {}
        for r, row in by_row.items():
            for k, x in row.items():
                for c, y in other_rows.get(k, {}).items():
                    key = (r, c)
                    val = out.get(key, Fraction(0)) + x * y
                    if val:
                        out[key] = val
                    elif key in out:
                        del out[key]
        return SparseMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not self.entries

    def to_triplet_text(self) -> str:
        """row col numerator/denominator, one entry per line, sorted."""
        lines = [f"{self.nrows} {self.ncols}"]
        for (r, c) in sorted(self.entries):
            x = Fraction(self.entries[(r, c)])
            lines.append(f"{r} {c} {x.numerator}/{x.denominator}")
        return "\n".join(lines) + "\n"


@dataclass
class ChainComplex:
    """Graded chain groups with exact boundary matrices.

    `basis[p]` lists the non-degenerate cells generating degree p;
    `boundaries[p]` maps C_p -> C_{p-1}.  The complex is augmented:
    `augmentation` is the 1 x dim(C_0) all-ones map to degree -1, used for
    reduced homology.  Degenerate and filtered-out cells carry no generator.
    """

    g: int
    w: WeightVector
    filter_name: str
    basis: dict[int, list[CanonicalCell]]
    boundaries: dict[int, SparseMatrix]
    augmentation: SparseMatrix

    @property
    def top_dimension(self) -> int:
        return max_edge_count(self.g, len(self.w)) - 1

    def dim(self, p: int) -> int:
        return len(self.basis.get(p, []))

    def dims(self) -> list[int]:
        return [self.dim(p) for p in range(self.top_dimension + 1)]

    def verify_d_squared(self) -> None:
        for p in range(1, self.top_dimension + 1):
            upper = self.boundaries.get(p)
            lower = self.boundaries.get(p - 1) if p >= 2 else self.augmentation
            if upper is None or lower is None:
                continue
            if not lower.matmul(upper).is_zero():
                raise AssertionError(f"boundary composition nonzero at degree {p}")


def _kept_encodings(
    strata: dict[int, list[CanonicalCell]],
    filter_name: str,
    w: WeightVector,
) -> dict[int, set]:
    """Encodings of cells in the subcomplex, per edge count (degenerate included)."""
    if filter_name != "q":
        pred = _predicate(filter_name)
        return {
            ne: {c.form.encoding for c in cells if pred(c.graph)}
            for ne, cells in strata.items()
        }
    # bridge-property subcomplex: cells with a 1-end, closed downward
    kept: dict[int, set] = {ne: set() for ne in strata}
    for ne in sorted(strata, reverse=True):
        for cell in strata[ne]:
            enc = cell.form.encoding
            if enc in kept[ne] or one_ends(cell.graph, w):
                kept[ne].add(enc)
                _close_downward(cell.graph, ne, kept)
    return kept


def _close_downward(graph: StableGraph, ne: int, kept: dict[int, set]) -> None:
    if ne <= 1:
        return
    for e in range(graph.num_edges):
        child = graph.contract(e)
        enc = canonicalize(child).encoding
        if enc not in kept[ne - 1]:
            kept[ne - 1].add(enc)
            _close_downward(child, ne - 1, kept)


def build_chain_complex(
    g: int,
    w: WeightVector,
    filter_name: str = "all",
    budget: Optional[int] = None,
    workers: int = 1,
    strata: Optional[dict[int, list[CanonicalCell]]] = None,
    _sign_flip: bool = False,
) -> ChainComplex:
    """Assemble the chain complex of the (sub)complex selected by the filter.

    Checks contraction-closure of the filter and that the boundary squares
    to zero.  `_sign_flip` negates one boundary entry, for harness
    mutation tests only.
    """
    check_moduli_condition(g, w)
    if filter_name not in FILTER_NAMES:
        raise ValueError(f"unknown filter {filter_name!r}")
    if strata is None:
        strata = enumerate_all(g, w, budget=budget, workers=workers)
    kept = _kept_encodings(strata, filter_name, w)

    # contraction-closure check on every kept cell (including degenerate)
    for ne in sorted(strata):
        if ne == 1:
            continue
        for cell in strata[ne]:
            if cell.form.encoding not in kept[ne]:
                continue
            for e in range(cell.graph.num_edges):
                enc = canonicalize(cell.graph.contract(e)).encoding
                if enc not in kept[ne - 1]:
                    raise FilterClosureError(
                        f"filter {filter_name!r} is not closed under edge "
                        f"contraction at edge count {ne}"
                    )

    basis: dict[int, list[CanonicalCell]] = {}
    index: dict[int, dict[tuple, int]] = {}
    for ne, cells in strata.items():
        p = ne - 1
        chosen = [
            c for c in cells if c.form.encoding in kept[ne] and not c.degenerate
        ]
        basis[p] = chosen
        index[p] = {c.form.encoding: i for i, c in enumerate(chosen)}

    boundaries: dict[int, SparseMatrix] = {}
    top = max_edge_count(g, len(w)) - 1
    for p in range(1, top + 1):
        entries: dict[tuple[int, int], Fraction] = {}
        for col, cell in enumerate(basis.get(p, [])):
            for i in range(cell.graph.num_edges):
                child = cell.graph.contract(i)
                form = canonicalize(child)
                if form.edge_sign_degenerate:
                    continue
                row = index.get(p - 1, {}).get(form.encoding)
                if row is None:
                    continue  # target outside the subcomplex basis
                sign = (-1) ** i * _permutation_parity(form.edge_order)
                key = (row, col)
                val = entries.get(key, Fraction(0)) + sign
                if val:
                    entries[key] = val
                elif key in entries:
                    del entries[key]
        boundaries[p] = SparseMatrix(len(basis.get(p - 1, [])), len(basis.get(p, [])), entries)

    if _sign_flip:
        for p in range(1, top + 1):
            if boundaries[p].entries:
                key = sorted(boundaries[p].entries)[0]
                boundaries[p].entries[key] = -boundaries[p].entries[key]
                break

    boundaries[0] = SparseMatrix(0, len(basis.get(0, [])), {})
    augmentation = SparseMatrix(
        1,
        len(basis.get(0, [])),
        {(0, c): Fraction(1) for c in range(len(basis.get(0, [])))},
    )

    cc = ChainComplex(
        g=g,
        w=w,
        filter_name=filter_name,
        basis=basis,
        boundaries=boundaries,
        augmentation=augmentation,
    )
    if not _sign_flip:
        cc.verify_d_squared()
    return cc


def euler_from_cells(cc: ChainComplex) -> int:
    """Unreduced Euler characteristic from chain-group ranks.

    Computed as 1 + reduced Euler characteristic, where the reduced value
    sums (-1)^p dim C_p over the augmented complex (degree -1 contributing
    -1); equivalently, sum over p >= 0 of (-1)^p dim C_p.
    """
    reduced = -1 + sum((-1) ** p * cc.dim(p) for p in range(cc.top_dimension + 1))
    return 1 + reduced
