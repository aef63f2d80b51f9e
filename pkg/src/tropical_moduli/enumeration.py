"""Enumeration of isomorphism classes of stable graphs, stratified by edge count.

Strategy: build an inventory of connected unlabeled multigraphs by growing
one edge at a time (add an edge between existing vertices, or attach a new
leaf) with canonical-form deduplication.  Every connected multigraph with
E edges arises this way from one with E - 1 edges, since a multigraph with
no leaf and at least one edge contains a non-bridge edge.  Vertex weights
and markings are then assigned exhaustively on top of each base graph,
filtered by stability, and deduplicated by canonical encoding.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional

from .graphs import (
    CanonicalForm,
    StableGraph,
    WeightVector,
    canonicalize,
    check_moduli_condition,
    is_stable,
)


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration grows past the configured cell budget."""


@dataclass(frozen=True)
class StratumIndex:
    g: int
    w: WeightVector
    edge_count: int

    def __post_init__(self):
        check_moduli_condition(self.g, self.w)
        if not 1 <= self.edge_count <= max_edge_count(self.g, len(self.w)):
            raise ValueError(
                f"edge_count {self.edge_count} outside 1..{max_edge_count(self.g, len(self.w))}"
            )


@dataclass(frozen=True)
class CanonicalCell:
    """One isomorphism class: a canonical representative plus its form."""

    graph: StableGraph
    form: CanonicalForm

    @property
    def dimension(self) -> int:
        return self.graph.num_edges - 1

    @property
    def degenerate(self) -> bool:
        return self.form.edge_sign_degenerate


def max_edge_count(g: int, n: int) -> int:
    """Largest possible edge count of a stable graph: 3g - 3 + n."""
    return 3 * g - 3 + n


@lru_cache(maxsize=None)
def _base_multigraphs(num_edges: int, max_b1: int) -> tuple[StableGraph, ...]:
    """Connected unlabeled multigraphs with `num_edges` edges and b1 <= max_b1.

    Returned as weightless, markingless StableGraphs, one per isomorphism
    class, in canonical encoding order.
    """
    if num_edges == 0:
        return (StableGraph((0,), (), ()),)
    seen: dict[tuple, StableGraph] = {}
    for base in _base_multigraphs(num_edges - 1, max_b1):
        nv = base.num_vertices
        children = []
        # new edge between existing vertices (raises b1 by one)
        if base.b1 < max_b1:
            for u in range(nv):
                for v in range(u, nv):
                    children.append(
                        StableGraph(base.weights, base.edges + ((u, v),), ())
                    )
        # new leaf vertex
        for u in range(nv):
            children.append(
                StableGraph(base.weights + (0,), base.edges + ((u, nv),), ())
            )
        for child in children:
            form = canonicalize(child)
            if form.encoding not in seen:
                seen[form.encoding] = form.graph
    return tuple(seen[k] for k in sorted(seen))


def _weight_assignments(num_vertices: int, total: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `num_vertices` nonnegative integers summing to `total`."""
    if num_vertices == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weight_assignments(num_vertices - 1, total - first):
            yield (first,) + rest


def _stable_classes_on_base(
    base: StableGraph, g: int, w: WeightVector
) -> dict[tuple, CanonicalCell]:
    """All stability-satisfying weight/marking decorations of one base graph."""
    nv = base.num_vertices
    n = len(w)
    val = base.valences()
    extra = g - base.b1
    out: dict[tuple, CanonicalCell] = {}
    for weights in _weight_assignments(nv, extra):
        # deficiency: vertex v needs marking weight strictly above this
        need = [2 - 2 * weights[v] - val[v] for v in range(nv)]
        constrained = [v for v in range(nv) if need[v] >= 0]
        if len(constrained) > n:
            continue  # each constrained vertex requires at least one marking
        for markings in product(range(nv), repeat=n):
            wsum = [0] * nv
            for i, v in enumerate(markings):
                wsum[v] += w[i]
            if any(wsum[v] <= need[v] for v in constrained):
                continue
            graph = StableGraph(weights, base.edges, markings)
            form = canonicalize(graph)
            if form.encoding not in out:
                out[form.encoding] = CanonicalCell(form.graph, form)
    return out


def _stratum_task(args) -> dict[tuple, CanonicalCell]:
    base, g, w_entries = args
    return _stable_classes_on_base(base, g, WeightVector(w_entries))


def enumerate_stratum(
    idx: StratumIndex, workers: int = 1
) -> list[CanonicalCell]:
    """One canonical representative per isomorphism class with the given
    edge count, sorted by canonical encoding."""
    g, w, num_edges = idx.g, idx.w, idx.edge_count
    bases = [
        b
        for b in _base_multigraphs(num_edges, g)
        if g - b.b1 >= 0
    ]
    merged: dict[tuple, CanonicalCell] = {}
    if workers > 1 and len(bases) > 1:
        tasks = [(b, g, tuple(w)) for b in bases]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_stratum_task, tasks):
                merged.update(result)
    else:
        for base in bases:
            merged.update(_stable_classes_on_base(base, g, w))
    return [merged[k] for k in sorted(merged)]


def enumerate_all(
    g: int,
    w: WeightVector,
    budget: Optional[int] = None,
    workers: int = 1,
) -> dict[int, list[CanonicalCell]]:
    """All strata, keyed by edge count from 1 to 3g - 3 + n.

    Raises BudgetExceeded if the running cell total passes `budget`.
    """
    check_moduli_condition(g, w)
    out: dict[int, list[CanonicalCell]] = {}
    total = 0
    for num_edges in range(1, max_edge_count(g, len(w)) + 1):
        cells = enumerate_stratum(StratumIndex(g, w, num_edges), workers=workers)
        total += len(cells)
        if budget is not None and total > budget:
            raise BudgetExceeded(
                f"cell budget {budget} exceeded at edge count {num_edges}"
            )
        out[num_edges] = cells
    return out
