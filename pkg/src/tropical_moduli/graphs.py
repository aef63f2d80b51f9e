"""Weighted marked multigraphs: stability, contraction, canonical forms.

A graph here is a connected multigraph (loops and parallel edges allowed)
with a nonnegative integer weight on each vertex and a marking function
sending each of n marking labels to a vertex.  The genus is the first
Betti number of the graph plus the total vertex weight.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Iterator, Optional, Sequence


class WeightVector:
    """An ordered vector of rational marking weights, each in (0, 1]."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        entries = tuple(Fraction(e) for e in entries)
        if not entries:
            raise ValueError("weight vector must have at least one entry")
        for e in entries:
            if not (0 < e <= 1):
                raise ValueError(f"weight {e} outside (0, 1]")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"WeightVector({list(self.entries)!r})"

    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def satisfies_moduli_condition(self, g: int) -> bool:
        """Whether 2g - 2 + sum(w) > 0, the condition for the space to exist."""
        return 2 * g - 2 + self.total() > 0


def check_moduli_condition(g: int, w: WeightVector) -> None:
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if not w.satisfies_moduli_condition(g):
        raise ValueError(
            f"invalid (g, w): need 2g - 2 + sum(w) > 0, got "
            f"{2 * g - 2 + w.total()}"
        )


@dataclass(frozen=True)
class StableGraph:
    """A connected vertex-weighted marked multigraph.

    vertices are 0..num_vertices-1; `weights[v]` is the weight of vertex v;
    `edges` is a tuple of sorted pairs (u, v) with u <= v, loops as (v, v);
    `markings[i]` is the vertex carrying marking label i.
    """

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    markings: tuple[int, ...]

    def __post_init__(self):
        nv = len(self.weights)
        if nv == 0:
            raise ValueError("graph must have at least one vertex")
        for u, v in self.edges:
            if not (0 <= u <= v < nv):
                raise ValueError(f"bad edge ({u}, {v})")
        for v in self.markings:
            if not 0 <= v < nv:
                raise ValueError(f"bad marking target {v}")
        if any(h < 0 for h in self.weights):
            raise ValueError("vertex weights must be nonnegative")
        if not self._connected():
            raise ValueError("graph must be connected")

    # -- basic invariants -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.weights)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def b1(self) -> int:
        return len(self.edges) - len(self.weights) + 1

    @property
    def genus(self) -> int:
        return self.b1 + sum(self.weights)

    def _connected(self) -> bool:
        nv = len(self.weights)
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        root = find(0)
        return all(find(v) == root for v in range(nv))

    def valences(self) -> tuple[int, ...]:
        val = [0] * self.num_vertices
        for u, v in self.edges:
            val[u] += 1
            val[v] += 1  # a loop contributes twice to its vertex
        return tuple(val)

    def marks_at(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, mv in enumerate(self.markings) if mv == v)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def has_parallel_edges(self) -> bool:
        return len(set(self.edges)) < len(self.edges)

    def has_positive_weight(self) -> bool:
        return any(h > 0 for h in self.weights)

    # -- morphisms ---------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "StableGraph":
        """Apply a vertex permutation (old label -> new label)."""
        nv = self.num_vertices
        inv = [0] * nv
        for old, new in enumerate(perm):
            inv[new] = old
        weights = tuple(self.weights[inv[v]] for v in range(nv))
        edges = tuple(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges
        )
        markings = tuple(perm[v] for v in self.markings)
        return StableGraph(weights, edges, markings)

    def contract(self, e: int) -> "StableGraph":
        """Contract edge `e`; loops convert to +1 vertex weight.

        Remaining edges keep their relative order, which the boundary-map
        sign bookkeeping relies on.  The genus is preserved.
        """
        u, v = self.edges[e]
        rest = self.edges[:e] + self.edges[e + 1 :]
        if u == v:
            weights = tuple(
                h + 1 if x == u else h for x, h in enumerate(self.weights)
            )
            result = StableGraph(weights, rest, self.markings)
        else:
            # merge v into u, shift labels above v down by one
            def m(x: int) -> int:
                if x == v:
                    x = u
                return x - 1 if x > v else x

            weights = list(self.weights)
            weights[u] += weights[v]
            del weights[v]
            edges = tuple(
                (min(m(a), m(b)), max(m(a), m(b))) for a, b in rest
            )
            markings = tuple(m(x) for x in self.markings)
            result = StableGraph(tuple(weights), edges, markings)
        assert result.genus == self.genus, "contraction must preserve genus"
        return result

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "vertices": [{"weight": h} for h in self.weights],
            "edges": [[u, v] for u, v in self.edges],
            "markings": list(self.markings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, rec: dict) -> "StableGraph":
        graph = cls(
            weights=tuple(v["weight"] for v in rec["vertices"]),
            edges=tuple((min(u, v), max(u, v)) for u, v in rec["edges"]),
            markings=tuple(rec["markings"]),
        )
        if "genus" in rec and rec["genus"] != graph.genus:
            raise ValueError(
                f"declared genus {rec['genus']} != structural genus {graph.genus}"
            )
        return graph

    @classmethod
    def from_json(cls, text: str) -> "StableGraph":
        return cls.from_json_dict(json.loads(text))


def is_stable(graph: StableGraph, w: WeightVector) -> bool:
    """Check the per-vertex stability condition.

    Every vertex v must satisfy 2 h(v) - 2 + val(v) + sum of marking
    weights at v > 0, where a loop contributes 2 to val(v).
    """
    if len(w) != len(graph.markings):
        raise ValueError("weight vector length must match number of markings")
    val = graph.valences()
    wsum = [Fraction(0)] * graph.num_vertices
    for i, v in enumerate(graph.markings):
        wsum[v] += w[i]
    return all(
        2 * graph.weights[v] - 2 + val[v] + wsum[v] > 0
        for v in range(graph.num_vertices)
    )


# -- canonical forms --------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeling data for a StableGraph.

    `encoding` determines the isomorphism class: two graphs are isomorphic
    iff their encodings are equal.  `graph` is the canonically relabeled
    representative with edges in canonical order.  `edge_order[k]` is the
    original edge index placed at canonical position k.  `automorphisms`
    are vertex permutations of the canonical representative and generate
    (indeed enumerate) its automorphism group.
    """

    encoding: tuple
    graph: StableGraph
    relabel: tuple[int, ...]
    edge_order: tuple[int, ...]
    automorphisms: tuple[tuple[int, ...], ...]
    edge_sign_degenerate: bool

    @property
    def aut_order(self) -> int:
        return len(self.automorphisms)

    def encoding_key(self) -> str:
        """A flat, sortable, JSON-safe rendition of the encoding."""
        return repr(self.encoding)


def _refined_colors(graph: StableGraph) -> list[int]:
    """Multigraph-aware color refinement.

    Initial color: (weight, exact marking label set, valence).  Refinement
    step: neighbor color multiset, with parallel edges counted with
    multiplicity and each loop contributing its own vertex color twice.
    """
    nv = graph.num_vertices
    val = graph.valences()
    init = [
        (graph.weights[v], graph.marks_at(v), val[v]) for v in range(nv)
    ]
    ranks = {c: i for i, c in enumerate(sorted(set(init)))}
    colors = [ranks[c] for c in init]
    nclasses = len(ranks)
    while True:
        keys = []
        for v in range(nv):
            nbr = []
            for u, x in graph.edges:
                if u == v:
                    nbr.append(colors[x])
                if x == v:
                    nbr.append(colors[u])
            keys.append((colors[v], tuple(sorted(nbr))))
        ranks = {c: i for i, c in enumerate(sorted(set(keys)))}
        new_colors = [ranks[k] for k in keys]
        if len(ranks) == nclasses:
            return new_colors
        nclasses = len(ranks)
        colors = new_colors


def _labeled_key(graph: StableGraph, perm: Sequence[int]) -> tuple:
    nv = graph.num_vertices
    inv = [0] * nv
    for old, new in enumerate(perm):
        inv[new] = old
    weights = tuple(graph.weights[inv[v]] for v in range(nv))
    markings = tuple(perm[v] for v in graph.markings)
    edges = tuple(
        sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in graph.edges)
    )
    return (weights, markings, edges)


def canonicalize(graph: StableGraph) -> CanonicalForm:
    """Compute a canonical form by refinement plus search over color orbits.

    Isomorphic graphs yield identical encodings.  The edge-sign-degeneracy
    flag is set iff the graph has parallel edges (their swap is an odd edge
    transposition) or some automorphism induces an odd edge permutation.
    """
    nv = graph.num_vertices
    colors = _refined_colors(graph)
    classes: dict[int, list[int]] = {}
    for v in range(nv):
        classes.setdefault(colors[v], []).append(v)
    ordered_classes = [classes[c] for c in sorted(classes)]

    best_key: Optional[tuple] = None
    minimizers: list[tuple[int, ...]] = []
    for choice in product(*(permutations(c) for c in ordered_classes)):
        order = [v for cls in choice for v in cls]  # order[new] = old
        perm = [0] * nv
        for new, old in enumerate(order):
            perm[old] = new
        key = _labeled_key(graph, perm)
        if best_key is None or key < best_key:
            best_key = key
            minimizers = [tuple(perm)]
        elif key == best_key:
            minimizers.append(tuple(perm))

    relabel = minimizers[0]
    # canonical edge order: sort relabeled pairs, ties by original index
    decorated = sorted(
        (
            (min(relabel[u], relabel[v]), max(relabel[u], relabel[v])),
            idx,
        )
        for idx, (u, v) in enumerate(graph.edges)
    )
    edge_order = tuple(idx for _pair, idx in decorated)
    canon_edges = tuple(pair for pair, _idx in decorated)
    canon = StableGraph(best_key[0], canon_edges, best_key[1])

    # automorphisms of the canonical representative
    inv0 = [0] * nv
    for old, new in enumerate(relabel):
        inv0[new] = old
    autos = []
    for p in minimizers:
        autos.append(tuple(p[inv0[x]] for x in range(nv)))

    degenerate = canon.has_parallel_edges()
    if not degenerate:
        pair_index = {pair: k for k, pair in enumerate(canon_edges)}
        for sigma in autos:
            eperm = [
                pair_index[(min(sigma[u], sigma[v]), max(sigma[u], sigma[v]))]
                for u, v in canon_edges
            ]
            if _permutation_parity(eperm) < 0:
                degenerate = True
                break

    return CanonicalForm(
        encoding=best_key,
        graph=canon,
        relabel=relabel,
        edge_order=edge_order,
        automorphisms=tuple(autos),
        edge_sign_degenerate=degenerate,
    )


def _permutation_parity(perm: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def automorphism_count_brute_force(graph: StableGraph) -> int:
    """Reference count of automorphisms by trying all vertex permutations."""
    target = (graph.weights, tuple(sorted(graph.edges)), graph.markings)
    count = 0
    for perm in permutations(range(graph.num_vertices)):
        h = graph.relabel(perm)
        if (h.weights, tuple(sorted(h.edges)), h.markings) == target:
            count += 1
    return count


# -- 1-ends -------------------------------------------------------------------


def _is_bridge_reference_graph(graph: StableGraph) -> bool:
    """Two vertices joined by one edge, one endpoint of weight 1 and unmarked."""
    if graph.num_vertices != 2 or graph.num_edges != 1:
        return False
    u, v = graph.edges[0]
    if u == v:
        return False
    for a in (0, 1):
        if graph.weights[a] == 1 and all(mv != a for mv in graph.markings):
            return True
    return False


def _contract_all_except(graph: StableGraph, keep: int) -> StableGraph:
    g = graph
    k = keep
    while g.num_edges > 1:
        j = 0 if k != 0 else 1
        g = g.contract(j)
        if j < k:
            k -= 1
    return g


def one_ends(graph: StableGraph, w: Optional[WeightVector] = None) -> set[int]:
    """Edges whose complement contracts the graph to the bridge graph.

    The bridge graph (one edge joining an unmarked weight-1 vertex to the
    rest) is only a legal combinatorial type when g >= 2, or g = 1 with
    total marking weight > 1; outside that range the result is empty.
    When `w` is given, that stability condition is enforced.
    """
    g = graph.genus
    if w is not None and not (g >= 2 or (g == 1 and w.total() > 1)):
        return set()
    if graph.num_edges == 0:
        return set()
    found = set()
    for e in range(graph.num_edges):
        if _is_bridge_reference_graph(_contract_all_except(graph, e)):
            found.add(e)
    return found
