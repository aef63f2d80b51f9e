"""Moduli of weight-stable tropical curves as computable cell complexes.

Enumerates stable weighted marked multigraphs, assembles exact rational
chain complexes, computes Betti numbers and Euler characteristics, and
cross-validates against closed-form partition/Bernoulli formulas.
"""

from .combinatorics import bell, bernoulli, restricted_stirling2, stirling2
from .enumeration import (
    BudgetExceeded,
    CanonicalCell,
    StratumIndex,
    enumerate_all,
    enumerate_stratum,
    max_edge_count,
)
from .chains import (
    ChainComplex,
    FilterClosureError,
    SparseMatrix,
    build_chain_complex,
    euler_from_cells,
)
from .formulas import (
    HEAVY_LIGHT_TABLE,
    MissingTopWeightEntry,
    TopWeightTable,
    admissible_partitions,
    build_top_weight_table,
    euler_bernoulli,
    euler_from_top_weight,
    euler_heavy_light,
    grothendieck_decomposition,
    heavy_light_weights,
    parse_weight_spec,
    top_weight_euler,
)
from .graphs import (
    CanonicalForm,
    StableGraph,
    WeightVector,
    canonicalize,
    is_stable,
    one_ends,
)
from .homology import (
    BettiProfile,
    betti_numbers,
    rank_exact,
    verify_simple_connectivity_shadow,
)

__version__ = "0.1.0"

__all__ = [
    "BettiProfile",
    "BudgetExceeded",
    "CanonicalCell",
    "CanonicalForm",
    "ChainComplex",
    "FilterClosureError",
    "HEAVY_LIGHT_TABLE",
    "MissingTopWeightEntry",
    "SparseMatrix",
    "StableGraph",
    "StratumIndex",
    "TopWeightTable",
    "WeightVector",
    "admissible_partitions",
    "bell",
    "bernoulli",
    "betti_numbers",
    "build_chain_complex",
    "build_top_weight_table",
    "canonicalize",
    "enumerate_all",
    "enumerate_stratum",
    "euler_bernoulli",
    "euler_from_cells",
    "euler_from_top_weight",
    "euler_heavy_light",
    "grothendieck_decomposition",
    "heavy_light_weights",
    "is_stable",
    "max_edge_count",
    "one_ends",
    "parse_weight_spec",
    "rank_exact",
    "restricted_stirling2",
    "stirling2",
    "top_weight_euler",
    "verify_simple_connectivity_shadow",
]
