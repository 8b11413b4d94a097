"""Bruhat graphs of permutations, pattern avoidance and planarity."""

from .bruhat import (
    DirectedGraph,
    UndirectedGraph,
    bruhat_graph,
    bruhat_leq,
    is_hypercube,
    lower_interval,
    underlying_undirected,
)
from .perms import (
    Permutation,
    PermutationError,
    Transposition,
    absolute_length,
    contains_pattern,
    coxeter_length,
    cycle_decomposition,
    embeddings,
    parse_one_line,
)
from .planarity import is_planar, kuratowski_oracle
from .theorems import compute_basis, planar_by_characterization

__version__ = "0.1.0"
