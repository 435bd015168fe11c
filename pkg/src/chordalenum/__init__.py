"""Enumerate all minimal chordal completions of a graph.

A chordal completion of a graph G is a set of non-edges whose addition makes
G chordal; it is minimal when no proper subset works.  This package lists
every minimal chordal completion exactly once with polynomial delay, and in
polynomial space when using the default reverse-search traversal.

>>> from chordalenum import Graph, minimal_chordal_completions
>>> cycle = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
>>> sorted(f.fill_edges for f in minimal_chordal_completions(cycle))
[((0, 2), (0, 3)), ((0, 2), (2, 4)), ((0, 3), (1, 3)), ((1, 3), (1, 4)), ((1, 4), (2, 4))]
"""

from __future__ import annotations

from typing import Iterator, Optional

from .completions import (Completion, flip, flip_graph, is_chordal_completion,
                          is_minimal, minimal_completion_root,
                          neighbor_completions, proximity, prune,
                          removable_edges, removable_edges_by_retest,
                          removal_order, successor)
from .engine import (ProximitySearchError, SetSystem, TraversalState,
                     TraversalStats, canonical_path, children,
                     chordal_completion_system, compare_solutions,
                     enumerate_reverse_search, enumerate_visited_set,
                     next_toward, parent, reverse_search, visited_set_search)
from .graph import (Edge, Graph, GraphInputError, build_graph,
                    common_neighborhood, find_chordless_cycle, is_chordal,
                    non_edges)
from .oracle import (SolutionSet, VerificationReport,
                     brute_force_minimal_completions, verify_solution_set)

__version__ = "0.1.0"

__all__ = [
    "Completion", "Edge", "Graph", "GraphInputError", "ProximitySearchError",
    "SetSystem", "SolutionSet", "TraversalState", "TraversalStats",
    "VerificationReport", "brute_force_minimal_completions", "build_graph",
    "canonical_path", "children", "chordal_completion_system",
    "common_neighborhood", "compare_solutions", "enumerate_reverse_search",
    "enumerate_visited_set", "find_chordless_cycle", "flip", "flip_graph",
    "is_chordal", "is_chordal_completion", "is_minimal",
    "minimal_chordal_completions", "minimal_completion_root",
    "neighbor_completions", "next_toward", "non_edges", "parent", "proximity",
    "prune", "removable_edges", "removable_edges_by_retest", "removal_order",
    "reverse_search", "successor", "verify_solution_set",
    "visited_set_search",
]


def minimal_chordal_completions(g: Graph, mode: str = "reverse_search",
                                stats: Optional[TraversalStats] = None
                                ) -> Iterator[Completion]:
    """Yield every minimal chordal completion of ``g`` exactly once.

    ``mode`` selects the traversal: ``reverse_search`` (default, constant
    number of retained solutions) or ``visited_set`` (baseline breadth-first
    flood that keeps everything it has seen).
    """
    system = chordal_completion_system(g)
    if mode == "reverse_search":
        return reverse_search(system, stats)
    if mode == "visited_set":
        return visited_set_search(system, stats)
    raise ValueError(f"unknown mode {mode!r}")
