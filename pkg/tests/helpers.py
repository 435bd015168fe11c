"""Shared test fixtures: graph builders, independent reference checks, and a
synthetic set system for exercising the generic engine."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from chordalenum import Graph, SetSystem

_ATLAS = None


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def atlas_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    """Every graph with min_n..max_n vertices, one per isomorphism class."""
    global _ATLAS
    if _ATLAS is None:
        _ATLAS = nx.graph_atlas_g()
    out = []
    for h in _ATLAS:
        n = h.number_of_nodes()
        if min_n <= n <= max_n:
            out.append(Graph(n, list(h.edges())))
    return out


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def chordal_by_cycle_search(g: Graph) -> bool:
    """Reference chordality test: a graph is chordal iff no vertex subset
    induces a cycle of length at least four.  Exponential; keep n small."""
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            inside = set(sub)
            degrees = [len(g.adj[v] & inside) for v in sub]
            if any(d != 2 for d in degrees):
                continue
            # 2-regular: a disjoint union of cycles; connected means one
            # cycle, and any induced cycle here has length >= 4.
            seen = {sub[0]}
            frontier = [sub[0]]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in g.adj[u] & inside:
                        if w not in seen:
                            seen.add(w)
                            nxt.append(w)
                frontier = nxt
            if len(seen) == size:
                return False
    return True


def random_graph(rng: random.Random, n: int,
                 non_edge_count: int) -> Graph:
    """Uniform graph on n vertices with exactly the given complement size."""
    pairs = all_pairs(n)
    missing = set(rng.sample(pairs, non_edge_count))
    return Graph(n, [e for e in pairs if e not in missing])


def random_graph_at_most(rng: random.Random, n: int,
                         max_missing: int) -> Graph:
    """Random graph whose complement size is uniform in 0..max_missing,
    clamped to the number of vertex pairs."""
    return random_graph(rng, n, rng.randint(0, min(max_missing,
                                                   n * (n - 1) // 2)))


def random_chordal_graph(rng: random.Random, n: int) -> Graph:
    """Random chordal graph: each new vertex attaches to a clique of the
    current graph (possibly empty), so the insertion order reversed is a
    perfect elimination ordering."""
    adj = [set() for _ in range(n)]
    edges = []
    for v in range(1, n):
        if rng.random() < 0.15:
            continue
        clique: list[int] = []
        candidates = list(range(v))
        rng.shuffle(candidates)
        for u in candidates:
            if all(u in adj[w] for w in clique):
                clique.append(u)
                if rng.random() < 0.4:
                    break
        for u in clique:
            edges.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
    return Graph(n, edges)


def minimal_sets_by_subset_sweep(g: Graph) -> set[frozenset]:
    """Second, independent brute force: all chordal fill sets, filtered to
    the inclusion-minimal ones, with chordality checked through networkx."""
    pairs = [e for e in all_pairs(g.n) if e not in g.edges]
    chordal_masks = []
    for size in range(len(pairs) + 1):
        for combo in combinations(range(len(pairs)), size):
            h = to_networkx(g)
            h.add_edges_from(pairs[i] for i in combo)
            if nx.is_chordal(h):
                chordal_masks.append(frozenset(combo))
    minimal = [s for s in chordal_masks
               if not any(t < s for t in chordal_masks)]
    return {frozenset(pairs[i] for i in s) for s in minimal}


def subset_swap_system(m: int, k: int,
                       with_filter: bool = False) -> SetSystem:
    """Solutions are the k-element subsets of range(m); a neighbor swaps one
    member for one non-member.  The ordering of a subset is its ascending
    sort, the root is the first k naturals, and no specialized next step is
    supplied, so the engine's generic fallback drives everything."""
    universe = list(range(m))

    def neighbor_count(f: frozenset) -> int:
        return k * (m - k)

    def swap_at(f: frozenset, j: int) -> tuple[int, int]:
        inside = sorted(f)
        outside = [u for u in universe if u not in f]
        return inside[j // len(outside)], outside[j % len(outside)]

    def neighbor_at(f: frozenset, j: int) -> frozenset:
        x, u = swap_at(f, j)
        return (f - {x}) | {u}

    def ordering(f: frozenset) -> tuple[int, ...]:
        return tuple(sorted(f))

    def proximity(f: frozenset, order: tuple[int, ...], start: int = 0) -> int:
        i = start
        for pos in range(start, len(order)):
            if order[pos] not in f:
                break
            i += 1
        return i

    def solution_key(f: frozenset) -> tuple[int, ...]:
        return tuple(sorted(f))

    def position_excludes(f: frozenset, j: int, cand: frozenset) -> bool:
        x, u = swap_at(f, j)
        return x in cand or u not in cand

    return SetSystem(root=frozenset(range(k)),
                     neighbor_count=neighbor_count,
                     neighbor_at=neighbor_at,
                     ordering=ordering,
                     proximity=proximity,
                     solution_key=solution_key,
                     next_step=None,
                     position_excludes=position_excludes if with_filter else None)
