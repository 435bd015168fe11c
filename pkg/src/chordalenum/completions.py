"""Fill-edge sets over a base graph and the minimal-completion operations.

A completion is a set of non-edges of a base graph, the fill edges; adding
them to the graph may or may not make it chordal.  A chordal completion is
minimal when no proper subset of its fill is itself a chordal completion.
Everything here identifies a completion with the bitmask of its fill over the
base graph's sorted non-edge list, which keeps the hot operations (removal
traces, flips, greedy reduction) to a handful of integer operations each.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .graph import (Edge, Graph, GraphInputError, _is_chordal_masks,
                    _iter_bits, _mask_is_clique, non_edge_incidence,
                    non_edge_index, non_edges)


class Completion:
    """An immutable fill-edge set over a fixed base graph.

    ``mask`` has bit i set when ``non_edges(base)[i]`` is a fill edge.  The
    class does not require the filled graph to be chordal; the operations
    that need chordality or minimality check their own preconditions.
    """

    __slots__ = ("base", "mask")

    def __init__(self, base: Graph, mask: int) -> None:
        self.base = base
        self.mask = mask

    @classmethod
    def from_edges(cls, base: Graph, fill: Iterable[Edge]) -> "Completion":
        index = non_edge_index(base)
        mask = 0
        for u, v in fill:
            key = (u, v) if u < v else (v, u)
            i = index.get(key)
            if i is None:
                raise GraphInputError(
                    f"({u}, {v}) is not a non-edge of the base graph")
            mask |= 1 << i
        return cls(base, mask)

    @classmethod
    def full(cls, base: Graph) -> "Completion":
        """The completion that fills every non-edge (always chordal)."""
        return cls(base, (1 << len(non_edges(base))) - 1)

    @classmethod
    def empty(cls, base: Graph) -> "Completion":
        return cls(base, 0)

    @property
    def fill_edges(self) -> tuple[Edge, ...]:
        """The fill edges in the ground order (sorted vertex pairs)."""
        ne = non_edges(self.base)
        return tuple(ne[i] for i in _iter_bits(self.mask))

    @property
    def complement_edges(self) -> tuple[Edge, ...]:
        """The non-edges left unfilled, in the ground order."""
        ne = non_edges(self.base)
        return tuple(e for i, e in enumerate(ne) if not self.mask >> i & 1)

    def size(self) -> int:
        return self.mask.bit_count()

    def supergraph_masks(self) -> list[int]:
        """Adjacency bitmasks of the filled graph (a fresh mutable list)."""
        masks = list(self.base.adj_masks)
        ne = non_edges(self.base)
        for i in _iter_bits(self.mask):
            u, v = ne[i]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def supergraph(self) -> Graph:
        """The base graph with the fill edges added."""
        return Graph(self.base.n,
                     tuple(self.base.edges) + self.fill_edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Completion):
            return NotImplemented
        return self.mask == other.mask and (self.base is other.base
                                            or self.base == other.base)

    def __hash__(self) -> int:
        return hash((self.base.n, self.mask))

    def __repr__(self) -> str:
        inside = ", ".join(f"{u}-{v}" for u, v in self.fill_edges)
        return f"Completion({{{inside}}})"


def is_chordal_completion(f: Completion) -> bool:
    """Whether the base graph plus the fill edges is chordal."""
    return _is_chordal_masks(f.base.n, f.supergraph_masks())


def _require_chordal(f: Completion, op: str) -> None:
    if not is_chordal_completion(f):
        raise ValueError(f"{op} requires a chordal completion")


def _allowed_mask(f: Completion, allowed: Optional[Iterable[Edge]]) -> int:
    if allowed is None:
        return f.mask
    index = non_edge_index(f.base)
    mask = 0
    for u, v in allowed:
        key = (u, v) if u < v else (v, u)
        i = index.get(key)
        if i is not None:
            mask |= 1 << i
    return mask & f.mask


def _removable_indices_mask(f: Completion, allowed_mask: int) -> int:
    """Fill indices in ``allowed_mask`` whose single removal keeps the
    filled graph chordal, via the common-neighborhood clique criterion."""
    masks = f.supergraph_masks()
    ne = non_edges(f.base)
    out = 0
    m = allowed_mask
    while m:
        low = m & -m
        u, v = ne[low.bit_length() - 1]
        if _mask_is_clique(masks[u] & masks[v], masks):
            out |= low
        m ^= low
    return out


def removable_edges(f: Completion,
                    allowed: Optional[Iterable[Edge]] = None) -> frozenset[Edge]:
    """Fill edges whose individual removal keeps the completion chordal.

    Only edges in ``allowed`` (default: all fill edges) are considered.  A
    fill edge e = (x, y) is removable exactly when the common neighborhood of
    x and y in the filled graph induces a clique; that criterion is what this
    function evaluates.  ``removable_edges_by_retest`` is the brute-force
    reference that re-runs the chordality test per edge.
    """
    _require_chordal(f, "removable_edges")
    ne = non_edges(f.base)
    mask = _removable_indices_mask(f, _allowed_mask(f, allowed))
    return frozenset(ne[i] for i in _iter_bits(mask))


def removable_edges_by_retest(f: Completion,
                              allowed: Optional[Iterable[Edge]] = None
                              ) -> frozenset[Edge]:
    """Reference implementation of :func:`removable_edges`: drop each edge in
    turn and re-run the full chordality test."""
    _require_chordal(f, "removable_edges_by_retest")
    ne = non_edges(f.base)
    out = []
    for i in _iter_bits(_allowed_mask(f, allowed)):
        g = Completion(f.base, f.mask & ~(1 << i))
        if is_chordal_completion(g):
            out.append(ne[i])
    return frozenset(out)


def _prune_mask(base: Graph, mask: int, allowed_mask: int) -> int:
    """Greedy reduction kernel: repeatedly delete the smallest-index
    removable fill edge within ``allowed_mask`` until none remains."""
    ne = non_edges(base)
    masks = list(base.adj_masks)
    for i in _iter_bits(mask):
        u, v = ne[i]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    while True:
        pick = -1
        m = allowed_mask & mask
        while m:
            low = m & -m
            u, v = ne[low.bit_length() - 1]
            if _mask_is_clique(masks[u] & masks[v], masks):
                pick = low.bit_length() - 1
                break
            m ^= low
        if pick < 0:
            return mask
        u, v = ne[pick]
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        mask &= ~(1 << pick)


def prune(f: Completion,
          allowed: Optional[Iterable[Edge]] = None) -> Completion:
    """Greedily delete removable fill edges, smallest ground index first,
    restricted to ``allowed``, until none is removable.

    With ``allowed=None`` the result is a minimal chordal completion
    contained in ``f``.
    """
    _require_chordal(f, "prune")
    return Completion(f.base, _prune_mask(f.base, f.mask,
                                          _allowed_mask(f, allowed)))


def is_minimal(f: Completion) -> bool:
    """Whether ``f`` is a minimal chordal completion (chordal, and no fill
    edge can be dropped without breaking chordality)."""
    _require_chordal(f, "is_minimal")
    return _removable_indices_mask(f, f.mask) == 0


class RemovalTrace:
    """Canonical removal trace of a completion's complement, grown on demand.

    Starting from the full completion, the trace repeatedly deletes the
    smallest-index removable non-fill edge.  Proximity queries usually need
    only a prefix of it, so elements are computed one at a time and cached.
    Assumes the underlying completion is minimal (the trace drains the whole
    complement for any chordal completion, minimal or not, so callers that
    cannot guarantee minimality must check it separately).
    """

    __slots__ = ("_ne", "_incident", "_masks", "_remaining", "_stuck",
                 "_seq", "_exhausted")

    def __init__(self, f: Completion) -> None:
        base = f.base
        self._ne = non_edges(base)
        self._incident = non_edge_incidence(base)
        self._masks = [((1 << base.n) - 1) & ~(1 << v) for v in range(base.n)]
        self._remaining = (1 << len(self._ne)) - 1 & ~f.mask
        self._stuck = 0
        self._seq: list[int] = []
        self._exhausted = self._remaining == 0

    def element(self, pos: int) -> Optional[int]:
        """The non-edge index at trace position ``pos``, or None past the
        end."""
        seq = self._seq
        while len(seq) <= pos and not self._exhausted:
            self._extend()
        return seq[pos] if pos < len(seq) else None

    def prefix_against(self, fill_mask: int, start: int = 0) -> int:
        """Position of the first trace element inside ``fill_mask`` at or
        after ``start``, or the trace length if none is.  Positions before
        ``start`` are assumed already checked."""
        seq = self._seq
        i = start
        while True:
            if i < len(seq):
                if fill_mask >> seq[i] & 1:
                    return i
                i += 1
            elif self._exhausted:
                return i
            else:
                self._extend()

    def _extend(self) -> None:
        # Deleting edge (u, v) cannot unblock a pair disjoint from {u, v}:
        # that pair's common neighborhood is unchanged and only gains
        # violations.  So pairs once found stuck are skipped until a
        # deletion touches one of their endpoints.
        ne = self._ne
        masks = self._masks
        m = self._remaining & ~self._stuck
        while m:
            low = m & -m
            i = low.bit_length() - 1
            u, v = ne[i]
            cn = masks[u] & masks[v]
            c = cn
            while c:
                cl = c & -c
                if cn & ~masks[cl.bit_length() - 1] & ~cl:
                    break
                c ^= cl
            if not c:
                self._seq.append(i)
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
                self._remaining &= ~low
                self._stuck &= ~(self._incident[u] | self._incident[v])
                if not self._remaining:
                    self._exhausted = True
                return
            self._stuck |= low
            m ^= low
        raise ValueError("removal trace stalled: not a chordal completion")

    def force(self) -> tuple[int, ...]:
        while not self._exhausted:
            self._extend()
        return tuple(self._seq)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RemovalTrace):
            return NotImplemented
        return self.force() == other.force()

    def __lt__(self, other: "RemovalTrace") -> bool:
        return self.force() < other.force()

    def __hash__(self) -> int:
        return hash(self.force())


def _removal_indices(f: Completion) -> tuple[int, ...]:
    """Full canonical removal trace of ``f``'s complement, as indices."""
    return RemovalTrace(f).force()


def removal_order(f: Completion) -> tuple[Edge, ...]:
    """Canonical ordering of the unfilled non-edges of a minimal completion.

    This is the order in which the greedy reduction of the full completion,
    restricted to the complement of ``f``, deletes them; it is the canonical
    form the enumeration engine keys its parent relation on.
    """
    if not is_minimal(f):
        raise ValueError("removal_order requires a minimal chordal completion")
    ne = non_edges(f.base)
    return tuple(ne[i] for i in _removal_indices(f))


def _proximity_indices(fill_mask: int, order: Sequence[int],
                       start: int = 0) -> int:
    """Proximity kernel.  ``start`` asserts the first ``start`` elements are
    already known to avoid ``fill_mask`` and skips rescanning them."""
    i = start
    for pos in range(start, len(order)):
        if fill_mask >> order[pos] & 1:
            break
        i += 1
    return i


def proximity(f: Completion, order: Sequence[Edge]) -> int:
    """Length of the longest prefix of ``order`` that avoids the fill of
    ``f``, i.e. stays inside its complement.

    ``order`` is typically the :func:`removal_order` of another completion of
    the same base graph; passing it in precomputed keeps repeated proximity
    queries against one target cheap.
    """
    index = non_edge_index(f.base)
    i = 0
    for u, v in order:
        key = (u, v) if u < v else (v, u)
        if key not in index:
            raise GraphInputError(
                f"({u}, {v}) is not a non-edge of the base graph")
        if f.mask >> index[key] & 1:
            break
        i += 1
    return i


def _flip_mask(base: Graph, mask: int, i: int) -> int:
    """Flip kernel: drop fill index ``i`` and add every non-edge lying inside
    the common neighborhood of its endpoints in the filled graph."""
    ne = non_edges(base)
    masks = list(base.adj_masks)
    for j in _iter_bits(mask):
        u, v = ne[j]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    x, y = ne[i]
    cn = masks[x] & masks[y]
    incident = non_edge_incidence(base)
    within = 0
    seen = 0
    m = cn
    while m:
        low = m & -m
        v = low.bit_length() - 1
        within |= incident[v] & seen
        seen |= incident[v]
        m ^= low
    return (mask | within) & ~(1 << i)


def flip(f: Completion, e: Edge) -> Completion:
    """Remove fill edge ``e`` and complete the common neighborhood of its
    endpoints (in the filled graph) into a clique.

    When ``f`` is chordal the result is again a chordal completion; this is
    the step the enumeration uses to move between minimal completions.
    """
    u, v = e
    key = (u, v) if u < v else (v, u)
    i = non_edge_index(f.base).get(key)
    if i is None or not f.mask >> i & 1:
        raise GraphInputError(f"({u}, {v}) is not a fill edge of this completion")
    return Completion(f.base, _flip_mask(f.base, f.mask, i))


def flip_graph(g: Graph, e: Edge) -> Graph:
    """Graph-level flip: delete edge ``e`` and turn the common neighborhood
    of its endpoints into a clique.  Preserves chordality."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u}, {v}) is not an edge of the graph")
    cn = g.adj_masks[u] & g.adj_masks[v]
    edges = set(g.edges)
    edges.discard((u, v) if u < v else (v, u))
    members = list(_iter_bits(cn))
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            edges.add((members[a], members[b]))
    return Graph(g.n, edges)


def _successor_mask(base: Graph, mask: int, i: int) -> int:
    """Fused flip-then-reduce kernel: one adjacency build for both halves."""
    ne = non_edges(base)
    masks = list(base.adj_masks)
    m = mask
    while m:
        low = m & -m
        u, v = ne[low.bit_length() - 1]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        m ^= low
    x, y = ne[i]
    cn = masks[x] & masks[y]
    incident = non_edge_incidence(base)
    within = 0
    seen = 0
    m = cn
    while m:
        low = m & -m
        v = low.bit_length() - 1
        within |= incident[v] & seen
        seen |= incident[v]
        m ^= low
    masks[x] &= ~(1 << y)
    masks[y] &= ~(1 << x)
    m = within & ~mask
    while m:
        low = m & -m
        u, v = ne[low.bit_length() - 1]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        m ^= low
    mask = (mask | within) & ~(1 << i)
    while True:
        m = mask
        while m:
            low = m & -m
            u, v = ne[low.bit_length() - 1]
            cn = masks[u] & masks[v]
            c = cn
            while c:
                cl = c & -c
                if cn & ~masks[cl.bit_length() - 1] & ~cl:
                    break
                c ^= cl
            if not c:
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
                mask &= ~low
                break
            m ^= low
        else:
            return mask


def successor(f: Completion, e: Edge) -> Completion:
    """Flip ``e`` out of a minimal completion and greedily reduce the result
    back to a minimal one."""
    u, v = e
    key = (u, v) if u < v else (v, u)
    i = non_edge_index(f.base).get(key)
    if i is None or not f.mask >> i & 1:
        raise GraphInputError(f"({u}, {v}) is not a fill edge of this completion")
    return Completion(f.base, _successor_mask(f.base, f.mask, i))


def neighbor_completions(f: Completion) -> frozenset[Completion]:
    """The distinct successors of ``f`` across all of its fill edges.

    Never contains ``f`` itself: a successor by e never contains e, while
    every member of the family it is drawn from that equals ``f`` would.
    """
    return frozenset(Completion(f.base, _successor_mask(f.base, f.mask, i))
                     for i in _iter_bits(f.mask))


def minimal_completion_root(g: Graph) -> Completion:
    """The canonical starting solution: greedy reduction of the full
    completion.  Every enumeration of minimal completions is rooted here."""
    return prune(Completion.full(g))


def iter_fill_indices(f: Completion) -> Iterator[int]:
    return _iter_bits(f.mask)
