"""Bruhat order on S_n, lower intervals and the Bruhat graph B(sigma)."""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .perms import (
    Embedding,
    Permutation,
    PermutationError,
    Transposition,
    coxeter_length,
    flatten,
)

__all__ = [
    "IntervalTooLarge", "DirectedGraph", "UndirectedGraph",
    "bruhat_leq", "bruhat_leq_oracle", "lower_interval", "bruhat_graph",
    "underlying_undirected", "is_hypercube", "induced_pattern_subgraph",
    "longest_path_length", "shortest_path_length",
    "complete_graph", "complete_bipartite_graph", "hypercube_graph",
]


class IntervalTooLarge(RuntimeError):
    """The lower interval grew past the caller's vertex limit."""

    def __init__(self, limit: int):
        super().__init__(f"Bruhat interval exceeds {limit} vertices")
        self.limit = limit


@dataclass(frozen=True)
class DirectedGraph:
    """
    A Bruhat graph: vertex ``i`` carries ``labels[i]`` and ``lengths[i]``;
    each edge is ``(source id, target id, transposition)``.
    """

    labels: tuple[Permutation, ...]
    lengths: tuple[int, ...]
    edges: tuple[tuple[int, int, Transposition], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.labels)}

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.labels]
        for u, v, _ in self.edges:
            out[u].append(v)
        return out

    def sources(self) -> list[int]:
        has_in = {v for _, v, _ in self.edges}
        return [i for i in range(len(self.labels)) if i not in has_in]

    def sinks(self) -> list[int]:
        has_out = {u for u, _, _ in self.edges}
        return [i for i in range(len(self.labels)) if i not in has_out]


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph on vertices ``0..n-1``; edges are pairs ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if not 0 <= i < j < self.n:
                raise ValueError(f"bad edge {(i, j)} for {self.n} vertices")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "UndirectedGraph":
        edges = set()
        for i, j in pairs:
            if i == j:
                raise ValueError(f"self-loop at {i}")
            edges.add((min(i, j), max(i, j)))
        return cls(n, frozenset(edges))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def without_edge(self, edge: tuple[int, int]) -> "UndirectedGraph":
        return UndirectedGraph(self.n, self.edges - {edge})


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_pairs(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> UndirectedGraph:
    return UndirectedGraph.from_pairs(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def hypercube_graph(dim: int) -> UndirectedGraph:
    n = 1 << dim
    return UndirectedGraph.from_pairs(
        n, ((x, x ^ (1 << k)) for x in range(n) for k in range(dim) if x < x ^ (1 << k))
    )


def _check_sizes(u: Permutation, v: Permutation) -> None:
    if len(u) != len(v):
        raise PermutationError(f"size mismatch: {u} and {v}")


def _rank_rows(p: Permutation) -> list[list[int]]:
    # rows[i][j] = #{a <= i+1 : p(a) >= j+1}
    n = len(p)
    rows, row = [], [0] * n
    for v in p:
        row = [c + (1 if v >= j + 1 else 0) for j, c in enumerate(row)]
        rows.append(row)
    return rows


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """
    Bruhat comparison by rank-matrix dominance: ``u <= v`` iff for every
    ``i, j`` the count ``#{a <= i : u(a) >= j}`` is at most the same count for ``v``.
    """
    _check_sizes(u, v)
    for ru, rv in zip(_rank_rows(u), _rank_rows(v)):
        if any(x > y for x, y in zip(ru, rv)):
            return False
    return True


def _moves(p: Permutation, up: bool) -> Iterator[tuple[Transposition, Permutation]]:
    # swapping values a < b raises the length exactly when a sits left of b
    pos = p.inverse()
    n = len(p)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if (pos[a - 1] < pos[b - 1]) == up:
                word = list(p)
                word[pos[a - 1] - 1], word[pos[b - 1] - 1] = b, a
                yield Transposition(a, b), Permutation._trusted(word)


@functools.lru_cache(maxsize=1024)
def _upper_set(u: Permutation) -> frozenset[Permutation]:
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for _, y in _moves(x, up=True):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def bruhat_leq_oracle(u: Permutation, v: Permutation) -> bool:
    """Bruhat comparison straight from the definition: search upward from ``u``
    through length-increasing transposition steps. Exponential; for tests."""
    _check_sizes(u, v)
    return v in _upper_set(u)


def lower_interval(sigma: Permutation, limit: int | None = None) -> set[Permutation]:
    """All ``x <= sigma``, by downward closure under length-decreasing transpositions."""
    seen = {sigma}
    frontier = [sigma]
    while frontier:
        nxt = []
        for x in frontier:
            for _, y in _moves(x, up=False):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if limit is not None and len(seen) > limit:
            raise IntervalTooLarge(limit)
        frontier = nxt
    return seen


def _graph_on(vertices) -> DirectedGraph:
    labels = sorted(vertices, key=lambda p: (coxeter_length(p), tuple(p)))
    ids = {p: i for i, p in enumerate(labels)}
    edges = []
    for i, x in enumerate(labels):
        for t, y in _moves(x, up=True):
            j = ids.get(y)
            if j is not None:
                edges.append((i, j, t))
    edges.sort(key=lambda e: (e[0], e[1]))
    return DirectedGraph(
        tuple(labels), tuple(coxeter_length(p) for p in labels), tuple(edges)
    )


def bruhat_graph(sigma: Permutation, limit: int | None = None) -> DirectedGraph:
    """
    B(sigma): vertices are the lower interval of ``sigma`` sorted by
    (length, word); an edge ``x -> t*x`` for every transposition ``t`` that
    raises the length and stays inside the interval.
    """
    return _graph_on(lower_interval(sigma, limit))


def underlying_undirected(g: DirectedGraph) -> UndirectedGraph:
    return UndirectedGraph.from_pairs(g.vertex_count, ((u, v) for u, v, _ in g.edges))


def longest_path_length(g: DirectedGraph) -> int:
    """Edges on the longest directed path starting at a source."""
    # vertex ids are sorted by length and edges raise length, so ids are topological
    best = [0] * g.vertex_count
    for u, v, _ in g.edges:
        best[v] = max(best[v], best[u] + 1)
    return max(best)


def shortest_path_length(g: DirectedGraph, source: int, target: int) -> int | None:
    succ = g.successors()
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            return dist[u]
        for v in succ[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return None


def is_hypercube(g: DirectedGraph, dim: int) -> bool:
    """
    Whether the underlying graph of ``g`` is the ``dim``-cube.

    The out-neighbours of the source become coordinates, and each vertex is
    sent to the set of coordinates lying below it in Bruhat order. The graph
    is the cube iff that map is a bijection onto all subsets and edges join
    exactly the subsets differing in one coordinate.
    """
    if g.vertex_count != 1 << dim:
        return False
    sources = g.sources()
    if len(sources) != 1:
        return False
    coords = sorted({v for u, v, _ in g.edges if u == sources[0]})
    if len(coords) != dim:
        return False
    masks = []
    for x in g.labels:
        mask = 0
        for k, c in enumerate(coords):
            if bruhat_leq(g.labels[c], x):
                mask |= 1 << k
        masks.append(mask)
    if len(set(masks)) != g.vertex_count:
        return False
    adjacent = underlying_undirected(g).edges
    for i in range(g.vertex_count):
        for j in range(i + 1, g.vertex_count):
            diff = masks[i] ^ masks[j]
            one_apart = diff != 0 and diff & (diff - 1) == 0
            if one_apart != ((i, j) in adjacent):
                return False
    return True


def induced_pattern_subgraph(
    pattern: Permutation, target: Permutation, e: Embedding
) -> DirectedGraph:
    """
    The subgraph of B(target) induced on the vertices that agree with
    ``target`` away from the positions in ``e``.
    """
    k, n = len(pattern), len(target)
    if len(e) != k or list(e) != sorted(set(e)) or not all(1 <= i <= n for i in e):
        raise PermutationError(f"{e} is not an index tuple of length {k} into size {n}")
    if flatten([target[i - 1] for i in e]) != pattern:
        raise PermutationError(f"{e} does not embed {pattern} in {target}")
    values = sorted(target[i - 1] for i in e)
    vertices = []
    for arrangement in itertools.permutations(values):
        word = list(target)
        for i, v in zip(e, arrangement):
            word[i - 1] = v
        x = Permutation._trusted(word)
        if bruhat_leq(x, target):
            vertices.append(x)
    return _graph_on(vertices)
