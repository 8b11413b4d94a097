"""
Planarity of simple undirected graphs.

:func:`is_planar` is the production test (left-right criterion, via
networkx). :func:`kuratowski_oracle` decides the same question by brute-force
search for a subdivided K5 or K3,3 and exists only to cross-check it.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

import networkx as nx

from .bruhat import UndirectedGraph

__all__ = [
    "OracleBudgetExceeded", "KuratowskiWitness", "PlanarityVerdict",
    "euler_edge_reject", "is_planar", "kuratowski_oracle", "components",
]

ORACLE_MAX_EDGES = 80


class OracleBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class KuratowskiWitness:
    """Branch vertices and connecting paths of a subdivided K5 or K3,3."""

    kind: str  # "K5" or "K33"
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def vertices(self) -> frozenset[int]:
        return frozenset(v for path in self.paths for v in path)


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    witness: KuratowskiWitness | None = None


def euler_edge_reject(g: UndirectedGraph) -> bool:
    """True when ``E > 3V - 6``, which rules out planarity; False decides nothing."""
    return g.n >= 3 and len(g.edges) > 3 * g.n - 6


def components(g: UndirectedGraph) -> list[UndirectedGraph]:
    """Connected components, each relabelled onto ``0..k-1``."""
    adj = g.adjacency()
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp, queue = [start], deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        relabel = {v: i for i, v in enumerate(comp)}
        out.append(UndirectedGraph.from_pairs(
            len(comp),
            ((relabel[i], relabel[j]) for i, j in g.edges if i in relabel),
        ))
    return out


def _component_is_planar(g: UndirectedGraph) -> bool:
    if g.n <= 4:
        return True
    if euler_edge_reject(g):
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    planar, _ = nx.check_planarity(h)
    return planar


def is_planar(g: UndirectedGraph) -> bool:
    return all(_component_is_planar(c) for c in components(g))


class _Linker:
    """Backtracking search for internally disjoint paths joining given
    pairs of branch vertices."""

    def __init__(self, adj: Sequence[set[int]], branch: Sequence[int],
                 pairs: Sequence[tuple[int, int]]):
        self.adj = adj
        self.branch = set(branch)
        self.pairs = list(pairs)
        self.used = set(branch)
        self.paths: dict[int, tuple[int, ...]] = {}

    def run(self) -> tuple[tuple[int, ...], ...] | None:
        # a direct edge can always replace a longer path between the same pair
        todo = []
        for k, (u, v) in enumerate(self.pairs):
            if v in self.adj[u]:
                self.paths[k] = (u, v)
            else:
                todo.append(k)
        if not self._feasible(todo) or not self._solve(todo):
            return None
        return tuple(self.paths[k] for k in range(len(self.pairs)))

    def _reachable(self, u: int, v: int) -> bool:
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y == v:
                    return True
                if y not in seen and y not in self.used:
                    seen.add(y)
                    queue.append(y)
        return False

    def _feasible(self, todo: list[int]) -> bool:
        need: dict[int, int] = {}
        for k in todo:
            for x in self.pairs[k]:
                need[x] = need.get(x, 0) + 1
        for x, count in need.items():
            if sum(1 for y in self.adj[x] if y not in self.used) < count:
                return False
        return all(self._reachable(*self.pairs[k]) for k in todo)

    def _simple_paths(self, u: int, v: int) -> Iterator[list[int]]:
        path = [u]

        def walk(x: int) -> Iterator[list[int]]:
            for y in sorted(self.adj[x]):
                if y == v and len(path) > 1:
                    yield path + [v]
                elif y not in self.used:
                    self.used.add(y)
                    path.append(y)
                    yield from walk(y)
                    path.pop()
                    self.used.discard(y)

        return walk(u)

    def _solve(self, todo: list[int]) -> bool:
        if not todo:
            return True
        k, rest = todo[0], todo[1:]
        u, v = self.pairs[k]
        for path in self._simple_paths(u, v):
            # interior vertices stay marked in self.used while this branch is explored
            if self._feasible(rest) and self._solve(rest):
                self.paths[k] = tuple(path)
                return True
        return False


def _find_k5(adj: Sequence[set[int]]) -> KuratowskiWitness | None:
    candidates = [v for v in range(len(adj)) if len(adj[v]) >= 4]
    for branch in itertools.combinations(candidates, 5):
        pairs = list(itertools.combinations(branch, 2))
        paths = _Linker(adj, branch, pairs).run()
        if paths is not None:
            return KuratowskiWitness("K5", branch, paths)
    return None


def _find_k33(adj: Sequence[set[int]]) -> KuratowskiWitness | None:
    candidates = [v for v in range(len(adj)) if len(adj[v]) >= 3]
    for branch in itertools.combinations(candidates, 6):
        for rest in itertools.combinations(branch[1:], 2):
            left = (branch[0],) + rest
            right = tuple(v for v in branch if v not in left)
            pairs = [(a, b) for a in left for b in right]
            paths = _Linker(adj, branch, pairs).run()
            if paths is not None:
                return KuratowskiWitness("K33", branch, paths)
    return None


def _prune(g: UndirectedGraph) -> list[set[int]]:
    # vertices of degree <= 1 can never lie on a subdivision
    adj = g.adjacency()
    queue = deque(v for v in range(g.n) if len(adj[v]) <= 1)
    while queue:
        v = queue.popleft()
        for u in list(adj[v]):
            adj[u].discard(v)
            if len(adj[u]) == 1:
                queue.append(u)
        adj[v].clear()
    return adj


def kuratowski_oracle(g: UndirectedGraph, max_edges: int = ORACLE_MAX_EDGES) -> PlanarityVerdict:
    """
    Decide planarity by exhaustive search for a subdivided K5, then K3,3.

    Branch vertex sets are tried in lexicographic order and the first
    subdivision found is returned as the witness. Exponential in the worst
    case; graphs with more than ``max_edges`` edges are refused.
    """
    if len(g.edges) > max_edges:
        raise OracleBudgetExceeded(
            f"{len(g.edges)} edges exceeds the oracle budget of {max_edges}"
        )
    adj = _prune(g)
    witness = _find_k5(adj) or _find_k33(adj)
    return PlanarityVerdict(planar=witness is None, witness=witness)
