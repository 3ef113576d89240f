#!/usr/bin/env python3
"""
Shortcut paths between the end facets of a path complex.

The pivot graph has every d-subset of the path's vertices as a node and an
edge between two subsets that differ in exactly one element. A shortcut is an
inclusion-minimal (chordless) path in that graph between F_0 and F_k of
length at most k-1. Forbidding all of them makes the original path geodesic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Optional

import networkx as nx

from .chirotope import Chirotope, facet_graph, facets_of
from .errors import DStepError
from .pathcomplex import PathComplex

Node = tuple[int, ...]


@dataclass(frozen=True)
class Shortcut:
    facets: tuple[Node, ...]

    @property
    def length(self) -> int:
        return len(self.facets) - 1

    def to_line(self) -> str:
        return " ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)

    def __iter__(self):
        return iter(self.facets)


class PivotGraph:
    """Lazy Johnson graph J(V, d); adjacency is computed, never stored."""

    def __init__(self, vertices: Iterable[int], d: int):
        self.vertices = tuple(sorted(vertices))
        self.d = d

    def __contains__(self, node: Node) -> bool:
        return len(node) == self.d and len(set(node)) == self.d and set(node) <= set(self.vertices)

    def nodes(self) -> Iterator[Node]:
        return itertools.combinations(self.vertices, self.d)

    def neighbors(self, node: Node) -> Iterator[Node]:
        """Swap one element out for one vertex not in the node; sorted output order."""
        members = set(node)
        outside = [v for v in self.vertices if v not in members]
        found = []
        for drop in node:
            kept = [x for x in node if x != drop]
            for add in outside:
                found.append(tuple(sorted(kept + [add])))
        return iter(sorted(found))

    def has_edge(self, u: Node, v: Node) -> bool:
        return len(set(u) & set(v)) == self.d - 1

    def degree(self, node: Node) -> int:
        return self.d * (len(self.vertices) - self.d)

    @staticmethod
    def distance(u: Node, v: Node) -> int:
        """Johnson distance: number of elements of u not in v."""
        return len(set(u) - set(v))


def enumerate_inclusion_minimal(
    graph,
    s: Hashable,
    t: Hashable,
    max_length: int,
    distance: Optional[Callable[[Hashable, Hashable], int]] = None,
) -> Iterator[tuple]:
    """
    All chordless s-t paths of at most max_length edges, in depth-first order.

    A path is extended only by a neighbour of its last node that is adjacent
    to no earlier node, so every emitted path has no proper subpath that is
    itself an s-t path. `graph` needs `neighbors` and `has_edge` (a networkx
    graph or a PivotGraph). With `distance`, branches that cannot reach t in
    the remaining budget are cut.
    """
    if s == t:
        raise ValueError("source and target coincide")
    path = [s]
    on_path = {s}

    def extend() -> Iterator[tuple]:
        last = path[-1]
        if last == t:
            yield tuple(path)
            return
        used = len(path) - 1
        if used == max_length:
            return
        for w in sorted(graph.neighbors(last)):
            if w in on_path:
                continue
            if any(graph.has_edge(w, v) for v in path[:-1]):
                continue
            if distance is not None and used + 1 + distance(w, t) > max_length:
                continue
            path.append(w)
            on_path.add(w)
            yield from extend()
            path.pop()
            on_path.discard(w)

    yield from extend()


def shortcut_candidates(pc: PathComplex) -> Iterator[Shortcut]:
    """Inclusion-minimal pivot paths F_0 -> F_k of length at most k-1 on the path's vertices."""
    if pc.length <= 1:
        return
    graph = PivotGraph(pc.vertices, pc.d)
    start = tuple(sorted(pc.start))
    end = tuple(sorted(pc.end))
    for path in enumerate_inclusion_minimal(graph, start, end, pc.length - 1, PivotGraph.distance):
        yield Shortcut(path)


def find_realized_shortcut(chi: Chirotope, pc: PathComplex) -> Optional[Shortcut]:
    """
    A shortest facet path F_0 -> F_k in the boundary of chi, if it is shorter than the path.

    Among all shortest paths the lexicographically smallest (as a list of
    sorted facets) is returned, so repeated calls on the same chirotope agree.
    """
    graph = facet_graph(facets_of(chi).facets)
    start = tuple(sorted(pc.start))
    end = tuple(sorted(pc.end))
    for facet in (start, end):
        if facet not in graph:
            raise DStepError(f"end facet {facet} is not a facet of the decoded chirotope")
    try:
        distance = nx.shortest_path_length(graph, start, end)
    except nx.NetworkXNoPath as e:
        raise DStepError("end facets are disconnected in the boundary dual graph") from e
    if distance >= pc.length:
        return None
    best = min(nx.all_shortest_paths(graph, start, end))
    return Shortcut(tuple(best))
