#!/usr/bin/env python3
"""
Uniform chirotopes of rank r on {1..n}.

Signs are stored densely, one per sorted r-subset, indexed by colexicographic
rank. The same rank (+1) is the SAT variable of that basis in the encoder.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx
import numpy as np

from .errors import DegenerateTupleError, DStepError, GeneralPositionError

Basis = tuple[int, ...]


# ---------------------------------------------------------------------------
# Colex ranking and permutation parity
# ---------------------------------------------------------------------------

def colex_rank(basis: Sequence[int]) -> int:
    """0-based colexicographic rank of a sorted tuple of labels from 1..n."""
    return sum(math.comb(b - 1, i + 1) for i, b in enumerate(basis))


def colex_unrank(rank: int, r: int) -> Basis:
    """Inverse of colex_rank."""
    out = []
    for i in range(r, 0, -1):
        b = i - 1
        while math.comb(b + 1, i) <= rank:
            b += 1
        rank -= math.comb(b, i)
        out.append(b + 1)
    return tuple(reversed(out))


def colex_bases(n: int, r: int) -> Iterator[Basis]:
    """All sorted r-subsets of {1..n} in colex order."""
    for rank in range(math.comb(n, r)):
        yield colex_unrank(rank, r)


def tau(tup: Sequence[int]) -> int:
    """Parity of the permutation sorting tup: +1 for even, -1 for odd."""
    if len(set(tup)) != len(tup):
        raise DegenerateTupleError(tup)
    inversions = sum(1 for a, b in itertools.combinations(tup, 2) if a > b)
    return -1 if inversions % 2 else 1


# ---------------------------------------------------------------------------
# Chirotope
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chirotope:
    n: int
    r: int
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != math.comb(self.n, self.r):
            raise ValueError(f"expected {math.comb(self.n, self.r)} signs, got {len(self.signs)}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("uniform chirotopes take values in {+1, -1} only")

    @classmethod
    def from_mapping(cls, n: int, r: int, mapping: dict[Basis, int]) -> "Chirotope":
        return cls(n, r, tuple(mapping[b] for b in colex_bases(n, r)))

    def sign(self, basis: Sequence[int]) -> int:
        """Stored sign of a sorted basis."""
        return self.signs[colex_rank(basis)]

    def evaluate(self, tup: Sequence[int]) -> int:
        """chi on an ordered tuple, extended by the alternating rule."""
        if len(tup) != self.r:
            raise ValueError(f"expected an {self.r}-tuple, got {tuple(tup)}")
        if any(x < 1 or x > self.n for x in tup):
            raise ValueError(f"element out of range 1..{self.n} in {tuple(tup)}")
        return tau(tup) * self.sign(tuple(sorted(tup)))

    def negate(self) -> "Chirotope":
        return Chirotope(self.n, self.r, tuple(-s for s in self.signs))

    def items(self) -> Iterator[tuple[Basis, int]]:
        return zip(colex_bases(self.n, self.r), self.signs)

    def serialize(self) -> str:
        """Header 'n r', then one 'basis sign' line per basis in colex order."""
        lines = [f"{self.n} {self.r}"]
        for basis, s in self.items():
            lines.append(f"{' '.join(map(str, basis))} {'+' if s > 0 else '-'}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Chirotope":
        rows = [line.split() for line in text.splitlines() if line.strip()]
        n, r = int(rows[0][0]), int(rows[0][1])
        mapping = {tuple(int(x) for x in row[:-1]): (1 if row[-1] == "+" else -1) for row in rows[1:]}
        return cls.from_mapping(n, r, mapping)


def verify_axioms(chi: Chirotope) -> tuple[bool, Optional[dict]]:
    """Check the three-term Grassmann-Pluecker sign condition on every (sigma, x1..x4)."""
    n, r = chi.n, chi.r
    ground = range(1, n + 1)
    for sigma in itertools.combinations(ground, r - 2):
        rest = [x for x in ground if x not in sigma]
        for x1, x2, x3, x4 in itertools.combinations(rest, 4):
            e = lambda a, b: chi.evaluate(sigma + (a, b))
            terms = (e(x1, x2) * e(x3, x4), -e(x1, x3) * e(x2, x4), e(x1, x4) * e(x2, x3))
            if len(set(terms)) == 1:
                bases = sorted({tuple(sorted(sigma + pair)) for pair in
                                ((x1, x2), (x3, x4), (x1, x3), (x2, x4), (x1, x4), (x2, x3))})
                return False, {"sigma": list(sigma), "quadruple": [x1, x2, x3, x4],
                               "terms": list(terms), "bases": [list(b) for b in bases]}
    return True, None


# ---------------------------------------------------------------------------
# Facets and the boundary dual graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FacetReport:
    facets: tuple[Basis, ...]
    uncovered: tuple[int, ...]

    @property
    def is_matroid_polytope(self) -> bool:
        return not self.uncovered


def is_facet(chi: Chirotope, facet: Sequence[int]) -> bool:
    facet = tuple(sorted(facet))
    values = {chi.evaluate(facet + (e,)) for e in range(1, chi.n + 1) if e not in facet}
    return len(values) == 1


def facets_of(chi: Chirotope) -> FacetReport:
    """All (r-1)-sets F with chi(F, e) constant over e outside F, plus the elements on no facet."""
    facets = tuple(f for f in itertools.combinations(range(1, chi.n + 1), chi.r - 1) if is_facet(chi, f))
    covered = set().union(*facets) if facets else set()
    uncovered = tuple(x for x in range(1, chi.n + 1) if x not in covered)
    return FacetReport(facets, uncovered)


def facet_graph(facets: Iterable[Sequence[int]]) -> nx.Graph:
    """Dual graph: facets as nodes, an edge whenever two facets share a ridge."""
    graph = nx.Graph()
    by_ridge: dict[Basis, list[Basis]] = {}
    for facet in facets:
        facet = tuple(sorted(facet))
        graph.add_node(facet)
        for drop in facet:
            ridge = tuple(x for x in facet if x != drop)
            by_ridge.setdefault(ridge, []).append(facet)
    for sharing in by_ridge.values():
        graph.add_edges_from(itertools.combinations(sharing, 2))
    return graph


def dual_graph_distance(chi: Chirotope, a: Sequence[int], b: Sequence[int]) -> int:
    """Length of a shortest facet path between two facets of chi."""
    graph = facet_graph(facets_of(chi).facets)
    a, b = tuple(sorted(a)), tuple(sorted(b))
    for facet in (a, b):
        if facet not in graph:
            raise DStepError(f"{facet} is not a facet of the chirotope")
    try:
        return nx.shortest_path_length(graph, a, b)
    except nx.NetworkXNoPath as e:
        raise DStepError(f"facets {a} and {b} lie in different components of the dual graph") from e


# ---------------------------------------------------------------------------
# Point configurations (exact arithmetic oracle)
# ---------------------------------------------------------------------------

def _integer_columns(columns: Sequence[Sequence]) -> list[list[int]]:
    # scale each column by the lcm of its denominators; positive factors keep the sign
    out = []
    for col in columns:
        values = [Fraction(v) for v in col]
        scale = math.lcm(*(v.denominator for v in values))
        out.append([int(v * scale) for v in values])
    return out


def det_sign(columns: Sequence[Sequence]) -> int:
    """Sign of the determinant of a square matrix given by columns (fraction-free Bareiss)."""
    m = [list(row) for row in zip(*_integer_columns(columns))]
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    last = m[size - 1][size - 1]
    return sign * (last > 0) - sign * (last < 0)


def chirotope_from_points(points: Sequence[Sequence]) -> Chirotope:
    """Chirotope of n column vectors in dimension r: signs[b] = sign det(columns b)."""
    n = len(points)
    r = len(points[0])
    signs = []
    for basis in colex_bases(n, r):
        s = det_sign([points[i - 1] for i in basis])
        if s == 0:
            raise GeneralPositionError(basis)
        signs.append(s)
    return Chirotope(n, r, tuple(signs))


def cyclic_configuration(n: int, r: int) -> list[tuple[int, ...]]:
    """Points (1, t, t^2, ..., t^(r-1)) for t = 1..n; every maximal minor is positive."""
    return [tuple(t ** k for k in range(r)) for t in range(1, n + 1)]


def random_configuration(n: int, r: int, seed: int = 0, spread: int = 20,
                         max_tries: int = 1000) -> list[tuple[int, ...]]:
    """Homogenised random integer points in general position, reproducible from the seed."""
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        coords = rng.integers(-spread, spread + 1, size=(n, r - 1))
        points = [(1,) + tuple(int(x) for x in row) for row in coords]
        if all(det_sign([points[i - 1] for i in basis]) != 0 for basis in colex_bases(n, r)):
            return points
    raise GeneralPositionError(())
