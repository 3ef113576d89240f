import itertools

import networkx as nx
import pytest

from dstepsat.chirotope import chirotope_from_points, cyclic_configuration
from dstepsat.errors import DStepError
from dstepsat.pathcomplex import PivotSequence, expand_to_facets
from dstepsat.shortcuts import (
    PivotGraph,
    Shortcut,
    enumerate_inclusion_minimal,
    find_realized_shortcut,
    shortcut_candidates,
)


def is_chordless(graph, path):
    return not any(graph.has_edge(a, b) for (i, a), (j, b)
                   in itertools.combinations(enumerate(path), 2) if j > i + 1)


class TestInclusionMinimalPaths:
    def test_triangle_keeps_only_the_edge(self):
        assert list(enumerate_inclusion_minimal(nx.complete_graph(3), 0, 2, 2)) == [(0, 2)]

    def test_path_graph(self):
        graph = nx.path_graph(4)
        assert list(enumerate_inclusion_minimal(graph, 0, 3, 3)) == [(0, 1, 2, 3)]
        assert list(enumerate_inclusion_minimal(graph, 0, 3, 2)) == []

    def test_cycle_in_dfs_order(self):
        found = list(enumerate_inclusion_minimal(nx.cycle_graph(6), 0, 3, 5))
        assert found == [(0, 1, 2, 3), (0, 5, 4, 3)]

    @pytest.mark.parametrize("seed", range(50))
    def test_matches_filtered_simple_paths(self, seed):
        graph = nx.gnp_random_graph(9, 0.35, seed=seed)
        expected = {tuple(p) for p in nx.all_simple_paths(graph, 0, 8, cutoff=5) if is_chordless(graph, p)}
        found = list(enumerate_inclusion_minimal(graph, 0, 8, 5))
        assert len(found) == len(set(found))
        assert set(found) == expected

    def test_same_endpoints(self):
        with pytest.raises(ValueError):
            list(enumerate_inclusion_minimal(nx.path_graph(3), 1, 1, 2))

    def test_distance_pruning_loses_nothing(self):
        graph = PivotGraph(range(1, 8), 3)
        plain = list(enumerate_inclusion_minimal(graph, (1, 2, 3), (5, 6, 7), 4))
        pruned = list(enumerate_inclusion_minimal(graph, (1, 2, 3), (5, 6, 7), 4, PivotGraph.distance))
        assert plain == pruned
        assert all(is_chordless(graph, p) for p in plain)


class TestPivotGraph:
    def test_adjacency(self):
        graph = PivotGraph(range(1, 8), 3)
        neighbours = list(graph.neighbors((1, 2, 3)))
        assert len(neighbours) == graph.degree((1, 2, 3)) == 12
        assert neighbours == sorted(neighbours)
        assert all(graph.has_edge((1, 2, 3), v) for v in neighbours)
        assert not graph.has_edge((1, 2, 3), (3, 4, 5))

    def test_membership_and_distance(self):
        graph = PivotGraph(range(1, 8), 3)
        assert (1, 2, 3) in graph
        assert (1, 2, 9) not in graph
        assert (1, 1, 2) not in graph
        assert sum(1 for _ in graph.nodes()) == 35
        assert PivotGraph.distance((1, 2, 3), (3, 4, 5)) == 2


class TestShortcutCandidates:
    def test_geodesics_between_disjoint_triples(self):
        pc = expand_to_facets(PivotSequence.from_line("(1,4) (2,5) (3,6) (4,7)", 3), 7)
        found = list(shortcut_candidates(pc))
        assert len(found) == 36
        assert all(s.length == 3 for s in found)
        assert all(s.facets[0] == (1, 2, 3) and s.facets[-1] == (5, 6, 7) for s in found)
        assert all(4 not in facet for s in found for facet in s.facets)

    def test_no_shortcut_when_path_is_already_shortest(self):
        pc = expand_to_facets(PivotSequence.from_line("(1,3) (2,4)", 2), 4)
        assert list(shortcut_candidates(pc)) == []

    def test_to_line(self):
        assert Shortcut(((1, 2), (1, 6), (5, 6))).to_line() == "{1,2} {1,6} {5,6}"


class TestRealizedShortcut:
    def test_path_along_the_hull_is_geodesic(self, hexagon):
        pc = expand_to_facets(PivotSequence.from_line("(1,3) (2,4) (3,5)", 2), 6)
        assert find_realized_shortcut(hexagon, pc) is None

    def test_long_way_round_has_a_shortcut(self, hexagon):
        pc = expand_to_facets(PivotSequence.from_line("(1,3) (2,4) (3,5) (4,6)", 2), 6)
        shortcut = find_realized_shortcut(hexagon, pc)
        assert shortcut.facets == ((1, 2), (1, 6), (5, 6))
        assert shortcut.length == 2

    def test_end_facet_missing(self):
        points = cyclic_configuration(6, 3)
        points[1], points[2] = points[2], points[1]
        chi = chirotope_from_points(points)
        pc = expand_to_facets(PivotSequence.from_line("(1,3) (2,4)", 2), 6)
        with pytest.raises(DStepError):
            find_realized_shortcut(chi, pc)
