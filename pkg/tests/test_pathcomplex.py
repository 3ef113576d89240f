import json

import pytest

from dstepsat.bounds import known_table
from dstepsat.data.reference_paths import D4_N11_COUNTS
from dstepsat.errors import PathComplexError
from dstepsat.pathcomplex import (
    ColumnPivotSequence,
    FilterFlags,
    PathComplex,
    PivotSequence,
    RestrictedGrowthString,
    build_pivot_sequence,
    candidate_manifest,
    canonicalize_columns,
    combinatorial_type,
    columns_to_rgs,
    enumerate_directed,
    enumerate_nonrevisiting,
    enumerate_rgs,
    enumerate_undirected,
    enumerate_with_revisits,
    expand_to_facets,
    filter_late_revisit,
    filter_loop_conditions,
    filter_not_uniq,
    loop_placements,
    read_candidates,
    rgs_to_pivot_columns,
    write_candidates,
)


def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


class TestRestrictedGrowthStrings:
    @pytest.mark.parametrize("length,size", [(1, 1), (4, 2), (5, 3), (6, 3), (6, 5), (7, 4)])
    def test_count_is_stirling_number(self, length, size):
        assert sum(1 for _ in enumerate_rgs(length, size)) == stirling2(length, size)

    def test_lexicographic_order(self):
        strings = [s.symbols for s in enumerate_rgs(5, 3)]
        assert strings == sorted(strings)
        assert strings[0] == (1, 1, 1, 2, 3)

    def test_too_short_yields_nothing(self):
        assert list(enumerate_rgs(2, 3)) == []

    @pytest.mark.parametrize("symbols", [(2, 1), (1, 3), (0,)])
    def test_rejects_invalid(self, symbols):
        with pytest.raises(ValueError):
            RestrictedGrowthString(symbols, 3)

    def test_rejects_wrong_alphabet(self):
        with pytest.raises(ValueError):
            RestrictedGrowthString((1, 2), 3)


class TestColumnSequences:
    def test_canonicalize_relabels_by_first_occurrence(self):
        assert canonicalize_columns((3, 1, 3, 2)) == (1, 2, 1, 3)

    def test_successive_repeat_rejected(self):
        with pytest.raises(ValueError):
            ColumnPivotSequence((1, 1, 2), 3)

    @pytest.mark.parametrize("d,length", [(3, 4), (4, 5), (4, 7), (6, 7)])
    def test_rgs_bijection_round_trips(self, d, length):
        for s in enumerate_rgs(length - 1, d - 1):
            cps = rgs_to_pivot_columns(s, d)
            assert cps.is_canonical
            assert cps.uses_all_columns
            assert columns_to_rgs(cps) == s

    @pytest.mark.parametrize("d,length", [(3, 4), (4, 7), (6, 7)])
    def test_directed_count(self, d, length):
        assert sum(1 for _ in enumerate_directed(d, length)) == stirling2(length - 1, d - 1)

    def test_reversal_is_an_involution(self):
        for cps in enumerate_directed(4, 7):
            assert cps.reversed_canonical().reversed_canonical() == cps

    def test_nonrevisiting_keeps_one_direction(self):
        for d, length in [(3, 5), (4, 7)]:
            kept = list(enumerate_nonrevisiting(d, length))
            directed = list(enumerate_directed(d, length))
            palindromes = sum(1 for c in directed if c == c.reversed_canonical())
            assert len(kept) == (len(directed) + palindromes) // 2

    def test_d2_is_a_single_family(self):
        kept = list(enumerate_nonrevisiting(2, 5))
        assert len(kept) == 1
        assert kept[0].columns == (1, 2, 1, 2, 1)

    def test_undirected_base_is_closed_under_reversal(self):
        kept = {c.columns for c in enumerate_undirected(4, 7)}
        for cps in enumerate_directed(4, 7):
            assert cps.columns in kept or cps.reversed_canonical().columns in kept
        assert len(kept) == 50


class TestPivotSequences:
    def test_table_row_facets(self, d6n12_row1):
        facets = d6n12_row1.facets
        assert len(facets) == 8
        assert facets[0] == frozenset(range(1, 7))
        assert facets[-1] == frozenset({7, 8, 9, 10, 11, 12})
        assert not facets[0] & facets[-1]
        for a, b in zip(facets, facets[1:]):
            assert len(a & b) == 5

    def test_from_line_recovers_columns_and_loops(self, d6n12_lines):
        p = PivotSequence.from_line(d6n12_lines[0], 6)
        assert p.columns == (1, 2, 1, 3, 4, 5, 6)
        assert p.loops == ((3, 5),)
        assert p.revisits == 1
        assert p.vertex_count == 12

    def test_build_matches_published_labels(self, d6n12_lines):
        for line in d6n12_lines:
            p = PivotSequence.from_line(line, 6)
            assert build_pivot_sequence(p.columns, 6, p.loops).to_line() == line

    def test_digest_is_stable(self, d6n12_lines):
        a = PivotSequence.from_line(d6n12_lines[3], 6)
        b = PivotSequence.from_line(d6n12_lines[3], 6)
        assert a.digest() == b.digest()
        assert len(a.digest()) == 12

    def test_combinatorial_type_ignores_labels_and_direction(self, d6n12_row1):
        p = d6n12_row1.sequence
        relabel = {v: 13 - v for v in range(1, 13)}
        renamed = PathComplex(tuple(frozenset(relabel[v] for v in f) for f in d6n12_row1.facets), 6, 12)
        reversed_path = PathComplex(tuple(reversed(d6n12_row1.facets)), 6, 12)
        assert combinatorial_type(renamed) == combinatorial_type(d6n12_row1)
        assert combinatorial_type(reversed_path) == combinatorial_type(d6n12_row1)
        other = expand_to_facets(build_pivot_sequence(p.columns, 6), 13)
        assert combinatorial_type(other) != combinatorial_type(d6n12_row1)

    def test_missing_leaving_vertex(self):
        with pytest.raises(PathComplexError):
            expand_to_facets(PivotSequence(((7, 8),), 3), 8)

    def test_entering_vertex_already_present(self):
        with pytest.raises(PathComplexError):
            expand_to_facets(PivotSequence(((1, 2),), 3), 8)

    def test_nonconsecutive_ridge_carries_facet_pair(self):
        with pytest.raises(PathComplexError) as err:
            expand_to_facets(PivotSequence(((1, 3), (3, 1)), 2), 4)
        assert err.value.facets == ((1, 2), (1, 2))

    def test_not_end_disjoint(self):
        with pytest.raises(PathComplexError, match="end facets"):
            expand_to_facets(PivotSequence(((1, 3),), 2), 4)

    def test_vertex_beyond_n(self):
        with pytest.raises(PathComplexError):
            expand_to_facets(PivotSequence(((1, 3), (2, 4)), 2), 3)

    def test_reenter_before_leaving(self):
        with pytest.raises(PathComplexError):
            build_pivot_sequence((1, 2, 1), 2, ((3, 2),))


class TestFilters:
    def test_loop_conditions_accept_published_row(self, d6n12_lines):
        assert filter_loop_conditions(PivotSequence.from_line(d6n12_lines[0], 6))

    def test_loop_on_two_columns_rejected(self):
        p = build_pivot_sequence((1, 2, 1, 3, 4, 5, 6), 6, ((1, 2),))
        assert not filter_loop_conditions(p)

    def test_loop_with_fresh_first_and_last_column_rejected(self):
        # columns 2 and 4 bound the loop and occur nowhere else
        p = build_pivot_sequence((1, 2, 3, 4, 1, 5, 6), 6, ((2, 4),))
        assert not filter_loop_conditions(p)

    def test_late_revisit(self, d6n12_lines):
        assert filter_late_revisit(PivotSequence.from_line(d6n12_lines[0], 6))
        early = build_pivot_sequence((1, 2, 3, 4, 1, 5, 6), 6, ((1, 5),))
        assert not filter_late_revisit(early)

    def test_late_revisit_needs_one_revisit(self):
        with pytest.raises(ValueError):
            filter_late_revisit(build_pivot_sequence((1, 2, 3), 3))

    def test_not_uniq(self):
        bounds = known_table()
        first_once = build_pivot_sequence((1, 2, 3, 4, 2, 3, 4), 4)
        last_once = build_pivot_sequence((1, 2, 1, 3, 2, 3, 4), 4)
        neither = build_pivot_sequence((1, 2, 3, 4, 1, 2, 3), 4)
        assert not filter_not_uniq(first_once, bounds, 11)
        assert not filter_not_uniq(last_once, bounds, 11)
        assert filter_not_uniq(neither, bounds, 11)
        assert filter_not_uniq(first_once, None, 11)

    def test_not_uniq_inactive_when_bound_is_large(self):
        # Delta(5,11) = 6 is not below length - 1 = 6
        p = build_pivot_sequence((1, 2, 3, 4, 5, 6, 1), 6)
        assert filter_not_uniq(p, known_table(), 12)

    def test_loop_placements(self):
        assert list(loop_placements(3, 1)) == [((1, 2),), ((1, 3),), ((2, 3),)]
        for combo in loop_placements(7, 3):
            assert len({p for p, _ in combo}) == 3
            assert len({q for _, q in combo}) == 3

    def test_ordered_loop_placements(self):
        ordered = list(loop_placements(7, 2, ordered=True))
        assert len(ordered) == 2 * sum(1 for _ in loop_placements(7, 2))
        assert ((1, 3), (2, 4)) in ordered
        assert ((2, 4), (1, 3)) in ordered


class TestEnumeration:
    def test_single_revisit_case_matches_published_table(self, d6n12_lines):
        found = [p.to_line() for p in enumerate_with_revisits(6, 7, 1, n=12, bounds=known_table())]
        assert found == d6n12_lines

    @pytest.mark.parametrize("revisits,count", [(0, 35), (1, 125), (2, 124), (3, 11)])
    def test_d4_n11_counts(self, revisits, count):
        found = list(enumerate_with_revisits(4, 7, revisits, n=11, bounds=known_table()))
        assert len(found) == count == D4_N11_COUNTS[revisits]["enumerated"]

    @pytest.mark.parametrize("revisits,count", [(0, 35), (2, 354), (3, 96)])
    def test_published_preset_reproduces_published_counts(self, revisits, count):
        flags = FilterFlags.published()
        found = list(enumerate_with_revisits(4, 7, revisits, n=11, bounds=known_table(), flags=flags))
        assert len(found) == count == D4_N11_COUNTS[revisits]["published"]

    def test_published_preset_single_revisit_count(self):
        flags = FilterFlags.published()
        found = list(enumerate_with_revisits(4, 7, 1, n=11, bounds=known_table(), flags=flags))
        assert len(found) == D4_N11_COUNTS[1]["preset"] == 186
        assert D4_N11_COUNTS[1]["published"] == 185

    def test_published_preset_repeats_each_path_once_per_loop_order(self):
        flags = FilterFlags.published()
        found = [p.to_line() for p in enumerate_with_revisits(4, 7, 3, n=11, bounds=known_table(), flags=flags)]
        assert len(set(found)) * 6 == len(found)

    @pytest.mark.parametrize("revisits,types", [(0, 35), (1, 123), (2, 118), (3, 11)])
    def test_candidates_cover_every_path_type(self, revisits, types):
        # a vertex on every facet but the first, or every facet but the last,
        # is ruled out by Delta(3, 10) = 5
        excluded = (tuple(range(1, 8)), tuple(range(0, 7)))
        placements = list(loop_placements(7, revisits)) if revisits else [()]
        needed = set()
        for cps in enumerate_directed(4, 7):
            for loops in placements:
                try:
                    pc = expand_to_facets(build_pivot_sequence(cps.columns, 4, loops), 11)
                except PathComplexError:
                    continue
                key = combinatorial_type(pc)
                if not any(mask in excluded for mask in key):
                    needed.add(key)
        found = {combinatorial_type(expand_to_facets(p, 11))
                 for p in enumerate_with_revisits(4, 7, revisits, n=11, bounds=known_table())}
        assert len(needed) == types
        assert needed <= found

    def test_every_candidate_is_a_path_complex(self):
        for r in range(4):
            for p in enumerate_with_revisits(4, 7, r, n=11, bounds=known_table()):
                pc = expand_to_facets(p, 11)
                assert pc.length == 7
                assert p.revisits == r
                assert not pc.start & pc.end

    def test_filters_only_remove(self):
        bounds = known_table()
        for r in (1, 2):
            unfiltered = {p.to_line() for p in enumerate_with_revisits(
                4, 7, r, n=11, bounds=bounds, flags=FilterFlags(False, False, False))}
            filtered = {p.to_line() for p in enumerate_with_revisits(4, 7, r, n=11, bounds=bounds)}
            assert filtered <= unfiltered

    def test_too_many_revisits(self):
        with pytest.raises(ValueError):
            list(enumerate_with_revisits(4, 7, 4, n=11))

    def test_vertex_budget(self):
        # d + k - r vertices must fit in n
        assert list(enumerate_with_revisits(6, 7, 0, n=12)) == []


class TestCandidateFiles:
    def test_write_and_read(self, tmp_path, d6n12_lines):
        seqs = {1: [PivotSequence.from_line(line, 6) for line in d6n12_lines]}
        manifest = candidate_manifest(6, 12, 7, [1], FilterFlags(), seqs)
        text_path, json_path = write_candidates(tmp_path, manifest)
        assert [p.to_line() for p in read_candidates(text_path, 6)] == d6n12_lines
        data = json.loads(json_path.read_text())
        assert data["count"] == 10
        assert data["counts"] == {"1": 10}

    def test_manifest_is_deterministic(self):
        bounds = known_table()
        a = candidate_manifest(4, 11, 7, [0], FilterFlags(), {0: list(enumerate_with_revisits(4, 7, 0, 11, bounds))})
        b = candidate_manifest(4, 11, 7, [0], FilterFlags(), {0: list(enumerate_with_revisits(4, 7, 0, 11, bounds))})
        assert json.dumps(a) == json.dumps(b)
