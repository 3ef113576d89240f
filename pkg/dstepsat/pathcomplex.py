#!/usr/bin/env python3
"""
Path complexes: pivot sequences, restricted growth strings, revisit loops
and the pruning rules that cut the candidate set down before any SAT work.

Labelling convention: F_0 = {1..d}; entering vertices are labelled d+1, d+2, ...
in order of first appearance, and a revisit re-uses the label of the vertex
that left.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator, Optional

from .errors import PathComplexError

if TYPE_CHECKING:
    from .bounds import BoundsTable

Loop = tuple[int, int]


# ---------------------------------------------------------------------------
# Restricted growth strings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RestrictedGrowthString:
    symbols: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        running = 0
        for s in self.symbols:
            if s < 1 or s > running + 1:
                raise ValueError(f"not a restricted growth string: {self.symbols}")
            running = max(running, s)
        if running != self.alphabet_size:
            raise ValueError(
                f"restricted growth string {self.symbols} uses {running} symbols, expected {self.alphabet_size}"
            )

    def __str__(self) -> str:
        return "".join(str(s) for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)


def enumerate_rgs(length: int, alphabet_size: int) -> Iterator[RestrictedGrowthString]:
    """All restricted growth strings of a length on exactly alphabet_size symbols, lexicographically."""
    if length < alphabet_size:
        return

    def extend(prefix: list[int], running: int):
        remaining = length - len(prefix)
        if remaining == 0:
            if running == alphabet_size:
                yield RestrictedGrowthString(tuple(prefix), alphabet_size)
            return
        # not enough room left to introduce the missing symbols
        if alphabet_size - running > remaining:
            return
        for s in range(1, min(running + 1, alphabet_size) + 1):
            prefix.append(s)
            yield from extend(prefix, max(running, s))
            prefix.pop()

    yield from extend([], 0)


# ---------------------------------------------------------------------------
# Column pivot sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColumnPivotSequence:
    columns: tuple[int, ...]
    d: int

    def __post_init__(self):
        for a, b in zip(self.columns, self.columns[1:]):
            if a == b:
                raise ValueError(f"successive pivot columns repeat: {self.columns}")
        if any(c < 1 or c > self.d for c in self.columns):
            raise ValueError(f"pivot column out of range 1..{self.d}: {self.columns}")

    @property
    def is_canonical(self) -> bool:
        return canonicalize_columns(self.columns) == self.columns

    @property
    def uses_all_columns(self) -> bool:
        return set(self.columns) == set(range(1, self.d + 1))

    def reversed_canonical(self) -> "ColumnPivotSequence":
        """Canonical pivot sequence of the same path read from the other end."""
        return ColumnPivotSequence(canonicalize_columns(tuple(reversed(self.columns))), self.d)


def canonicalize_columns(columns: Iterable[int]) -> tuple[int, ...]:
    """Relabel columns so first occurrences appear as 1, 2, 3, ..."""
    relabel: dict[int, int] = {}
    out = []
    for c in columns:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return tuple(out)


def rgs_to_pivot_columns(s: RestrictedGrowthString, d: int) -> ColumnPivotSequence:
    """Inverse of the rank construction: p_1 = 1, p_j is the s_{j-1}-th smallest column other than p_{j-1}."""
    if s.alphabet_size > d - 1:
        raise ValueError(f"alphabet of size {s.alphabet_size} does not fit d={d}")
    columns = [1]
    for symbol in s.symbols:
        available = [c for c in range(1, d + 1) if c != columns[-1]]
        columns.append(available[symbol - 1])
    return ColumnPivotSequence(tuple(columns), d)


def columns_to_rgs(cps: ColumnPivotSequence) -> RestrictedGrowthString:
    """Forward map: s_{j-1} is the rank of p_j in {1..d} minus {p_{j-1}}."""
    if not cps.is_canonical:
        raise ValueError(f"pivot sequence {cps.columns} is not canonical")
    symbols = []
    for prev, cur in zip(cps.columns, cps.columns[1:]):
        available = [c for c in range(1, cps.d + 1) if c != prev]
        symbols.append(available.index(cur) + 1)
    return RestrictedGrowthString(tuple(symbols), max(symbols, default=0))


# ---------------------------------------------------------------------------
# Vertex pivot sequences and path complexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PivotSequence:
    """Pivots (leaving, entering) from F_0 = {1..d}; loops are (leave pivot, enter pivot), 1-based."""

    pivots: tuple[tuple[int, int], ...]
    d: int
    columns: tuple[int, ...] = ()
    loops: tuple[Loop, ...] = ()

    @property
    def initial_facet(self) -> frozenset[int]:
        return frozenset(range(1, self.d + 1))

    @property
    def length(self) -> int:
        return len(self.pivots)

    @property
    def revisits(self) -> int:
        return len(self.loops)

    @property
    def vertex_count(self) -> int:
        return self.d + self.length - self.revisits

    def to_line(self) -> str:
        return " ".join(f"({l},{e})" for l, e in self.pivots)

    def digest(self) -> str:
        return hashlib.sha1(self.to_line().encode("utf-8")).hexdigest()[:12]

    def to_dict(self) -> dict:
        return {
            "pivots": [list(p) for p in self.pivots],
            "columns": list(self.columns),
            "loops": [list(lp) for lp in self.loops],
        }

    @classmethod
    def from_line(cls, line: str, d: int) -> "PivotSequence":
        """Parse a '(l,e) (l,e) ...' line and recover its columns and loops."""
        pivots = []
        for token in line.split():
            l, e = token.strip("()").split(",")
            pivots.append((int(l), int(e)))
        columns: list[int] = []
        loops: list[Loop] = []
        position = {v: v for v in range(1, d + 1)}
        left_at: dict[int, int] = {}
        for j, (l, e) in enumerate(pivots, start=1):
            if l not in position:
                raise PathComplexError(f"pivot {j} removes vertex {l} which is not in the facet")
            column = position.pop(l)
            left_at[l] = j
            if e in left_at:
                loops.append((left_at.pop(e), j))
            position[e] = column
            columns.append(column)
        return cls(tuple(pivots), d, tuple(columns), tuple(sorted(loops, key=lambda lp: lp[1])))


@dataclass(frozen=True)
class PathComplex:
    facets: tuple[frozenset[int], ...]
    d: int
    n: int
    sequence: Optional[PivotSequence] = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.facets) - 1

    @property
    def start(self) -> frozenset[int]:
        return self.facets[0]

    @property
    def end(self) -> frozenset[int]:
        return self.facets[-1]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.facets)

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(f)) for f in self.facets]


def build_pivot_sequence(columns: Iterable[int], d: int, loops: Iterable[Loop] = ()) -> PivotSequence:
    """Label the vertices of a column sequence, identifying each loop's leaving and entering vertex."""
    columns = tuple(columns)
    loops = tuple(sorted(loops, key=lambda lp: lp[1]))
    enter_of = {q: p for p, q in loops}
    leave_pivots = {p for p, _ in loops}
    occupant = list(range(1, d + 1))
    departed: dict[int, int] = {}
    next_label = d + 1
    pivots = []
    for j, column in enumerate(columns, start=1):
        leaving = occupant[column - 1]
        if j in enter_of:
            p = enter_of[j]
            if p not in departed:
                raise PathComplexError(f"loop {(p, j)} re-enters before its vertex has left")
            entering = departed.pop(p)
        else:
            entering = next_label
            next_label += 1
        if j in leave_pivots:
            departed[j] = leaving
        occupant[column - 1] = entering
        pivots.append((leaving, entering))
    return PivotSequence(tuple(pivots), d, columns, loops)


def expand_to_facets(p: PivotSequence, n: int) -> PathComplex:
    """Apply the pivots to {1..d} and check the path complex invariants."""
    facet = set(p.initial_facet)
    facets = [frozenset(facet)]
    for j, (leaving, entering) in enumerate(p.pivots, start=1):
        if leaving not in facet:
            raise PathComplexError(f"pivot {j} removes vertex {leaving} which is not in F_{j-1}")
        if entering in facet:
            raise PathComplexError(f"pivot {j} adds vertex {entering} which is already in F_{j-1}")
        facet.discard(leaving)
        facet.add(entering)
        facets.append(frozenset(facet))

    vertices = frozenset().union(*facets)
    if max(vertices) > n:
        raise PathComplexError(f"path uses vertex {max(vertices)} but n={n}")

    d = p.d
    for i, j in itertools.combinations(range(len(facets)), 2):
        if j > i + 1 and len(facets[i] & facets[j]) > d - 2:
            raise PathComplexError(
                f"facets F_{i} and F_{j} share a ridge, the dual graph is not a path",
                (tuple(sorted(facets[i])), tuple(sorted(facets[j]))),
            )
    if facets[0] & facets[-1]:
        raise PathComplexError(
            "end facets share a vertex (not end-disjoint)",
            (tuple(sorted(facets[0])), tuple(sorted(facets[-1]))),
        )
    return PathComplex(tuple(facets), d, n, p)


def combinatorial_type(pc: PathComplex) -> tuple[tuple[int, ...], ...]:
    """
    Key shared by path complexes equal up to relabelling vertices and reversing the path.

    Each vertex is replaced by the indices of the facets containing it; the
    facets are recovered from that multiset, so equal keys mean isomorphic paths.
    """
    k = pc.length
    forward = sorted(tuple(i for i, f in enumerate(pc.facets) if v in f) for v in pc.vertices)
    backward = sorted(tuple(sorted(k - i for i in m)) for m in forward)
    return min(tuple(forward), tuple(backward))


# ---------------------------------------------------------------------------
# Filters
# ---------------------------------------------------------------------------

def filter_loop_conditions(p: PivotSequence, loop: Optional[Loop] = None) -> bool:
    """
    Necessary conditions for identifying a loop's end vertices.

    The loop must touch at least three distinct columns (otherwise a new
    ridge appears), and either its first column occurs before the loop or
    its last column occurs after it (otherwise the identified vertex is in
    both end facets). Without an explicit loop every marked loop is checked.
    """
    loops = (loop,) if loop is not None else p.loops
    for start, end in loops:
        segment = p.columns[start - 1:end]
        if len(set(segment)) < 3:
            return False
        prefix = p.columns[:start - 1]
        suffix = p.columns[end:]
        if segment[0] not in prefix and segment[-1] not in suffix:
            return False
    return True


def filter_late_revisit(p: PivotSequence) -> bool:
    """Single revisit: the revisiting vertex must not belong to the first facet."""
    if p.revisits != 1:
        raise ValueError("late-revisit rule applies to single-revisit sequences only")
    start, _ = p.loops[0]
    return p.pivots[start - 1][0] not in p.initial_facet


def filter_not_uniq(p: PivotSequence, bounds: Optional["BoundsTable"], n: int) -> bool:
    """
    Reject sequences that cannot be geodesic because Delta(d-1, n-1) is too small.

    Applies when Delta(d-1, n-1) < length-1 and column 1 occurs only as the first
    pivot, or column d only as the last. Without a bound the candidate is kept.
    """
    if bounds is None:
        return True
    hi = bounds.upper(p.d - 1, n - 1)
    if hi is None or hi >= p.length - 1:
        return True
    cols = p.columns
    unique_first = cols.count(1) == 1 and cols[0] == 1
    unique_last = cols.count(p.d) == 1 and cols[-1] == p.d
    return not (unique_first or unique_last)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_directed(d: int, length: int) -> Iterator[ColumnPivotSequence]:
    """Canonical pivot sequences of end-disjoint non-revisiting paths, both directions kept."""
    for s in enumerate_rgs(length - 1, d - 1):
        yield rgs_to_pivot_columns(s, d)


def enumerate_undirected(d: int, length: int) -> Iterator[ColumnPivotSequence]:
    """The smaller of forward and reverse canonical sequence, one per undirected path."""
    for cps in enumerate_directed(d, length):
        if cps.columns <= cps.reversed_canonical().columns:
            yield cps


def enumerate_nonrevisiting(d: int, length: int) -> Iterator[PivotSequence]:
    """One canonical pivot sequence per undirected non-revisiting path."""
    for cps in enumerate_undirected(d, length):
        yield build_pivot_sequence(cps.columns, d)


def loop_placements(length: int, revisits: int, ordered: bool = False) -> Iterator[tuple[Loop, ...]]:
    """
    Sets of loops with distinct leave pivots and distinct enter pivots, in lexicographic order.

    With ordered=True every set is produced once per ordering of its loops.
    """
    pairs = [(p, q) for p in range(1, length + 1) for q in range(p + 1, length + 1)]
    for combo in itertools.combinations(pairs, revisits):
        if len({p for p, _ in combo}) == revisits and len({q for _, q in combo}) == revisits:
            if ordered:
                yield from itertools.permutations(combo)
            else:
                yield combo


@dataclass
class FilterFlags:
    """
    Pruning and symmetry conventions of the candidate enumeration.

    undirected_base: loops for two or more revisits go on the lexicographically
    smaller of each base sequence and its reversal.
    not_uniq_revisits: not-uniq also prunes the revisiting classes.
    loop_orders: multi-loop placements are generated once per loop ordering,
    so a path with r loops is produced r! times.
    """

    loop_conditions: bool = True
    late_revisit: bool = True
    not_uniq: bool = True
    undirected_base: bool = True
    not_uniq_revisits: bool = True
    loop_orders: bool = False

    @classmethod
    def published(cls) -> "FilterFlags":
        """Generation behind the published (4,11) class counts: no not-uniq past 0 revisits, loop orders kept."""
        return cls(not_uniq_revisits=False, loop_orders=True)

    def to_dict(self) -> dict:
        return asdict(self)


def enumerate_with_revisits(
    d: int,
    length: int,
    revisits: int,
    n: Optional[int] = None,
    bounds: Optional["BoundsTable"] = None,
    flags: Optional[FilterFlags] = None,
) -> Iterator[PivotSequence]:
    """Candidate pivot sequences with exactly `revisits` revisits that pass every enabled filter."""
    if not 0 <= revisits <= 3:
        raise ValueError(f"revisits must be in 0..3, got {revisits}")
    flags = flags or FilterFlags()
    n = n if n is not None else d + length - revisits
    not_uniq = flags.not_uniq and bounds is not None
    if revisits:
        not_uniq = not_uniq and flags.not_uniq_revisits

    if revisits == 0:
        for p in enumerate_nonrevisiting(d, length):
            if not_uniq and not filter_not_uniq(p, bounds, n):
                continue
            if p.vertex_count <= n:
                yield p
        return

    if d + length - revisits > n:
        return

    if revisits >= 2 and flags.undirected_base:
        bases = enumerate_undirected(d, length)
    else:
        bases = enumerate_directed(d, length)

    for cps in bases:
        for loops in loop_placements(length, revisits, ordered=flags.loop_orders):
            p = build_pivot_sequence(cps.columns, d, loops)
            if not_uniq and not filter_not_uniq(p, bounds, n):
                break
            if flags.loop_conditions and not filter_loop_conditions(p):
                continue
            if revisits == 1 and flags.late_revisit and not filter_late_revisit(p):
                continue
            try:
                expand_to_facets(p, n)
            except PathComplexError:
                continue
            yield p


# ---------------------------------------------------------------------------
# Candidate files
# ---------------------------------------------------------------------------

def candidate_manifest(d: int, n: int, length: int, revisits: Iterable[int],
                       flags: FilterFlags, sequences_by_class: dict[int, list[PivotSequence]]) -> dict:
    """
    Structured manifest of a candidate set (deterministic for identical inputs).

    "counts" are generated counts; "sequences" lists each pivot sequence once.
    """
    return {
        "d": d,
        "n": n,
        "length": length,
        "revisits": list(revisits),
        "filters": flags.to_dict(),
        "counts": {str(r): len(seqs) for r, seqs in sorted(sequences_by_class.items())},
        "count": sum(len(seqs) for seqs in sequences_by_class.values()),
        "sequences": {
            str(r): list(dict.fromkeys(p.to_line() for p in seqs)) for r, seqs in sorted(sequences_by_class.items())
        },
    }


def write_candidates(directory: Path, manifest: dict) -> tuple[Path, Path]:
    """Write candidates.txt (one pivot sequence per line) and candidates.json."""
    directory.mkdir(parents=True, exist_ok=True)
    text_path = directory / "candidates.txt"
    json_path = directory / "candidates.json"
    lines = [line for r in sorted(manifest["sequences"], key=int) for line in manifest["sequences"][r]]
    text_path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
    json_path.write_text(json.dumps(manifest, indent=2), encoding="utf-8")
    return text_path, json_path


def read_candidates(path: Path, d: int) -> list[PivotSequence]:
    """Read a candidates.txt file back into pivot sequences."""
    return [
        PivotSequence.from_line(line, d)
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]
