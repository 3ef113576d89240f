#!/usr/bin/env python3
"""
CNF encoding of "a uniform rank-r chirotope on n elements carries this path
complex geodesically on its boundary".

Variable [b] of a sorted basis b is colex_rank(b) + 1 and is true iff chi(b) = +1.
For an ordered tuple t the literal of "chi(t) = +1" is tau(t) * [sorted(t)].
"""

from __future__ import annotations

import hashlib
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Optional, Sequence, Union

from .chirotope import colex_rank, colex_unrank, tau
from .errors import EncodingError
from .pathcomplex import PathComplex

Clause = list[int]


@dataclass(frozen=True)
class VarIndex:
    """Bijection sorted r-subset <-> variable id (colex rank + 1)."""

    n: int
    r: int

    @property
    def num_vars(self) -> int:
        return math.comb(self.n, self.r)

    def var(self, basis: Sequence[int]) -> int:
        return colex_rank(basis) + 1

    def basis(self, var: int) -> tuple[int, ...]:
        return colex_unrank(var - 1, self.r)


@dataclass
class CnfFormula:
    n: int
    r: int
    clauses: list[Clause] = field(default_factory=list)
    fragments: dict[str, int] = field(default_factory=dict)

    @property
    def var_index(self) -> VarIndex:
        return VarIndex(self.n, self.r)

    @property
    def num_vars(self) -> int:
        return math.comb(self.n, self.r)

    def extend(self, fragment: str, clauses: Iterable[Clause]) -> list[Clause]:
        added = [list(c) for c in clauses]
        for clause in added:
            if not clause:
                raise EncodingError(f"empty clause in fragment {fragment}")
        self.clauses.extend(added)
        self.fragments[fragment] = self.fragments.get(fragment, 0) + len(added)
        return added

    def deduplicate(self) -> int:
        """Drop repeated clauses (as literal sets); returns how many were removed."""
        seen = set()
        kept = []
        for clause in self.clauses:
            key = frozenset(clause)
            if key not in seen:
                seen.add(key)
                kept.append(clause)
        removed = len(self.clauses) - len(kept)
        self.clauses = kept
        self.fragments["deduplicated"] = -removed
        return removed

    def is_satisfied_by(self, model: Iterable[int]) -> bool:
        true_lits = set(model)
        return all(any(lit in true_lits for lit in clause) for clause in self.clauses)


@dataclass(frozen=True)
class PathSigns:
    sigma: tuple[int, ...]


def literal_for(t: Sequence[int], var_index: VarIndex) -> int:
    """Literal of 'chi(t) = +1' for an ordered tuple."""
    return tau(t) * var_index.var(tuple(sorted(t)))


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

def gp_clause_count(n: int, r: int) -> int:
    """16 * C(n, r-2) * C(n-r+2, 4)."""
    if r < 2 or n < r + 2:
        return 0
    return 16 * math.comb(n, r - 2) * math.comb(n - r + 2, 4)


def _gp_block(sigma: tuple[int, ...], quad: tuple[int, int, int, int], vi: VarIndex) -> list[Clause]:
    x1, x2, x3, x4 = quad
    la = literal_for(sigma + (x1, x2), vi)
    lb = literal_for(sigma + (x3, x4), vi)
    lc = literal_for(sigma + (x1, x3), vi)
    ld = literal_for(sigma + (x2, x4), vi)
    le = literal_for(sigma + (x1, x4), vi)
    lf = literal_for(sigma + (x2, x3), vi)
    clauses = []
    # forbid p1 = -p2 = p3 = t for both values of t
    for t in (1, -1):
        for sa, sc, se in itertools.product((1, -1), repeat=3):
            sb, sd, sf = t * sa, -t * sc, t * se
            clauses.append([-sa * la, -sb * lb, -sc * lc, -sd * ld, -se * le, -sf * lf])
    return clauses


def _gp_sigma_chunk(n: int, r: int, sigmas: list[tuple[int, ...]]) -> list[Clause]:
    vi = VarIndex(n, r)
    out: list[Clause] = []
    for sigma in sigmas:
        rest = [x for x in range(1, n + 1) if x not in sigma]
        for quad in itertools.combinations(rest, 4):
            out.extend(_gp_block(sigma, quad, vi))
    return out


def encode_gp_axioms(n: int, r: int, workers: int = 1) -> list[Clause]:
    """
    Grassmann-Pluecker sign clauses: 16 six-literal clauses per (sigma, x1<x2<x3<x4).

    Blocks are generated in sigma order; with workers > 1 contiguous sigma
    chunks are built in a process pool and concatenated in the same order.
    """
    if r < 2 or n < r + 2:
        return []
    sigmas = list(itertools.combinations(range(1, n + 1), r - 2))
    if workers <= 1:
        return _gp_sigma_chunk(n, r, sigmas)
    size = max(1, math.ceil(len(sigmas) / workers))
    chunks = [sigmas[i:i + size] for i in range(0, len(sigmas), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_gp_sigma_chunk, [n] * len(chunks), [r] * len(chunks), chunks)
        return [clause for part in parts for clause in part]


# ---------------------------------------------------------------------------
# Facets and the path
# ---------------------------------------------------------------------------

def encode_facet(facet: Iterable[int], n: int, var_index: VarIndex) -> list[Clause]:
    """Equality chain chi(F, x_1) = chi(F, x_2) = ... over the complement in ascending order."""
    facet = tuple(sorted(facet))
    if len(facet) != var_index.r - 1:
        raise EncodingError(f"facet {facet} must have {var_index.r - 1} elements")
    lits = [literal_for(facet + (x,), var_index) for x in range(1, n + 1) if x not in facet]
    clauses = []
    for a, b in zip(lits, lits[1:]):
        clauses.append([a, -b])
        clauses.append([-a, b])
    return clauses


def _facet_list(pc) -> list[tuple[int, ...]]:
    if isinstance(pc, PathComplex):
        return pc.sorted_facets()
    return [tuple(sorted(f)) for f in pc]


def compute_path_signs(pc) -> PathSigns:
    """sigma_0 = +1, sigma_i = tau(F_{i-1}, e_i) * tau(F_i, l_i) * sigma_{i-1} (facets as sorted tuples)."""
    facets = _facet_list(pc)
    sigma = [1]
    for prev, cur in zip(facets, facets[1:]):
        (entering,) = set(cur) - set(prev)
        (leaving,) = set(prev) - set(cur)
        sigma.append(tau(prev + (entering,)) * tau(cur + (leaving,)) * sigma[-1])
    return PathSigns(tuple(sigma))


def encode_path_on_boundary(pc, n: int, var_index: VarIndex) -> list[Clause]:
    """Unit clauses chi(F_i, x) = sigma_i; the first one fixes F_0 plus its smallest extension positive."""
    facets = _facet_list(pc)
    signs = compute_path_signs(facets).sigma
    units = []
    for facet, s in zip(facets, signs):
        for x in range(1, n + 1):
            if x not in facet:
                units.append([s * literal_for(facet + (x,), var_index)])
    return units


def encode_forbid_shortcut(shortcut, n: int, var_index: VarIndex) -> list[Clause]:
    """Two clauses stating the interior values sigma_i * chi(F_i, x) are not all equal."""
    facets = _facet_list(shortcut)
    if len(facets) <= 2:
        raise EncodingError("shortcut is a direct pivot; instance infeasible by construction")
    signs = compute_path_signs(facets).sigma
    z = [
        signs[i] * literal_for(facets[i] + (x,), var_index)
        for i in range(1, len(facets) - 1)
        for x in range(1, n + 1)
        if x not in facets[i]
    ]
    return [z, [-lit for lit in z]]


# ---------------------------------------------------------------------------
# Instance assembly and DIMACS
# ---------------------------------------------------------------------------

def encode_instance(pc: PathComplex, n: int, shortcuts: Iterable = (), dedupe: bool = False,
                    workers: int = 1) -> CnfFormula:
    """Axioms + path units + forbid-shortcut pairs for one path complex (r = d + 1)."""
    formula = CnfFormula(n, pc.d + 1)
    vi = formula.var_index
    formula.extend("gp_axioms", encode_gp_axioms(n, formula.r, workers=workers))
    formula.extend("path_units", encode_path_on_boundary(pc, n, vi))
    formula.fragments.setdefault("shortcuts", 0)
    for shortcut in shortcuts:
        formula.extend("shortcuts", encode_forbid_shortcut(shortcut, n, vi))
    if dedupe:
        formula.deduplicate()
    return formula


def formula_manifest(formula: CnfFormula, pc: Optional[PathComplex] = None,
                     shortcut_lines: Sequence[str] = ()) -> dict:
    """JSON sidecar: sizes, per-fragment counts, the path and a digest of the shortcut list."""
    digest = hashlib.sha1("\n".join(shortcut_lines).encode("utf-8")).hexdigest()
    return {
        "n": formula.n,
        "r": formula.r,
        "num_vars": formula.num_vars,
        "num_clauses": len(formula.clauses),
        "fragments": dict(formula.fragments),
        "expected_gp_clauses": gp_clause_count(formula.n, formula.r),
        "path": pc.sequence.to_line() if pc is not None and pc.sequence is not None else None,
        "facets": [list(f) for f in pc.sorted_facets()] if pc is not None else None,
        "shortcuts": len(shortcut_lines),
        "shortcut_digest": digest,
    }


def emit_dimacs(formula: CnfFormula, destination: Union[str, Path, IO[str]],
                with_mapping: bool = True) -> None:
    """Write DIMACS CNF; comment lines map each variable to its basis."""
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8") as f:
            emit_dimacs(formula, f, with_mapping)
        return
    num_vars = formula.num_vars if formula.clauses else 0
    if with_mapping and num_vars:
        vi = formula.var_index
        for var in range(1, num_vars + 1):
            destination.write(f"c {var} {' '.join(map(str, vi.basis(var)))}\n")
    write_clauses(destination, num_vars, formula.clauses)


def write_clauses(handle: IO[str], num_vars: int, clauses: Sequence[Clause]) -> None:
    """Problem line and one zero-terminated line per clause."""
    handle.write(f"p cnf {num_vars} {len(clauses)}\n")
    for clause in clauses:
        handle.write(" ".join(map(str, clause)) + " 0\n")


def parse_dimacs(text: str) -> tuple[int, list[Clause]]:
    """Read DIMACS CNF back into (num_vars, clauses)."""
    num_vars = 0
    clauses: list[Clause] = []
    current: Clause = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            num_vars = int(line.split()[2])
            continue
        for token in line.split():
            lit = int(token)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    return num_vars, clauses
