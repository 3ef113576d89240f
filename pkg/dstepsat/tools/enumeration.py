#!/usr/bin/env python3
"""Enumeration tools"""

import json
from dataclasses import replace
from typing import Optional

from ..bounds import known_table
from ..data.reference_paths import D4_N11_COUNTS, D6_N12_SINGLE_REVISIT
from ..logging import logged_step
from ..pathcomplex import (
    FilterFlags,
    PivotSequence,
    enumerate_with_revisits,
    expand_to_facets,
)
from ..prover import default_revisits

# Responses list at most this many sequences per class
MAX_LISTED = 50


def register_enumeration_tools(mcp):
    """Register candidate-enumeration tools."""

    @mcp.tool()
    @logged_step("enumerate")
    def enumerate_candidates(d: int, n: int, length: int, revisits: Optional[list[int]] = None,
                             loop_conditions: bool = True, late_revisit: bool = True,
                             not_uniq: bool = True, published_counts: bool = False) -> str:
        """
        Candidate pivot sequences per revisit class (counts plus the first sequences).

        published_counts switches to the generation behind the published class counts.
        """
        try:
            classes = revisits if revisits is not None else default_revisits(d, n, length)
            base = FilterFlags.published() if published_counts else FilterFlags()
            flags = replace(base, loop_conditions=loop_conditions, late_revisit=late_revisit, not_uniq=not_uniq)
            bounds = known_table()
            out = {}
            for r in classes:
                lines = [p.to_line() for p in enumerate_with_revisits(d, length, r, n=n, bounds=bounds, flags=flags)]
                out[str(r)] = {"count": len(lines), "sequences": lines[:MAX_LISTED]}
            return json.dumps({
                "d": d, "n": n, "length": length,
                "filters": flags.to_dict(),
                "classes": out,
                "total": sum(c["count"] for c in out.values()),
            }, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})

    @mcp.tool()
    @logged_step("enumerate")
    def expand_pivot_sequence(line: str, d: int, n: int) -> str:
        """Facets F_0..F_k of a pivot sequence '(l,e) (l,e) ...', with its loops."""
        try:
            p = PivotSequence.from_line(line, d)
            pc = expand_to_facets(p, n)
            return json.dumps({
                "pivots": p.to_dict(),
                "digest": p.digest(),
                "length": pc.length,
                "vertices": sorted(pc.vertices),
                "facets": [list(f) for f in pc.sorted_facets()],
            }, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e), "facets": [list(f) for f in getattr(e, "facets", ())]})

    @mcp.tool()
    def list_reference_paths() -> str:
        """Published candidate sets: the ten (6,12) sequences and the (4,11) class counts."""
        return json.dumps({
            "d6_n12_single_revisit": D6_N12_SINGLE_REVISIT,
            "d4_n11_counts": {str(k): v for k, v in D4_N11_COUNTS.items()},
        }, indent=2)
