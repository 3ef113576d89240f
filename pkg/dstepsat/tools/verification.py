#!/usr/bin/env python3
"""Verification tools"""

import json

from ..chirotope import Chirotope, chirotope_from_points, facets_of, verify_axioms
from ..logging import logged_step
from ..pathcomplex import PivotSequence, expand_to_facets
from ..prover import verify_counterexample


def register_verification_tools(mcp):
    """Register independent re-check tools."""

    @mcp.tool()
    @logged_step("verify")
    def verify_chirotope(text: str) -> str:
        """Check the sign axioms of a serialized chirotope and list its facets."""
        try:
            chi = Chirotope.parse(text)
            ok, witness = verify_axioms(chi)
            report = facets_of(chi)
            return json.dumps({
                "valid": ok,
                "witness": witness,
                "facets": [list(f) for f in report.facets],
                "matroid_polytope": report.is_matroid_polytope,
                "uncovered": list(report.uncovered),
            }, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})

    @mcp.tool()
    def chirotope_from_points_tool(points: list[list[int]]) -> str:
        """Serialized chirotope of integer column vectors (each point is one column)."""
        try:
            return json.dumps({"chirotope": chirotope_from_points(points).serialize()})
        except Exception as e:
            return json.dumps({"error": str(e)})

    @mcp.tool()
    @logged_step("verify")
    def verify_counterexample_tool(text: str, line: str, d: int) -> str:
        """Re-check that a chirotope carries a pivot sequence as a geodesic facet path."""
        try:
            chi = Chirotope.parse(text)
            pc = expand_to_facets(PivotSequence.from_line(line, d), chi.n)
            problems = verify_counterexample(chi, pc)
            return json.dumps({"valid": not problems, "problems": problems}, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})
