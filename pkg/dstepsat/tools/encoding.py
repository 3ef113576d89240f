#!/usr/bin/env python3
"""Encoding tools"""

import json
from pathlib import Path

from ..config import OUTPUT_DIR
from ..encoder import emit_dimacs, formula_manifest, gp_clause_count
from ..logging import logged_step
from ..pathcomplex import PivotSequence, expand_to_facets
from ..prover import build_instance_formula
from ..shortcuts import shortcut_candidates


def register_encoding_tools(mcp):
    """Register CNF encoding tools."""

    @mcp.tool()
    @logged_step("encode")
    def encode_instance_summary(line: str, d: int, n: int, mode: str = "lazy") -> str:
        """Variable and clause counts of the instance for a pivot sequence."""
        try:
            pc = expand_to_facets(PivotSequence.from_line(line, d), n)
            formula, shortcut_lines = build_instance_formula(pc, n, mode, False)
            manifest = formula_manifest(formula, pc, shortcut_lines)
            manifest["gp_count_matches"] = formula.fragments["gp_axioms"] == gp_clause_count(n, d + 1)
            return json.dumps(manifest, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})

    @mcp.tool()
    @logged_step("encode")
    def write_dimacs(line: str, d: int, n: int, mode: str = "lazy", filename: str = "") -> str:
        """Write the DIMACS file of an instance under OUTPUT_DIR and return its path."""
        try:
            pc = expand_to_facets(PivotSequence.from_line(line, d), n)
            formula, shortcut_lines = build_instance_formula(pc, n, mode, False)
            OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
            path = OUTPUT_DIR / (filename or f"{pc.sequence.digest()}_{mode}.cnf")
            emit_dimacs(formula, path)
            sidecar = Path(path).with_suffix(".json")
            sidecar.write_text(json.dumps(formula_manifest(formula, pc, shortcut_lines), indent=2), encoding="utf-8")
            return json.dumps({"path": str(path), "manifest": str(sidecar),
                               "variables": formula.num_vars, "clauses": len(formula.clauses)}, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})

    @mcp.tool()
    @logged_step("shortcuts")
    def list_shortcut_candidates(line: str, d: int, n: int, limit: int = 20) -> str:
        """Inclusion-minimal shortcuts between the end facets (count plus the first ones)."""
        try:
            pc = expand_to_facets(PivotSequence.from_line(line, d), n)
            shortcuts = [s.to_line() for s in shortcut_candidates(pc)]
            return json.dumps({"count": len(shortcuts), "shortcuts": shortcuts[:limit]}, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})
