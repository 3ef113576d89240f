#!/usr/bin/env python3
"""Proving tools"""

import json
from typing import Optional

from ..config import RunConfig
from ..data.known_bounds import COMPUTED_BOUNDS
from ..pathcomplex import PivotSequence, expand_to_facets
from ..prover import prove_instance, run_case


def register_proving_tools(mcp):
    """Register SAT proving tools."""

    @mcp.tool()
    def prove_pivot_sequence(line: str, d: int, n: int, mode: str = "lazy",
                             time_limit: float = 600.0) -> str:
        """Solve one instance: UNSAT refutes the path, SAT returns a counterexample chirotope."""
        try:
            pc = expand_to_facets(PivotSequence.from_line(line, d), n)
            verdict = prove_instance(pc, n, mode=mode, config=RunConfig(mode=mode, time_limit=time_limit))
            return json.dumps(verdict.to_dict(include_model=verdict.status == "SAT"), indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})

    @mcp.tool()
    def run_case_report(d: int, n: int, length: int, revisits: Optional[list[int]] = None,
                        mode: str = "lazy", time_limit: float = 7200.0, workers: int = 1,
                        computed: bool = False) -> str:
        """Prove every candidate of a case; long-running, resumable through the case ledger."""
        try:
            report = run_case(d, n, length, revisits,
                              config=RunConfig(mode=mode, time_limit=time_limit, workers=workers),
                              computed=COMPUTED_BOUNDS if computed else ())
            data = report.to_dict()
            data["instances"] = [{k: v for k, v in inst.items() if k in ("index", "line", "status", "added_cuts")}
                                 for inst in data["instances"]]
            data["exit_code"] = report.exit_code
            return json.dumps(data, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})
