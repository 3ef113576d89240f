#!/usr/bin/env python3
"""Bounds tools"""

import json

from ..bounds import parse_fact, propagate
from ..data.known_bounds import COMPUTED_BOUNDS
from ..logging import logged_step


def register_bounds_tools(mcp):
    """Register Delta(d, n) bound tools."""

    @mcp.tool()
    @logged_step("bounds")
    def get_bounds_table(computed: bool = True, extra_facts: list[str] = None, as_text: bool = True) -> str:
        """Propagated bounds grid; computed=True adds Delta(6,12) <= 6 and Delta(4,11) <= 6."""
        try:
            base = propagate()
            facts = (list(COMPUTED_BOUNDS) if computed else []) + [parse_fact(f) for f in extra_facts or []]
            table = propagate(facts)
            if as_text:
                return json.dumps({"table": table.render(range(4, 8), range(4, 8), table.differing(base)),
                                   "changed": [list(c) for c in table.differing(base)]}, indent=2)
            return json.dumps(table.to_dict(), indent=2)
        except Exception as e:
            return json.dumps({"error": str(e), "chain": getattr(e, "chain", None)})

    @mcp.tool()
    def get_bound(d: int, n: int, computed: bool = True) -> str:
        """Interval for a single Delta(d, n) with the source of each side."""
        try:
            table = propagate(COMPUTED_BOUNDS if computed else ())
            cell = table.get(d, n)
            if cell is None:
                return json.dumps({"error": f"Delta({d},{n}) is outside the grid"})
            return json.dumps({"d": d, "n": n, **cell.to_dict()}, indent=2)
        except Exception as e:
            return json.dumps({"error": str(e)})
