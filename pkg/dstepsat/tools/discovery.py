#!/usr/bin/env python3
"""
Progressive Disclosure - Tool Discovery Layer
Minimal tool catalog for navigation only.
"""

import json

from ..config import get_config

TOOL_CATALOG = {
    "enumeration": {
        "description": "Candidate path complexes (pivot sequences, revisits, filters)",
        "tools": ["enumerate_candidates", "expand_pivot_sequence", "list_reference_paths"],
    },
    "encoding": {
        "description": "CNF instances for a path complex and their clause counts",
        "tools": ["encode_instance_summary", "write_dimacs", "list_shortcut_candidates"],
    },
    "proving": {
        "description": "SAT refutation of one instance or a whole case",
        "tools": ["prove_pivot_sequence", "run_case_report"],
    },
    "bounds": {
        "description": "Known and derived bounds on Delta(d, n)",
        "tools": ["get_bounds_table", "get_bound"],
    },
    "verification": {
        "description": "Independent re-checks of chirotopes and counterexamples",
        "tools": ["verify_chirotope", "chirotope_from_points_tool", "verify_counterexample_tool"],
    },
}


def register_discovery_tools(mcp):
    """Register minimal tool discovery."""

    @mcp.tool()
    def list_tool_categories() -> str:
        """List all available tool categories."""
        categories = [
            {"category": cat, "description": info["description"], "tool_count": len(info["tools"])}
            for cat, info in TOOL_CATALOG.items()
        ]
        return json.dumps(categories, indent=2)

    @mcp.tool()
    def list_tools_in_category(category: str) -> str:
        """List tools in a specific category."""
        if category not in TOOL_CATALOG:
            return json.dumps({
                "error": f"Unknown category '{category}'",
                "available": list(TOOL_CATALOG.keys())
            })
        return json.dumps({
            "category": category,
            "description": TOOL_CATALOG[category]["description"],
            "tools": TOOL_CATALOG[category]["tools"]
        }, indent=2)

    @mcp.tool()
    def get_settings() -> str:
        """Show the active configuration (backend, limits, output directory)."""
        return json.dumps(get_config(), indent=2)
