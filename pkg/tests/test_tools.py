import json

import pytest

from dstepsat.tools import register_all_tools
from dstepsat.tools.discovery import TOOL_CATALOG

GEODESIC = "(1,3) (2,4) (3,5)"
LONG_WAY_ROUND = "(1,3) (2,4) (3,5) (4,6)"


class FakeMCP:
    """Collects the functions registered through @mcp.tool()."""

    def __init__(self):
        self.tools = {}

    def tool(self):
        def decorator(func):
            self.tools[func.__name__] = func
            return func
        return decorator


@pytest.fixture(scope="module")
def tools():
    mcp = FakeMCP()
    register_all_tools(mcp)
    return mcp.tools


def call(tools, name, *args, **kwargs):
    return json.loads(tools[name](*args, **kwargs))


def test_catalog_matches_registration(tools):
    catalogued = {name for info in TOOL_CATALOG.values() for name in info["tools"]}
    discovery = {"list_tool_categories", "list_tools_in_category", "get_settings"}
    assert set(tools) == catalogued | discovery


def test_discovery(tools):
    assert len(call(tools, "list_tool_categories")) == len(TOOL_CATALOG)
    assert "error" in call(tools, "list_tools_in_category", "nope")
    assert call(tools, "list_tools_in_category", "bounds")["tools"] == ["get_bounds_table", "get_bound"]
    assert "BACKEND" in call(tools, "get_settings")


def test_enumerate_candidates(tools):
    data = call(tools, "enumerate_candidates", 6, 12, 7, [1])
    assert data["total"] == 10
    assert len(data["classes"]["1"]["sequences"]) == 10


def test_expand_pivot_sequence(tools):
    data = call(tools, "expand_pivot_sequence", GEODESIC, 2, 6)
    assert data["facets"] == [[1, 2], [2, 3], [3, 4], [4, 5]]
    bad = call(tools, "expand_pivot_sequence", "(1,3) (3,1)", 2, 4)
    assert "error" in bad
    assert bad["facets"] == [[1, 2], [1, 2]]


def test_reference_paths(tools):
    data = call(tools, "list_reference_paths")
    assert len(data["d6_n12_single_revisit"]) == 10
    assert data["d4_n11_counts"]["0"]["enumerated"] == 35
    assert data["d4_n11_counts"]["2"]["preset"] == 354


def test_enumerate_with_published_counts(tools):
    data = call(tools, "enumerate_candidates", 4, 11, 7, [2, 3], published_counts=True)
    assert data["classes"]["2"]["count"] == 354
    assert data["classes"]["3"]["count"] == 96
    assert data["filters"]["loop_orders"]


def test_encoding_summary(tools):
    data = call(tools, "encode_instance_summary", LONG_WAY_ROUND, 2, 6)
    assert data["gp_count_matches"]
    assert data["num_clauses"] == 500


def test_shortcut_listing(tools):
    data = call(tools, "list_shortcut_candidates", LONG_WAY_ROUND, 2, 6, limit=1000)
    assert "{1,2} {1,6} {5,6}" in data["shortcuts"]
    assert data["count"] == len(data["shortcuts"])


def test_bounds(tools):
    assert call(tools, "get_bound", 6, 12)["display"] == "6"
    assert call(tools, "get_bound", 6, 12, computed=False)["display"] == "{6,7}"
    assert "error" in call(tools, "get_bound", 20, 40)
    assert len(call(tools, "get_bounds_table")["changed"]) == 4
    assert "error" in call(tools, "get_bounds_table", extra_facts=["4,10<=4"])


def test_verification(tools, hexagon):
    data = call(tools, "verify_chirotope", hexagon.serialize())
    assert data["valid"]
    assert len(data["facets"]) == 6
    assert call(tools, "verify_counterexample_tool", hexagon.serialize(), GEODESIC, 2)["valid"]
    assert "error" in call(tools, "chirotope_from_points_tool", [[1, 0, 0], [1, 1, 1], [1, 2, 2]])
    assert "chirotope" in call(tools, "chirotope_from_points_tool", [[1, 0, 0], [1, 1, 0], [1, 0, 1]])
