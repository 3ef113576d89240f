#!/usr/bin/env python3
"""
MCP tools for the d-step SAT toolkit.

Each submodule registers one category of tools; discovery is registered first
so an assistant can explore the catalog before calling anything heavy.
"""

from .discovery import register_discovery_tools
from .enumeration import register_enumeration_tools
from .encoding import register_encoding_tools
from .proving import register_proving_tools
from .bounds import register_bounds_tools
from .verification import register_verification_tools


def register_all_tools(mcp):
    """Register all tools with the MCP server."""
    register_discovery_tools(mcp)

    register_enumeration_tools(mcp)
    register_encoding_tools(mcp)
    register_proving_tools(mcp)
    register_bounds_tools(mcp)
    register_verification_tools(mcp)
