#!/usr/bin/env python3
"""
d-step SAT toolkit - MCP Server Entry Point

A Model Context Protocol server that gives an assistant access to:
- Enumeration of candidate path complexes for Delta(d, n) cases
- CNF encoding of "this path is a geodesic on a matroid polytope"
- SAT refutation of single instances and whole cases
- Propagated bounds tables and independent model re-checks

The batch command line lives in dstepsat.cli (python -m dstepsat).
"""

from mcp.server.fastmcp import FastMCP

from dstepsat import __version__
from dstepsat.config import (
    BACKEND,
    SAT_SOLVER_NAME,
    SAT_EXECUTABLE,
    INSTANCE_TIME_LIMIT,
    WORKERS,
    OUTPUT_DIR,
    MCP_PORT,
    LOG_STEPS,
    LOG_LEVEL,
)
from dstepsat.logging import configure
from dstepsat.solver import ExternalBackend
from dstepsat.errors import BackendError
from dstepsat.tools import register_all_tools

configure(LOG_LEVEL, LOG_STEPS)

# Initialize MCP server with SSE settings
mcp = FastMCP(
    "d-step SAT MCP Server",
    host="0.0.0.0",
    port=MCP_PORT
)

# Register all tools
register_all_tools(mcp)


def print_startup_info():
    """Print server startup information."""
    print(f"Starting d-step SAT MCP Server {__version__} on http://localhost:{MCP_PORT}/sse")
    print()

    # Backend status
    if BACKEND == "embedded":
        print(f"Backend: embedded PySAT ({SAT_SOLVER_NAME})")
    else:
        try:
            ExternalBackend(0, SAT_EXECUTABLE)
            print(f"Backend: external ({SAT_EXECUTABLE})")
        except BackendError:
            print(f"Backend: external but {SAT_EXECUTABLE} NOT FOUND (set SAT_EXECUTABLE)")

    print(f"Time limit per instance: {INSTANCE_TIME_LIMIT:.0f}s, workers: {WORKERS}")
    print(f"Output directory: {OUTPUT_DIR}")

    # Logging status
    if LOG_STEPS:
        print(f"Step Logging: ENABLED (level={LOG_LEVEL})")
    else:
        print("Step Logging: DISABLED (set LOG_STEPS=true to enable)")

    print()


if __name__ == "__main__":
    print_startup_info()
    mcp.run(transport="sse")
