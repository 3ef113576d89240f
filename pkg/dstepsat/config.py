#!/usr/bin/env python3
"""
Configuration management for the d-step SAT toolkit.
"""

import os
from dataclasses import asdict, dataclass
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Solver backend: "embedded" (PySAT) or "external" (DIMACS executable)
BACKEND = os.getenv("DSTEP_BACKEND", "embedded").lower()

# PySAT solver name for the embedded backend
SAT_SOLVER_NAME = os.getenv("SAT_SOLVER_NAME", "cadical153")

# External solver executable (must print s/v lines)
SAT_EXECUTABLE = os.path.expanduser(os.getenv("SAT_EXECUTABLE", "kissat"))

# Wall-clock limit per instance in seconds (2 hours by default)
INSTANCE_TIME_LIMIT = float(os.getenv("INSTANCE_TIME_LIMIT", 7200))

# Parallel instances in a case run
WORKERS = int(os.getenv("WORKERS", 1))

# Where case directories, DIMACS files and reports go
OUTPUT_DIR = Path(os.path.expanduser(os.getenv("OUTPUT_DIR", "./runs")))

# Seed passed to the external solver (see ExternalBackend.seed_option)
SEED = int(os.getenv("SEED", 0))

# Drop duplicate clauses after assembly (off for acceptance runs: counts must match)
DEDUPLICATE_CLAUSES = os.getenv("DEDUPLICATE_CLAUSES", "false").lower() == "true"

# Logging configuration
LOG_STEPS = os.getenv("LOG_STEPS", "true").lower() == "true"
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# MCP Server configuration
MCP_PORT = int(os.getenv("MCP_PORT", 8080))


def get_config() -> dict:
    """Return all configuration as a dictionary."""
    return {
        "BACKEND": BACKEND,
        "SAT_SOLVER_NAME": SAT_SOLVER_NAME,
        "SAT_EXECUTABLE": SAT_EXECUTABLE,
        "INSTANCE_TIME_LIMIT": INSTANCE_TIME_LIMIT,
        "WORKERS": WORKERS,
        "OUTPUT_DIR": str(OUTPUT_DIR),
        "SEED": SEED,
        "DEDUPLICATE_CLAUSES": DEDUPLICATE_CLAUSES,
        "LOG_STEPS": LOG_STEPS,
        "LOG_LEVEL": LOG_LEVEL,
        "MCP_PORT": MCP_PORT,
    }


@dataclass
class RunConfig:
    """Settings of one case run; defaults come from the environment."""

    backend: str = BACKEND
    solver_name: str = SAT_SOLVER_NAME
    executable: str = SAT_EXECUTABLE
    mode: str = "lazy"
    time_limit: float = INSTANCE_TIME_LIMIT
    workers: int = WORKERS
    output_dir: Path = OUTPUT_DIR
    seed: int = SEED
    dedupe: bool = DEDUPLICATE_CLAUSES
    write_dimacs: bool = False
    resume: bool = True

    def to_dict(self) -> dict:
        data = asdict(self)
        data["output_dir"] = str(self.output_dir)
        return data
