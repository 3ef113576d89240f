#!/usr/bin/env python3
"""
SAT backend connection and execution.

Two backends share one small interface: an embedded incremental PySAT solver,
and an external DIMACS executable that is re-run from scratch every round.
"""

from __future__ import annotations

import os
import shutil
import subprocess
import tempfile
import threading
from typing import Iterable, Optional, Protocol

from pysat.solvers import Solver

from .config import BACKEND, SAT_EXECUTABLE, SAT_SOLVER_NAME, SEED
from .encoder import write_clauses
from .errors import BackendError

SAT = "SAT"
UNSAT = "UNSAT"
TIMEOUT = "TIMEOUT"


def complete_model(model: Iterable[int], num_vars: int) -> list[int]:
    """Fill variables the solver left unassigned (they occur in no clause) with true."""
    assigned = {abs(lit): lit for lit in model if lit != 0}
    return [assigned.get(v, v) for v in range(1, num_vars + 1)]


class SolverBackend(Protocol):
    num_vars: int
    incremental: bool

    def add_clauses(self, clauses: Iterable[list[int]]): ...

    def solve(self, time_limit: Optional[float] = None) -> tuple[str, Optional[list[int]]]: ...

    def close(self): ...


class EmbeddedBackend:
    """In-process PySAT solver; clauses added between rounds keep learnt state."""

    incremental = True

    def __init__(self, num_vars: int, name: str = SAT_SOLVER_NAME):
        self.num_vars = num_vars
        self.name = name
        try:
            self.solver = Solver(name=name)
        except Exception as e:
            raise BackendError(f"PySAT solver {name!r} is not available: {e}") from e

    def add_clauses(self, clauses: Iterable[list[int]]):
        for clause in clauses:
            self.solver.add_clause(clause)

    def solve(self, time_limit: Optional[float] = None) -> tuple[str, Optional[list[int]]]:
        timer = None
        if time_limit is not None:
            if time_limit <= 0:
                return TIMEOUT, None
            timer = threading.Timer(time_limit, self.solver.interrupt)
            timer.start()
        try:
            result = self.solver.solve_limited(expect_interrupt=True)
        finally:
            if timer is not None:
                timer.cancel()
            self.solver.clear_interrupt()
        if result is None:
            return TIMEOUT, None
        if not result:
            return UNSAT, None
        return SAT, complete_model(self.solver.get_model() or [], self.num_vars)

    def close(self):
        self.solver.delete()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


class ExternalBackend:
    """DIMACS file handed to an executable that prints competition-style s/v lines."""

    incremental = False
    # kissat and cadical syntax; an empty template passes no seed
    seed_option = "--seed={seed}"

    def __init__(self, num_vars: int, executable: str = SAT_EXECUTABLE, seed: Optional[int] = SEED):
        if shutil.which(executable) is None and not os.path.isfile(executable):
            raise BackendError(f"SAT executable {executable!r} not found")
        self.num_vars = num_vars
        self.executable = executable
        self.seed = seed
        self.clauses: list[list[int]] = []

    def add_clauses(self, clauses: Iterable[list[int]]):
        self.clauses.extend(list(c) for c in clauses)

    def command(self, path: str) -> list[str]:
        args = [self.executable]
        if self.seed is not None and self.seed_option:
            args.append(self.seed_option.format(seed=self.seed))
        args.append(path)
        return args

    def solve(self, time_limit: Optional[float] = None) -> tuple[str, Optional[list[int]]]:
        if time_limit is not None and time_limit <= 0:
            return TIMEOUT, None
        with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as handle:
            write_clauses(handle, self.num_vars, self.clauses)
            path = handle.name
        try:
            proc = subprocess.run(self.command(path), capture_output=True, text=True,
                                  timeout=time_limit)
        except subprocess.TimeoutExpired:
            return TIMEOUT, None
        except OSError as e:
            raise BackendError(f"failed to run {self.executable}: {e}") from e
        finally:
            os.unlink(path)
        return parse_solver_output(proc.stdout, self.num_vars)

    def close(self):
        self.clauses = []

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def parse_solver_output(stdout: str, num_vars: int) -> tuple[str, Optional[list[int]]]:
    """Read the 's' status line and the 'v' value lines of a solver run."""
    status = None
    literals: list[int] = []
    for line in stdout.splitlines():
        line = line.strip()
        if line.startswith("s "):
            word = line[2:].strip().upper()
            if word == "SATISFIABLE":
                status = SAT
            elif word == "UNSATISFIABLE":
                status = UNSAT
            else:
                status = TIMEOUT
        elif line.startswith("v "):
            literals.extend(int(tok) for tok in line[2:].split() if tok != "0")
    if status is None:
        raise BackendError("solver printed no status line")
    if status != SAT:
        return status, None
    return SAT, complete_model(literals, num_vars)


def make_backend(num_vars: int, kind: str = BACKEND, solver_name: str = SAT_SOLVER_NAME,
                 executable: str = SAT_EXECUTABLE, seed: Optional[int] = SEED) -> SolverBackend:
    """Create the configured backend for a formula over num_vars variables.

    The seed only reaches external solvers; PySAT's bundled solvers take none.
    """
    if kind == "embedded":
        return EmbeddedBackend(num_vars, solver_name)
    if kind == "external":
        return ExternalBackend(num_vars, executable, seed)
    raise BackendError(f"unknown backend {kind!r} (expected 'embedded' or 'external')")
