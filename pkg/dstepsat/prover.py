#!/usr/bin/env python3
"""
Per-instance refutation and case orchestration.

prove_instance turns one path complex into CNF, solves it, and in lazy mode
runs the cutting-plane loop: every SAT model is decoded into a chirotope, the
shortest facet path between the end facets is looked up, and if it is shorter
than the path its forbid-clause pair is added before solving again.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Iterable, Optional, Sequence

import networkx as nx

from .bounds import BoundsTable, propagate
from .chirotope import Chirotope, facet_graph, facets_of, verify_axioms
from .config import RunConfig
from .encoder import (
    CnfFormula,
    emit_dimacs,
    encode_forbid_shortcut,
    encode_instance,
    formula_manifest,
)
from .errors import DStepError, ModelError
from .logging import logged_step, step_logger
from .pathcomplex import (
    FilterFlags,
    PathComplex,
    PivotSequence,
    enumerate_with_revisits,
    expand_to_facets,
)
from .shortcuts import find_realized_shortcut, shortcut_candidates
from .solver import SAT, TIMEOUT, UNSAT, make_backend


@dataclass
class SolveVerdict:
    status: str
    model: Optional[list[int]] = None
    added_cuts: int = 0
    wall_time: float = 0.0
    rounds: int = 0
    clauses: int = 0
    fragments: dict = field(default_factory=dict)
    instance: str = ""

    def to_dict(self, include_model: bool = False) -> dict:
        data = {
            "instance": self.instance,
            "status": self.status,
            "added_cuts": self.added_cuts,
            "rounds": self.rounds,
            "clauses": self.clauses,
            "fragments": self.fragments,
            "wall_time": round(self.wall_time, 3),
        }
        if include_model:
            data["model"] = self.model
        return data


def decode_model(model: Iterable[int], n: int, r: int) -> Chirotope:
    """Signs from a total assignment: variable colex_rank(b) + 1 true iff chi(b) = +1."""
    num_vars = math.comb(n, r)
    values: dict[int, int] = {}
    for lit in model:
        if lit == 0:
            continue
        var = abs(lit)
        if var > num_vars:
            raise ModelError(f"literal {lit} outside 1..{num_vars}")
        values[var] = 1 if lit > 0 else -1
    missing = [v for v in range(1, num_vars + 1) if v not in values]
    if missing:
        raise ModelError(f"assignment leaves {len(missing)} variables unset (first: {missing[0]})")
    return Chirotope(n, r, tuple(values[v] for v in range(1, num_vars + 1)))


def verify_counterexample(chi: Chirotope, pc: PathComplex) -> list[str]:
    """Problems that keep chi from witnessing a geodesic copy of pc; empty means verified."""
    problems = []
    ok, witness = verify_axioms(chi)
    if not ok:
        problems.append(f"Grassmann-Pluecker violation at {witness}")
    report = facets_of(chi)
    facets = set(report.facets)
    missing = [f for f in pc.sorted_facets() if f not in facets]
    if missing:
        problems.append(f"path facets not on the boundary: {missing}")
        return problems
    graph = facet_graph(report.facets)
    start, end = tuple(sorted(pc.start)), tuple(sorted(pc.end))
    try:
        distance = nx.shortest_path_length(graph, start, end)
    except nx.NetworkXNoPath:
        problems.append("end facets lie in different components of the facet graph")
        return problems
    if distance < pc.length:
        problems.append(f"end facets at distance {distance} < {pc.length}")
    return problems


def build_instance_formula(pc: PathComplex, n: int, mode: str, dedupe: bool) -> tuple[CnfFormula, list[str]]:
    if mode == "eager":
        shortcuts = list(shortcut_candidates(pc))
        formula = encode_instance(pc, n, shortcuts, dedupe=dedupe)
        return formula, [s.to_line() for s in shortcuts]
    if mode == "lazy":
        return encode_instance(pc, n, dedupe=dedupe), []
    raise ValueError(f"unknown mode {mode!r} (expected 'eager' or 'lazy')")


def prove_formula(formula: CnfFormula, pc: Optional[PathComplex] = None, mode: str = "lazy",
                  config: Optional[RunConfig] = None, instance: str = "") -> SolveVerdict:
    """
    Solve a prepared formula. With a path complex in lazy mode, realised shortcuts
    are cut until the model carries the path geodesically or the formula is UNSAT.
    """
    config = config or RunConfig()
    start = time.monotonic()
    deadline = start + config.time_limit if config.time_limit else None
    vi = formula.var_index
    verdict = SolveVerdict(TIMEOUT, instance=instance)

    with make_backend(formula.num_vars, config.backend, config.solver_name,
                      config.executable, config.seed) as backend:
        backend.add_clauses(formula.clauses)
        while True:
            round_start = time.monotonic()
            remaining = None if deadline is None else deadline - round_start
            status, model = backend.solve(remaining)
            verdict.rounds += 1
            step_logger.log_solve_round(instance, verdict.rounds, status, verdict.added_cuts,
                                        len(formula.clauses), time.monotonic() - round_start)
            if status != SAT:
                verdict.status = status
                break
            if not formula.is_satisfied_by(model):
                raise DStepError("backend model violates an emitted clause")
            if pc is None:
                verdict.status, verdict.model = SAT, model
                break
            chi = decode_model(model, formula.n, formula.r)
            shortcut = find_realized_shortcut(chi, pc)
            if shortcut is None:
                problems = verify_counterexample(chi, pc)
                if problems:
                    raise DStepError(f"counterexample failed re-verification: {problems}")
                verdict.status, verdict.model = SAT, model
                break
            if mode == "eager":
                # candidates only use the path's vertices; this one leaves them
                step_logger.logger.warning("eager model of %s realises %s; cutting it",
                                           instance or "instance", shortcut.to_line())
            cut = formula.extend("shortcuts", encode_forbid_shortcut(shortcut, formula.n, vi))
            if CnfFormula(formula.n, formula.r, cut).is_satisfied_by(model):
                raise DStepError("forbid clauses do not exclude the model that produced them")
            backend.add_clauses(cut)
            verdict.added_cuts += 1

    verdict.wall_time = time.monotonic() - start
    verdict.clauses = len(formula.clauses)
    verdict.fragments = dict(formula.fragments)
    return verdict


@logged_step("solve")
def prove_instance(pc: PathComplex, n: int, mode: str = "lazy",
                   config: Optional[RunConfig] = None) -> SolveVerdict:
    """Refute (UNSAT) or realise (SAT) one path complex as a geodesic on a rank-(d+1) matroid polytope."""
    config = config or RunConfig()
    formula, _ = build_instance_formula(pc, n, mode, config.dedupe)
    instance = pc.sequence.digest() if pc.sequence is not None else ""
    return prove_formula(formula, pc, mode, config, instance)


# ---------------------------------------------------------------------------
# Case runs
# ---------------------------------------------------------------------------

@dataclass
class CaseReport:
    d: int
    n: int
    length: int
    revisits: list[int]
    mode: str
    status: str = "pending"
    conclusion: str = ""
    counts: dict = field(default_factory=dict)
    instances: list[dict] = field(default_factory=list)
    reduction: Optional[dict] = None
    counterexample: Optional[str] = None
    started: str = ""
    finished: str = ""

    @property
    def exit_code(self) -> int:
        if self.status == "counterexample":
            return 10
        if self.status in ("refuted", "trivial"):
            return 0
        return 20

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "length": self.length,
            "revisits": self.revisits,
            "mode": self.mode,
            "status": self.status,
            "conclusion": self.conclusion,
            "counts": self.counts,
            "instances": self.instances,
            "reduction": self.reduction,
            "counterexample": self.counterexample,
            "timestamps": {"started": self.started, "finished": self.finished},
        }


def default_revisits(d: int, n: int, length: int) -> list[int]:
    return list(range(max(0, d + length - n), min(3, length - d) + 1))


def reduction_check(d: int, n: int, length: int, bounds: BoundsTable) -> dict:
    """For n > 2d: a realisation leaving points off the boundary realises the path with fewer points."""
    checked = {str(m): bounds.upper(d, m) for m in range(d + 1, n)}
    holds = all(hi is not None and hi < length for hi in checked.values())
    return {
        "applies": n > 2 * d,
        "requirement": f"Delta({d},m) < {length} for all m < {n}",
        "upper_bounds": checked,
        "holds": holds,
    }


def _prove_task(line: str, d: int, n: int, config_data: dict) -> dict:
    """Worker entry point: rebuild the instance from its pivot line and prove it."""
    config = RunConfig(**{**config_data, "output_dir": Path(config_data["output_dir"])})
    pc = expand_to_facets(PivotSequence.from_line(line, d), n)
    verdict = prove_instance(pc, n, mode=config.mode, config=config)
    data = verdict.to_dict(include_model=verdict.status == SAT)
    data["line"] = line
    return data


def _load_ledger(path: Path) -> dict:
    if path.exists():
        return json.loads(path.read_text(encoding="utf-8"))
    return {}


def _write_instance_artifacts(case_dir: Path, line: str, d: int, n: int,
                              result: dict, config: RunConfig):
    inst_dir = case_dir / result["instance"]
    inst_dir.mkdir(parents=True, exist_ok=True)
    verdict = {k: v for k, v in result.items() if k != "model"}
    if result.get("model") is not None:
        chi = decode_model(result["model"], n, d + 1)
        (inst_dir / "counterexample.chi").write_text(chi.serialize(), encoding="utf-8")
        verdict["model_path"] = str(inst_dir / "counterexample.chi")
    (inst_dir / "verdict.json").write_text(json.dumps(verdict, indent=2), encoding="utf-8")
    if config.write_dimacs:
        pc = expand_to_facets(PivotSequence.from_line(line, d), n)
        formula, shortcut_lines = build_instance_formula(pc, n, config.mode, config.dedupe)
        emit_dimacs(formula, inst_dir / "instance.cnf")
        (inst_dir / "instance.json").write_text(
            json.dumps(formula_manifest(formula, pc, shortcut_lines), indent=2), encoding="utf-8")
    return verdict


@logged_step("case")
def run_case(d: int, n: int, length: int, revisits: Optional[Sequence[int]] = None,
             config: Optional[RunConfig] = None, flags: Optional[FilterFlags] = None,
             computed: Iterable[dict] = (), bounds: Optional[BoundsTable] = None) -> CaseReport:
    """Enumerate every candidate of a case, prove each and aggregate a conclusion."""
    config = config or RunConfig()
    revisits = list(revisits) if revisits is not None else default_revisits(d, n, length)
    bounds = bounds if bounds is not None else propagate(computed)
    report = CaseReport(d, n, length, revisits, config.mode, started=datetime.now().isoformat())
    lo, hi = bounds.lower(d, n), bounds.upper(d, n)

    if hi is not None and hi < length:
        report.status = "trivial"
        report.conclusion = f"Delta({d},{n}) <= {hi} is already known; no {length}-path to refute"
    elif lo is not None and lo >= length:
        report.status = "trivial"
        report.conclusion = f"Delta({d},{n}) >= {lo} is already known; a {length}-path cannot be refuted"
    if report.status == "trivial":
        report.finished = datetime.now().isoformat()
        return report

    if n > 2 * d:
        report.reduction = reduction_check(d, n, length, bounds)

    lines: list[str] = []
    for r in revisits:
        found = [p.to_line() for p in enumerate_with_revisits(d, length, r, n=n, bounds=bounds, flags=flags)]
        report.counts[str(r)] = len(found)
        lines.extend(found)
    # generated counts may repeat a sequence (loop orders); each is proved once
    lines = list(dict.fromkeys(lines))

    case_dir = Path(config.output_dir) / f"case_d{d}_n{n}_k{length}"
    case_dir.mkdir(parents=True, exist_ok=True)
    ledger_path = case_dir / "ledger.json"
    ledger = _load_ledger(ledger_path) if config.resume else {}
    results: dict[int, dict] = {}
    pending = []
    for index, line in enumerate(lines):
        done = ledger.get(line)
        if done is not None and done.get("status") in (SAT, UNSAT):
            results[index] = done
        else:
            pending.append((index, line))

    counterexample = next((i for i, res in results.items() if res["status"] == SAT), None)
    if counterexample is None and pending:
        config_data = config.to_dict()
        with ProcessPoolExecutor(max_workers=max(1, config.workers)) as pool:
            futures = {pool.submit(_prove_task, line, d, n, config_data): (index, line)
                       for index, line in pending}
            waiting = set(futures)
            while waiting:
                finished, waiting = wait(waiting, return_when=FIRST_COMPLETED)
                for future in finished:
                    index, line = futures[future]
                    result = future.result()
                    verdict = _write_instance_artifacts(case_dir, line, d, n, result, config)
                    results[index] = verdict
                    ledger[line] = verdict
                    ledger_path.write_text(json.dumps(ledger, indent=2), encoding="utf-8")
                    if result["status"] == SAT and counterexample is None:
                        counterexample = index
                if counterexample is not None:
                    for future in waiting:
                        future.cancel()
                    break

    report.instances = [dict(results[i], index=i) for i in sorted(results)]
    statuses = [res["status"] for res in report.instances]
    if counterexample is not None:
        report.status = "counterexample"
        report.counterexample = results[counterexample].get("model_path")
        report.conclusion = f"{lines[counterexample]} is realisable geodesically: Delta({d},{n}) >= {length}"
    elif len(statuses) == len(lines) and all(s == UNSAT for s in statuses):
        report.status = "refuted"
        report.conclusion = _refutation_conclusion(d, n, length, lo, report.reduction)
    else:
        report.status = "incomplete"
        report.conclusion = f"{statuses.count(TIMEOUT)} of {len(lines)} instances timed out"

    report.finished = datetime.now().isoformat()
    (case_dir / "case.json").write_text(json.dumps(report.to_dict(), indent=2), encoding="utf-8")
    return report


def _refutation_conclusion(d: int, n: int, length: int, lo: Optional[int], reduction: Optional[dict]) -> str:
    claim = f"Delta({d},{n}) <= {length - 1}"
    if lo is not None and lo >= length - 1:
        claim = f"Delta({d},{n}) = {length - 1}"
    if reduction is not None and not reduction["holds"]:
        claim += f" (provided {reduction['requirement']})"
    return claim
