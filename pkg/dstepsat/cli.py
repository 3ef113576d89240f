#!/usr/bin/env python3
"""
Batch command line: enumerate, encode, prove, bounds, verify.

Exit codes: 0 when a case is concluded (or the command simply succeeded),
10 when a counterexample was found, 20 when a case is incomplete.
"""

import json
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

import typer

from . import config as cfg
from .bounds import known_table, parse_fact, propagate
from .chirotope import Chirotope, verify_axioms
from .data.known_bounds import COMPUTED_BOUNDS
from .encoder import emit_dimacs, formula_manifest, gp_clause_count
from .errors import DStepError
from .logging import configure
from .pathcomplex import (
    FilterFlags,
    PivotSequence,
    candidate_manifest,
    enumerate_with_revisits,
    expand_to_facets,
    read_candidates,
    write_candidates,
)
from .prover import build_instance_formula, default_revisits, run_case, verify_counterexample

app = typer.Typer(help="SAT refutation of long geodesic facet paths on matroid polytopes.",
                  no_args_is_help=True)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 10
EXIT_INCOMPLETE = 20


def parse_revisits(text: Optional[str], d: int, n: int, length: int) -> list[int]:
    """'1', '0..3' or '0,2'; empty means the default range for the case."""
    if not text:
        return default_revisits(d, n, length)
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError:
        raise typer.BadParameter(f"cannot parse revisits {text!r}")
    if not values or any(v < 0 or v > 3 for v in values):
        raise typer.BadParameter("revisit counts must lie in 0..3")
    return values


def _check_dimensions(d: int, n: int, length: Optional[int] = None):
    if d < 2:
        raise typer.BadParameter("d must be at least 2")
    if n <= d:
        raise typer.BadParameter("n must exceed d")
    if length is not None and length < 1:
        raise typer.BadParameter("length must be positive")


@app.callback()
def main(log_level: str = typer.Option(cfg.LOG_LEVEL, help="Logging level"),
         log_steps: bool = typer.Option(cfg.LOG_STEPS, help="Emit step records")):
    configure(log_level, log_steps)


@app.command("enumerate")
def cmd_enumerate(
    d: int = typer.Option(..., help="Dimension"),
    n: int = typer.Option(..., help="Number of facets (vertices in the polar)"),
    length: int = typer.Option(..., help="Path length k"),
    revisits: Optional[str] = typer.Option(None, help="Revisit classes: '1', '0..3' or '0,2'"),
    loop_conditions: bool = typer.Option(True, help="Apply the loop conditions"),
    late_revisit: bool = typer.Option(True, help="Apply the late-revisit rule"),
    not_uniq: bool = typer.Option(True, help="Apply the not-uniq rule"),
    published_counts: bool = typer.Option(False, help="Count the way the published tables do"),
    output: Optional[Path] = typer.Option(None, help="Directory for candidates.txt / candidates.json"),
    quiet: bool = typer.Option(False, help="Print counts only"),
):
    """Enumerate candidate pivot sequences with all filters."""
    _check_dimensions(d, n, length)
    classes = parse_revisits(revisits, d, n, length)
    flags = FilterFlags(loop_conditions, late_revisit, not_uniq)
    if published_counts:
        flags = replace(FilterFlags.published(), loop_conditions=loop_conditions,
                        late_revisit=late_revisit, not_uniq=not_uniq)
    bounds = known_table()
    by_class = {r: list(enumerate_with_revisits(d, length, r, n=n, bounds=bounds, flags=flags))
                for r in classes}
    manifest = candidate_manifest(d, n, length, classes, flags, by_class)
    if output is not None:
        write_candidates(output, manifest)
    if not quiet:
        for r in classes:
            for p in by_class[r]:
                typer.echo(p.to_line())
    for r in classes:
        typer.echo(f"# revisits={r}: {len(by_class[r])}")
    typer.echo(f"# total: {manifest['count']}")


@app.command("encode")
def cmd_encode(
    d: int = typer.Option(..., help="Dimension"),
    n: int = typer.Option(..., help="Number of points"),
    line: Optional[str] = typer.Option(None, help="Pivot sequence '(l,e) (l,e) ...'"),
    candidates: Optional[Path] = typer.Option(None, help="candidates.txt to pick from"),
    index: int = typer.Option(0, help="Line of the candidates file"),
    mode: str = typer.Option("lazy", help="'lazy' (no shortcut clauses) or 'eager'"),
    output: Path = typer.Option(Path("instance.cnf"), help="DIMACS output path"),
    dedupe: bool = typer.Option(cfg.DEDUPLICATE_CLAUSES, help="Drop duplicate clauses"),
):
    """Write the DIMACS instance of one candidate and its JSON sidecar."""
    _check_dimensions(d, n)
    if line is None and candidates is None:
        raise typer.BadParameter("give --line or --candidates")
    try:
        if line is None:
            sequence = read_candidates(candidates, d)[index]
        else:
            sequence = PivotSequence.from_line(line, d)
        pc = expand_to_facets(sequence, n)
        formula, shortcut_lines = build_instance_formula(pc, n, mode, dedupe)
    except (DStepError, IndexError, ValueError) as e:
        raise typer.BadParameter(str(e))
    emit_dimacs(formula, output)
    manifest = formula_manifest(formula, pc, shortcut_lines)
    output.with_suffix(".json").write_text(json.dumps(manifest, indent=2), encoding="utf-8")
    expected = gp_clause_count(n, d + 1)
    typer.echo(f"variables={formula.num_vars} clauses={len(formula.clauses)} fragments={formula.fragments}")
    if not dedupe and formula.fragments.get("gp_axioms") != expected:
        typer.echo(f"GP clause count {formula.fragments.get('gp_axioms')} != {expected}", err=True)
        raise typer.Exit(EXIT_INCOMPLETE)


@app.command("prove")
def cmd_prove(
    d: int = typer.Option(..., help="Dimension"),
    n: int = typer.Option(..., help="Number of points"),
    length: int = typer.Option(..., help="Path length to refute"),
    revisits: Optional[str] = typer.Option(None, help="Revisit classes: '1', '0..3' or '0,2'"),
    mode: str = typer.Option("lazy", help="'lazy' (cutting planes) or 'eager'"),
    backend: str = typer.Option(cfg.BACKEND, help="'embedded' or 'external'"),
    solver: str = typer.Option(cfg.SAT_SOLVER_NAME, help="PySAT solver name"),
    executable: str = typer.Option(cfg.SAT_EXECUTABLE, help="External DIMACS solver"),
    time_limit: float = typer.Option(cfg.INSTANCE_TIME_LIMIT, help="Seconds per instance"),
    workers: int = typer.Option(cfg.WORKERS, help="Parallel instances"),
    output_dir: Path = typer.Option(cfg.OUTPUT_DIR, help="Where case directories go"),
    seed: int = typer.Option(cfg.SEED, help="Seed passed to the external solver"),
    dimacs: bool = typer.Option(False, help="Keep a DIMACS file per instance"),
    resume: bool = typer.Option(True, help="Skip instances already in the ledger"),
    computed: bool = typer.Option(False, help="Seed the bounds with the computed results"),
):
    """Prove a whole case and write its report."""
    _check_dimensions(d, n, length)
    if mode not in ("lazy", "eager"):
        raise typer.BadParameter("mode must be 'lazy' or 'eager'")
    if workers < 1:
        raise typer.BadParameter("workers must be at least 1")
    run = cfg.RunConfig(backend=backend, solver_name=solver, executable=executable, mode=mode,
                        time_limit=time_limit, workers=workers, output_dir=output_dir, seed=seed,
                        write_dimacs=dimacs, resume=resume)
    report = run_case(d, n, length, parse_revisits(revisits, d, n, length), config=run,
                      computed=COMPUTED_BOUNDS if computed else ())
    typer.echo(json.dumps({k: v for k, v in report.to_dict().items() if k != "instances"}, indent=2))
    raise typer.Exit(report.exit_code)


@app.command("bounds")
def cmd_bounds(
    computed: bool = typer.Option(False, help="Add Delta(6,12) <= 6 and Delta(4,11) <= 6"),
    fact: List[str] = typer.Option([], help="Extra bound such as '5,12<=8'"),
    d_max: int = typer.Option(7, help="Largest dimension in the grid"),
    slack_max: int = typer.Option(7, help="Largest n - d in the grid"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON instead of a table"),
):
    """Propagate bounds on Delta(d, n) and print the table."""
    try:
        extra = [parse_fact(f) for f in fact]
    except ValueError as e:
        raise typer.BadParameter(str(e))
    base = propagate((), d_max, slack_max)
    table = propagate((list(COMPUTED_BOUNDS) if computed else []) + extra, d_max, slack_max)
    if as_json:
        typer.echo(json.dumps(table.to_dict(), indent=2))
    else:
        typer.echo(table.render(range(4, d_max + 1), range(4, slack_max + 1), highlight=table.differing(base)))


@app.command("verify")
def cmd_verify(
    model: Path = typer.Option(..., help="Chirotope file ('n r' header, one basis per line)"),
    d: Optional[int] = typer.Option(None, help="Dimension of the path (defaults to r - 1)"),
    line: Optional[str] = typer.Option(None, help="Pivot sequence the model should carry"),
):
    """Re-check a counterexample: axioms, path on the boundary, geodesic ends."""
    try:
        chi = Chirotope.parse(model.read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError, IndexError) as e:
        raise typer.BadParameter(f"cannot read chirotope: {e}")
    if line is None:
        ok, witness = verify_axioms(chi)
        problems = [] if ok else [f"Grassmann-Pluecker violation at {witness}"]
    else:
        try:
            pc = expand_to_facets(PivotSequence.from_line(line, d or chi.r - 1), chi.n)
        except (DStepError, ValueError) as e:
            raise typer.BadParameter(f"cannot use --line: {e}")
        problems = verify_counterexample(chi, pc)
    typer.echo(json.dumps({"valid": not problems, "problems": problems}, indent=2))
    raise typer.Exit(EXIT_OK if not problems else 1)


if __name__ == "__main__":
    app()
