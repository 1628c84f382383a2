"""
Command-line harness: solve, bench and verify.

Exit statuses: 0 success, 1 usage or configuration error, 2 I/O error or
malformed input file, 3 verification failure.
"""
import itertools
import logging
from pathlib import Path
from typing import Optional, Tuple

import click
from rich.console import Console
from tqdm import tqdm

from src.cli.reporting import (
    aggregate,
    bench_table,
    iteration_rows,
    print_solve_summary,
    rows_to_frame,
    write_csv,
    write_report_json,
)
from src.cli.verification import default_kernels, verify_deposits
from src.data.tsplib_loader import load_instance
from src.engine.colony import make_run_config, run, run_problem
from src.engine.config import (
    DEPOSIT_OPTIONS,
    SELECTION_OPTIONS,
    configure_logging,
    default_workers,
    resolve_instance,
)
from src.errors import (
    AntSystemError,
    ConfigError,
    DistanceOverflowError,
    InstanceIOError,
    LedgerMismatchError,
    TsplibError,
)
from src.models.aco_models import BenchmarkPlan, Parameters, SelectionVariant, StrategyCombo
from src.models.problem import build_problem

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_VERIFY = 3


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, (InstanceIOError, TsplibError, DistanceOverflowError)):
        return EXIT_IO
    if isinstance(exc, LedgerMismatchError):
        return EXIT_VERIFY
    return EXIT_CONFIG


class AntSystemGroup(click.Group):
    """Group whose usage errors exit with status 1 instead of click's 2."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as exc:
            exc.exit_code = EXIT_CONFIG
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_CONFIG
            raise


def _fail(ctx: click.Context, exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    ctx.exit(exit_code_for(exc))


def _parameters(**fields) -> Parameters:
    return make_run_config(Path("."), parameters=fields).parameters


def parameter_options(fn):
    """Ant System parameter flags shared by every command."""
    options = [
        click.option("--alpha", type=float, default=1.0, show_default=True, help="Pheromone influence."),
        click.option("--beta", type=float, default=2.0, show_default=True, help="Heuristic influence."),
        click.option("--rho", type=float, default=0.5, show_default=True, help="Evaporation rate in (0,1]."),
        click.option("--ants", type=int, default=None, help="Number of ants [default: n]."),
        click.option("--nn", type=int, default=30, show_default=True, help="Nearest-neighbour list length."),
        click.option("--workers", type=int, default=None, help="Worker threads [default: available CPUs]."),
        click.option("--verbose", is_flag=True, help="Debug logging."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


@click.group(cls=AntSystemGroup)
def cli():
    """Ant System solver for symmetric TSPLIB instances."""


@cli.command()
@click.option("--instance", type=click.Path(path_type=Path), required=True, help="TSPLIB .tsp file.")
@click.option("--selection", type=click.Choice(SELECTION_OPTIONS), default="roulette", show_default=True)
@click.option("--deposit", type=click.Choice(DEPOSIT_OPTIONS), default="accumulate", show_default=True)
@click.option("--theta", type=int, default=64, show_default=True, help="Tile size.")
@click.option("--iters", type=int, default=100, show_default=True, help="Iterations.")
@click.option("--seed", type=int, default=42, show_default=True, help="RNG key.")
@click.option("--random-start", is_flag=True, help="Random start cities instead of k mod n.")
@click.option("--out", type=click.Path(path_type=Path), default=Path("report.json"), show_default=True,
              help="JSON report path.")
@parameter_options
@click.pass_context
def solve(ctx, instance, selection, deposit, theta, iters, seed, random_start, out,
          alpha, beta, rho, ants, nn, workers, verbose):
    """Run the Ant System once and write a JSON report."""
    configure_logging(verbose)
    try:
        config = make_run_config(
            resolve_instance(instance),
            parameters=dict(alpha=alpha, beta=beta, rho=rho, m=ants, nn=nn,
                            iterations=iters, seed=seed, tile_size=theta),
            selection=dict(variant=selection),
            deposit=dict(variant=deposit),
            workers=workers if workers is not None else default_workers(),
            random_start=random_start,
        )
        report = run(config)
        write_report_json(report, out)
    except (AntSystemError, OSError) as exc:
        _fail(ctx, exc if isinstance(exc, AntSystemError) else InstanceIOError(str(exc)))
        return
    print_solve_summary(Console(), report)
    click.echo(f"best_length={report.best_length} report={out}")


@cli.command()
@click.option("--instance", "instances", type=click.Path(path_type=Path), multiple=True, required=True,
              help="TSPLIB .tsp file; repeat for several instances.")
@click.option("--selection", "selections", type=click.Choice(SELECTION_OPTIONS), multiple=True,
              default=("roulette",), show_default=True)
@click.option("--deposit", "deposits", type=click.Choice(DEPOSIT_OPTIONS), multiple=True,
              default=("accumulate",), show_default=True)
@click.option("--theta", "thetas", type=int, multiple=True, default=(64,), show_default=True)
@click.option("--reps", type=int, default=1, show_default=True, help="Repetitions per cell.")
@click.option("--iters", type=int, default=100, show_default=True, help="Iterations per run.")
@click.option("--seed", type=int, default=42, show_default=True, help="Base seed; rep r uses seed + r.")
@click.option("--out", type=click.Path(path_type=Path), default=Path("bench.csv"), show_default=True,
              help="CSV output path.")
@parameter_options
@click.pass_context
def bench(ctx, instances, selections, deposits, thetas, reps, iters, seed, out,
          alpha, beta, rho, ants, nn, workers, verbose):
    """Benchmark every selection x deposit x theta cell on every instance."""
    configure_logging(verbose)
    try:
        plan = BenchmarkPlan(
            instances=[resolve_instance(path) for path in instances],
            grid=[StrategyCombo(selection=s, deposit=d, theta=t)
                  for s, d, t in itertools.product(selections, deposits, thetas)],
            repetitions=reps,
            base_seed=seed,
            parameters=_parameters(alpha=alpha, beta=beta, rho=rho, m=ants, nn=nn, iterations=iters),
            workers=workers if workers is not None else default_workers(),
        )
    except AntSystemError as exc:
        _fail(ctx, exc)
        return
    except ValueError as exc:
        _fail(ctx, ConfigError(str(exc)))
        return

    rows = []
    cells = [(path, combo, rep) for path in plan.instances for combo in plan.grid
             for rep in range(plan.repetitions)]
    problems = {}
    try:
        for path, combo, rep in tqdm(cells, desc="bench", unit="run", disable=None):
            if path not in problems:
                problems[path] = build_problem(load_instance(path))
            rows.extend(iteration_rows(_bench_run(problems[path], path, plan, combo, rep), combo, rep))
    except AntSystemError as exc:
        logger.error("benchmark aborted at %s", path)
        _fail(ctx, exc)
        return

    frame = rows_to_frame(rows)
    try:
        write_csv(frame, out)
    except OSError as exc:
        _fail(ctx, InstanceIOError(f"cannot write {out}: {exc}"))
        return
    Console().print(bench_table(aggregate(frame)))
    click.echo(f"rows={len(frame)} csv={out}")


def _bench_run(problem, path: Path, plan: BenchmarkPlan, combo: StrategyCombo, rep: int):
    parameters = plan.parameters.model_copy(update={"seed": plan.seed_for(rep), "tile_size": combo.theta})
    if combo.selection is SelectionVariant.ROULETTE_NN and parameters.nn >= problem.n:
        raise ConfigError(f"nn must be < n = {problem.n}, got {parameters.nn}")
    config = make_run_config(
        path,
        parameters=parameters,
        selection=dict(variant=combo.selection),
        deposit=dict(variant=combo.deposit),
        workers=plan.workers,
    )
    return run_problem(problem, config)


@cli.command()
@click.option("--instance", type=click.Path(path_type=Path), required=True, help="TSPLIB .tsp file.")
@click.option("--theta", type=int, default=64, show_default=True, help="Tile size.")
@click.option("--seed", type=int, default=42, show_default=True, help="RNG key for the sampled tours.")
@parameter_options
@click.pass_context
def verify(ctx, instance, theta, seed, alpha, beta, rho, ants, nn, workers, verbose):
    """Check that all deposit kernels agree on the same tours."""
    configure_logging(verbose)
    try:
        parameters = _parameters(alpha=alpha, beta=beta, rho=rho, m=ants, nn=nn, seed=seed, tile_size=theta)
        problem = build_problem(load_instance(resolve_instance(instance)))
        report = verify_deposits(
            problem,
            parameters,
            theta,
            kernels=default_kernels(theta),
            workers=workers if workers is not None else default_workers(),
        )
    except AntSystemError as exc:
        _fail(ctx, exc)
        return

    for pair in report.pairs:
        status = "PASS" if pair.passed else "FAIL"
        click.echo(f"{status} {pair.first} vs {pair.second}: max |diff| = {pair.max_diff:.3e} "
                   f"at {pair.worst_cell}")
    for check in report.ledgers:
        status = "PASS" if check.passed else "FAIL"
        click.echo(f"{status} ledger {check.kernel}: measured {check.measured} predicted {check.predicted}")

    if not report.passed:
        worst = report.worst_pair()
        click.echo(
            f"verification failed; suspect: {', '.join(report.suspects()) or 'unknown'}; "
            f"worst cell {worst.worst_cell} differs by {worst.max_diff:.3e}",
            err=True,
        )
        ctx.exit(EXIT_VERIFY)


def main(args: Optional[Tuple[str, ...]] = None) -> None:
    cli.main(args=args, prog_name="ant-system")
