"""
Ring: Composition Root (Delivery / Command Line)

Responsibility:
The `amnesia` command group: run, explore, analyze, sweep, sharp and serve. Each
command builds a request, hands it to the same interactor the HTTP app uses and prints
the response document as JSON with sorted keys, so identical inputs give identical bytes.

Exit codes (see root.errors.ExitCode):
- 0 success, or an asynchronous run that terminated
- 1 property violation (failed analysis, sweep counterexample, broken engine invariant)
- 2 input error (bad flags, unreadable graph, unknown label, disconnected graph)
- 3 cycle detected by the asynchronous engine, or a cycling schedule found by explore
- 4 round budget exhausted (asynchronous verdict, or a synchronous run cut short by
  --max-rounds)

Configuration:
- AMNESIA_SEED overrides the seed of --random and seeds the random adversary.
- AMNESIA_LOG_LEVEL sets the log level (default WARNING; logs go to stderr).
- AMNESIA_DATABASE_URL selects the sweep store (default in-memory SQLite).

Dependency constraints:
- May depend on all inner layers (infra, features, core) and on root.di.
- Must not be imported by any inner layer.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import click
import uvicorn
from pydantic import BaseModel, ValidationError
from sqlalchemy.orm import Session, sessionmaker

from core.values.errors import DomainError, InvariantViolationError
from features._shared.errors import ApplicationError
from features._shared.schemas import GraphSource, RandomGraphParams
from features.analysis.schemas import AnalyzeRequest
from features.runs.schemas import AsyncRunResponse, ExploreRequest, RunRequest
from features.sweeps.schemas import SharpRequest, SweepRequest
from infra.db.session import session_scope
from infra.logging.logger import build_logger
from root.config import (
    CLI_LOG_LEVEL,
    DATABASE_URL_ENV,
    HOST,
    LOG_LEVEL_ENV,
    PORT,
    SEED_ENV,
)
from root.di._shared import open_store
from root.di.analysis import build_graph_analyzer
from root.di.runs import build_flood_runner, build_schedule_explorer
from root.di.sweeps import build_sharp_example_finder, build_sweep_runner
from root.errors import ExitCode, exit_code_for, exit_code_for_outcome

Document = BaseModel | list[BaseModel]


@dataclass(frozen=True, slots=True)
class CliContext:
    logger: logging.Logger
    session_factory: Callable[[], sessionmaker[Session]]


def render(document: Document) -> str:
    if isinstance(document, list):
        payload: Any = [item.model_dump(mode="json") for item in document]
    else:
        payload = document.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(document: Document, out: Path | None) -> None:
    text = render(document)
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")


def _execute(ctx: click.Context, action: Callable[[], Document]) -> Document:
    """
    Run an interactor; report expected failures on stderr and exit with their code.
    """
    try:
        return action()
    except (ApplicationError, DomainError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        if isinstance(exc, InvariantViolationError) and exc.dump:
            click.echo(json.dumps(exc.dump, sort_keys=True), err=True)
        ctx.exit(exit_code_for(exc))


def _parse_random(text: str, seed_override: int | None) -> RandomGraphParams:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 3:
        raise click.BadParameter("expected N,P,SEED", param_hint="--random")
    try:
        n, p, seed = int(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--random") from exc
    return RandomGraphParams(n=n, p=p, seed=seed if seed_override is None else seed_override)


def _graph_source(
    graph: Path | None, named: str | None, random: str | None, seed: int | None
) -> GraphSource:
    given = [flag for flag, value in (("--graph", graph), ("--named", named), ("--random", random)) if value]
    if len(given) != 1:
        raise click.UsageError("exactly one of --graph, --named or --random is required")
    if graph is not None:
        return GraphSource(file=str(graph))
    if named is not None:
        return GraphSource(named=named)
    return GraphSource(random=_parse_random(random or "", seed))


def graph_options(command: Callable[..., Any]) -> Callable[..., Any]:
    for option in reversed(
        (
            click.option("--graph", type=click.Path(path_type=Path), help="Edge-list file."),
            click.option("--named", help="Named family KIND[:P], e.g. cycle:6, hypercube:3, petersen."),
            click.option("--random", help="Seeded G(n, p) graph N,P,SEED."),
            click.option("--source", required=True, help="Source node id or label."),
            click.option("--seed", type=int, envvar=SEED_ENV, default=None, help="Overrides the --random seed."),
            click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Write JSON here instead of stdout."),
        )
    ):
        command = option(command)
    return command


@click.group()
@click.option(
    "--log-level",
    envvar=LOG_LEVEL_ENV,
    default=CLI_LOG_LEVEL,
    show_default=True,
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
)
@click.option("--database-url", envvar=DATABASE_URL_ENV, default=None)
@click.pass_context
def cli(ctx: click.Context, log_level: str, database_url: str | None) -> None:
    """Amnesiac flooding simulator and verification harness."""
    ctx.obj = CliContext(
        logger=build_logger(level=log_level),
        session_factory=lambda: open_store(database_url),
    )


@cli.command()
@graph_options
@click.option("--mode", default="sync", show_default=True, help="sync | async:NAME[,hold_cap]")
@click.option("--max-rounds", type=click.IntRange(min=1), default=None)
@click.pass_context
def run(
    ctx: click.Context,
    graph: Path | None,
    named: str | None,
    random: str | None,
    source: str,
    seed: int | None,
    out: Path | None,
    mode: str,
    max_rounds: int | None,
) -> None:
    """Flood a graph from SOURCE and print the trace or the asynchronous verdict."""
    obj: CliContext = ctx.obj
    runner = build_flood_runner(logger=obj.logger)
    response = _execute(
        ctx,
        lambda: runner.execute(
            request=RunRequest(
                graph=_graph_source(graph, named, random, seed),
                source=source,
                mode=mode,
                max_rounds=max_rounds,
                seed=seed or 0,
            )
        ),
    )
    _emit(response, out)
    if isinstance(response, AsyncRunResponse):
        ctx.exit(exit_code_for_outcome(response.verdict.outcome))


@cli.command()
@graph_options
@click.option("--hold-cap", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--max-states", type=click.IntRange(min=1), default=None)
@click.pass_context
def explore(
    ctx: click.Context,
    graph: Path | None,
    named: str | None,
    random: str | None,
    source: str,
    seed: int | None,
    out: Path | None,
    hold_cap: int,
    max_states: int | None,
) -> None:
    """Decide whether some fair adversary can keep the message alive forever."""
    obj: CliContext = ctx.obj
    explorer = build_schedule_explorer(logger=obj.logger)
    limits = {} if max_states is None else {"max_states": max_states}
    response = _execute(
        ctx,
        lambda: explorer.execute(
            request=ExploreRequest(
                graph=_graph_source(graph, named, random, seed),
                source=source,
                hold_cap=hold_cap,
                **limits,
            )
        ),
    )
    _emit(response, out)
    if response.can_cycle:
        ctx.exit(ExitCode.CYCLE_DETECTED)


@cli.command()
@graph_options
@click.pass_context
def analyze(
    ctx: click.Context,
    graph: Path | None,
    named: str | None,
    random: str | None,
    source: str,
    seed: int | None,
    out: Path | None,
) -> None:
    """Classify one run against the termination theorems and audit the lemmas."""
    obj: CliContext = ctx.obj
    analyzer = build_graph_analyzer(logger=obj.logger)
    response = _execute(
        ctx,
        lambda: analyzer.execute(
            request=AnalyzeRequest(
                graph=_graph_source(graph, named, random, seed), source=source
            )
        ),
    )
    _emit(response, out)
    if not response.holds:
        ctx.exit(ExitCode.VIOLATION)


@cli.command()
@click.option("--n-max", type=int, required=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
@click.pass_context
def sweep(ctx: click.Context, n_max: int, jobs: int, out: Path | None) -> None:
    """Flood every connected labelled graph on 2..N_MAX nodes from every source."""
    obj: CliContext = ctx.obj

    def action() -> Document:
        with session_scope(obj.session_factory()) as session:
            runner = build_sweep_runner(session=session, logger=obj.logger)
            return runner.execute(request=SweepRequest(n_max=n_max, jobs=jobs))

    response = _execute(ctx, action)
    _emit(response, out)
    if not response.clean:
        ctx.exit(ExitCode.VIOLATION)


@cli.command()
@click.option("--n-max", type=int, default=8, show_default=True)
@click.option("--target-e", type=int, default=None, help="Required eccentricity.")
@click.option("--target-d", type=int, default=None, help="Required diameter.")
@click.option("--strict/--no-strict", default=True, show_default=True, help="Require e < d.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
@click.pass_context
def sharp(
    ctx: click.Context,
    n_max: int,
    target_e: int | None,
    target_d: int | None,
    strict: bool,
    out: Path | None,
) -> None:
    """Find the smallest graph whose flooding lasts exactly e + d + 1 rounds."""
    obj: CliContext = ctx.obj
    finder = build_sharp_example_finder(logger=obj.logger)
    response = _execute(
        ctx,
        lambda: finder.execute(
            request=SharpRequest(
                n_max=n_max,
                target_eccentricity=target_e,
                target_diameter=target_d,
                strict=strict,
            )
        ),
    )
    _emit(response, out)


@cli.command()
@click.option("--host", default=HOST, show_default=True)
@click.option("--port", type=int, default=PORT, show_default=True)
def serve(host: str, port: int) -> None:
    """Serve the HTTP API."""
    uvicorn.run("root.main:app", host=host, port=port)


if __name__ == "__main__":
    cli()
