"""Command line interface for modular product domination."""
import logging
from typing import List, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from .config.search_config import DEFAULT_SEED, ReportFormat, RunConfig, RunMode
from .interfaces.errors import ModularDominationError, VerificationError
from .models.domain_models import Report
from .services.harness import ModularProductHarness
from .services.report_generator import CSVReportGenerator, JSONLinesReportGenerator

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

# Logs go to stderr so reports on stdout stay machine-readable
err_console = Console(stderr=True)
logging.basicConfig(
    level=logging.INFO,
    format="%(message)s",
    datefmt="[%X]",
    handlers=[RichHandler(console=err_console)]
)

logger = logging.getLogger("moddom")

app = typer.Typer(help="Domination in modular products of graphs")


def _generator(fmt: ReportFormat):
    return CSVReportGenerator() if fmt == ReportFormat.CSV else JSONLinesReportGenerator()


def _emit(report: Report, config: RunConfig) -> None:
    generator = _generator(config.format)
    if config.output:
        path = generator.generate_report(report, config.output)
        err_console.print(f"[bold green]Report saved to:[/] {path}")
    else:
        typer.echo(generator.render(report), nl=False)


def _run(mode: RunMode, verbose: bool, **options) -> None:
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    try:
        config = RunConfig(mode=mode, **options)
        report = ModularProductHarness(config).run()
        _emit(report, config)
    except VerificationError as e:
        logger.error(f"Verification failed: {e}")
        err_console.print(f"[bold red]Verification failed:[/] {e}")
        if e.details:
            err_console.print(e.details)
        raise typer.Exit(EXIT_VERIFICATION_FAILED)
    except (ModularDominationError, ValidationError, OSError) as e:
        err_console.print(f"[bold red]Input error:[/] {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)

    if report.exit_code:
        err_console.print(f"[bold red]{report.failures} check(s) failed[/]")
    raise typer.Exit(report.exit_code)


InputsOption = typer.Option(None, "--inputs", "-i", help="graph6 files or family specs such as path:10, petersen")
MaxNOption = typer.Option(4, "--max-n", "-n", help="Largest vertex count for enumerated graphs")
BudgetOption = typer.Option(None, "--budget", "-b", help="Only look for product dominating sets up to this size")
ThreadsOption = typer.Option(1, "--threads", "-t", help="Worker processes; reports do not depend on it")
SeedOption = typer.Option(DEFAULT_SEED, "--seed", "-s", help="Seed for every sampled property")
OutputOption = typer.Option(None, "--output", "-o", help="Report path; stdout when omitted")
FormatOption = typer.Option(ReportFormat.JSONL, "--format", "-f", help="Report format")
VerboseOption = typer.Option(False, "--verbose", "-v", help="Enable verbose logging")


@app.command()
def compute(
    inputs: List[str] = InputsOption,
    budget: Optional[int] = BudgetOption,
    budget_threshold: Optional[int] = typer.Option(
        None, "--budget-threshold", help="Product vertex count above which only budget mode runs"
    ),
    threads: int = ThreadsOption,
    output: Optional[str] = OutputOption,
    format: ReportFormat = FormatOption,
    all_pairs: bool = typer.Option(False, "--all-pairs", help="Pair every input with every input"),
    timings: bool = typer.Option(False, "--timings", help="Record per-stage timings"),
    verbose: bool = VerboseOption,
):
    """Bounds, exact value and verdict for consecutive pairs of inputs."""
    _run(RunMode.COMPUTE, verbose, inputs=inputs or [], budget=budget, budget_threshold=budget_threshold,
         threads=threads, output=output, format=format, all_pairs=all_pairs, include_timings=timings)


@app.command()
def verify(
    max_n: int = MaxNOption,
    seed: int = SeedOption,
    threads: int = ThreadsOption,
    output: Optional[str] = OutputOption,
    format: ReportFormat = FormatOption,
    verbose: bool = VerboseOption,
):
    """Run every property suite; exits 1 when any check fails."""
    _run(RunMode.VERIFY, verbose, max_n=max_n, seed=seed, threads=threads, output=output, format=format)


@app.command("search-p1")
def search_p1(
    inputs: List[str] = InputsOption,
    max_n: int = MaxNOption,
    budget: Optional[int] = BudgetOption,
    threads: int = ThreadsOption,
    output: Optional[str] = OutputOption,
    format: ReportFormat = FormatOption,
    verbose: bool = VerboseOption,
):
    """Look for pairs with product domination number 5 under the five-set hypothesis."""
    _run(RunMode.SEARCH_PROBLEM1, verbose, inputs=inputs or [], max_n=max_n, budget=budget, threads=threads,
         output=output, format=format)


@app.command("search-p2")
def search_p2(
    inputs: List[str] = InputsOption,
    max_n: int = MaxNOption,
    budget: Optional[int] = BudgetOption,
    threads: int = ThreadsOption,
    output: Optional[str] = OutputOption,
    format: ReportFormat = FormatOption,
    verbose: bool = VerboseOption,
):
    """Tabulate the product value against the factor values on diameter-two pairs."""
    _run(RunMode.SEARCH_PROBLEM2, verbose, inputs=inputs or [], max_n=max_n, budget=budget, threads=threads,
         output=output, format=format)


@app.command("search-p3")
def search_p3(
    inputs: List[str] = InputsOption,
    max_n: int = MaxNOption,
    budget: Optional[int] = BudgetOption,
    threads: int = ThreadsOption,
    unrestricted: bool = typer.Option(False, "--unrestricted", help="Scan every graph, not only diameter two"),
    output: Optional[str] = OutputOption,
    format: ReportFormat = FormatOption,
    verbose: bool = VerboseOption,
):
    """Look for graphs G with gamma(G⋄G) >= gamma(G) + 2."""
    _run(RunMode.SEARCH_PROBLEM3, verbose, inputs=inputs or [], max_n=max_n, budget=budget, threads=threads,
         unrestricted=unrestricted, output=output, format=format)


def main():
    """Entry point for the application."""
    app()


if __name__ == "__main__":
    main()
