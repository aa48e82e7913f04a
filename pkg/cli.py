# cli.py
import os
import sys
from pathlib import Path

import click
import ujson
from click.core import ParameterSource
from dotenv import load_dotenv
from loguru import logger

# Ensure the 'src' directory is on the Python path to find the 'la_verifier' package.
sys.path.append(os.path.abspath("src"))
load_dotenv()

# --- Imports from our la_verifier package ---
from la_verifier import __version__
from la_verifier.config import (
    DEFAULT_CERECEDA_N_MAX,
    DEFAULT_LOG_LEVEL,
    DEFAULT_SERIES_ORDER,
    EXIT_CONFIG_ERROR,
    EXIT_IO_ERROR,
    EXIT_OK,
    MATRIX_M_LIMIT,
)
from la_verifier.errors import DslSyntaxError, LaVerifierError
from la_verifier.harness.catalog import SUITES, describe_catalog, select
from la_verifier.harness.dsl import load_dsl_checks
from la_verifier.harness.grid import GridSpec, run_check
from la_verifier.harness.reports import TOOL_NAME, exit_code_for, serialize_value, write_reports
from la_verifier.matrices.cereceda import (
    HYBRID_READINGS,
    MODES,
    cereceda_determinant,
    cereceda_matrix,
    leonardo_alwyn_cereceda_params,
)
from la_verifier.matrices.companion import characteristic_cubic_check, companion_matrix, power_matrix
from la_verifier.schemas import PARAM_NAMES, RunConfig, SeqParams
from la_verifier.sequences.hybrid import hybrid_table, lah_by_definition, lah_table
from la_verifier.sequences.scalar import la_terms, terms_table
from la_verifier.sequences.series import EGF_READINGS, egf_coefficients, expand_ogf
from la_verifier.utils import parse_int_range, parse_rational_list, read_json

# Config-file keys that differ from RunConfig field names.
CONFIG_ALIASES = {"identity": "identities", "n": "n_max"}


# --- Helpers ---

def configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


def fail(message: str, code: int):
    click.echo(f"Error: {message}", err=True)
    raise click.exceptions.Exit(code)


def single_params(p, q, r, a, b) -> SeqParams:
    try:
        return SeqParams(p, q, r, a, b)
    except (LaVerifierError, ValueError, TypeError) as e:
        fail(str(e), EXIT_CONFIG_ERROR)


def emit(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    try:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text, encoding="utf-8")
    except OSError as e:
        fail(f"cannot write {output}: {e}", EXIT_IO_ERROR)
    click.echo(f"Wrote {output}", err=True)


def to_json(payload) -> str:
    return ujson.dumps(payload, indent=2, ensure_ascii=False, escape_forward_slashes=False) + "\n"


def param_options(func):
    """--p/--q/--r/--a/--b for commands working on one parameter point (Leonardo by default)."""
    for name in reversed(PARAM_NAMES):
        func = click.option(f"--{name}", default="1", show_default=True,
                            help=f"Sequence parameter {name} (integer or num/den).")(func)
    return func


def load_config_file(path: str) -> dict:
    try:
        raw = read_json(path)
    except OSError as e:
        fail(f"cannot read config {path}: {e}", EXIT_IO_ERROR)
    except ValueError as e:
        fail(f"config {path} is not valid JSON: {e}", EXIT_CONFIG_ERROR)
    if not isinstance(raw, dict):
        fail(f"config {path} must hold a JSON object", EXIT_CONFIG_ERROR)
    fields = set(RunConfig.__dataclass_fields__)
    out = {}
    for key, value in raw.items():
        name = key.replace("-", "_")
        name = CONFIG_ALIASES.get(name, name)
        if name not in fields:
            fail(f"unknown config key {key!r}", EXIT_CONFIG_ERROR)
        if name in PARAM_NAMES and not isinstance(value, list):
            value = [str(value)]
        out[name] = value
    return out


def build_run_config(ctx: click.Context, config_path: str | None, flags: dict) -> RunConfig:
    """Config-file values first, then every flag given explicitly on the command line."""
    merged = load_config_file(config_path) if config_path else {}
    for name, value in flags.items():
        if ctx.get_parameter_source(name) != ParameterSource.DEFAULT or name not in merged:
            if value is None or value == ():
                continue
            merged[CONFIG_ALIASES.get(name, name)] = list(value) if isinstance(value, tuple) else value
    try:
        return RunConfig(**merged)
    except TypeError as e:
        fail(f"invalid configuration: {e}", EXIT_CONFIG_ERROR)


def build_grid(cfg: RunConfig) -> GridSpec:
    grid = GridSpec.named(cfg.grid)
    axes = {}
    for name in PARAM_NAMES:
        values = getattr(cfg, name)
        if values:
            axes[name] = [v for text in values for v in parse_rational_list(str(text))]
    indices = {}
    for axis in ("n", "m", "u", "v"):
        bound = getattr(cfg, f"{axis}_max")
        if bound is not None:
            if int(bound) < 0:
                raise ValueError(f"--{axis}-max must be >= 0")
            indices[axis] = range(int(bound) + 1)
    return grid.with_params(**axes).with_indices(**indices)


# --- Commands ---

@click.group(help="Exact hybrid-number arithmetic and identity checks for generalized Leonardo-Alwyn sequences.")
@click.version_option(__version__, prog_name=TOOL_NAME)
def cli():
    """Main entry point for the la-hybrid-verifier CLI."""
    pass


@cli.command()
@param_options
@click.option("--n", "count", default=10, type=int, show_default=True, help="Number of terms to generate.")
@click.option("--kind", type=click.Choice(["scalar", "hybrid"]), default="scalar", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", default=None, help="Output file. Defaults to stdout.")
@click.option("--log-level", default=os.getenv("LA_LOG_LEVEL", DEFAULT_LOG_LEVEL), show_default=True)
def gen(p, q, r, a, b, count, kind, fmt, output, log_level):
    """Generate scalar or hybrid sequence terms."""
    configure_logging(log_level)
    params = single_params(p, q, r, a, b)
    if count < 0:
        fail("--n must be >= 0", EXIT_CONFIG_ERROR)
    table = terms_table(params, count) if kind == "scalar" else lah_table(params, count)
    if fmt == "csv":
        emit(table.to_csv(index=False, lineterminator="\n"), output)
    else:
        emit(to_json(table.to_dict(orient="records")), output)


@cli.command()
@click.option("--identity", "identity", multiple=True, help="Identity, family or reading name. Repeatable.")
@click.option("--suite", type=click.Choice(SUITES), default=None, help="Run a whole suite.")
@click.option("--grid", default="default", show_default=True, help="default, leonardo or ernst.")
@click.option("--p", multiple=True, help="Axis values such as -3..3 or 0,1/2. Repeatable.")
@click.option("--q", multiple=True)
@click.option("--r", multiple=True)
@click.option("--a", multiple=True)
@click.option("--b", multiple=True)
@click.option("--n-max", type=int, default=None, help="Check n = 0..N.")
@click.option("--m-max", type=int, default=None)
@click.option("--u-max", type=int, default=None)
@click.option("--v-max", type=int, default=None)
@click.option("--dsl", default=None, help="File of DSL identities, one per line.")
@click.option("--cap", type=int, default=None, help="Counterexamples kept per report.")
@click.option("--output", default=None, help="Report directory. Defaults to $LA_OUTPUT_DIR or ./reports.")
@click.option("--workers", type=int, default=None, help="Worker processes. Defaults to $LA_WORKERS or 1.")
@click.option("--progress", is_flag=True, default=False, help="Show a progress bar per identity.")
@click.option("--log-level", default=None, help="Defaults to $LA_LOG_LEVEL or WARNING.")
@click.option("--config", "config_path", default=None, help="JSON file with the same keys as the flags.")
@click.pass_context
def check(ctx, config_path, **flags):
    """Run identity checks over a parameter grid and write JSON reports."""
    cfg = build_run_config(ctx, config_path, flags)
    configure_logging(cfg.log_level)
    try:
        grid = build_grid(cfg)
        checks = []
        if cfg.identities or cfg.suite:
            checks.extend(select(cfg.identities, cfg.suite))
        if cfg.dsl:
            try:
                text = Path(cfg.dsl).read_text(encoding="utf-8")
            except OSError as e:
                fail(f"cannot read {cfg.dsl}: {e}", EXIT_IO_ERROR)
            checks.extend(load_dsl_checks(text, Path(cfg.dsl).stem))
        if not checks:
            checks = select(suite_name="must-pass")
    except DslSyntaxError as e:
        fail(f"{cfg.dsl}: {e}", EXIT_CONFIG_ERROR)
    except (LaVerifierError, ValueError, TypeError) as e:
        fail(str(e), EXIT_CONFIG_ERROR)

    reports = []
    for chk in checks:
        report = run_check(chk, grid, workers=max(1, int(cfg.workers)), cap=cfg.cap, progress=cfg.progress)
        reports.append(report)
        label = report.tier if report.reclassified_from is None else f"{report.tier}, reclassified"
        click.echo(f"{report.identity:<32} {'pass' if report.ok else 'FAIL':<5} "
                   f"pass={report.passed} fail={report.failed} skipped={report.skipped} ({label})")

    code = exit_code_for(reports)
    header = {"tool": TOOL_NAME, "version": __version__, "config": cfg.echo()}
    try:
        summary = write_reports(reports, cfg.output, header, code)
    except OSError as e:
        fail(f"cannot write reports to {cfg.output}: {e}", EXIT_IO_ERROR)
    click.echo(f"Reports written to {summary.parent}", err=True)
    if code != EXIT_OK:
        raise click.exceptions.Exit(code)


@cli.command()
@param_options
@click.option("--kind", type=click.Choice(["ogf", "egf"]), default="ogf", show_default=True)
@click.option("--reading", type=click.Choice(EGF_READINGS), default="corrected", show_default=True,
              help="Exponential generating function reading.")
@click.option("--order", default=DEFAULT_SERIES_ORDER, type=int, show_default=True, help="Number of coefficients.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", default=None)
def series(p, q, r, a, b, kind, reading, order, fmt, output):
    """Expand a generating function into exact hybrid coefficients."""
    params = single_params(p, q, r, a, b)
    if order < 1:
        fail("--order must be >= 1", EXIT_CONFIG_ERROR)
    try:
        if kind == "ogf":
            coefficients = list(expand_ogf(params, order).coefficients)
        else:
            coefficients = egf_coefficients(params, order, reading)
    except LaVerifierError as e:
        fail(str(e), EXIT_CONFIG_ERROR)
    if fmt == "csv":
        emit(hybrid_table(coefficients, index_name="m").to_csv(index=False, lineterminator="\n"), output)
    else:
        emit(to_json([{"m": k, "value": serialize_value(c)} for k, c in enumerate(coefficients)]), output)


@cli.command()
@param_options
@click.option("--m", "m", default=0, type=int, show_default=True, help="Power of the companion matrix.")
@click.option("--output", default=None)
def matrix(p, q, r, a, b, m, output):
    """Show the companion matrix, M_m and M_0 Q^m."""
    params = single_params(p, q, r, a, b)
    if m < 0 or m > MATRIX_M_LIMIT:
        fail(f"--m must be between 0 and {MATRIX_M_LIMIT}", EXIT_CONFIG_ERROR)
    Q = companion_matrix(params)
    lhs = power_matrix(params, m)
    rhs = power_matrix(params, 0) * Q.power(m)
    doc = {
        "params": params.to_dict(),
        "m": m,
        "companion": serialize_value(Q),
        "companion_power": serialize_value(Q.power(m)),
        "M_m": serialize_value(lhs),
        "M_0_times_Q_m": serialize_value(rhs),
        "matrix_power_identity": lhs == rhs,
        "characteristic_cubic": characteristic_cubic_check(params),
    }
    emit(to_json(doc), output)


@cli.command()
@param_options
@click.option("--mode", type=click.Choice(MODES), default="scalar", show_default=True)
@click.option("--reading", type=click.Choice(HYBRID_READINGS), default="printed", show_default=True)
@click.option("--n", "n_spec", default=f"0..{DEFAULT_CERECEDA_N_MAX}", show_default=True,
              help="Matrix sizes minus one, e.g. 0..12 or 3.")
@click.option("--show-matrix", is_flag=True, default=False, help="Include the matrix entries.")
@click.option("--output", default=None)
def det(p, q, r, a, b, mode, reading, n_spec, show_matrix, output):
    """Bordered tridiagonal determinants against the sequence terms."""
    params = single_params(p, q, r, a, b)
    try:
        sizes = parse_int_range(n_spec)
        cp = leonardo_alwyn_cereceda_params(params, mode)
        rows = []
        for n in sizes:
            value = cereceda_determinant(cp, n, reading)
            term = la_terms(params, n + 1)[n] if mode == "scalar" else lah_by_definition(params, n)
            row = {"n": n, "determinant": serialize_value(value), "term": serialize_value(term),
                   "match": value == term}
            if show_matrix:
                row["matrix"] = serialize_value(cereceda_matrix(cp, n, reading))
            rows.append(row)
    except (LaVerifierError, ValueError) as e:
        fail(str(e), EXIT_CONFIG_ERROR)
    emit(to_json({"params": params.to_dict(), "mode": mode, "reading": reading, "rows": rows}), output)


@cli.command()
def catalog():
    """List the built-in identities with their tiers."""
    for entry in describe_catalog():
        click.echo(f"{entry['name']:<32} {entry['tier']:<11} {entry['description']}")


if __name__ == "__main__":
    cli()
