"""
The `zerocount` command line.

Exit codes are 0 on success, 1 when a check reports a failure, 2 for invalid
input (parameters, configuration, files) and 3 when a computation cannot be
completed (quadrature, coverage, completeness).
"""

import dataclasses
import functools
import json
import logging
import math
import typing as tp
from enum import Enum
from pathlib import Path

import numpy as np
import typer
from rich.console import Console
from rich.logging import RichHandler
from tabulate import tabulate

from zerocount import regions, study
from zerocount.config import Config, load_config
from zerocount.constants import (
    ConstantSet,
    LinearBound,
    assemble,
    corollary_constants,
    crossover,
    curve,
    eval_bound,
    integrate_regions,
    short_interval_bounds,
    unit_interval_bounds,
)
from zerocount.optimizer import SEARCH_KEYS, WEIGHT_KEYS, Objective, optimize
from zerocount.study.epsilon import MEAN_OFFSET
from zerocount.types import (
    BoundMode,
    ComputationError,
    ConstraintViolation,
    OutputFormat,
    ValidationError,
)
from zerocount.utils import format_number, get_table_repr, make_table, parse_number
from zerocount.zeros import ZeroList, find_zeros, ingest_zeros

DEFAULT_ZEROS = Path("zeros.txt")
CONSTANT_NAMES = ("C1", "C2", "C2p", "C3", "C3p", "C3tilde", "C3ptilde")
MARGIN_POINTS = 25

app = typer.Typer(help="Explicit bounds for the number of zeros of zeta.")
bound_app = typer.Typer(help="Evaluate and compare the bounds.")
zeros_app = typer.Typer(help="Compute or ingest zero lists.")
study_app = typer.Typer(help="Statistics of N(T) at the zeros.")

app.add_typer(bound_app, name="bound")
app.add_typer(zeros_app, name="zeros")
app.add_typer(study_app, name="study")


class CrossingKind(str, Enum):
    BOUND = "bound"
    UNIT = "unit"
    SHORT = "short"


@dataclasses.dataclass
class State:
    config: Config
    format: OutputFormat = OutputFormat.TABLE
    full_precision: bool = False
    threads: int = 1

    def constants(self, profile: tp.Optional[str]) -> ConstantSet:
        p = self.config.bound_params(profile)
        return assemble(p, q=self.config.quadrature_spec(self.threads))


class Section(tp.NamedTuple):
    title: str
    columns: tp.Sequence[str]
    rows: tp.Sequence[tp.Sequence[tp.Any]]


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _plain_value(value: tp.Any) -> tp.Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def render(
    sections: tp.Sequence[Section], fmt: OutputFormat, full_precision: bool = False
) -> str:
    """
    Renders tables in one of the output formats. `tsv` separates sections by
    an empty line and `json` maps each title to a list of records.
    """
    fmt = OutputFormat(fmt)

    if fmt == OutputFormat.JSON:
        data = {
            section.title: [
                {c: _plain_value(v) for c, v in zip(section.columns, row)}
                for row in section.rows
            ]
            for section in sections
        }
        return json.dumps(data, indent=2)

    if fmt == OutputFormat.TSV:
        parts = []
        for section in sections:
            report = study.TSVReport(section.columns, full_precision)
            report.add_rows([[_plain_value(v) for v in row] for row in section.rows])
            parts.append(report.dumps())
        return "\n".join(parts).rstrip("\n")

    formatted = [
        Section(
            section.title,
            section.columns,
            [
                [format_number(_plain_value(v), full_precision) for v in row]
                for row in section.rows
            ],
        )
        for section in sections
    ]

    if fmt == OutputFormat.PLAIN:
        return "\n\n".join(
            s.title
            + "\n"
            + tabulate(
                s.rows, headers=s.columns, tablefmt="plain", disable_numparse=True
            )
            for s in formatted
        )

    tables = [make_table(s.title, s.columns, s.rows) for s in formatted]

    return get_table_repr(*tables, force_terminal=False).rstrip("\n")


def _emit(state: State, *sections: Section, message: tp.Optional[str] = None):
    if message is not None and state.format in (OutputFormat.TABLE, OutputFormat.PLAIN):
        typer.echo(message)

    typer.echo(render(sections, state.format, state.full_precision))


# ---------------------------------------------------------------------------
# errors and logging
# ---------------------------------------------------------------------------


def _exit_codes(f: tp.Callable) -> tp.Callable:
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ConstraintViolation as e:
            for violation in e.violations:
                typer.echo(f"constraint violated: {violation}", err=True)
            raise typer.Exit(2)
        except ValidationError as e:
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(2)
        except ComputationError as e:
            typer.echo(f"computation failed: {e}", err=True)
            raise typer.Exit(3)

    return wrapper


def _setup_logging(verbose: int):
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    root = logging.getLogger()

    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)

    handler = RichHandler(console=Console(stderr=True), show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(level)


@app.callback()
@_exit_codes
def main(
    ctx: typer.Context,
    config: tp.Optional[Path] = typer.Option(
        None, "--config", help="YAML file merged over the packaged profiles."
    ),
    assignments: tp.List[str] = typer.Option(
        [], "--set", help="Parameter override key=value, repeatable."
    ),
    output_format: OutputFormat = typer.Option(OutputFormat.TABLE, "--format"),
    full_precision: bool = typer.Option(
        False, "--full-precision", help="Print every digit of each float."
    ),
    threads: int = typer.Option(1, "--threads", min=1, help="Worker threads."),
    verbose: int = typer.Option(0, "--verbose", "-v", count=True),
):
    _setup_logging(verbose)
    ctx.obj = State(
        config=load_config(config, assignments),
        format=output_format,
        full_precision=full_precision,
        threads=threads,
    )


# ---------------------------------------------------------------------------
# constants and optimize
# ---------------------------------------------------------------------------


@app.command()
@_exit_codes
def constants(
    ctx: typer.Context,
    profile: str = typer.Option("row1", "--profile", "-p"),
):
    """Assembles the constants of a profile, with the region breakdown."""
    state: State = ctx.obj
    p = state.config.bound_params(profile)
    q = state.config.quadrature_spec(state.threads)

    ri = integrate_regions(p, q)
    cs = assemble(p, ri, q)
    rounded = cs.rounded()
    cc = corollary_constants(cs)

    _emit(
        state,
        Section(
            "Region shares of cbar1",
            ["region", "share"],
            [[str(region), share] for region, share in ri.per_region.items()],
        ),
        Section(
            "Integral sums",
            ["quantity", "value"],
            [[name, getattr(ri, name)] for name in ri._fields if name != "per_region"],
        ),
        Section(
            f"Constants ({profile}, T0 = {format_number(cs.T0)})",
            ["constant", "raw", "rounded up"],
            [
                [name, getattr(cs, name), getattr(rounded, name)]
                for name in CONSTANT_NAMES
            ],
        ),
        Section(
            "Corollary constants",
            ["constant", "raw", "rounded up"],
            [[name, raw, up] for name, raw, up in zip(cc._fields, cc, cc.rounded())],
        ),
    )


def _parse_float(key: str, text: str) -> float:
    try:
        return parse_number(text)
    except ValueError:
        raise ValidationError(f"{key}: expected a number, got {text!r}")


def _parse_weight(text: str) -> tp.Tuple[str, float]:
    key, _, weight = text.partition("=")
    key = key.strip()

    if key not in WEIGHT_KEYS:
        raise ValidationError(f"--minimize takes one of {WEIGHT_KEYS}, got {key!r}")

    return key, _parse_float(key, weight) if weight else 1.0


@app.command(name="optimize")
@_exit_codes
def optimize_command(
    ctx: typer.Context,
    minimize: tp.List[str] = typer.Option(
        ["C1"], "--minimize", help="Constant to minimise, optionally KEY=WEIGHT."
    ),
    fix: tp.List[str] = typer.Option(
        [], "--fix", help="Hold c, r or eta at the profile value, or KEY=VALUE."
    ),
    profile: str = typer.Option("row1", "--profile", "-p"),
    seed: tp.Optional[int] = typer.Option(None, "--seed"),
    budget: tp.Optional[int] = typer.Option(None, "--budget"),
    restarts: tp.Optional[int] = typer.Option(None, "--restarts"),
    start_from_profile: bool = typer.Option(
        False, "--start-from-profile", help="Also start from the profile point."
    ),
):
    """Searches (c, r, eta) minimising a weighted sum of constants."""
    state: State = ctx.obj
    defaults = state.config.optimize_defaults()
    p = state.config.bound_params(profile)

    fixed = {
        f.name: getattr(p, f.name)
        for f in dataclasses.fields(p)
        if f.name not in SEARCH_KEYS
    }
    for text in fix:
        key, _, value = text.partition("=")
        key = key.strip()
        if key not in SEARCH_KEYS:
            raise ValidationError(f"--fix takes one of {SEARCH_KEYS}, got {key!r}")
        fixed[key] = _parse_float(key, value) if value else getattr(p, key)

    if all(key in fixed for key in SEARCH_KEYS):
        regions.BoundParams(**fixed)

    objective = Objective(weights=dict(map(_parse_weight, minimize)), fixed=fixed)
    result = optimize(
        objective,
        seed=defaults.get("seed", 0) if seed is None else seed,
        budget=defaults.get("budget", 2000) if budget is None else budget,
        restarts=defaults.get("restarts", 8) if restarts is None else restarts,
        starts=[(p.c, p.r, p.eta)] if start_from_profile else [],
        workers=state.threads,
        quadrature=state.config.quadrature_spec(),
    )
    cs = result.constants

    _emit(
        state,
        Section(
            "Search result",
            ["quantity", "value"],
            [
                ["c", result.params.c],
                ["r", result.params.r],
                ["eta", result.params.eta],
                ["objective", result.objective_value],
                ["evaluations", result.evaluations],
            ],
        ),
        Section(
            "Constants",
            ["constant", "raw", "rounded up"],
            [
                [name, getattr(cs, name), getattr(cs.rounded(), name)]
                for name in CONSTANT_NAMES
            ],
        ),
    )


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------


def _dominance_margin(p: regions.BoundParams, T: float) -> float:
    thetas = np.linspace(0.0, math.pi, MARGIN_POINTS)
    return min(
        regions.F_cr(theta, T, p) - regions.log_zeta_excess(theta, T, p)
        for theta in thetas
    )


@bound_app.command("eval")
@_exit_codes
def bound_eval(
    ctx: typer.Context,
    T: tp.List[float] = typer.Option(..., "--T", help="Height, repeatable."),
    mode: BoundMode = typer.Option(BoundMode.NT, "--mode"),
    profile: str = typer.Option("row1", "--profile", "-p"),
    dump_curve: tp.Optional[Path] = typer.Option(
        None, "--dump-curve", help="Write (T, bound) pairs as TSV."
    ),
    curve_lo: float = typer.Option(math.e, "--curve-lo"),
    curve_hi: float = typer.Option(1e100, "--curve-hi"),
    curve_points: int = typer.Option(100, "--curve-points", min=2),
    margin: bool = typer.Option(
        False, "--margin", help="Report the dominance margin of the circle estimate."
    ),
):
    """Evaluates a bound at the given heights."""
    state: State = ctx.obj
    cs = state.constants(profile)
    columns = ["T", "bound"]
    rows = [[t, eval_bound(t, cs, mode)] for t in T]

    if margin:
        p = state.config.bound_params(profile)
        columns.append("margin")
        rows = [row + [_dominance_margin(p, row[0])] for row in rows]

    _emit(state, Section(f"{mode.value} bound ({profile})", columns, rows))

    if dump_curve is not None:
        report = study.TSVReport(["T", "bound"], state.full_precision)
        report.add_rows(curve(cs, mode, curve_lo, curve_hi, curve_points))
        report.save(dump_curve)
        logging.info("wrote %d curve points to %s", curve_points, dump_curve)


@bound_app.command("crossover")
@_exit_codes
def bound_crossover(
    ctx: typer.Context,
    profile: str = typer.Option("row1", "--profile", "-p"),
    against: tp.Optional[str] = typer.Option(None, "--against"),
    inner: bool = typer.Option(
        False, "--inner", help="Cross the two halves of the min of one bound."
    ),
    mode: BoundMode = typer.Option(BoundMode.NT, "--mode"),
    kind: CrossingKind = typer.Option(CrossingKind.BOUND, "--kind"),
    primed: bool = typer.Option(False, "--primed", help="Use the C2' halves."),
):
    """Finds where two bounds cross."""
    state: State = ctx.obj

    if inner == (against is not None):
        raise ValidationError("give exactly one of --against PROFILE and --inner")

    def line(cs: ConstantSet, use_primed: bool) -> LinearBound:
        if kind == CrossingKind.UNIT:
            return LinearBound.unit_interval(cs, use_primed)
        if kind == CrossingKind.SHORT:
            return LinearBound.short_interval(cs, use_primed)
        return LinearBound.from_constants(cs, mode, use_primed)

    cs = state.constants(profile)

    if inner:
        b1, b2 = line(cs, False), line(cs, True)
        label = f"{profile} C2 vs C2p"
    else:
        b1, b2 = line(cs, primed), line(state.constants(against), primed)
        label = f"{profile} vs {against}"

    crossing = crossover(b1, b2)

    _emit(
        state,
        Section(
            f"Crossover ({kind.value}, {label})",
            ["T", "log T"],
            [[crossing.T, crossing.log_T]],
        ),
    )


@bound_app.command("intervals")
@_exit_codes
def bound_intervals(
    ctx: typer.Context,
    T: tp.List[float] = typer.Option(..., "--T", help="Height, repeatable."),
    profile: str = typer.Option("row1", "--profile", "-p"),
):
    """Bounds for N(T + 1) - N(T) and N(T + 1) - N(T - 1)."""
    state: State = ctx.obj
    cs = state.constants(profile)
    rows = []

    for t in T:
        unit = unit_interval_bounds(t, cs)
        short = short_interval_bounds(t, cs)
        rows.append([t, unit.lower, unit.upper, short.lower, short.upper])

    _emit(
        state,
        Section(
            f"Interval bounds ({profile})",
            ["T", "unit lower", "unit upper", "short lower", "short upper"],
            rows,
        ),
    )


# ---------------------------------------------------------------------------
# zeros
# ---------------------------------------------------------------------------


def _summary(zeros: ZeroList, path: Path) -> Section:
    rows = [
        ["zeros", len(zeros)],
        ["source", zeros.source.value],
        ["t_max_verified", zeros.t_max_verified],
        ["file", str(path)],
    ]
    if len(zeros) > 0:
        rows[1:1] = [["first", zeros[0]], ["last", zeros[-1]]]

    return Section("Zero list", ["quantity", "value"], rows)


@zeros_app.command("compute")
@_exit_codes
def zeros_compute(
    ctx: typer.Context,
    t_max: float = typer.Option(..., "--t-max", help="Height, at most 1e6."),
    output: Path = typer.Option(DEFAULT_ZEROS, "--output", "-o"),
):
    """Computes every zero up to t_max and saves the list."""
    state: State = ctx.obj
    zeros = find_zeros(t_max, workers=state.threads)
    zeros.save(output)

    _emit(state, _summary(zeros, output))


@zeros_app.command("ingest")
@_exit_codes
def zeros_ingest(
    ctx: typer.Context,
    path: Path = typer.Argument(..., help="File with one ordinate per line."),
    output: Path = typer.Option(DEFAULT_ZEROS, "--output", "-o"),
):
    """Validates a zero file and saves it in the normalised format."""
    state: State = ctx.obj
    zeros = _read_zeros(path)
    zeros.save(output)

    _emit(state, _summary(zeros, output))


# ---------------------------------------------------------------------------
# study
# ---------------------------------------------------------------------------


def _read_zeros(path: Path) -> ZeroList:
    if not path.exists():
        raise ValidationError(
            f"zero file {path} not found, create it with 'zerocount zeros compute'"
        )

    return ingest_zeros(path)


def _zeros_option():
    return typer.Option(DEFAULT_ZEROS, "--zeros", help="Zero file.")


@study_app.command("clusters")
@_exit_codes
def study_clusters(
    ctx: typer.Context,
    n_max: int = typer.Option(4, "--n-max", min=1),
    t_limit: tp.Optional[float] = typer.Option(None, "--t-limit"),
    zeros: Path = _zeros_option(),
):
    """Smallest t with N(t + 1) - N(t - 1) = n."""
    state: State = ctx.obj
    table = study.cluster_first(n_max, _read_zeros(zeros), t_limit)

    _emit(
        state,
        Section("First clusters", ["n", "t"], [list(row) for row in table.rows]),
        Section(
            "Largest (N(t + 1) - N(t - 1)) / log t",
            ["ratio", "t"],
            [[table.max_ratio, table.t_max_ratio]],
        ),
    )


@study_app.command("extremes")
@_exit_codes
def study_extremes(
    ctx: typer.Context,
    infima: bool = typer.Option(
        False, "--infima", help="Also list the smallest infima of eps- between zeros."
    ),
    zeros: Path = _zeros_option(),
):
    """Zeros where eps+ is positive or eps- is negative."""
    state: State = ctx.obj
    z = _read_zeros(zeros)
    found = study.scan_extremes(z, workers=state.threads)

    sections = [
        Section(
            "Exceptions",
            ["n", "t_n", "eps+", "eps-"],
            [list(record) for record in found],
        )
    ]

    values = study.eps_minus_infima(z) if infima else np.empty(0)

    if len(values) > 0:
        k = int(np.argmin(values))
        # values[k] is approached from the left of zero number n
        n = k + 1 + len(z) - len(values)
        sections.append(
            Section(
                "Smallest infimum of eps- on [t_(n-1), t_n)",
                ["n", "t_n", "infimum"],
                [[n, z[n - 1], values[k]]],
            )
        )

    _emit(state, *sections, message=None if found else "no exceptions found")


@study_app.command("averages")
@_exit_codes
def study_averages(
    ctx: typer.Context,
    chunks: int = typer.Option(1, "--chunks", min=1),
    extremes: bool = typer.Option(
        False, "--extremes", help="Add the per chunk extremes of eps+ and eps-."
    ),
    zeros: Path = _zeros_option(),
):
    """Mean of N(t_n) - (t_n / 2 pi) log(t_n / 2 pi e) over chunks of zeros."""
    state: State = ctx.obj
    z = _read_zeros(zeros)

    if extremes:
        rows = study.interval_extremes(z, chunks)
        section = Section(
            "Chunk extremes",
            list(study.ChunkExtremes._fields) + ["deviation"],
            [list(row) + [row.mean - MEAN_OFFSET] for row in rows],
        )
    else:
        rows = study.interval_averages(z, chunks)
        section = Section(
            "Chunk averages",
            ["chunk", "mean", "deviation"],
            [[row.chunk, row.mean, row.mean - MEAN_OFFSET] for row in rows],
        )

    _emit(state, section)


@study_app.command("theorem-check")
@_exit_codes
def study_theorem_check(ctx: typer.Context, zeros: Path = _zeros_option()):
    """Checks the two-sided bound on N(T) at the zeros, midpoints and left limits."""
    state: State = ctx.obj
    z = _read_zeros(zeros)
    margins = study.theorem_margins(z)

    _emit(
        state,
        Section(
            "Theorem check",
            ["lower margin", "upper margin", "points", "t_max"],
            [[margins.lower, margins.upper, margins.points, z.t_max_verified]],
        ),
        message="PASS" if margins.holds else "FAIL",
    )

    if not margins.holds:
        raise typer.Exit(1)


if __name__ == "__main__":
    app()
