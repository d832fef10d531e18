"""Command-line interface.

Commands
--------
probe      report Lorenz values, Gini indices and bounds for a stored state
example    the same report for the built-in benchmark superposition state
estimate   search for the supremum of the combined index at one dimension
sweep      one summary row per dimension: bounds, example value, estimate
check      run the seeded property suites and report verdicts

One document (JSON by default, CSV on request) goes to standard output;
progress and error messages go to standard error. Exit status is 0 on
success, 1 when a value fails validation (bad state file, even dimension,
impossible budget, failed check), and 2 for unusable command lines.
"""

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass, field

from qgini import __version__
from qgini.checks import run_property_checks
from qgini.errors import ValidationError
from qgini.gini import gini_report
from qgini.lorenz import lorenz_curve
from qgini.qsystem import DensityMatrix, check_dimension, new_system, pure_density
from qgini.serialize import float17, to_json
from qgini.statefile import load_state_file
from qgini.uncertainty import bounds, estimate_sup_gini, example_state

SWEEP_COLUMNS = (
    "dim",
    "gini_cap",
    "g_lower",
    "eta_upper",
    "example_g_xp",
    "g_sup_estimate",
    "eta_estimate",
)


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation: the command plus every knob it may use."""

    command: str
    dim: object = None          # int for most commands, list of ints for sweep
    input_path: str | None = None
    output_format: str = "json"
    restarts: int = 32
    iterations: int = 2000
    seed: int = 42
    samples: int = 200


@dataclass
class ReportRecord:
    """Everything the report commands emit for one state.

    The estimator block stays None unless the record came from `estimate`.
    Numeric fields must be finite; serialization renders floats with 17
    significant digits.
    """

    dim: int
    state_label: str
    g_x: float
    g_p: float
    g_xp: float
    lorenz_x: list = field(default_factory=list)
    lorenz_p: list = field(default_factory=list)
    permutation_x: list = field(default_factory=list)
    permutation_p: list = field(default_factory=list)
    gini_cap: float = 0.0
    g_lower: float = 0.0
    g_strict_upper: float = 0.0
    eta_upper: float = 0.0
    g_sup_estimate: float | None = None
    eta_estimate: float | None = None
    restarts: int | None = None
    iterations: int | None = None
    seed: int | None = None
    converged: bool | None = None

    def as_document(self) -> dict:
        """Field-ordered dict with the unused estimator block dropped."""
        doc = {}
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if value is not None:
                doc[name] = value
        return doc


def _dims_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgini",
        description="Lorenz values, Gini indices and uncertainty bounds for finite quantum systems.",
    )
    parser.add_argument("--version", action="version", version=f"qgini {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json", help="output format")

    def add_budget(p):
        p.add_argument("--restarts", type=int, default=32, help="number of search restarts")
        p.add_argument("--iters", type=int, default=2000, help="coordinate sweeps per restart")
        p.add_argument("--seed", type=int, default=42, help="master seed for the restart starts")

    p_probe = sub.add_parser("probe", help="report on a state loaded from a file")
    p_probe.add_argument("--input", required=True, help="path to a JSON state file")
    add_format(p_probe)

    p_example = sub.add_parser("example", help="report on the benchmark superposition state")
    p_example.add_argument("--dim", type=int, required=True, help="odd dimension, at least 3")
    add_format(p_example)

    p_est = sub.add_parser("estimate", help="search for the supremum of the combined index")
    p_est.add_argument("--dim", type=int, required=True, help="odd dimension, at least 3")
    add_budget(p_est)
    add_format(p_est)

    p_sweep = sub.add_parser("sweep", help="summary row per dimension")
    p_sweep.add_argument("--dims", type=_dims_list, required=True, help="comma-separated odd dimensions")
    add_budget(p_sweep)
    add_format(p_sweep)

    p_check = sub.add_parser("check", help="run the seeded property suites")
    p_check.add_argument("--dim", type=int, required=True, help="odd dimension, at least 3")
    p_check.add_argument("--samples", type=int, default=200, help="sample count per suite")
    p_check.add_argument("--seed", type=int, default=42, help="master seed for the suites")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        dim=getattr(args, "dims", None) if args.command == "sweep" else getattr(args, "dim", None),
        input_path=getattr(args, "input", None),
        output_format=getattr(args, "format", "json"),
        restarts=getattr(args, "restarts", 32),
        iterations=getattr(args, "iters", 2000),
        seed=getattr(args, "seed", 42),
        samples=getattr(args, "samples", 200),
    )


# ---- report assembly ---------------------------------------------------------


def _build_record(system, rho: DensityMatrix, label: str, estimate=None) -> ReportRecord:
    rep = gini_report(system, rho)
    curve_x = lorenz_curve(system.position_probs(rho))
    curve_p = lorenz_curve(system.momentum_probs(rho))
    bound_set = bounds(system.d)
    record = ReportRecord(
        dim=system.d,
        state_label=label,
        g_x=rep.g_x,
        g_p=rep.g_p,
        g_xp=rep.g_xp,
        lorenz_x=[float(v) for v in curve_x.values],
        lorenz_p=[float(v) for v in curve_p.values],
        permutation_x=[int(i) for i in curve_x.permutation.order],
        permutation_p=[int(i) for i in curve_p.permutation.order],
        gini_cap=bound_set.gini_cap,
        g_lower=bound_set.g_lower,
        g_strict_upper=bound_set.g_strict_upper,
        eta_upper=bound_set.eta_upper,
    )
    if estimate is not None:
        record.g_sup_estimate = estimate.g_sup_estimate
        record.eta_estimate = estimate.eta_estimate
        record.restarts = estimate.restarts
        record.iterations = estimate.iterations
        record.seed = estimate.seed
        record.converged = estimate.converged
    return record


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return float17(value)
    if isinstance(value, (list, tuple)):
        return ";".join(_csv_cell(item) for item in value)
    return str(value)


def _emit(rows, fmt: str) -> None:
    """Write one document or a list of row documents to stdout."""
    if fmt == "json":
        sys.stdout.write(to_json(rows) + "\n")
        return
    table = rows if isinstance(rows, list) else [rows]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table[0].keys())
    for row in table:
        writer.writerow([_csv_cell(v) for v in row.values()])
    sys.stdout.write(buf.getvalue())


# ---- command handlers --------------------------------------------------------


def _cmd_probe(config: RunConfig) -> int:
    state = load_state_file(config.input_path)
    system = new_system(state.dim)
    rho = state if isinstance(state, DensityMatrix) else pure_density(state)
    record = _build_record(system, rho, os.path.basename(config.input_path))
    _emit(record.as_document(), config.output_format)
    return 0


def _cmd_example(config: RunConfig) -> int:
    system = new_system(config.dim)
    rho = pure_density(example_state(system))
    _emit(_build_record(system, rho, "example").as_document(), config.output_format)
    return 0


def _cmd_estimate(config: RunConfig) -> int:
    system = new_system(config.dim)
    estimate = estimate_sup_gini(
        system, restarts=config.restarts, iterations=config.iterations, seed=config.seed
    )
    rho = pure_density(estimate.best_state)
    record = _build_record(system, rho, "estimate_best", estimate=estimate)
    _emit(record.as_document(), config.output_format)
    return 0


def _sweep_row(dim: int, config: RunConfig) -> dict:
    system = new_system(dim)
    bound_set = bounds(dim)
    example_xp = gini_report(system, pure_density(example_state(system))).g_xp
    estimate = estimate_sup_gini(
        system, restarts=config.restarts, iterations=config.iterations, seed=config.seed
    )
    return {
        "dim": dim,
        "gini_cap": bound_set.gini_cap,
        "g_lower": bound_set.g_lower,
        "eta_upper": bound_set.eta_upper,
        "example_g_xp": example_xp,
        "g_sup_estimate": estimate.g_sup_estimate,
        "eta_estimate": estimate.eta_estimate,
    }


def _cmd_sweep(config: RunConfig) -> int:
    if not config.dim:
        raise ValidationError("dimension list is empty")
    for dim in config.dim:
        check_dimension(dim)
    rows = []
    for dim in config.dim:
        print(f"sweep: dimension {dim}", file=sys.stderr)
        rows.append(_sweep_row(dim, config))
    _emit(rows, config.output_format)
    return 0


def _cmd_check(config: RunConfig) -> int:
    results = run_property_checks(config.dim, samples=config.samples, seed=config.seed)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name}: {res.detail}", file=sys.stderr)
    document = {
        "dim": config.dim,
        "samples": config.samples,
        "seed": config.seed,
        "all_passed": all(r.passed for r in results),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    sys.stdout.write(to_json(document) + "\n")
    return 0 if document["all_passed"] else 1


_HANDLERS = {
    "probe": _cmd_probe,
    "example": _cmd_example,
    "estimate": _cmd_estimate,
    "sweep": _cmd_sweep,
    "check": _cmd_check,
}


# ---- entry points --------------------------------------------------------------


def run(argv) -> int:
    """Parse `argv` (no program name) and execute; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else int(code)
    config = _config_from_args(args)
    try:
        return _HANDLERS[config.command](config)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
