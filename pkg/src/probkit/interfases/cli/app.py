"""Command-line interface for probkit."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Any, cast

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from probkit.combinatorics import (
    arrangements,
    combinations,
    count_maps,
    factorial,
    multinomial,
    pascal_row,
    stirling_approx,
    wallis_term,
)
from probkit.core.errors import ExposureError, ParseError, ProbkitError
from probkit.core.rational import format_fraction, to_fraction
from probkit.core.schema import build_json_schema, validate_payload
from probkit.core.settings import ProbkitSettings, load_settings
from probkit.couples import (
    conditional_expectation,
    conditional_law,
    diagonal_mgf_factorizes,
    is_independent,
    read_joint_csv,
    tower_expectation,
)
from probkit.demos import DEMOS, run_demo
from probkit.distributions import (
    CLI_LAW_PARAMETERS,
    DiscreteLaw,
    Law,
    Rng,
    exact_mass,
    law_from_payload,
)
from probkit.finite_space import CausePartition, bayes_posterior, total_probability
from probkit.limits import (
    LimitReport,
    binomial_poisson_distance,
    clt_interval_error,
    limit_sweep,
    local_limit_ratio_error,
    stirling_sweep,
    wallis_sweep,
)
from probkit.moments import FiniteRv, MomentSummary, correlation, covariance, summarize, summarize_law

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
MIN_DIGITS = 1
MAX_DIGITS = 17
PRIOR_SUM_TOLERANCE = 1e-9
DEFAULT_N_GRID = "10,100,1000"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
LAW_FLAGS = tuple(sorted({name for names in CLI_LAW_PARAMETERS.values() for name in names}))


class CliError(ExposureError):
    """Exception raised for anticipated CLI failures."""

    def __init__(
        self,
        message: str,
        *,
        exit_code: int = EXIT_FAILURE,
        details: Any | None = None,
        error_type: str | None = None,
    ) -> None:
        super().__init__(message)
        self.exit_code = exit_code
        self.details = details
        self.error_type = error_type or type(self).__name__


def main(argv: Sequence[str] | None = None) -> int:
    """Parse *argv*, execute the requested command and return the exit code."""
    parser = _build_parser()
    args_namespace = parser.parse_args(argv)
    command = getattr(args_namespace, "command", None)
    if command is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        settings = load_settings()
        _configure_logging(args_namespace.log_level or settings.log_level)
        if args_namespace.digits is None:
            args_namespace.digits = settings.digits
        exit_code = command(args_namespace, settings)
    except CliError as error:
        _emit_error(error)
        exit_code = error.exit_code
    except ValidationError as error:
        cli_error = CliError(
            "Invalid payload",
            details=error.errors(include_url=False),
            error_type="ValidationError",
        )
        _emit_error(cli_error)
        exit_code = cli_error.exit_code
    except ProbkitError as error:
        cli_error = CliError(str(error), error_type=type(error).__name__)
        _emit_error(cli_error)
        exit_code = cli_error.exit_code
    except OverflowError as error:
        cli_error = CliError(f"Numeric overflow: {error}", error_type="NumericOverflowError")
        _emit_error(cli_error)
        exit_code = cli_error.exit_code
    return exit_code


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _number(text: str) -> int | float:
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError as error:
        message = f"not a number: {text!r}"
        raise argparse.ArgumentTypeError(message) from error
    if not math.isfinite(value):
        message = f"not a finite number: {text!r}"
        raise argparse.ArgumentTypeError(message)
    return value


def _digits(text: str) -> int:
    value = int(text)
    if not MIN_DIGITS <= value <= MAX_DIGITS:
        message = f"digits must lie in {MIN_DIGITS}..{MAX_DIGITS}, got {value}"
        raise argparse.ArgumentTypeError(message)
    return value


def _number_list(text: str) -> list[int | float]:
    return [_number(part) for part in text.split(",") if part.strip()]


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as error:
        message = f"expected comma-separated integers, got {text!r}"
        raise argparse.ArgumentTypeError(message) from error


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="probkit",
        description="Exact and numerical probabilities: laws, finite spaces, joint tables and limit theorems.",
    )
    parser.add_argument("--version", action="version", version="probkit 0.1.0")
    parser.add_argument(
        "--digits",
        type=_digits,
        default=None,
        help="Significant digits for real results (default: PROBKIT_DIGITS or 7).",
    )
    parser.add_argument(
        "--log-level",
        dest="log_level",
        choices=LOG_LEVELS,
        default=None,
        help="Logging level on stderr (default: PROBKIT_LOG_LEVEL or WARNING).",
    )
    subparsers = parser.add_subparsers(dest="command_name")

    _configure_law_verbs(subparsers)
    _configure_summary(subparsers)
    _configure_joint(subparsers)
    _configure_bayes(subparsers)
    _configure_limits(subparsers)
    _configure_demo(subparsers)
    _configure_count(subparsers)
    _configure_schema(subparsers)

    return parser


def _add_law_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("law", choices=sorted(CLI_LAW_PARAMETERS), help="Law name, as in R.")
    for name in LAW_FLAGS:
        parser.add_argument(f"--{name}", dest=f"law_{name}", type=_number, default=None, help=argparse.SUPPRESS)


def _configure_law_verbs(subparsers: Any) -> None:
    density_parser = subparsers.add_parser("d", help="Mass (discrete) or density (continuous) at x.")
    _add_law_arguments(density_parser)
    density_parser.add_argument("x", type=_number)
    density_parser.add_argument(
        "--exact",
        action="store_true",
        help="Print the exact rational mass of a discrete law.",
    )
    density_parser.set_defaults(command=_command_density)

    cdf_parser = subparsers.add_parser("p", help="Cumulative probability P(X <= x).")
    _add_law_arguments(cdf_parser)
    cdf_parser.add_argument("x", type=_number)
    cdf_parser.add_argument("--upper", action="store_true", help="Print P(X > x) instead.")
    cdf_parser.set_defaults(command=_command_cdf)

    quantile_parser = subparsers.add_parser("q", help="Quantile at level s in (0, 1).")
    _add_law_arguments(quantile_parser)
    quantile_parser.add_argument("s", type=float)
    quantile_parser.set_defaults(command=_command_quantile)

    sample_parser = subparsers.add_parser("r", help="Seeded random draws.")
    _add_law_arguments(sample_parser)
    sample_parser.add_argument("--seed", type=int, required=True)
    sample_parser.add_argument("--count", type=int, required=True)
    sample_parser.set_defaults(command=_command_sample)


def _configure_summary(subparsers: Any) -> None:
    parser = subparsers.add_parser("summary", help="Mean, variance and factorial moment of a JSON payload.")
    parser.add_argument("input_path", help="JSON file with a random variable or a law payload ('-' for stdin).")
    parser.add_argument("--kind", choices=("rv", "law"), default="rv", help="Payload kind (default: rv).")
    parser.set_defaults(command=_command_summary)


def _configure_joint(subparsers: Any) -> None:
    parser = subparsers.add_parser("joint", help="Analyze a joint law table stored as CSV.")
    parser.add_argument("csv_path")
    parser.add_argument(
        "--given-y",
        dest="given_y",
        type=_number,
        default=None,
        help="Print the conditional law of X and E(X | Y = y) for this y.",
    )
    parser.set_defaults(command=_command_joint)


def _configure_bayes(subparsers: Any) -> None:
    parser = subparsers.add_parser("bayes", help="Total probability and posteriors of a cause partition.")
    parser.add_argument("--priors", type=_number_list, required=True, help="Comma-separated prior probabilities.")
    parser.add_argument(
        "--likelihoods",
        type=_number_list,
        required=True,
        help="Comma-separated probabilities of the observed event under each cause.",
    )
    parser.set_defaults(command=_command_bayes)


def _configure_limits(subparsers: Any) -> None:
    parser = subparsers.add_parser("limits", help="Convergence tables for the classical limit theorems.")
    limit_subparsers = parser.add_subparsers(dest="limit_command", required=True)

    def add_common(sub: argparse.ArgumentParser, default_grid: str) -> None:
        sub.add_argument("--n-grid", dest="n_grid", type=_int_list, default=_int_list(default_grid))
        sub.add_argument("--csv", dest="csv_path", default=None, help="Also write the table to this CSV file.")

    poisson = limit_subparsers.add_parser("poisson", help="max |Binomial(n, lambda/n) - Poisson(lambda)|.")
    add_common(poisson, DEFAULT_N_GRID)
    poisson.add_argument("--lambda", dest="lam", type=float, default=1.0)
    poisson.add_argument("--k-max", dest="k_max", type=int, default=None)
    poisson.set_defaults(command=_command_limits)

    for name, help_text in (
        ("local", "Worst relative error of the local normal approximation on a z window."),
        ("clt", "|P(a <= Z_n <= b) - (Phi(b) - Phi(a))| for the standardized binomial."),
    ):
        sub = limit_subparsers.add_parser(name, help=help_text)
        add_common(sub, DEFAULT_N_GRID)
        sub.add_argument("--p", type=float, default=0.5)
        sub.add_argument("--a", type=float, default=-1.0)
        sub.add_argument("--b", type=float, default=1.0)
        sub.set_defaults(command=_command_limits)

    stirling = limit_subparsers.add_parser("stirling", help="|ln n! - ln Stirling(n)| against its bound.")
    add_common(stirling, "1,2,5,10,50,100")
    stirling.set_defaults(command=_command_limits)

    wallis = limit_subparsers.add_parser("wallis", help="|Wallis term - pi|.")
    add_common(wallis, "1,10,100,1000")
    wallis.set_defaults(command=_command_limits)


def _configure_demo(subparsers: Any) -> None:
    parser = subparsers.add_parser("demo", help="Run a worked scenario.")
    parser.add_argument("name", choices=list(DEMOS))
    parser.add_argument("--p", dest="p", default=None, help="Scenario parameter (umbrella: P(in the building)).")
    parser.set_defaults(command=_command_demo)


def _configure_count(subparsers: Any) -> None:
    parser = subparsers.add_parser("count", help="Exact counting and asymptotic formulas.")
    count_subparsers = parser.add_subparsers(dest="count_command", required=True)

    for name, arguments, help_text in (
        ("factorial", ("n",), "n!"),
        ("arrangements", ("n", "p"), "Ordered p-samples without replacement from n items."),
        ("combinations", ("n", "p"), "Binomial coefficient C(n, p)."),
        ("maps", ("p", "n"), "Number of maps from a p-set into an n-set."),
        ("pascal", ("n",), "Row n of Pascal's triangle."),
        ("stirling", ("n",), "Stirling approximation of n! with its error bound."),
        ("wallis", ("n",), "Wallis term approximating pi."),
    ):
        sub = count_subparsers.add_parser(name, help=help_text)
        for argument in arguments:
            sub.add_argument(argument, type=int)
        sub.set_defaults(command=_command_count)

    multinomial_parser = count_subparsers.add_parser("multinomial", help="Multinomial coefficient of the parts.")
    multinomial_parser.add_argument("parts", type=int, nargs="+")
    multinomial_parser.set_defaults(command=_command_count)


def _configure_schema(subparsers: Any) -> None:
    schema_parser = subparsers.add_parser(
        "schema",
        help="Interact with the JSON Schema utilities.",
    )
    schema_subparsers = schema_parser.add_subparsers(dest="schema_command", required=True)

    export_parser = schema_subparsers.add_parser(
        "export",
        help="Export a payload JSON Schema to a file (default: stdout).",
    )
    export_parser.set_defaults(command=_command_schema_export)
    export_parser.add_argument("--kind", choices=("law", "space", "rv"), default="law")
    export_parser.add_argument(
        "--output",
        "--out",
        dest="output_path",
        default="-",
        help="Destination file for the JSON Schema or '-' for stdout.",
    )


def _law_from_args(args: argparse.Namespace) -> Law:
    allowed = CLI_LAW_PARAMETERS[args.law]
    payload: dict[str, Any] = {"law": args.law}
    for name in LAW_FLAGS:
        value = getattr(args, f"law_{name}")
        if value is None:
            continue
        if name not in allowed:
            message = f"--{name} does not apply to {args.law}; expected {', '.join(f'--{flag}' for flag in allowed)}"
            raise CliError(message, exit_code=EXIT_USAGE)
        payload[name] = value
    try:
        validate_payload("law", payload)
    except ParseError as error:
        message = f"Invalid parameters for {args.law} (expected {', '.join(f'--{flag}' for flag in allowed)}): {error}"
        raise CliError(message, exit_code=EXIT_USAGE) from error
    law = law_from_payload(payload)
    logger.debug("Built law from flags", extra={"law": args.law, "payload": payload})
    return law


def _format_real(value: float, digits: int) -> str:
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, f"#.{digits}g")


def _format_value(value: object, digits: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{_format_real(float(value), digits)} ({format_fraction(value)})"
    return _format_real(cast("float", value), digits)


def _identity(value: Fraction) -> Fraction:
    return value


def _write_lines(lines: Iterable[str]) -> None:
    for line in lines:
        sys.stdout.write(line + "\n")


def _write_report(items: Iterable[tuple[str, object]], digits: int) -> None:
    _write_lines(f"{label}: {_format_value(value, digits)}" for label, value in items)


def _command_density(args: argparse.Namespace, _: ProbkitSettings) -> int:
    law = _law_from_args(args)
    x = args.x
    if isinstance(law, DiscreteLaw):
        integral = float(x).is_integer()
        if args.exact:
            value = exact_mass(law, int(x)) if integral else Fraction(0)
            _write_lines([format_fraction(value)])
            return EXIT_OK
        _write_lines([_format_real(law.mass(int(x)) if integral else 0.0, args.digits)])
        return EXIT_OK
    if args.exact:
        message = f"--exact needs a discrete law, got {args.law}"
        raise CliError(message, exit_code=EXIT_USAGE)
    _write_lines([_format_real(law.density(float(x)), args.digits)])
    return EXIT_OK


def _command_cdf(args: argparse.Namespace, _: ProbkitSettings) -> int:
    law = _law_from_args(args)
    value = law.sf(float(args.x)) if args.upper else law.cdf(float(args.x))
    _write_lines([_format_real(value, args.digits)])
    return EXIT_OK


def _command_quantile(args: argparse.Namespace, _: ProbkitSettings) -> int:
    law = _law_from_args(args)
    value = law.quantile(args.s)
    if isinstance(law, DiscreteLaw):
        _write_lines([str(int(value))])
    else:
        _write_lines([_format_real(value, args.digits)])
    return EXIT_OK


def _command_sample(args: argparse.Namespace, _: ProbkitSettings) -> int:
    law = _law_from_args(args)
    draws = law.sample(Rng(args.seed), args.count)
    if isinstance(law, DiscreteLaw):
        _write_lines(str(int(value)) for value in draws)
    else:
        _write_lines(_format_real(value, args.digits) for value in draws)
    return EXIT_OK


def _summary_items(summary: MomentSummary) -> list[tuple[str, object]]:
    items: list[tuple[str, object]] = [
        ("mean", summary.mean),
        ("variance", summary.variance),
        ("std dev", summary.std_dev),
    ]
    if not math.isnan(summary.factorial_moment2):
        items.append(("factorial moment 2", summary.factorial_moment2))
    return items


def _command_summary(args: argparse.Namespace, _: ProbkitSettings) -> int:
    payload = _read_json(args.input_path)
    if not isinstance(payload, dict):
        message = f"{args.kind} payload must be a JSON object"
        raise CliError(message)
    mapping = cast("dict[str, Any]", payload)
    validate_payload(args.kind, mapping)
    if args.kind == "law":
        summary = summarize_law(law_from_payload(mapping))
    else:
        summary = summarize(FiniteRv.model_validate(mapping))
    _write_report(_summary_items(summary), args.digits)
    return EXIT_OK


def _command_joint(args: argparse.Namespace, _: ProbkitSettings) -> int:
    try:
        result = read_joint_csv(args.csv_path)
    except FileNotFoundError as error:
        message = f"File not found: {args.csv_path}"
        raise CliError(message) from error
    except OSError as error:
        message = f"Unable to read {args.csv_path}: {error}"
        raise CliError(message) from error
    joint = result.joint
    digits = args.digits
    lines: list[str] = []
    if result.renormalized:
        lines.append("renormalized: true")
    lines.extend(
        f"P(X = {format_fraction(x)}): {_format_value(p, digits)}"
        for x, p in zip(joint.x_values, joint.row_masses(), strict=True)
    )
    lines.extend(
        f"P(Y = {format_fraction(y)}): {_format_value(p, digits)}"
        for y, p in zip(joint.y_values, joint.column_masses(), strict=True)
    )
    lines.append(f"independent: {_format_value(is_independent(joint), digits)}")
    lines.append(f"diagonal MGF factorizes: {_format_value(diagonal_mgf_factorizes(joint), digits)}")
    lines.append(f"covariance: {_format_real(covariance(joint), digits)}")
    try:
        lines.append(f"correlation: {_format_real(correlation(joint), digits)}")
    except ProbkitError as error:
        logger.info("Correlation undefined", extra={"reason": str(error)})
        lines.append("correlation: undefined")
    lines.append(f"E(X) by conditioning: {_format_real(tower_expectation(joint, _identity), digits)}")
    if args.given_y is not None:
        index = joint.y_index(args.given_y)
        conditional = conditional_law(joint, index)
        y_label = format_fraction(joint.y_values[index])
        lines.extend(
            f"P(X = {format_fraction(x)} | Y = {y_label}): {_format_value(p, digits)}"
            for x, p in zip(conditional.x_values, conditional.probs, strict=True)
        )
        lines.append(f"E(X | Y = {y_label}): {_format_real(conditional_expectation(joint, _identity, index), digits)}")
    _write_lines(lines)
    return EXIT_OK


def _command_bayes(args: argparse.Namespace, _: ProbkitSettings) -> int:
    priors = [to_fraction(value) for value in args.priors]
    likelihoods = [to_fraction(value) for value in args.likelihoods]
    total = sum(priors, Fraction(0))
    if total != 1 and abs(total - 1) <= PRIOR_SUM_TOLERANCE:
        logger.warning("Renormalizing priors", extra={"prior_sum": float(total)})
        priors = [prior / total for prior in priors]
    partition = CausePartition(priors=tuple(priors), likelihoods=tuple(likelihoods))
    posteriors = bayes_posterior(partition, allow_null_causes=True)
    items: list[tuple[str, object]] = [("evidence", total_probability(partition))]
    items.extend((f"posterior {index + 1}", value) for index, value in enumerate(posteriors))
    _write_report(items, args.digits)
    return EXIT_OK


def _limit_reports(args: argparse.Namespace) -> tuple[str, list[LimitReport]]:
    grid: list[int] = args.n_grid
    command: str = args.limit_command
    if command == "poisson":
        return "max mass gap", limit_sweep(lambda n: binomial_poisson_distance(n, args.lam, args.k_max), grid)
    if command == "local":
        return "max relative error", limit_sweep(lambda n: local_limit_ratio_error(n, args.p, args.a, args.b), grid)
    if command == "clt":
        return "interval error", limit_sweep(lambda n: clt_interval_error(n, args.p, args.a, args.b), grid)
    if command == "stirling":
        return "log error", stirling_sweep(grid)
    return "error", wallis_sweep(grid)


def _command_limits(args: argparse.Namespace, _: ProbkitSettings) -> int:
    metric_name, reports = _limit_reports(args)
    table = Table(title=f"limits {args.limit_command}")
    table.add_column("n", justify="right")
    table.add_column(metric_name, justify="right")
    for report in reports:
        table.add_row(str(report.n), _format_real(report.metric, args.digits))
    Console(file=sys.stdout, width=100).print(table)
    if args.csv_path is not None:
        _write_limits_csv(Path(args.csv_path), metric_name, reports, args.digits)
    return EXIT_OK


def _write_limits_csv(path: Path, metric_name: str, reports: Sequence[LimitReport], digits: int) -> None:
    try:
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["n", metric_name])
            writer.writerows([report.n, _format_real(report.metric, digits)] for report in reports)
    except OSError as error:
        message = f"Unable to write {path}: {error}"
        raise CliError(message) from error


def _command_demo(args: argparse.Namespace, _: ProbkitSettings) -> int:
    report = run_demo(args.name, args.p)
    _write_report(report.items(), args.digits)
    return EXIT_OK


def _count_value(args: argparse.Namespace, settings: ProbkitSettings) -> list[tuple[str, object]]:
    command: str = args.count_command
    counters: dict[str, Callable[[], list[tuple[str, object]]]] = {
        "factorial": lambda: [("factorial", factorial(args.n, limit=settings.max_factorial))],
        "arrangements": lambda: [("arrangements", arrangements(args.n, args.p))],
        "combinations": lambda: [("combinations", combinations(args.n, args.p))],
        "maps": lambda: [("maps", count_maps(args.p, args.n))],
        "multinomial": lambda: [("multinomial", multinomial(args.parts))],
        "wallis": lambda: [("wallis", wallis_term(args.n))],
    }
    if command == "pascal":
        return [(f"C({args.n}, {p})", value) for p, value in enumerate(pascal_row(args.n))]
    if command == "stirling":
        approx = stirling_approx(args.n)
        return [
            ("stirling", approx.value),
            ("log stirling", approx.log_value),
            ("relative error bound", approx.theta_bound),
        ]
    return counters[command]()


def _command_count(args: argparse.Namespace, settings: ProbkitSettings) -> int:
    _write_report(_count_value(args, settings), args.digits)
    return EXIT_OK


def _command_schema_export(args: argparse.Namespace, _: ProbkitSettings) -> int:
    schema = build_json_schema(args.kind)
    _write_json_output(schema, args.output_path)
    return EXIT_OK


def _read_json(path_text: str) -> object:
    if path_text == "-":
        try:
            return cast("object", json.load(sys.stdin))
        except json.JSONDecodeError as error:
            message = f"Failed to parse JSON from stdin: {error}"
            raise CliError(message) from error
    path = Path(path_text)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as error:
        message = f"File not found: {path}"
        raise CliError(message) from error
    except OSError as error:
        message = f"Unable to read {path}: {error}"
        raise CliError(message) from error
    try:
        return cast("object", json.loads(text))
    except json.JSONDecodeError as error:
        message = f"Failed to parse JSON from {path}: {error}"
        raise CliError(message) from error


def _write_json_output(payload: Any, output_path: str | None) -> None:
    serialized = json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True)
    if output_path in {None, "", "-"}:
        sys.stdout.write(serialized + "\n")
        return
    path = Path(cast("str", output_path))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialized + "\n", encoding="utf-8")


def _emit_error(error: CliError) -> None:
    payload: dict[str, Any] = {
        "status": "error",
        "message": str(error),
        "type": error.error_type,
    }
    if error.details is not None:
        payload["details"] = error.details
    serialized = json.dumps(payload, ensure_ascii=False, sort_keys=True, default=str)
    sys.stderr.write(serialized + "\n")
    sys.stderr.flush()


__all__ = ["CliError", "main"]
