"""Command-line front end.

Subcommands:

* ``moment``      stream integer samples, emit powered sums in one pass
* ``coeffs``      combination coefficients for a concrete (K, N)
* ``table``       symbolic coefficient polynomials in N up to a maximum power
* ``complexity``  operation-count comparison table
* ``selfcheck``   randomized internal consistency checks

Exit codes: 0 success, 1 selfcheck failure, 2 usage or parse error,
3 empty input where samples were required.

Sample input is line-delimited decimal integers; blank lines and lines
starting with ``#`` are ignored. All output is deterministic for
identical inputs and flags (randomized checks take an explicit seed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .cascade import Cascade, FloatCascade, MomentRequest
from .coeffs import CoefficientSet, coefficient_polynomials, coefficients_closed
from .costmodel import complexity_table, write_csv
from .selfcheck import run_selfcheck

EXIT_OK = 0
EXIT_SELFCHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_EMPTY_INPUT = 3


@dataclass
class RunConfig:
    """Parsed invocation: what to run, where samples come from, how to print."""

    subcommand: str
    input_path: str | None = None
    powers: list[int] = field(default_factory=list)
    N_override: int | None = None
    output_format: str = "json"


class SampleParseError(Exception):
    def __init__(self, lineno: int, text: str) -> None:
        super().__init__(f"line {lineno}: cannot parse sample {text!r}")
        self.lineno = lineno
        self.text = text


def push_stream(
    cascade: Cascade | FloatCascade, lines: Iterable[str], parse: Callable[[str], object]
) -> None:
    """Feed data lines into a cascade, skipping blanks and '#' comments.

    One sample is in flight at a time; nothing is buffered beyond the
    cascade registers and the current line.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            value = parse(text)
        except ValueError:
            raise SampleParseError(lineno, text) from None
        cascade.push(value)  # type: ignore[arg-type]


def _comma_separated_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powsum",
        description="Streaming time-index powered weighted sums via cascaded accumulators.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    moment = sub.add_parser(
        "moment",
        help="compute sum(n^K * v[n]) over a sample stream in a single pass",
    )
    moment.add_argument(
        "-K",
        "--power",
        dest="powers",
        action="append",
        type=_nonnegative_int,
        required=True,
        help="power K; repeat the flag to get several moments from the same pass",
    )
    moment.add_argument("--input", help="sample file, one integer per line (default: stdin)")
    moment.add_argument(
        "--expect-n",
        type=_positive_int,
        help="declared sample count: coefficients are precomputed from it and the "
        "actual count is verified at end of stream",
    )
    moment.add_argument(
        "--float",
        dest="float_mode",
        action="store_true",
        help="use the double-precision cascade; results are approximate and the "
        "exact-arithmetic guarantees do not apply",
    )
    moment.add_argument("--format", choices=("json", "plain"), default="json")

    coeffs_cmd = sub.add_parser("coeffs", help="combination coefficients for a concrete (K, N)")
    coeffs_cmd.add_argument("-K", "--power", type=_nonnegative_int, required=True)
    coeffs_cmd.add_argument("-N", "--length", type=_positive_int, required=True)
    coeffs_cmd.add_argument("--format", choices=("json", "plain"), default="json")

    table_cmd = sub.add_parser(
        "table", help="coefficient polynomials in N for all powers up to --kmax"
    )
    table_cmd.add_argument(
        "--kmax",
        type=_nonnegative_int,
        default=5,
        help="largest power to tabulate (values beyond ~12 get unwieldy)",
    )
    table_cmd.add_argument("--format", choices=("plain",), default="plain")

    complexity_cmd = sub.add_parser(
        "complexity", help="operation-count comparison of cascade vs runtime exponentiation"
    )
    complexity_cmd.add_argument(
        "--Ks", type=_comma_separated_ints, default=[2, 4, 7], help="powers, comma-separated"
    )
    complexity_cmd.add_argument(
        "--Ns",
        type=_comma_separated_ints,
        default=[10, 100, 1000],
        help="sequence lengths, comma-separated",
    )
    complexity_cmd.add_argument("--format", choices=("csv", "json"), default="csv")

    selfcheck_cmd = sub.add_parser("selfcheck", help="run randomized consistency checks")
    selfcheck_cmd.add_argument("--seed", type=int, default=0)
    selfcheck_cmd.add_argument("--format", choices=("json",), default="json")

    return parser


def _run_moment(config: RunConfig, float_mode: bool) -> int:
    if float_mode:
        print(
            "warning: --float uses double precision; results are approximate",
            file=sys.stderr,
        )
        cascade: Cascade | FloatCascade = FloatCascade(max(config.powers))
        parse: Callable[[str], object] = float
    else:
        cascade = Cascade(max(config.powers))
        parse = int

    precomputed: dict[int, CoefficientSet] | None = None
    if config.N_override is not None:
        precomputed = {
            power: MomentRequest(power, config.N_override).coefficients()
            for power in dict.fromkeys(config.powers)
        }

    try:
        if config.input_path is not None:
            with open(config.input_path, encoding="utf-8") as stream:
                push_stream(cascade, stream, parse)
        else:
            push_stream(cascade, sys.stdin, parse)
    except SampleParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    n_samples = cascade.samples_seen
    if n_samples == 0:
        print(
            "error: no samples in input; powered sums are undefined for an empty stream",
            file=sys.stderr,
        )
        return EXIT_EMPTY_INPUT
    if config.N_override is not None and n_samples != config.N_override:
        print(
            f"error: expected {config.N_override} samples but the stream held {n_samples}",
            file=sys.stderr,
        )
        return EXIT_USAGE

    results = []
    for power in config.powers:
        coeffs = precomputed[power] if precomputed is not None else None
        value, ops = cascade.moment_with_ops(power, coeffs)
        results.append({"K": power, "S": str(value), "ops": asdict(ops)})

    if config.output_format == "plain":
        for row in results:
            print(f"{row['K']} {row['S']}")
    else:
        print(json.dumps({"N": n_samples, "results": results}, indent=2))
    return EXIT_OK


def _run_coeffs(config: RunConfig, K: int, N: int) -> int:
    coeffs = coefficients_closed(K, N)
    unique = N >= K + 1
    if config.output_format == "plain":
        print(" ".join(str(c) for c in coeffs.coeffs))
        if not unique:
            print(
                "note: N < K+1, so these coefficients are valid but not the unique "
                "solution on the sample grid"
            )
    else:
        print(
            json.dumps(
                {
                    "K": K,
                    "N": N,
                    "coefficients": [str(c) for c in coeffs.coeffs],
                    "unique_on_sample_grid": unique,
                },
                indent=2,
            )
        )
    return EXIT_OK


def render_table(kmax: int) -> str:
    """Plain-text table of coefficient polynomials c_1..c_{K+1} for K = 0..kmax.

    Cells use the canonical polynomial form (descending powers of N,
    explicit signs, no spaces), so they are directly comparable as strings.
    """
    header = ["K"] + [f"c_{k}" for k in range(1, kmax + 2)]
    body = []
    for K in range(kmax + 1):
        cells = [str(K)] + [str(poly) for poly in coefficient_polynomials(K)]
        cells += [""] * (len(header) - len(cells))
        body.append(cells)
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = []
    for row in [header] + body:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _run_complexity(config: RunConfig, Ks: list[int], Ns: list[int]) -> int:
    if any(K < 0 for K in Ks) or any(N < 1 for N in Ns):
        print("error: --Ks must be non-negative and --Ns positive", file=sys.stderr)
        return EXIT_USAGE
    reports = complexity_table(Ks, Ns)
    if config.output_format == "json":
        print(json.dumps([asdict(report) for report in reports], indent=2))
    else:
        write_csv(reports, sys.stdout)
    return EXIT_OK


def _run_selfcheck(seed: int) -> int:
    report = run_selfcheck(seed=seed)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["all_passed"] else EXIT_SELFCHECK_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    config = RunConfig(
        subcommand=args.subcommand,
        input_path=getattr(args, "input", None),
        powers=list(getattr(args, "powers", []) or []),
        N_override=getattr(args, "expect_n", None),
        output_format=getattr(args, "format", "json"),
    )

    if config.subcommand == "moment":
        return _run_moment(config, args.float_mode)
    if config.subcommand == "coeffs":
        return _run_coeffs(config, args.power, args.length)
    if config.subcommand == "table":
        print(render_table(args.kmax))
        return EXIT_OK
    if config.subcommand == "complexity":
        return _run_complexity(config, args.Ks, args.Ns)
    if config.subcommand == "selfcheck":
        return _run_selfcheck(args.seed)
    raise AssertionError(f"unhandled subcommand {config.subcommand!r}")


def entrypoint() -> None:
    sys.exit(main())
