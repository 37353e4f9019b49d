"""Command-line harness: phase sweeps, sensitivity tables, verification suite.

Subcommands:
    sweep        probabilities (and sensitivities) over a phase grid
    sensitivity  numerical and analytic accuracies over a phase grid
    verify       seeded oracle cross-checks; nonzero exit on any failure

Usage examples:
    # exact and closed-form probabilities for 4 photons, linear weights
    qufti sweep --n 4 --weights linear --phi-start 1e-4 --phi-end 1e-2 \
        --steps 50 --methods exact,closed_form --out sweep.csv

    # truncation error of the two-term permanent on a log grid
    qufti sweep --n 5 --weights linear --phi-start 1e-4 --phi-end 1e-2 \
        --steps 9 --log-grid --model I --methods exact,truncated --format json

    # accuracy ratio against the 1/sqrt(2) constant
    qufti sensitivity --n 6 --weights index0 --phi-start 5e-4 --phi-end 5e-3 --steps 10

    # cross-check suite (exit code 1 on any failing check)
    qufti verify --n-max 7 --cases 20 --seed 42

Exit codes: 0 success, 1 check failure, 2 invalid arguments, 3 I/O error.

Weight specs are ``constant``, ``linear`` (1..n), ``index0`` (0..n-1), or
``file:PATH`` where PATH holds one flat JSON array of reals; ``--n`` may be
omitted for file weights and is then inferred from the array length.  Sweep
rows are ordered by phase, then model, then method; the ``truncated`` method
applies to model I only (it truncates the interfering amplitude sum) and is
skipped for model D.  In parallel mode (the default) phase points are spread
over a process pool; ``--serial`` guarantees bitwise-reproducible output.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from dataclasses import dataclass
from functools import partial

import numpy as np

from .errors import QuftiError, SmallPhaseValidityError
from .interferometer import (
    WeightVector,
    build_distinguishable_matrix,
    build_unitary,
    compute_moments,
)
from .permanent import RYSER_LIMIT, permanent_ryser, permanent_truncated, warm_up
from .probability import (
    Model,
    ProbabilityMethod,
    prob_distinguishable_closed,
    prob_distinguishable_exact,
    prob_indistinguishable_closed,
    prob_indistinguishable_exact,
    prob_indistinguishable_truncated,
)
from .sensitivity import sensitivity_analytic, sensitivity_numerical
from .verify import run_verify

SWEEP_HEADER = ("phi", "model", "method", "probability", "sensitivity", "truncation_error")
SENSITIVITY_HEADER = (
    "phi",
    "numerical_indistinguishable",
    "numerical_distinguishable",
    "analytic_indistinguishable",
    "analytic_distinguishable",
    "ratio",
)

MODEL_CODES = {Model.INDISTINGUISHABLE: "I", Model.DISTINGUISHABLE: "D"}
METHOD_ORDER = (
    ProbabilityMethod.EXACT,
    ProbabilityMethod.CLOSED_FORM,
    ProbabilityMethod.TRUNCATED,
)


class UsageError(ValueError):
    """Invalid flag combination or value; mapped to exit code 2."""


@dataclass(frozen=True)
class PhiGrid:
    """Phase grid, linear by default or logarithmic with ``log=True``."""

    start: float
    end: float
    steps: int
    log: bool = False

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise UsageError(f"--steps must be at least 1, got {self.steps}")
        if not self.start <= self.end:
            raise UsageError(
                f"--phi-start ({self.start:g}) must not exceed --phi-end ({self.end:g})"
            )
        if self.log and self.start <= 0.0:
            raise UsageError("--log-grid requires --phi-start > 0")

    def values(self) -> list[float]:
        if self.steps == 1:
            return [float(self.start)]
        space = np.geomspace if self.log else np.linspace
        return [float(x) for x in space(self.start, self.end, self.steps)]


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved parameters of one sweep or sensitivity run."""

    n: int
    weights: WeightVector
    weight_spec: str
    grid: PhiGrid
    models: tuple[Model, ...]
    methods: tuple[ProbabilityMethod, ...]
    output_format: str
    output_path: str | None
    seed: int
    parallel: bool


def resolve_weights(spec: str, n: int | None) -> WeightVector:
    """Turn a --weights value into a WeightVector, cross-checking --n."""
    presets = {
        "constant": WeightVector.constant,
        "linear": WeightVector.linear,
        "index0": WeightVector.index0,
    }
    if spec in presets:
        if n is None:
            raise UsageError(f"--n is required with the '{spec}' weight preset")
        return presets[spec](n)
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, list) or not data or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in data
        ):
            raise UsageError(f"weight file {path!r} must hold one flat JSON array of reals")
        if n is not None and n != len(data):
            raise UsageError(
                f"--n {n} conflicts with the {len(data)} weights read from {path!r}"
            )
        return WeightVector(np.asarray(data, dtype=np.float64))
    raise UsageError(
        f"unknown weight spec {spec!r}; use constant, linear, index0, or file:PATH"
    )


def _parse_models(value: str) -> tuple[Model, ...]:
    if value == "I":
        return (Model.INDISTINGUISHABLE,)
    if value == "D":
        return (Model.DISTINGUISHABLE,)
    return (Model.INDISTINGUISHABLE, Model.DISTINGUISHABLE)


def _parse_methods(value: str) -> tuple[ProbabilityMethod, ...]:
    names = [part.strip() for part in value.split(",") if part.strip()]
    if not names:
        raise UsageError("--methods must name at least one of exact, closed_form, truncated")
    chosen = []
    for name in names:
        try:
            method = ProbabilityMethod(name)
        except ValueError:
            raise UsageError(
                f"unknown method {name!r}; choose from exact, closed_form, truncated"
            ) from None
        if method not in chosen:
            chosen.append(method)
    return tuple(sorted(chosen, key=METHOD_ORDER.index))


def _config_from_args(args: argparse.Namespace, methods: tuple[ProbabilityMethod, ...]) -> RunConfig:
    weights = resolve_weights(args.weights, args.n)
    n = weights.n
    needs_permanent = any(
        m in (ProbabilityMethod.EXACT, ProbabilityMethod.TRUNCATED) for m in methods
    )
    if needs_permanent and n > RYSER_LIMIT:
        raise UsageError(
            f"--n {n} exceeds the n<={RYSER_LIMIT} limit of the exact permanent engine"
        )
    if args.seed < 0:
        raise UsageError(f"--seed must be non-negative, got {args.seed}")
    return RunConfig(
        n=n,
        weights=weights,
        weight_spec=args.weights,
        grid=PhiGrid(args.phi_start, args.phi_end, args.steps, args.log_grid),
        models=_parse_models(getattr(args, "model", "both")),
        methods=methods,
        output_format=args.format,
        output_path=args.out,
        seed=args.seed,
        parallel=not args.serial,
    )


def _sweep_point(config: RunConfig, phi: float) -> list[dict]:
    """All requested rows at one phase point."""
    weights = config.weights
    moments = compute_moments(weights)
    need_unitary = any(
        m in (ProbabilityMethod.EXACT, ProbabilityMethod.TRUNCATED)
        for m in config.methods
    )
    u = build_unitary(weights, phi) if need_unitary else None
    rows = []
    for model in config.models:
        for method in config.methods:
            if method is ProbabilityMethod.TRUNCATED and model is Model.DISTINGUISHABLE:
                continue
            probability = sensitivity = truncation_error = None
            if method is ProbabilityMethod.EXACT:
                if model is Model.INDISTINGUISHABLE:
                    result = prob_indistinguishable_exact(u)
                else:
                    result = prob_distinguishable_exact(build_distinguishable_matrix(u))
                probability = result.value
                if phi != 0.0 and not result.degenerate:
                    sens = sensitivity_numerical(model, weights, phi)
                    sensitivity = None if sens.divergent else sens.value
            elif method is ProbabilityMethod.CLOSED_FORM:
                closed = (
                    prob_indistinguishable_closed
                    if model is Model.INDISTINGUISHABLE
                    else prob_distinguishable_closed
                )
                try:
                    probability = closed(moments, config.n, phi).value
                except SmallPhaseValidityError:
                    probability = None  # out of the small-phase regime at this phi
                if not moments.is_degenerate:
                    sensitivity = sensitivity_analytic(model, moments, config.n).value
            else:
                truncated = permanent_truncated(u, moments)
                probability = prob_indistinguishable_truncated(u, moments).value
                truncation_error = abs(permanent_ryser(u.matrix) - truncated)
            rows.append(
                {
                    "phi": phi,
                    "model": MODEL_CODES[model],
                    "method": method.value,
                    "probability": probability,
                    "sensitivity": sensitivity,
                    "truncation_error": truncation_error,
                }
            )
    return rows


def _sensitivity_point(config: RunConfig, phi: float) -> list[dict]:
    """One wide row of numerical/analytic accuracies at one phase point."""
    moments = compute_moments(config.weights)
    row = dict.fromkeys(SENSITIVITY_HEADER)
    row["phi"] = phi
    numeric = {}
    for model in (Model.INDISTINGUISHABLE, Model.DISTINGUISHABLE):
        if phi != 0.0:
            result = sensitivity_numerical(model, config.weights, phi)
            if not result.divergent:
                numeric[model] = result.value
        if not moments.is_degenerate:
            key = f"analytic_{model.value}"
            row[key] = sensitivity_analytic(model, moments, config.n).value
    row["numerical_indistinguishable"] = numeric.get(Model.INDISTINGUISHABLE)
    row["numerical_distinguishable"] = numeric.get(Model.DISTINGUISHABLE)
    if len(numeric) == 2:
        row["ratio"] = numeric[Model.INDISTINGUISHABLE] / numeric[Model.DISTINGUISHABLE]
    return [row]


def _collect_rows(config: RunConfig, point_fn) -> list[dict]:
    phis = config.grid.values()
    worker = partial(point_fn, config)
    if config.parallel and len(phis) > 1:
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            ctx = None
        if ctx is not None:
            warm_up()  # compile once; forked workers inherit the JIT state
            processes = min(len(phis), ctx.cpu_count() or 1)
            with ctx.Pool(processes=processes) as pool:
                groups = pool.map(worker, phis)
            return [row for group in groups for row in group]
    return [row for phi in phis for row in worker(phi)]


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _write_rows(fh, header: tuple[str, ...], rows: list[dict], fmt: str) -> None:
    if fmt == "csv":
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_format_cell(row[key]) for key in header) + "\n")
    else:
        json.dump([{key: row[key] for key in header} for row in rows], fh, indent=2)
        fh.write("\n")


def _emit(config: RunConfig, header: tuple[str, ...], rows: list[dict]) -> None:
    if config.output_path in (None, "-"):
        _write_rows(sys.stdout, header, rows, config.output_format)
    else:
        with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
            _write_rows(fh, header, rows, config.output_format)


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _config_from_args(args, _parse_methods(args.methods))
    rows = _collect_rows(config, _sweep_point)
    _emit(config, SWEEP_HEADER, rows)
    return 0


def _cmd_sensitivity(args: argparse.Namespace) -> int:
    config = _config_from_args(args, (ProbabilityMethod.EXACT,))
    rows = _collect_rows(config, _sensitivity_point)
    _emit(config, SENSITIVITY_HEADER, rows)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_verify(
        n_max=args.n_max, cases=args.cases, seed=args.seed, corrupt=args.debug_corrupt
    )
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(
            f"[{status}] {result.name:<36} measured={result.measured:.3e}  "
            f"tolerance={result.tolerance:.3e}  ({result.detail})"
        )
    passed = sum(result.passed for result in results)
    print(f"verification: {passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qufti",
        description="Coincidence probabilities and phase accuracy of a "
        "Fourier-sandwich interferometer fed with single photons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="number of modes/photons")
    common.add_argument(
        "--weights",
        default="linear",
        help="constant | linear | index0 | file:PATH (flat JSON array)",
    )
    common.add_argument("--phi-start", type=float, default=1e-4)
    common.add_argument("--phi-end", type=float, default=1e-2)
    common.add_argument("--steps", type=int, default=25)
    common.add_argument(
        "--log-grid", action="store_true", help="geometric instead of linear phase grid"
    )
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument(
        "--serial",
        action="store_true",
        help="compute phase points serially (bitwise-reproducible output)",
    )

    sweep = sub.add_parser(
        "sweep", parents=[common], help="probabilities over a phase grid"
    )
    sweep.add_argument("--model", choices=("I", "D", "both"), default="both")
    sweep.add_argument(
        "--methods",
        default="exact,closed_form",
        help="comma list from exact, closed_form, truncated",
    )
    sweep.set_defaults(func=_cmd_sweep)

    sens = sub.add_parser(
        "sensitivity",
        parents=[common],
        help="numerical and analytic phase accuracy over a grid",
    )
    sens.set_defaults(func=_cmd_sensitivity)

    verify = sub.add_parser("verify", help="run the seeded oracle cross-checks")
    verify.add_argument("--n-max", type=int, default=7, help="largest mode count (<= 8)")
    verify.add_argument("--cases", type=int, default=20, help="random draws per check")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument(
        "--debug-corrupt",
        action="store_true",
        help="negative control: corrupt one matrix element so unitarity fails",
    )
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse printed its own message
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (QuftiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
