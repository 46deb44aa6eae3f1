"""Command-line harness: parameter sweeps over the chain models, braid-word
compilation, readout curves, and the invariant self-test.

Configs are JSON objects with keys "model", "parameters", and optionally
"sweep" (a list of one or two axes, each {"parameter", "start", "stop",
"points"}) and "threads".  Sweep points are evaluated independently on a
thread pool and emitted in axis order, so the output bytes do not depend on
the thread count.  Exit codes: 0 success, 1 self-test failure, 2 config or
usage error, 3 numerical failure during evaluation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__, bdg, braiding, hybrid

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_ERROR = 3

MAX_SWEEP_AXES = 2


class ConfigError(ValueError):
    """Malformed run configuration."""


class EvaluationError(RuntimeError):
    """A sweep point failed to evaluate."""


@dataclass(frozen=True)
class SweepAxis:
    parameter: str
    start: float
    stop: float
    points: int

    def __post_init__(self):
        if self.points < 1:
            raise ConfigError(f"sweep axis {self.parameter!r}: points must be >= 1")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


@dataclass
class RunConfig:
    model: str
    parameters: dict
    sweep: tuple[SweepAxis, ...] = ()
    threads: int | None = None

    @staticmethod
    def from_dict(raw: dict) -> "RunConfig":
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(raw) - {"model", "parameters", "sweep", "threads"}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "model" not in raw:
            raise ConfigError("config is missing 'model'")
        params = raw.get("parameters", {})
        if not isinstance(params, dict):
            raise ConfigError("'parameters' must be an object")
        axes = []
        for ax in raw.get("sweep", []):
            extra = set(ax) - {"parameter", "start", "stop", "points"}
            if extra:
                raise ConfigError(f"unknown sweep keys: {sorted(extra)}")
            try:
                axes.append(SweepAxis(str(ax["parameter"]), float(ax["start"]),
                                      float(ax["stop"]), int(ax["points"])))
            except KeyError as exc:
                raise ConfigError(f"sweep axis is missing {exc}") from exc
        if len(axes) > MAX_SWEEP_AXES:
            raise ConfigError(f"at most {MAX_SWEEP_AXES} sweep axes are supported")
        if len({ax.parameter for ax in axes}) != len(axes):
            raise ConfigError("sweep axes must use distinct parameters")
        threads = raw.get("threads")
        return RunConfig(str(raw["model"]), dict(params), tuple(axes),
                         None if threads is None else int(threads))


def config_hash(raw: dict) -> str:
    """sha256 over the physics-relevant part of the config (model, parameters,
    sweep); the thread count does not enter, so reruns at different
    parallelism hash identically."""
    core = {
        "model": raw.get("model"),
        "parameters": raw.get("parameters", {}),
        "sweep": raw.get("sweep", []),
    }
    blob = json.dumps(core, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[tuple]
    provenance: dict = field(default_factory=dict)


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    text = str(value)
    if any(c in text for c in ',"\n'):
        text = '"' + text.replace('"', '""') + '"'
    return text


def _jsonable(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def emit_table(table: ResultTable, fmt: str) -> str:
    if fmt == "csv":
        lines = [f"# {k}={table.provenance[k]}" for k in sorted(table.provenance)]
        lines.append(",".join(table.columns))
        lines.extend(",".join(_fmt(v) for v in row) for row in table.rows)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "provenance": table.provenance,
            "columns": table.columns,
            "rows": [[_jsonable(v) for v in row] for row in table.rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ConfigError(f"unknown output format {fmt!r}")


# ---------------------------------------------------------------------------
# Model construction

_MODEL_CLASSES = {
    "kitaev": bdg.KitaevChainParams,
    "nanowire": bdg.NanowireParams,
}
_INT_FIELDS = {"n_sites", "points"}


def _build_params(model: str, parameters: dict):
    cls = _MODEL_CLASSES.get(model)
    if cls is None:
        raise ConfigError(f"unknown chain model {model!r}; "
                          f"expected one of {sorted(_MODEL_CLASSES)}")
    kwargs = {}
    for key, value in parameters.items():
        if key in _INT_FIELDS:
            value = int(round(value))
        kwargs[key] = value
    try:
        return cls(**kwargs)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for model {model!r}: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _grid(config: RunConfig):
    """Cartesian product of the sweep axes as a list of override dicts, in
    row-major axis order (first axis slowest)."""
    if not config.sweep:
        return [{}]
    value_lists = [
        [(ax.parameter, float(v)) for v in ax.values()] for ax in config.sweep
    ]
    grid = [{}]
    for values in value_lists:
        grid = [dict(g, **{k: v}) for g in grid for k, v in values]
    return grid


# ---------------------------------------------------------------------------
# Observables (one evaluator per subcommand; each returns rows for one point)


def _eval_spectrum(config: RunConfig, overrides: dict) -> list[tuple]:
    params = _build_params(config.model, {**config.parameters, **overrides})
    spectrum = bdg.diagonalize(bdg.build_bdg(params))
    coords = tuple(overrides[ax.parameter] for ax in config.sweep)
    return [coords + (level, float(e))
            for level, e in enumerate(spectrum.eigenvalues)]


def _eval_phase_diagram(config: RunConfig, overrides: dict) -> list[tuple]:
    params = _build_params(config.model, {**config.parameters, **overrides})
    cells = []
    for method in ("analytic", "numeric"):
        try:
            cells.append(bdg.topological_charge(params, method))
        except bdg.CriticalPointError:
            cells.append("critical")
    coords = tuple(overrides[ax.parameter] for ax in config.sweep)
    return [coords + tuple(cells)]


def _eval_zero_modes(config: RunConfig, overrides: dict) -> list[tuple]:
    merged = {**config.parameters, **overrides}
    threshold = float(merged.pop("threshold", 1e-6))
    params = _build_params(config.model, merged)
    report = bdg.find_zero_modes(bdg.diagonalize(bdg.build_bdg(params)),
                                 threshold=threshold)
    if report.count:
        min_energy = float(np.min(report.energies))
        max_residual = float(np.max(report.majorana_residuals))
    else:
        min_energy = float("nan")
        max_residual = float("nan")
    coords = tuple(overrides[ax.parameter] for ax in config.sweep)
    return [coords + (report.count, min_energy, max_residual,
                      float(report.decay_length_fit))]


def _eval_readout(config: RunConfig, overrides: dict) -> list[tuple]:
    merged = {**config.parameters, **overrides}
    allowed = {"omega0", "g_jc", "depsilon", "delta"}
    unknown = set(merged) - allowed
    if unknown:
        raise ConfigError(f"unknown readout parameters: {sorted(unknown)}")
    missing = allowed - set(merged)
    if missing:
        raise ConfigError(f"missing readout parameters: {sorted(missing)}")
    up = hybrid.dispersive_shift(hybrid.ReadoutParams(sigma_z=1, **merged))
    down = hybrid.dispersive_shift(hybrid.ReadoutParams(sigma_z=-1, **merged))
    coords = tuple(overrides[ax.parameter] for ax in config.sweep)
    return [coords + (up, down, up - down)]


_OBSERVABLES = {
    "spectrum": (_eval_spectrum, ["level", "energy"]),
    "phase-diagram": (_eval_phase_diagram, ["charge_analytic", "charge_numeric"]),
    "zero-modes": (_eval_zero_modes,
                   ["count", "min_abs_energy", "max_majorana_residual",
                    "decay_length"]),
    "readout": (_eval_readout,
                ["omega_res_up", "omega_res_down", "contrast"]),
}


def resolve_threads(cli_threads: int | None, config_threads: int | None) -> int:
    env = os.environ.get("MAJLAB_THREADS")
    if env is not None:
        threads = int(env)
    elif cli_threads is not None:
        threads = cli_threads
    elif config_threads is not None:
        threads = config_threads
    else:
        threads = min(4, os.cpu_count() or 1)
    if threads < 1:
        raise ConfigError("thread count must be >= 1")
    return threads


def run_sweep(config: RunConfig, observable: str,
              cli_threads: int | None = None) -> ResultTable:
    try:
        evaluate, value_columns = _OBSERVABLES[observable]
    except KeyError:
        raise ConfigError(f"unknown observable {observable!r}")
    grid = _grid(config)
    threads = resolve_threads(cli_threads, config.threads)

    def worker(overrides):
        return evaluate(config, overrides)

    if threads == 1 or len(grid) == 1:
        chunks = [worker(g) for g in grid]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # map() preserves submission order: rows come out in grid order
            chunks = list(pool.map(worker, grid))
    rows = [row for chunk in chunks for row in chunk]
    columns = [ax.parameter for ax in config.sweep] + value_columns
    raw = {"model": config.model, "parameters": config.parameters,
           "sweep": [vars(ax) for ax in config.sweep]}
    provenance = {
        "config_hash": config_hash(raw),
        "model": config.model,
        "observable": observable,
        "tool_version": __version__,
    }
    return ResultTable(columns, rows, provenance)


# ---------------------------------------------------------------------------
# Braid compilation (single-shot, JSON output)


def run_braid(config: RunConfig) -> dict:
    params = dict(config.parameters)
    try:
        n_strands = int(params.pop("n_strands"))
        word_text = str(params.pop("word"))
    except KeyError as exc:
        raise ConfigError(f"braid config is missing parameter {exc}") from exc
    if params:
        raise ConfigError(f"unknown braid parameters: {sorted(params)}")
    try:
        word = braiding.parse_braid_word(word_text, n_strands)
    except (braiding.BraidParseError, braiding.StrandRangeError) as exc:
        raise ConfigError(str(exc)) from exc
    action = braiding.word_action(word)
    doc = {
        "word": word_text,
        "n_strands": n_strands,
        "permutation": [[t, s] for t, s in action.images],
        "tool_version": __version__,
    }
    if n_strands <= 4:
        gate = braiding.logical_gate_from_word(word)
        doc["gate"] = [[[z.real, z.imag] for z in row] for row in gate.matrix]
    return doc


# ---------------------------------------------------------------------------
# Entry point


def _load_config(path: str) -> RunConfig:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path!r} is not valid JSON: {exc}") from exc
    return RunConfig.from_dict(raw)


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majlab",
        description="Majorana chain sweeps, braid compilation and readout curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in (*_OBSERVABLES, "braid"):
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", default="json" if name == "braid" else "csv",
                       choices=["csv", "json"])
        p.add_argument("--threads", type=int, default=None,
                       help="worker threads (MAJLAB_THREADS overrides)")
    sub.add_parser("selftest")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        from . import selftest

        results = selftest.run_selftest(verbose=True)
        failed = [r for r in results if not r.passed]
        print(f"{len(results) - len(failed)}/{len(results)} invariants passed")
        return EXIT_OK if not failed else EXIT_SELFTEST_FAILED
    try:
        config = _load_config(args.config)
        if args.command == "braid":
            if args.format != "json":
                raise ConfigError("braid output is JSON only")
            text = json.dumps(run_braid(config), indent=2) + "\n"
        else:
            table = run_sweep(config, args.command, cli_threads=args.threads)
            text = emit_table(table, args.format)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (bdg.ContractViolationError, bdg.BoundaryError,
            braiding.SectorLeakageError, np.linalg.LinAlgError,
            ValueError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC_ERROR
    _write_output(text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
