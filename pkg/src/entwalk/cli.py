"""Config-driven command line: run a walk described by an INI file and write
its distribution in a machine- or plot-friendly format.

Usage: ``entwalk run <config> [--override key=value ...] [--quiet]``

The config file has an ``[experiment]`` section (mode, presets, steps,
output) and an optional ``[classical]`` section (binomial / correlated-pair
parameters).  Numbered sections ``[experiment.1]``, ``[classical.1]``, ...
define batch sub-configs layered over the base sections; each sub-config
writes its own output file with the index inserted before the extension.

Exit codes: 0 success, 2 config parse error, 3 validation error, 4 I/O error.

Output formats:

csv
    Header ``position,probability`` (1D) or ``position,position_y,probability``
    (2D), rows sorted ascending, probabilities to 12 significant digits.
json
    Object with the resolved config echo, run metadata and the sorted
    (position, probability) pairs at full float precision.
gnuplot
    Whitespace-separated columns over the full support window, including
    zero-probability grid points, ready for ``plot``/``splot``.

In csv and gnuplot output, probabilities below 1e-15 print as 0; json keeps
every value exact.
"""

from __future__ import annotations

import argparse
import configparser
import io
import json
import sys
from dataclasses import dataclass, field

from .classical import (
    DEFAULT_MOVES,
    OUTCOMES,
    JointCoinDistribution,
    binomial_walk_distribution,
    correlated_walk_distribution,
)
from .coins import build_coin_operator, build_initial_coin, entanglement_entropy
from .core import Distribution, state_norm
from .engine import WalkConfig, evolve, position_distribution
from .shifts import SHIFT_PRESETS, build_shift

__all__ = [
    "EXIT_IO",
    "EXIT_OK",
    "EXIT_PARSE",
    "EXIT_VALIDATION",
    "ClassicalParams",
    "ExperimentConfig",
    "console_main",
    "emit_distribution",
    "run",
]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

# Human-readable formats print probabilities below this as 0; json never does.
PRINT_FLOOR = 1e-15

MODES = ("quantum", "classical", "compare", "entropy")
OUTPUT_FORMATS = ("csv", "json", "gnuplot")

_EXPERIMENT_KEYS = {
    "mode",
    "coin",
    "coin_amplitudes",
    "coin_operator",
    "coin_matrix",
    "shift",
    "shift_table",
    "steps",
    "initial_position",
    "output_format",
    "output",
    "seed",
    "positions",
    "cut",
}
_CLASSICAL_KEYS = {"model", "n", "p", "rho", "moves"}


class ParseError(Exception):
    """Malformed config file or field value; maps to EXIT_PARSE."""


class ValidationError(Exception):
    """Well-formed config that violates a contract; maps to EXIT_VALIDATION."""


@dataclass(frozen=True)
class ClassicalParams:
    """Parameters of the classical reference walk."""

    model: str = "binomial"
    n: int = 100
    p: float = 0.5
    rho: float = 1.0
    moves: dict = field(default_factory=lambda: dict(DEFAULT_MOVES))


@dataclass(frozen=True)
class ExperimentConfig:
    """Resolved experiment description, independent of config syntax."""

    mode: str
    coin: str = "phi_plus"
    coin_amplitudes: tuple | None = None
    coin_operator: str = "hadamard_n"
    coin_matrix: tuple | None = None
    shift: str = "s_ec"
    shift_table: tuple | None = None
    steps: int = 100
    initial_position: tuple | None = None
    classical: ClassicalParams = field(default_factory=ClassicalParams)
    output_format: str = "csv"
    output_path: str | None = None
    seed: int | None = None
    positions: tuple | None = None
    cut: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValidationError(
                f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}"
            )
        if self.steps < 0:
            raise ValidationError(f"steps must be nonnegative, got {self.steps}")


def _format_prob(p: float) -> str:
    return "0" if p < PRINT_FLOOR else f"{p:.12g}"


def _label_row(label) -> tuple[int, ...]:
    return label if isinstance(label, tuple) else (label,)


def _emit_csv(dist: Distribution, out: io.TextIOBase) -> None:
    pairs = dist.items_sorted()
    width = len(_label_row(pairs[0][0])) if pairs else 1
    header = "position,probability" if width == 1 else "position,position_y,probability"
    out.write(header + "\n")
    for label, p in pairs:
        cells = [str(x) for x in _label_row(label)] + [_format_prob(p)]
        out.write(",".join(cells) + "\n")


def _emit_json(dist: Distribution, out: io.TextIOBase, config_echo: dict, metadata: dict) -> None:
    pairs = [[list(_label_row(label)) if isinstance(label, tuple) else label, p]
             for label, p in dist.items_sorted()]
    doc = {"config": config_echo, "metadata": metadata, "distribution": pairs}
    json.dump(doc, out, indent=2, sort_keys=True)
    out.write("\n")


def _emit_gnuplot(dist: Distribution, out: io.TextIOBase) -> None:
    pairs = dist.items_sorted()
    if not pairs:
        return
    width = len(_label_row(pairs[0][0]))
    if width == 1:
        out.write("# position probability\n")
        support = [_label_row(label)[0] for label, _ in pairs]
        for x in range(min(support), max(support) + 1):
            out.write(f"{x} {_format_prob(dist[x])}\n")
    else:
        out.write("# position_x position_y probability\n")
        xs = [label[0] for label, _ in pairs]
        ys = [label[1] for label, _ in pairs]
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                out.write(f"{x} {y} {_format_prob(dist[(x, y)])}\n")
            out.write("\n")


def emit_distribution(
    dist: Distribution,
    output_format: str,
    path: str | None,
    config_echo: dict | None = None,
    metadata: dict | None = None,
) -> None:
    """Write one distribution to ``path`` (or stdout when ``path`` is None).

    See the module docstring for the three formats.  Raises OSError on an
    unwritable path and ValidationError on an unknown format.
    """
    if output_format not in OUTPUT_FORMATS:
        raise ValidationError(f"unknown output format {output_format!r}")

    def write(out: io.TextIOBase) -> None:
        if output_format == "csv":
            _emit_csv(dist, out)
        elif output_format == "json":
            _emit_json(dist, out, config_echo or {}, metadata or {})
        else:
            _emit_gnuplot(dist, out)

    if path is None:
        write(sys.stdout)
    else:
        with open(path, "w", newline="\n") as out:
            write(out)


def _emit_table(
    header_cells: list[str],
    rows: list[list],
    output_format: str,
    path: str | None,
    config_echo: dict,
    metadata: dict,
    json_key: str,
    n_labels: int = 1,
) -> None:
    # Shared writer for the compare and entropy tables: the first n_labels
    # columns are integer labels, the rest are probabilities/real values.
    def write(out: io.TextIOBase) -> None:
        if output_format == "csv":
            out.write(",".join(header_cells) + "\n")
            for row in rows:
                cells = [str(x) for x in row[:n_labels]]
                cells += [_format_prob(v) for v in row[n_labels:]]
                out.write(",".join(cells) + "\n")
        elif output_format == "json":
            doc = {"config": config_echo, "metadata": metadata,
                   json_key: [list(row) for row in rows]}
            json.dump(doc, out, indent=2, sort_keys=True)
            out.write("\n")
        else:
            out.write("# " + " ".join(header_cells) + "\n")
            for row in rows:
                cells = [str(x) for x in row[:n_labels]]
                cells += [_format_prob(v) for v in row[n_labels:]]
                out.write(" ".join(cells) + "\n")

    if path is None:
        write(sys.stdout)
    else:
        with open(path, "w", newline="\n") as out:
            write(out)


def _parse_complex_pairs(text: str, where: str) -> tuple[complex, ...]:
    # "(re, im) (re, im) ..." -> complex tuple.
    toks = [t for t in text.replace("(", " ").split(")") if t.strip()]
    values = []
    for tok in toks:
        parts = tok.replace(",", " ").split()
        if len(parts) != 2:
            raise ParseError(f"{where}: expected (re, im) pairs, got {tok.strip()!r}")
        try:
            values.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise ParseError(f"{where}: non-numeric entry {tok.strip()!r}") from None
    if not values:
        raise ParseError(f"{where}: empty value")
    return tuple(values)


def _parse_matrix(text: str, where: str) -> tuple:
    rows = [r for r in text.split(";") if r.strip()]
    return tuple(_parse_complex_pairs(r, where) for r in rows)


def _parse_shift_table(text: str, where: str):
    if "(" in text:
        toks = [t for t in text.replace("(", " ").split(")") if t.strip()]
        rows = []
        for tok in toks:
            parts = tok.replace(",", " ").split()
            try:
                rows.append(tuple(int(x) for x in parts))
            except ValueError:
                raise ParseError(f"{where}: non-integer displacement {tok.strip()!r}") from None
        return tuple(rows)
    try:
        return tuple(int(x) for x in text.split())
    except ValueError:
        raise ParseError(f"{where}: expected integers, got {text!r}") from None


def _parse_moves(text: str, where: str) -> dict:
    moves = {}
    for tok in text.replace(",", " ").split():
        if ":" not in tok:
            raise ParseError(f"{where}: expected outcome:displacement, got {tok!r}")
        key, _, val = tok.partition(":")
        if key not in OUTCOMES:
            raise ParseError(f"{where}: unknown outcome {key!r}, expected one of {OUTCOMES}")
        try:
            moves[key] = int(val)
        except ValueError:
            raise ParseError(f"{where}: non-integer displacement {val!r}") from None
    return moves


def _parse_int_list(text: str, where: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"{where}: expected integers, got {text!r}") from None


def _get_typed(section: dict, key: str, kind, where: str):
    raw = section[key]
    try:
        return kind(raw)
    except ValueError:
        raise ParseError(f"{where}.{key}: cannot parse {raw!r} as {kind.__name__}") from None


def _build_classical_params(section: dict) -> ClassicalParams:
    unknown = set(section) - _CLASSICAL_KEYS
    if unknown:
        raise ParseError(f"classical: unknown key(s) {sorted(unknown)}")
    kwargs = {}
    if "model" in section:
        kwargs["model"] = section["model"].strip()
    elif "rho" in section:
        kwargs["model"] = "correlated"
    if "n" in section:
        kwargs["n"] = _get_typed(section, "n", int, "classical")
    if "p" in section:
        kwargs["p"] = _get_typed(section, "p", float, "classical")
    if "rho" in section:
        kwargs["rho"] = _get_typed(section, "rho", float, "classical")
    if "moves" in section:
        kwargs["moves"] = _parse_moves(section["moves"], "classical.moves")
    params = ClassicalParams(**kwargs)
    if params.model not in ("binomial", "correlated"):
        raise ValidationError(
            f"classical.model must be 'binomial' or 'correlated', got {params.model!r}"
        )
    if params.n < 0:
        raise ValidationError(f"classical.n must be nonnegative, got {params.n}")
    return params


def _build_experiment(exp: dict, cls: dict) -> ExperimentConfig:
    unknown = set(exp) - _EXPERIMENT_KEYS
    if unknown:
        raise ParseError(f"experiment: unknown key(s) {sorted(unknown)}")
    if "mode" not in exp:
        raise ValidationError("experiment.mode is required")
    kwargs = {"mode": exp["mode"].strip(), "classical": _build_classical_params(cls)}
    for key in ("coin", "coin_operator", "shift", "output_format"):
        if key in exp:
            kwargs[key] = exp[key].strip()
    if "coin_amplitudes" in exp:
        kwargs["coin_amplitudes"] = _parse_complex_pairs(
            exp["coin_amplitudes"], "experiment.coin_amplitudes"
        )
    if "coin_matrix" in exp:
        kwargs["coin_matrix"] = _parse_matrix(exp["coin_matrix"], "experiment.coin_matrix")
    if "shift_table" in exp:
        kwargs["shift_table"] = _parse_shift_table(exp["shift_table"], "experiment.shift_table")
    if "steps" in exp:
        kwargs["steps"] = _get_typed(exp, "steps", int, "experiment")
    if "initial_position" in exp:
        kwargs["initial_position"] = _parse_int_list(
            exp["initial_position"], "experiment.initial_position"
        )
    if "output" in exp:
        kwargs["output_path"] = exp["output"].strip()
    if "seed" in exp:
        kwargs["seed"] = _get_typed(exp, "seed", int, "experiment")
    if "positions" in exp:
        kwargs["positions"] = _parse_int_list(exp["positions"], "experiment.positions")
    if "cut" in exp:
        kwargs["cut"] = _get_typed(exp, "cut", int, "experiment")
    return ExperimentConfig(**kwargs)


def _config_echo(exp: dict, cls: dict) -> dict:
    echo = {"experiment": dict(sorted(exp.items()))}
    if cls:
        echo["classical"] = dict(sorted(cls.items()))
    return echo


def _walk_config(cfg: ExperimentConfig) -> WalkConfig:
    try:
        coin_state = build_initial_coin(cfg.coin, cfg.coin_amplitudes)
        shift = build_shift(cfg.shift, cfg.shift_table)
        coin_op = build_coin_operator(cfg.coin_operator, coin_state.qubits, cfg.coin_matrix)
        return WalkConfig(
            coin_state=coin_state,
            coin_op=coin_op,
            shift=shift,
            steps=cfg.steps,
            initial_position=cfg.initial_position,
        )
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _classical_distribution(params: ClassicalParams) -> Distribution:
    try:
        if params.model == "binomial":
            return binomial_walk_distribution(params.n, params.p)
        pair = JointCoinDistribution.from_correlation(params.rho)
        return correlated_walk_distribution(params.n, pair, params.moves)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _base_metadata(cfg: ExperimentConfig) -> dict:
    meta = {"mode": cfg.mode}
    if cfg.seed is not None:
        meta["seed"] = cfg.seed
    return meta


def _run_quantum(cfg: ExperimentConfig, echo: dict, path: str | None) -> str:
    state = evolve(_walk_config(cfg))
    dist = position_distribution(state)
    meta = _base_metadata(cfg) | {"steps": cfg.steps, "norm": state_norm(state)}
    emit_distribution(dist, cfg.output_format, path, echo, meta)
    return f"quantum walk: {cfg.steps} step(s), norm {state_norm(state):.12f}"


def _run_classical(cfg: ExperimentConfig, echo: dict, path: str | None) -> str:
    dist = _classical_distribution(cfg.classical)
    meta = _base_metadata(cfg) | {
        "steps": cfg.classical.n,
        "norm": float(sum(p for _, p in dist.items_sorted())),
        "model": cfg.classical.model,
    }
    emit_distribution(dist, cfg.output_format, path, echo, meta)
    return f"classical walk: {cfg.classical.n} step(s), model {cfg.classical.model}"


def _run_compare(cfg: ExperimentConfig, echo: dict, path: str | None) -> str:
    state = evolve(_walk_config(cfg))
    qdist = position_distribution(state)
    if any(isinstance(label, tuple) for label in qdist.support()):
        raise ValidationError("compare mode requires a 1D walk")
    cdist = _classical_distribution(cfg.classical)
    if cfg.positions is not None:
        labels = sorted(cfg.positions)
    else:
        labels = sorted(set(qdist.support()) | set(cdist.support()))
    rows = [[k, qdist[k], cdist[k]] for k in labels]
    meta = _base_metadata(cfg) | {
        "steps": cfg.steps,
        "classical_steps": cfg.classical.n,
        "norm": state_norm(state),
        "model": cfg.classical.model,
    }
    _emit_table(
        ["position", "quantum", "classical"], rows, cfg.output_format, path, echo, meta, "comparison"
    )
    return f"compare: {len(rows)} position(s), quantum {cfg.steps} vs classical {cfg.classical.n} step(s)"


def _run_entropy(cfg: ExperimentConfig, echo: dict, path: str | None) -> str:
    try:
        coin_state = build_initial_coin(cfg.coin, cfg.coin_amplitudes)
        if coin_state.qubits < 2:
            raise ValueError("entropy mode requires a coin of at least two qubits")
        cuts = [cfg.cut] if cfg.cut is not None else list(range(1, coin_state.qubits))
        rows = [[cut, entanglement_entropy(coin_state, cut)] for cut in cuts]
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    meta = _base_metadata(cfg) | {"coin": cfg.coin, "qubits": coin_state.qubits}
    _emit_table(["cut", "entropy_bits"], rows, cfg.output_format, path, echo, meta, "entropies")
    return f"entropy: coin {cfg.coin}, {len(rows)} cut(s)"


_MODE_RUNNERS = {
    "quantum": _run_quantum,
    "classical": _run_classical,
    "compare": _run_compare,
    "entropy": _run_entropy,
}


def _suffixed_path(path: str | None, tag: str | None) -> str | None:
    if path is None or tag is None:
        return path
    stem, dot, ext = path.rpartition(".")
    if dot and "/" not in ext:
        return f"{stem}.{tag}.{ext}"
    return f"{path}.{tag}"


def _read_sections(path: str) -> configparser.ConfigParser:
    with open(path) as fh:
        text = fh.read()
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=path)
    except configparser.Error as exc:
        raise ParseError(str(exc)) from None
    return parser


def _apply_overrides(parser: configparser.ConfigParser, overrides) -> None:
    for item in overrides:
        key, eq, value = item.partition("=")
        if not eq or not key.strip():
            raise ParseError(f"override must look like key=value, got {item!r}")
        key = key.strip()
        section, dot, name = key.rpartition(".")
        if not dot:
            section = "experiment"
            name = key
        if not parser.has_section(section):
            parser.add_section(section)
        parser.set(section, name, value.strip())


def _assemble_jobs(parser: configparser.ConfigParser):
    sections = set(parser.sections())
    known = {"experiment", "classical"}
    tags = set()
    for name in sections:
        base, dot, tag = name.partition(".")
        if base not in known:
            raise ParseError(f"unknown section [{name}]")
        if dot:
            if not tag.isdigit():
                raise ParseError(f"batch section [{name}] must end in an integer index")
            tags.add(tag)
    if "experiment" not in sections:
        raise ParseError("missing required section [experiment]")

    base_exp = dict(parser["experiment"])
    base_cls = dict(parser["classical"]) if parser.has_section("classical") else {}
    if not tags:
        cfg = _build_experiment(base_exp, base_cls)
        return [(cfg, _config_echo(base_exp, base_cls), None)]
    jobs = []
    for tag in sorted(tags, key=int):
        exp = dict(base_exp)
        exp.update(dict(parser[f"experiment.{tag}"]) if parser.has_section(f"experiment.{tag}") else {})
        cls = dict(base_cls)
        cls.update(dict(parser[f"classical.{tag}"]) if parser.has_section(f"classical.{tag}") else {})
        jobs.append((_build_experiment(exp, cls), _config_echo(exp, cls), tag))
    return jobs


def run(config_path: str, overrides=(), quiet: bool = False) -> int:
    """Execute the experiment(s) described by a config file.

    Returns the process exit code instead of raising: 0 on success, 2 on a
    parse error, 3 on a validation error, 4 on an I/O error.  Diagnostics go
    to stderr; per-run summaries also go to stderr unless ``quiet``.
    """
    try:
        parser = _read_sections(config_path)
        _apply_overrides(parser, overrides)
        jobs = _assemble_jobs(parser)
        for cfg, echo, tag in jobs:
            path = _suffixed_path(cfg.output_path, tag)
            summary = _MODE_RUNNERS[cfg.mode](cfg, echo, path)
            if not quiet:
                where = path if path is not None else "stdout"
                print(f"{summary} -> {where}", file=sys.stderr)
    except ParseError as exc:
        print(f"error: config parse: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, ValueError) as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: i/o: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def console_main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="entwalk",
        description="Quantum walks with multi-qubit coins: config-driven experiment runner.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="run the experiment(s) described by a config file")
    runp.add_argument("config", help="path to an INI experiment config")
    runp.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a config value; bare keys target [experiment], "
        "dotted keys (classical.n=50) target that section; repeatable",
    )
    runp.add_argument("--quiet", action="store_true", help="suppress per-run summaries")
    args = ap.parse_args(argv)
    return run(args.config, overrides=args.override, quiet=args.quiet)


if __name__ == "__main__":
    sys.exit(console_main())
