import argparse
import asyncio
import csv
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from mapkit.graph_core.validation import validate_witness
from mapkit.graph_core.witness_io import parse_witness, serialize_witness
from mapkit.mapkit import mapkit_bench, mapkit_decompose, mapkit_solve, resolve_seed
from mapkit.models.gen_spec import GenSpec
from mapkit.models.run_config import RunConfig
from mapkit.solvers.certificates import format_certificate
from mapkit.testbench.generators import generate
from mapkit.utils.constants import (
    BENCH_COLUMNS,
    EXIT_INPUT_INVALID,
    EXIT_OK,
    EXIT_ORACLE_MISMATCH,
    EXIT_USAGE,
    PROBLEMS,
    PROFILE_COLUMNS,
)
from mapkit.utils.errors import MapkitError, OracleMismatchError

_FAMILIES = {
    "star": "star",
    "grid": "grid",
    "incidence": "random_incidence",
    "planar-bipartite": "random_planar_bipartite",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mapkit", description="Parameterized solvers on map graphs")
    parser.add_argument("--log-level", default="ERROR")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    validate = commands.add_parser("validate", help="check a witness file")
    validate.add_argument("input_path")
    validate.add_argument("--strict", action="store_true", help="run the exact planarity test")

    decompose = commands.add_parser("decompose", help="build the few-cliques decomposition")
    decompose.add_argument("input_path")
    decompose.add_argument("--exact", action="store_true")
    decompose.add_argument("--seed", type=int)
    decompose.add_argument("--emit-td", dest="emit_td")
    decompose.add_argument("--emit-fcd", dest="emit_fcd")

    solve = commands.add_parser("solve", help="solve a problem on a witness")
    solve.add_argument("problem", choices=PROBLEMS)
    solve.add_argument("input_path")
    solve.add_argument("-k", type=int)
    solve.add_argument("--cap", type=int)
    solve.add_argument("--exact", action="store_true")
    solve.add_argument("--seed", type=int)
    solve.add_argument("--oracle", action="store_true")
    solve.add_argument("--cert", action="store_true")

    gen = commands.add_parser("gen", help="generate a witness file")
    gen.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    gen.add_argument("--params", type=float, nargs="+", required=True)
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", dest="output", required=True)

    bench = commands.add_parser("bench", help="solve every witness of a directory for k = 1..kmax")
    bench.add_argument("input_path")
    bench.add_argument("--problem", required=True, choices=PROBLEMS)
    bench.add_argument("--kmax", type=int, required=True)
    bench.add_argument("--exact", action="store_true")
    bench.add_argument("--seed", type=int)
    bench.add_argument("--threads", type=int, default=1)
    bench.add_argument("--profiles")
    bench.add_argument("-o", dest="output", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    arguments = vars(build_parser().parse_args(argv))
    log_level = arguments.pop("log_level")
    if "params" in arguments:
        arguments["params"] = tuple(arguments["params"])
    try:
        config = RunConfig(**arguments)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return asyncio.run(_run(config, log_level))
    except OracleMismatchError as e:
        print(f"error: oracle mismatch: {e}", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    except (MapkitError, ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_INVALID


async def _run(config: RunConfig, log_level: str) -> int:
    if config.subcommand == "validate":
        return await _validate(config)
    if config.subcommand == "decompose":
        fcd = await mapkit_decompose(
            config.input_path,
            exact=config.exact,
            seed=config.seed,
            emit_td=config.emit_td,
            emit_fcd=config.emit_fcd,
            log_level=log_level,
        )
        print(f"width_D={fcd.source.width} nodes={fcd.node_count} maxbag_Dprime={fcd.max_bag}")
        return EXIT_OK
    if config.subcommand == "solve":
        return await _solve(config, log_level)
    if config.subcommand == "gen":
        return _gen(config)
    return await _bench(config, log_level)


async def _validate(config: RunConfig) -> int:
    witness = parse_witness(await asyncio.to_thread(Path(config.input_path).read_bytes))
    report = validate_witness(witness, strict=config.strict)
    if report.is_valid:
        print("VALID")
        return EXIT_OK
    print("INVALID")
    for line in report.lines():
        print(line)
    return EXIT_INPUT_INVALID


async def _solve(config: RunConfig, log_level: str) -> int:
    result = await mapkit_solve(
        config.problem,
        config.input_path,
        k=config.k,
        cap=config.cap,
        exact=config.exact,
        seed=config.seed,
        oracle=config.oracle,
        log_level=log_level,
    )
    print(result.answer_text)
    stats = result.stats
    line = f"stats width_D={_text(stats.width_d)} maxbag_Dprime={_text(stats.maxbag_dprime)} cap={_text(stats.cap)} max_states={stats.max_states}"
    if stats.early_exit is not None:
        line += f" early_exit={stats.early_exit}"
    print(line)
    if config.cert:
        print(format_certificate(result), end="")
    return EXIT_OK


def _gen(config: RunConfig) -> int:
    family = _FAMILIES[config.family]
    params = config.params
    try:
        if family in ("star", "grid"):
            spec = GenSpec(family=family, size=tuple(int(p) for p in params))
        else:
            spec = GenSpec(
                family=family,
                size=(int(params[0]),),
                probability=params[1],
                seed=resolve_seed(config.seed),
            )
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE
    Path(config.output).write_text(serialize_witness(generate(spec)))
    return EXIT_OK


async def _bench(config: RunConfig, log_level: str) -> int:
    rows = await mapkit_bench(
        config.input_path,
        config.problem,
        config.kmax,
        concurrency=config.threads,
        exact=config.exact,
        seed=config.seed,
        log_level=log_level,
    )
    with open(config.output, "w", newline="") as report:
        writer = csv.writer(report)
        writer.writerow(BENCH_COLUMNS)
        for row in rows:
            writer.writerow(_text(getattr(row, column)) for column in BENCH_COLUMNS)
    if config.profiles:
        with open(config.profiles, "w", newline="") as profiles:
            writer = csv.writer(profiles)
            writer.writerow(PROFILE_COLUMNS)
            for row in rows:
                for node, states in enumerate(row.node_states):
                    crossing = "" if row.node_crossing is None else row.node_crossing[node]
                    writer.writerow((row.instance, row.problem, row.k, node, states, crossing))
    print(f"rows={len(rows)}")
    return EXIT_OK


def _text(value) -> str:
    return "" if value is None else str(value)


if __name__ == "__main__":
    sys.exit(main())
