import asyncio
import os
from pathlib import Path
from typing import Optional

from mapkit.crossing.cycles import cycle_edges
from mapkit.crossing.profile import crossing_profile
from mapkit.decomposition.elimination import exact_decompose_small, heuristic_decompose
from mapkit.decomposition.nice import make_nice
from mapkit.decomposition.pace_io import format_fcd, format_td
from mapkit.few_cliques.derivation import derive_fcd
from mapkit.graph_core.half_square import half_square
from mapkit.graph_core.validation import validate_witness
from mapkit.graph_core.witness_io import parse_witness
from mapkit.models.bench_row import BenchRow
from mapkit.models.bipartite_witness import BipartiteWitness
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult
from mapkit.solvers.certificates import validate_certificate
from mapkit.solvers.early_exit import check_early_exit
from mapkit.solvers.registry import solve_problem
from mapkit.testbench.oracles import brute_force_solve
from mapkit.utils.constants import (
    DEFAULT_SEED,
    ORACLE_MAX_VERTICES_CYCLES,
    ORACLE_MAX_VERTICES_DELETION,
    SEED_ENV_NAME,
    WITNESS_EXTENSION,
)
from mapkit.utils.errors import InvalidWitnessError, OracleMismatchError, PreconditionError
from mapkit.utils.logger import logger, setup_logger


async def load_instance(
    path: str, strict: bool = False, log_level: Optional[str] = "ERROR"
) -> tuple[BipartiteWitness, MapGraph]:
    setup_logger(log_level)
    try:
        return await asyncio.to_thread(_load, path, strict)
    except Exception as e:
        logger.error(f"Error loading {path}: {e}")
        raise e


async def mapkit_decompose(
    path: str,
    exact: bool = False,
    seed: Optional[int] = None,
    strict: bool = False,
    emit_td: Optional[str] = None,
    emit_fcd: Optional[str] = None,
    log_level: Optional[str] = "ERROR",
    seed_env_name: Optional[str] = SEED_ENV_NAME,
) -> FewCliquesDecomposition:
    setup_logger(log_level)
    try:
        seed = resolve_seed(seed, seed_env_name)
        witness, map_graph = await asyncio.to_thread(_load, path, strict)
        fcd = await asyncio.to_thread(_decompose, witness, map_graph, exact, seed)
        logger.info(f"decomposed - {witness.name} - width {fcd.source.width}")
        if emit_td is not None:
            await asyncio.to_thread(
                Path(emit_td).write_text, format_td(fcd.source, witness.vertex_count)
            )
        if emit_fcd is not None:
            await asyncio.to_thread(Path(emit_fcd).write_text, format_fcd(fcd))
        return fcd
    except Exception as e:
        logger.error(f"Error decomposing {path}: {e}")
        raise e


async def mapkit_solve(
    problem: str,
    path: str,
    k: Optional[int] = None,
    cap: Optional[int] = None,
    exact: bool = False,
    seed: Optional[int] = None,
    strict: bool = False,
    oracle: bool = False,
    log_level: Optional[str] = "ERROR",
    seed_env_name: Optional[str] = SEED_ENV_NAME,
) -> SolveResult:
    setup_logger(log_level)
    try:
        seed = resolve_seed(seed, seed_env_name)
        witness, map_graph = await asyncio.to_thread(_load, path, strict)
        result = check_early_exit(map_graph, problem, k)
        if result is not None:
            logger.info(f"early exit - {witness.name} - {problem} k={k}")
        else:
            fcd = await asyncio.to_thread(_decompose, witness, map_graph, exact, seed)
            result = await asyncio.to_thread(solve_problem, problem, map_graph, fcd, k, cap)
        if oracle:
            await asyncio.to_thread(_cross_check, map_graph, result)
        return result
    except Exception as e:
        logger.error(f"Error solving {problem} on {path}: {e}")
        raise e


async def mapkit_bench(
    directory: str,
    problem: str,
    kmax: int,
    concurrency: Optional[int] = 1,
    exact: bool = False,
    seed: Optional[int] = None,
    log_level: Optional[str] = "ERROR",
    seed_env_name: Optional[str] = SEED_ENV_NAME,
) -> list[BenchRow]:
    setup_logger(log_level)
    try:
        seed = resolve_seed(seed, seed_env_name)
        paths = sorted(Path(directory).glob(f"*{WITNESS_EXTENSION}"))
        semaphore = asyncio.Semaphore(concurrency)
        tasks = []
        for path in paths:
            task = asyncio.create_task(
                _bench_instance(
                    path=path,
                    problem=problem,
                    kmax=kmax,
                    exact=exact,
                    seed=seed,
                    semaphore=semaphore,
                )
            )
            tasks.append(task)
        row_groups = await asyncio.gather(*tasks)
        rows = [row for group in row_groups for row in group]
        logger.info(f"bench done. total rows - {len(rows)}")
        return sorted(rows, key=lambda row: (row.instance, row.k))
    except Exception as e:
        logger.error(f"Error benchmarking {directory}: {e}")
        raise e


def resolve_seed(seed: Optional[int], seed_env_name: Optional[str] = SEED_ENV_NAME) -> int:
    if seed is not None:
        return seed
    value = os.getenv(seed_env_name) if seed_env_name else None
    if not value:
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError:
        raise PreconditionError(f"{seed_env_name} must be an integer, got {value!r}")


async def _bench_instance(
    path: Path, problem: str, kmax: int, exact: bool, seed: int, semaphore: asyncio.Semaphore
) -> list[BenchRow]:
    async with semaphore:
        logger.info(f"bench instance - {path.name}")
        return await asyncio.to_thread(_bench_rows, path, problem, kmax, exact, seed)


def _bench_rows(path: Path, problem: str, kmax: int, exact: bool, seed: int) -> list[BenchRow]:
    witness, map_graph = _load(str(path), strict=False)
    fcd = _decompose(witness, map_graph, exact, seed)
    rows = []
    for k in range(1, kmax + 1):
        result = solve_problem(problem, map_graph, fcd, k)
        edges = certificate_edges(result)
        rows.append(
            BenchRow(
                instance=path.name,
                problem=problem,
                k=k,
                width_D=fcd.source.width,
                maxbag_Dprime=fcd.max_bag,
                cap=result.stats.cap,
                max_states=result.stats.max_states,
                answer="YES" if result.answer else "NO",
                millis=round(result.stats.millis),
                node_states=result.stats.node_states,
                node_crossing=None if edges is None else crossing_profile(edges, fcd).counts,
            )
        )
    return rows


def certificate_edges(result: SolveResult) -> Optional[set[tuple[int, int]]]:
    """Edge set of a cycle, path or packing certificate; None for vertex sets"""
    if result.problem in ("vc", "fvs") or result.answer is False:
        return None
    edges: set[tuple[int, int]] = set()
    for row in result.certificate:
        if result.problem == "longest-path":
            edges.update((min(u, v), max(u, v)) for u, v in zip(row, row[1:]))
        elif len(row) >= 3:
            edges.update(cycle_edges(row))
    return edges


def _load(path: str, strict: bool) -> tuple[BipartiteWitness, MapGraph]:
    witness = parse_witness(Path(path).read_bytes(), name=Path(path).name)
    report = validate_witness(witness, strict=strict)
    if not report.is_valid:
        raise InvalidWitnessError(report.lines())
    return witness, half_square(witness)


def _decompose(
    witness: BipartiteWitness, map_graph: MapGraph, exact: bool, seed: int
) -> FewCliquesDecomposition:
    if exact:
        td = exact_decompose_small(witness.graph, width_budget=max(witness.vertex_count - 1, 0))
    else:
        td = heuristic_decompose(witness.graph, seed=seed)
    return derive_fcd(make_nice(td, witness.graph), map_graph)


def _cross_check(map_graph: MapGraph, result: SolveResult) -> None:
    limit = ORACLE_MAX_VERTICES_DELETION if result.problem in ("vc", "fvs") else ORACLE_MAX_VERTICES_CYCLES
    if map_graph.n > limit:
        return
    expected = brute_force_solve(map_graph, result.problem, result.k)
    problems = validate_certificate(map_graph, result)
    if result.k is not None and expected.answer != result.answer:
        problems.append(f"answer {result.answer_text}, oracle {expected.answer_text}")
    if result.k is None and expected.value != result.value:
        problems.append(f"value {result.value}, oracle {expected.value}")
    if problems:
        raise OracleMismatchError("; ".join(problems))
