from typing import Union

from mapkit.models.bipartite_witness import BipartiteWitness
from mapkit.models.graph import Graph
from mapkit.utils.errors import WitnessParseError


def parse_witness(text: Union[bytes, str], name: str = "") -> BipartiteWitness:
    """Reads the `p tmap W U M` format; file ids are 1-based, memory ids 0-based"""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise WitnessParseError(f"witness files are ASCII: {e}") from e

    header = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    line_number = 0
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.rstrip()
        if not line:
            raise WitnessParseError("unexpected blank line", line_number)
        fields = line.split()
        if fields[0] == "c":
            continue
        if fields[0] == "p":
            if header is not None:
                raise WitnessParseError("second header", line_number)
            if len(fields) != 5 or fields[1] != "tmap":
                raise WitnessParseError(f"malformed header {line!r}", line_number)
            try:
                header = tuple(int(field) for field in fields[2:])
            except ValueError:
                raise WitnessParseError(f"malformed header {line!r}", line_number)
            if min(header) < 0:
                raise WitnessParseError("header counts must be nonnegative", line_number)
            header_line = line_number
        elif fields[0] == "e":
            if header is None:
                raise WitnessParseError("edge before header", line_number)
            if len(fields) != 3:
                raise WitnessParseError(f"malformed edge {line!r}", line_number)
            try:
                a, b = int(fields[1]), int(fields[2])
            except ValueError:
                raise WitnessParseError(f"malformed edge {line!r}", line_number)
            nations, specials, _ = header
            total = nations + specials
            if not (1 <= a <= total and 1 <= b <= total):
                raise WitnessParseError(f"vertex out of range in {line!r}", line_number)
            if not a <= nations < b:
                raise WitnessParseError(
                    f"edge {a} {b} must join a nation (1..{nations}) to a special", line_number
                )
            edge = (a - 1, b - 1)
            if edge in seen:
                raise WitnessParseError(f"duplicate edge {a} {b}", line_number)
            seen.add(edge)
            edges.append(edge)
        else:
            raise WitnessParseError(f"unexpected line {line!r}", line_number)

    if header is None:
        raise WitnessParseError("missing header", line_number)
    nations, specials, edge_count = header
    if len(edges) != edge_count:
        raise WitnessParseError(
            f"header declares {edge_count} edges, found {len(edges)}", header_line
        )
    return BipartiteWitness(
        graph=Graph.from_edges(nations + specials, edges),
        nation_count=nations,
        special_count=specials,
        name=name,
    )


def serialize_witness(witness: BipartiteWitness) -> str:
    edges = witness.graph.edges()
    lines = [f"p tmap {witness.nation_count} {witness.special_count} {len(edges)}"]
    lines.extend(f"e {a + 1} {b + 1}" for a, b in edges)
    return "\n".join(lines) + "\n"
