import csv

import pytest

from mapkit.cli import main
from mapkit.graph_core.witness_io import serialize_witness
from mapkit.testbench.generators import grid, star
from mapkit.utils.constants import BENCH_COLUMNS, PROFILE_COLUMNS
from tests.helpers import STAR4_TEXT


@pytest.fixture
def star4_path(tmp_path):
    path = tmp_path / "star4.tmap"
    path.write_text(STAR4_TEXT)
    return str(path)


def _write(tmp_path, name: str, witness) -> str:
    path = tmp_path / name
    path.write_text(serialize_witness(witness))
    return str(path)


def test_validate(star4_path, capsys):
    assert main(["validate", star4_path, "--strict"]) == 0
    assert capsys.readouterr().out == "VALID\n"


def test_validate_reports_violations(tmp_path, capsys):
    path = tmp_path / "k33.tmap"
    path.write_text(
        "p tmap 3 3 9\n" + "".join(f"e {a} {b}\n" for a in (1, 2, 3) for b in (4, 5, 6))
    )
    assert main(["validate", str(path)]) == 3
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "INVALID"
    assert lines[1].startswith("euler-bound: ")


def test_parse_errors_exit_with_the_line(tmp_path, capsys):
    path = tmp_path / "bad.tmap"
    path.write_text("p tmap 2 1 1\ne 1 2\n")
    assert main(["validate", str(path)]) == 3
    assert "line 2" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["solve", "vc", str(tmp_path / "absent.tmap")]) == 3


def test_solve_with_certificate(star4_path, capsys):
    assert main(["solve", "fvs", star4_path, "-k", "2", "--cert"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "YES"
    assert lines[1].startswith("stats width_D=1 ")
    assert "early_exit" not in lines[1]
    assert lines[2] == "SOLUTION fvs k=2 value=2"
    chosen = [int(v) for v in lines[3].split()]
    assert len(set(chosen)) == 2 and all(1 <= v <= 4 for v in chosen)


def test_solve_optimum(star4_path, capsys):
    assert main(["solve", "vc", star4_path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "OPT=3"


def test_solve_early_exit(tmp_path, capsys):
    path = _write(tmp_path, "star5.tmap", star(5))
    assert main(["solve", "longest-cycle", path, "-k", "5", "--oracle"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "YES"
    assert lines[1].endswith(" early_exit=clique")
    assert "width_D= " in lines[1]


def test_solve_output_is_reproducible(tmp_path, capsys):
    path = _write(tmp_path, "grid.tmap", grid(3, 3))
    outputs = []
    for _ in range(2):
        assert main(["solve", "longest-cycle", path, "--cert", "--seed", "3"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert outputs[0].startswith("OPT=8\n")


def test_cap_is_refused_for_deletion_problems(star4_path, capsys):
    assert main(["solve", "vc", star4_path, "--cap", "3"]) == 2
    assert "--cap" in capsys.readouterr().err


def test_decompose(star4_path, tmp_path, capsys):
    td_path = tmp_path / "star4.td"
    assert main(["decompose", star4_path, "--emit-td", str(td_path)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("width_D=1 nodes=")
    assert out.rstrip().endswith("maxbag_Dprime=4")
    assert td_path.read_text().startswith("s td ")


def test_gen_star(tmp_path):
    output = tmp_path / "star4.tmap"
    assert main(["gen", "--family", "star", "--params", "4", "-o", str(output)]) == 0
    assert output.read_text() == serialize_witness(star(4))


def test_gen_random_is_seeded(tmp_path, monkeypatch):
    first, second = tmp_path / "a.tmap", tmp_path / "b.tmap"
    monkeypatch.setenv("MAPKIT_SEED", "8")
    assert main(["gen", "--family", "planar-bipartite", "--params", "25", "0.4", "-o", str(first)]) == 0
    assert main(
        ["gen", "--family", "planar-bipartite", "--params", "25", "0.4", "--seed", "8", "-o", str(second)]
    ) == 0
    assert first.read_text() == second.read_text()


def test_gen_checks_parameter_count(tmp_path):
    assert main(["gen", "--family", "grid", "--params", "3", "-o", str(tmp_path / "g.tmap")]) == 2


@pytest.mark.parametrize(
    "family, params",
    [("star", ["4.5"]), ("grid", ["3", "2.5"]), ("star", ["0"]), ("incidence", ["10", "1.5"])],
)
def test_gen_rejects_bad_parameters_as_usage_errors(tmp_path, family, params):
    output = tmp_path / "bad.tmap"
    assert main(["gen", "--family", family, "--params", *params, "-o", str(output)]) == 2
    assert not output.exists()


def test_bench(tmp_path, capsys):
    directory = tmp_path / "instances"
    directory.mkdir()
    _write(directory, "star4.tmap", star(4))
    _write(directory, "grid2x3.tmap", grid(2, 3))
    report, profiles = tmp_path / "bench.csv", tmp_path / "profiles.csv"
    assert main(
        [
            "bench",
            str(directory),
            "--problem",
            "cycle-packing",
            "--kmax",
            "2",
            "--threads",
            "2",
            "--profiles",
            str(profiles),
            "-o",
            str(report),
        ]
    ) == 0
    assert capsys.readouterr().out == "rows=4\n"
    with open(report, newline="") as handle:
        rows = list(csv.reader(handle))
    assert tuple(rows[0]) == BENCH_COLUMNS
    assert [(row[0], row[2], row[7]) for row in rows[1:]] == [
        ("grid2x3.tmap", "1", "YES"),
        ("grid2x3.tmap", "2", "NO"),
        ("star4.tmap", "1", "YES"),
        ("star4.tmap", "2", "NO"),
    ]
    with open(profiles, newline="") as handle:
        profile_rows = list(csv.reader(handle))
    assert tuple(profile_rows[0]) == PROFILE_COLUMNS
    assert len(profile_rows) > 1
