import json
import math
import subprocess
import sys

import pytest

from quospec import format_edge_list, format_graph6
from quospec.cli import main
from quospec.families import (
    complete,
    cycle,
    hadamard_b1,
    hadamard_crossed1,
    hadamard_crossed2,
    path,
    petersen,
    subdivided_complete,
)



@pytest.fixture
def write_graph(tmp_path):
    def write(g, name="g.txt", graph6=False):
        p = tmp_path / name
        p.write_text(format_graph6(g) + "\n" if graph6 else format_edge_list(g))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


class TestReports:
    def test_spectrum(self, capsys, write_graph):
        code, rep = run_json(capsys, "spectrum", write_graph(petersen()))
        assert code == 0
        assert rep["command"] == "spectrum" and rep["tolerance"] == 1e-9
        assert rep["graph"] == petersen().digest()
        assert rep["spectrum"] == [
            {"value": 3.0, "multiplicity": 1},
            {"value": 1.0, "multiplicity": 5},
            {"value": -2.0, "multiplicity": 4},
        ]

    def test_small_spectra(self, capsys, write_graph):
        _, rep = run_json(capsys, "spectrum", write_graph(complete(3)))
        assert rep["spectrum"] == [{"value": 2.0, "multiplicity": 1}, {"value": -1.0, "multiplicity": 2}]
        _, rep = run_json(capsys, "spectrum", write_graph(subdivided_complete(4)))
        r6, r2 = math.sqrt(6), math.sqrt(2)
        assert [e["multiplicity"] for e in rep["spectrum"]] == [1, 3, 2, 3, 1]
        for e, want in zip(rep["spectrum"], [r6, r2, 0, -r2, -r6]):
            assert math.isclose(e["value"], want, abs_tol=1e-10)

    def test_graph6_input(self, capsys, write_graph):
        code, rep = run_json(capsys, "spectrum", write_graph(petersen(), "p.g6", graph6=True))
        assert code == 0 and rep["graph"] == petersen().digest()

    def test_local_spectrum(self, capsys, write_graph):
        code, rep = run_json(capsys, "local-spectrum", write_graph(cycle(4)), "--vertex", "0")
        assert code == 0
        assert rep["quotient"] == {
            "cells": [[0], [1, 3], [2]],
            "sizes": [1, 2, 1],
            "matrix": [[0, 2, 0], [1, 0, 1], [0, 2, 0]],
        }
        assert rep["local_spectrum"] == [
            {"value": 2.0, "multiplicity": 0.25},
            {"value": 0.0, "multiplicity": 0.5},
            {"value": -2.0, "multiplicity": 0.25},
        ]

    def test_local_spectrum_k2(self, capsys, write_graph):
        _, rep = run_json(capsys, "local-spectrum", write_graph(complete(2)), "--vertex", "0")
        assert [e["multiplicity"] for e in rep["local_spectrum"]] == [0.5, 0.5]

    def test_local_spectrum_hb1_is_first_table_column(self, capsys, write_graph):
        _, rep = run_json(capsys, "local-spectrum", write_graph(subdivided_complete(4)), "--vertex", "4")
        got = [e["multiplicity"] for e in rep["local_spectrum"]]
        assert got == pytest.approx(list(hadamard_crossed1(1)[:, 0]), abs=1e-12)

    def test_quotient_hb1(self, capsys, write_graph):
        _, rep = run_json(capsys, "quotient", write_graph(subdivided_complete(4)), "--vertex", "4")
        assert rep["quotient"]["matrix"] == hadamard_b1(1)
        assert rep["quotient"]["sizes"] == [1, 2, 4, 2, 1]

    def test_quotient_bipartition(self, capsys, write_graph, tmp_path):
        cells = tmp_path / "cells.txt"
        cells.write_text("0,2\n1,3\n")
        code, rep = run_json(capsys, "quotient", write_graph(cycle(4)), "--partition", str(cells))
        assert code == 0 and rep["quotient"]["matrix"] == [[0, 2], [2, 0]]

    def test_quotient_from_partition_file(self, capsys, write_graph, tmp_path):
        cells = tmp_path / "cells.txt"
        cells.write_text("0\n1,3\n2\n")
        code, rep = run_json(capsys, "quotient", write_graph(cycle(4)), "--partition", str(cells))
        assert code == 0 and rep["quotient"]["matrix"] == [[0, 2, 0], [1, 0, 1], [0, 2, 0]]
        assert [e["value"] for e in rep["spectrum"]] == [2.0, 0.0, -2.0]

    @pytest.mark.parametrize("vertex,table", [(4, hadamard_crossed1(1)), (0, hadamard_crossed2(1))])
    @pytest.mark.parametrize("method", ["lagrange", "idempotent"])
    def test_crossed_hb1(self, capsys, write_graph, vertex, table, method):
        code, rep = run_json(
            capsys, "crossed", write_graph(subdivided_complete(4)), "--vertex", str(vertex),
            "--method", method,
        )
        assert code == 0
        got = rep["crossed"]["table"]
        assert max(abs(a - b) for ra, rb in zip(got, table) for a, b in zip(ra, rb)) < 1e-9
        assert rep["crossed"]["sums"] == [1.0] + [0.0] * (len(table[0]) - 1)

    def test_reconstruct_matches_spectrum(self, capsys, write_graph, named_graph):
        _, g = named_graph
        path_ = write_graph(g)
        _, direct = run_json(capsys, "spectrum", path_)
        _, recon = run_json(capsys, "reconstruct", path_, "--jobs", "2")
        assert [e["multiplicity"] for e in recon["spectrum"]] == [
            e["multiplicity"] for e in direct["spectrum"]
        ]
        for a, b in zip(recon["spectrum"], direct["spectrum"]):
            assert math.isclose(a["value"], b["value"], abs_tol=1e-9)

    def test_table_format(self, capsys, write_graph):
        code, out, _ = run(capsys, "crossed", write_graph(cycle(4)), "--vertex", "0")
        assert code == 0
        assert "sum" in out and "|V_j|" in out and "0.25" in out

    def test_deterministic_bytes(self, capsys, write_graph):
        p = write_graph(subdivided_complete(4))
        outs = {run(capsys, "crossed", p, "--vertex", "4", "--format", "json")[1] for _ in range(3)}
        assert len(outs) == 1


class TestChecks:
    def test_walk_regular_true(self, capsys, write_graph):
        code, rep = run_json(capsys, "check", write_graph(petersen()), "--walk-regular")
        assert code == 0 and rep["check"] == {"property": "walk-regular", "verdict": True}

    def test_walk_regular_false(self, capsys, write_graph):
        code, rep = run_json(capsys, "check", write_graph(path(3)), "--walk-regular")
        assert code == 1 and rep["check"]["verdict"] is False

    def test_equitable_witness(self, capsys, write_graph, tmp_path):
        cells = tmp_path / "cells.txt"
        cells.write_text("0,1\n2\n")
        code, rep = run_json(capsys, "check", write_graph(path(3)), "--equitable", str(cells))
        assert code == 1
        assert rep["check"]["witness"] == {
            "i": 0, "j": 1, "u": 0, "u_other": 1, "count_u": 0, "count_other": 1
        }


class TestExitCodes:
    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "spectrum", str(tmp_path / "none.txt"))
        assert code == 2 and "cannot read" in err

    def test_malformed(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("0 1\n1 q\n")
        code, _, err = run(capsys, "spectrum", str(p))
        assert code == 2 and "line 2" in err

    def test_vertex_out_of_range(self, capsys, write_graph):
        code, _, _ = run(capsys, "local-spectrum", write_graph(cycle(4)), "--vertex", "9")
        assert code == 2

    def test_non_equitable_partition(self, capsys, write_graph, tmp_path):
        cells = tmp_path / "cells.txt"
        cells.write_text("0,1\n2\n")
        code, _, err = run(capsys, "quotient", write_graph(path(3)), "--partition", str(cells))
        assert code == 4 and "precondition" in err

    def test_disconnected(self, capsys, tmp_path):
        p = tmp_path / "two.txt"
        p.write_text("0 1\n2 3\n")
        code, _, _ = run(capsys, "local-spectrum", str(p), "--vertex", "0")
        assert code == 4

    def test_numerical_failure(self, capsys, write_graph):
        # Eigenvalue gaps of P40 are below 0.16, so the whole spectrum chains into one cluster.
        code, _, err = run(capsys, "spectrum", write_graph(path(40)), "--tol", "0.16")
        assert code == 3 and "numerical" in err


class TestFamilies:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "families")
        assert code == 0 and "cycle:N" in out.split() and "petersen" in out.split()

    def test_emit_round_trips(self, capsys, tmp_path):
        code, out, _ = run(capsys, "families", "hb1")
        assert code == 0 and out.startswith("# hb1\n")
        p = tmp_path / "hb1.txt"
        p.write_text(out)
        _, rep = run_json(capsys, "spectrum", str(p))
        assert rep["graph"] == subdivided_complete(4).digest()

    def test_unknown(self, capsys):
        assert run(capsys, "families", "dodecahedron")[0] == 2


def test_module_entry_point(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text(format_edge_list(cycle(5)))
    res = subprocess.run(
        [sys.executable, "-m", "quospec", "check", str(p), "--walk-regular"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0 and "walk-regular: true" in res.stdout
