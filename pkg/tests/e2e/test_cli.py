"""Tests de bout en bout de la ligne de commande."""

import json

import numpy as np
import pytest

from app.cli import build_parser, main
from app.config import get_settings
from app.domain.entities.instance import Instance
from app.infrastructure.storage.instance_store import dumps_canonical


def _write_instance(path, inst):
    path.write_text(dumps_canonical(inst.to_document()), encoding="utf-8")
    return str(path)


def _status_line(output: str) -> str:
    lines = [line for line in output.splitlines() if line.startswith("status=")]
    assert lines, output
    return lines[-1]


def _field(line: str, name: str) -> str:
    return dict(part.split("=", 1) for part in line.split())[name]


def test_greedy_on_t1(tmp_path, capsys, t1_c1):
    path = _write_instance(tmp_path / "t1.json", t1_c1)
    assert main(["greedy", path]) == 0
    line = _status_line(capsys.readouterr().out)
    assert _field(line, "status") == "heuristic"
    assert float(_field(line, "F")) == pytest.approx(0.625)


def test_brute_refuses_large_instance(tmp_path, capsys):
    inst = Instance.from_arrays([1.0], [1.0], np.ones((1, 30)), np.ones((1, 30)))
    path = _write_instance(tmp_path / "big.json", inst)
    assert main(["brute", path]) == 2
    assert "erreur" in capsys.readouterr().err


def test_validate(tmp_path, capsys, t1_c1):
    path = _write_instance(tmp_path / "t1.json", t1_c1)
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"x": [1, 0], "objective": 1.0}), encoding="utf-8")
    assert main(["validate", path, str(good)]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"x": [1, 1]}), encoding="utf-8")
    assert main(["validate", path, str(bad)]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{}", encoding="utf-8")
    assert main(["validate", path, str(broken)]) == 2


def test_missing_instance_file(tmp_path):
    assert main(["greedy", str(tmp_path / "absent.json")]) == 2


def test_unknown_option():
    with pytest.raises(SystemExit) as excinfo:
        main(["solve", "t1.json", "--bogus"])
    assert excinfo.value.code == 2


def test_dump_model_defaults_to_settings_dir():
    parser = build_parser()
    assert parser.parse_args(["solve", "t1.json"]).dump_model is None
    bare = parser.parse_args(["solve", "t1.json", "--dump-model"])
    assert bare.dump_model == str(get_settings().dump_dir)
    explicit = parser.parse_args(["solve", "t1.json", "--dump-model", "out/lp"])
    assert explicit.dump_model == "out/lp"


def test_ratio_command(tmp_path):
    out = tmp_path / "ratio.csv"
    assert main(["ratio", "--count", "3", "--n", "2", "--m", "6", "--capacity", "2", "--out", str(out)]) == 0
    assert out.is_file()


@pytest.mark.solver
class TestWithSolver:
    @pytest.fixture(autouse=True)
    def _needs_mip(self):
        pytest.importorskip("mip")

    def test_branch_and_cut_on_t1(self, tmp_path, capsys, t1_c1):
        path = _write_instance(tmp_path / "t1.json", t1_c1)
        out = tmp_path / "result.json"
        assert main(["--backend", "cbc", "solve", path, "--method", "bc", "--out", str(out)]) == 0
        line = _status_line(capsys.readouterr().out)
        assert _field(line, "status") == "optimal"
        assert float(_field(line, "F")) == pytest.approx(1.0, abs=1e-6)
        assert json.loads(out.read_text(encoding="utf-8"))["x"] == [1, 0]

    def test_generate_solve_validate(self, tmp_path, capsys):
        root = tmp_path / "instances"
        code = main(
            ["generate", "--family", "Sen_200_20", "--seed", "4", "--m", "8", "--n", "3", "--capacities", "3", "--count", "1", "--out", str(root)]
        )
        assert code == 0
        files = sorted((root / "Sen_200_20").glob("*.json"))
        assert len(files) == 2

        result = tmp_path / "result.json"
        assert main(["solve", str(files[0]), "--cuts", "oa+sc", "--out", str(result)]) == 0
        capsys.readouterr()
        assert main(["validate", str(files[0]), str(result)]) == 0
        verdict = json.loads(
            [line for line in capsys.readouterr().out.splitlines() if line.startswith('{"valid"')][-1]
        )
        assert verdict["valid"] and verdict["feasible"]
