import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent
DATA = REPO / "demos" / "data"


def run_cli(*argv, cwd=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(REPO / "src") + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "algdeform", *argv],
        capture_output=True,
        env=env,
        cwd=cwd or REPO,
    )


@pytest.fixture(scope="module")
def acon_algebra(tmp_path_factory):
    out = tmp_path_factory.mktemp("cli") / "acon.algebra.json"
    proc = run_cli(
        "build", "--input", str(DATA / "contraction_dim12.json"), "--out", str(out)
    )
    assert proc.returncode == 0, proc.stderr.decode()
    return out


@pytest.fixture(scope="module")
def m2_algebra(tmp_path_factory):
    from algdeform.constructions import matrix_unit_algebra

    out = tmp_path_factory.mktemp("cli") / "m2.json"
    matrix_unit_algebra(2).save(out)
    return out


class TestBuild:
    def test_contraction_algebra(self, acon_algebra):
        data = json.loads(acon_algebra.read_text())
        assert data["dim"] == 12

    def test_summary_fields(self, tmp_path):
        out = tmp_path / "alg.json"
        proc = run_cli(
            "build",
            "--input", str(DATA / "contraction_dim12.json"),
            "--out", str(out),
            "--format", "json",
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["dim"] == 12
        assert doc["valid"] is True

    def test_small_presentation(self, tmp_path):
        pres = tmp_path / "dual.json"
        pres.write_text(
            json.dumps({"generators": ["x"], "relations": ["x^2"], "expected_dim": 2})
        )
        proc = run_cli("build", "--input", str(pres), "--format", "json",
                       "--out", str(tmp_path / "dual.algebra.json"))
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["dim"] == 2

    def test_dimension_mismatch_exits_2(self, tmp_path):
        pres = json.loads((DATA / "contraction_dim12.json").read_text())
        pres["expected_dim"] = 11
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(pres))
        proc = run_cli("build", "--input", str(bad), "--out", str(tmp_path / "o.json"))
        assert proc.returncode == 2
        assert b"found" in proc.stderr or b"12" in proc.stderr


class TestAnalyze:
    def test_contraction_algebra_is_local(self, acon_algebra):
        proc = run_cli("analyze", "--input", str(acon_algebra), "--format", "json")
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["radical_dim"] == 11
        assert doc["semisimple"] is False
        assert doc["profile"] == {"1": 1}

    def test_m2_plus_field(self, tmp_path):
        from algdeform.constructions import direct_sum, matrix_unit_algebra, scalar_field

        path = tmp_path / "m2q.json"
        direct_sum(matrix_unit_algebra(2), scalar_field()).save(path)
        proc = run_cli("analyze", "--input", str(path))
        assert proc.returncode == 0
        text = proc.stdout.decode()
        assert "radical dim: 0" in text
        assert "1^1 2^1" in text

    def test_dual_numbers(self, tmp_path):
        from algdeform.constructions import dual_numbers

        path = tmp_path / "dual.json"
        dual_numbers().save(path)
        proc = run_cli("analyze", "--input", str(path))
        text = proc.stdout.decode()
        assert "radical dim: 1" in text
        assert "1^1" in text

    def test_invalid_table_exits_2(self, tmp_path):
        from algdeform.constructions import dual_numbers

        doc = dual_numbers().to_json_dict()
        doc["table"][0][0][1] = "1"  # break the unit product
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc))
        proc = run_cli("analyze", "--input", str(path))
        assert proc.returncode == 2


class TestScan:
    def test_dual_family_stable(self):
        proc = run_cli(
            "scan", "--input", str(DATA / "dual_number_family.json"),
            "--base", "1/4", "--count", "6", "--format", "json",
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["verdict"]["kind"] == "StableSemisimpleTarget"
        assert doc["verdict"]["profile"] == {"1": 2}
        assert doc["verdict"]["start_index"] == 0

    def test_relation_family(self):
        proc = run_cli(
            "scan", "--input", str(DATA / "split_relation_family.json"),
            "--base", "1/4", "--count", "4",
        )
        assert proc.returncode == 0
        assert b"StableSemisimpleTarget" in proc.stdout

    def test_constant_dual_family_never(self, tmp_path):
        from algdeform.constructions import dual_numbers
        from algdeform.deformation import constant_family

        path = tmp_path / "const.json"
        path.write_text(json.dumps(constant_family(dual_numbers()).to_json_dict()))
        proc = run_cli("scan", "--input", str(path), "--count", "4")
        assert proc.returncode == 0
        assert b"NeverSemisimpleOnSchedule" in proc.stdout

    def test_bad_base_exits_2(self):
        proc = run_cli(
            "scan", "--input", str(DATA / "dual_number_family.json"), "--base", "-1"
        )
        assert proc.returncode == 2


class TestObstruct:
    def test_contraction_algebra_targets(self):
        proc = run_cli(
            "obstruct", "--input", str(DATA / "contraction_dim12.json"),
            "--generators", "x,y", "--trials", "5", "--format", "json",
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["dim_in_N"] == 12
        statuses = {row["profile"]: row["status"] for row in doc["targets"]}
        assert statuses == {
            "1^12": "NotExcluded",
            "1^8 2^1": "NotExcluded",
            "1^4 2^2": "NotExcluded",
            "2^3": "NotExcluded",
            "1^3 3^1": "Excluded",
        }

    def test_algebra_file_with_coordinate_generators(self, m2_algebra):
        proc = run_cli(
            "obstruct", "--input", str(m2_algebra),
            "--generators", "0,1,1,0;1,0,0,0", "--trials", "2",
        )
        assert proc.returncode == 0
        assert b"dim_in_N: 4" in proc.stdout

    def test_not_generating_exits_2(self, m2_algebra):
        proc = run_cli(
            "obstruct", "--input", str(m2_algebra),
            "--generators", "e11,e11", "--trials", "1",
        )
        assert proc.returncode == 2
        assert b"dimension 2" in proc.stderr


class TestEnumerate:
    def test_twelve(self):
        proc = run_cli("enumerate", "12")
        assert proc.returncode == 0
        assert proc.stdout.decode().splitlines() == [
            "1^12", "1^8 2^1", "1^4 2^2", "2^3", "1^3 3^1",
        ]

    def test_four_and_one(self):
        assert run_cli("enumerate", "4").stdout.decode().splitlines() == ["1^4", "2^1"]
        assert run_cli("enumerate", "1").stdout.decode().splitlines() == ["1^1"]

    def test_zero_exits_2(self):
        assert run_cli("enumerate", "0").returncode == 2


class TestIdentitySpan:
    def test_m2(self, m2_algebra):
        proc = run_cli("identity-span", "--input", str(m2_algebra), "--m", "1",
                       "--format", "json")
        doc = json.loads(proc.stdout)
        assert doc["span_dim"] == 3
        assert doc["ideal_dim"] == 4

    def test_m2_vanishing(self, m2_algebra):
        proc = run_cli("identity-span", "--input", str(m2_algebra), "--m", "2")
        assert b"span dim: 0" in proc.stdout


class TestUsageAndDeterminism:
    def test_usage_error_exits_1(self):
        assert run_cli("scan").returncode == 1
        assert run_cli("unknown-command").returncode == 1

    def test_byte_identical_runs(self, acon_algebra, m2_algebra, tmp_path):
        out = tmp_path / "rebuilt.json"
        commands = [
            ("build", "--input", str(DATA / "contraction_dim12.json"),
             "--out", str(out), "--format", "json"),
            ("analyze", "--input", str(acon_algebra), "--format", "json"),
            ("scan", "--input", str(DATA / "dual_number_family.json"),
             "--base", "1/4", "--count", "6", "--format", "json"),
            ("obstruct", "--input", str(DATA / "contraction_dim12.json"),
             "--generators", "x,y", "--trials", "3", "--format", "json"),
            ("enumerate", "12", "--format", "json"),
            ("identity-span", "--input", str(m2_algebra), "--m", "1",
             "--format", "json"),
        ]
        for argv in commands:
            first = run_cli(*argv)
            second = run_cli(*argv)
            assert first.returncode == second.returncode == 0, first.stderr.decode()
            assert first.stdout == second.stdout, argv
