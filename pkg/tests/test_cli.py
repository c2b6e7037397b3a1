import io
import json

from qlatin.cli import main
from qlatin.qls_core import grid_from_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_gen_verify_round_trip(self, capsys, tmp_path):
        for gid in ("H(3)", "Hprime(6)", "W0", "Wk(2)", "W(5,6)", "A(1/2)"):
            code, out, _ = run_cli(capsys, "gen", gid)
            assert code == 0
            path = tmp_path / "grid.json"
            path.write_text(out)
            code, out, err = run_cli(capsys, "verify", str(path))
            assert code == 0, err
            assert out.startswith("OK")

    def test_gen_is_byte_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "gen", "W(5,6)")
        _, second, _ = run_cli(capsys, "gen", "W(5,6)")
        assert first == second

    def test_gen_pretty_format(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "H(0)", "--format", "pretty")
        assert code == 0
        assert out.startswith("order 4") and "|0>" in out

    def test_unknown_generator_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "Q(7)")
        assert code == 2 and "error:" in err


class TestPipes:
    def test_cardinality_from_stdin(self, capsys, monkeypatch):
        _, grid_json, _ = run_cli(capsys, "gen", "W(5,6)")
        monkeypatch.setattr("sys.stdin", io.StringIO(grid_json))
        code, out, _ = run_cli(capsys, "cardinality", "-")
        assert code == 0 and out.strip() == "16"

    def test_verify_from_stdin(self, capsys, monkeypatch):
        _, grid_json, _ = run_cli(capsys, "gen", "H(5)")
        monkeypatch.setattr("sys.stdin", io.StringIO(grid_json))
        code, out, _ = run_cli(capsys, "verify", "-")
        assert code == 0 and out.startswith("OK")


class TestSynth:
    def test_synth_pipeline(self, capsys, tmp_path):
        plan_path = tmp_path / "plan.json"
        code, out, err = run_cli(
            capsys, "synth", "--m", "2", "--c", "57", "--plan-out", str(plan_path)
        )
        assert code == 0
        grid = grid_from_json(out)
        assert grid.order == 8
        plan = json.loads(plan_path.read_text())
        assert plan["target_c"] == 57 and plan["regime"] == "QLS8-c57"
        assert err == ""  # plan went to the file, not stderr

    def test_synth_plan_to_stderr_by_default(self, capsys):
        code, out, err = run_cli(capsys, "synth", "--m", "2", "--c", "12")
        assert code == 0
        assert json.loads(err)["target_c"] == 12
        assert grid_from_json(out).order == 8

    def test_synth_output_feeds_verify_and_cardinality(self, capsys, monkeypatch, tmp_path):
        code, out, _ = run_cli(capsys, "synth", "--m", "3", "--c", "100")
        assert code == 0
        path = tmp_path / "g.json"
        path.write_text(out)
        code, out2, _ = run_cli(capsys, "verify", str(path))
        assert code == 0
        code, out3, _ = run_cli(capsys, "cardinality", str(path))
        assert code == 0 and out3.strip() == "100"

    def test_synth_is_byte_deterministic(self, capsys):
        _, first, err1 = run_cli(capsys, "synth", "--m", "2", "--c", "40")
        _, second, err2 = run_cli(capsys, "synth", "--m", "2", "--c", "40")
        assert first == second and err1 == err2

    def test_impossible_target_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "synth", "--m", "3", "--c", "13")
        assert code == 2
        assert "impossible" in err

    def test_out_of_range_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "synth", "--m", "2", "--c", "100")
        assert code == 2 and "error:" in err


class TestVerifyFailures:
    def test_corrupted_grid_exits_1(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "gen", "H(0)")
        obj = json.loads(out)
        # duplicate one cell inside a row: orthogonality breaks, schema stays valid
        obj["cells"][0][1] = obj["cells"][0][0]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, _, err = run_cli(capsys, "verify", str(path))
        assert code == 1 and "FAIL" in err
        code, _, err = run_cli(capsys, "cardinality", str(path))
        assert code == 1

    def test_malformed_json_exits_2(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{this is not json")
        code, _, err = run_cli(capsys, "verify", str(path))
        assert code == 2 and "error:" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "/nonexistent/grid.json")
        assert code == 2

    def test_verify_jobs_flag(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "gen", "W(7,8)")
        path = tmp_path / "g.json"
        path.write_text(out)
        code, out, _ = run_cli(capsys, "verify", str(path), "--jobs", "4")
        assert code == 0 and out.startswith("OK")


class TestRangeAndClaims:
    def test_range_output(self, capsys):
        code, out, _ = run_cli(capsys, "range", "--m", "2")
        assert code == 0 and out == "[8,64] excluding 9\n"
        code, out, _ = run_cli(capsys, "range", "--m", "4")
        assert code == 0 and out == "[16,256] excluding 17\n"

    def test_range_rejects_small_m(self, capsys):
        code, _, err = run_cli(capsys, "range", "--m", "1")
        assert code == 2

    def test_claims_subcommand(self, capsys):
        code, out, _ = run_cli(
            capsys, "claims", "--witness-bound", "2", "--m", "2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert all(item["status"] == "pass" for item in payload)

    def test_bad_arguments_exit_2(self, capsys):
        assert run_cli(capsys, "synth", "--m", "2")[0] == 2  # missing --c
        assert run_cli(capsys, "nonsense")[0] == 2
        assert run_cli(capsys)[0] == 2
