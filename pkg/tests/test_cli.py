import json

import pytest

from lctr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "eval", "5,3^2,2,1^2")
        assert code == 0 and out.strip() == "1"

    def test_engines_agree(self, capsys):
        values = set()
        for engine in ("grid", "memo", "naive"):
            code, out, _ = run(capsys, "eval", "4,3,1", "--engine", engine)
            assert code == 0
            values.add(out.strip())
        assert len(values) == 1

    def test_json(self, capsys):
        code, out, _ = run(capsys, "eval", "5,3^2,2,1^2", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc == {"partition": [5, 3, 3, 2, 1, 1], "engine": "grid", "sg": 1}

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "eval", "2,3")
        assert code == 2 and "error" in err

    def test_naive_guard_exits_2(self, capsys):
        code, _, err = run(capsys, "eval", "100", "--engine", "naive")
        assert code == 2 and "error" in err

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["eval"])
        assert exc.value.code == 2


class TestAnalysis:
    def test_outcome(self, capsys):
        assert run(capsys, "outcome", "7")[1].strip() == "N"
        assert run(capsys, "outcome", "6,1^4")[1].strip() == "P"

    def test_best_move(self, capsys):
        code, out, _ = run(capsys, "best-move", "5,3^2,2,1^2")
        assert code == 0 and out.strip() == "T 3^2,2,1^2"

    def test_followers(self, capsys):
        code, out, _ = run(capsys, "followers", "5,3^2,2,1^2")
        assert code == 0
        assert out.splitlines() == ["L 4,2^2,1 2", "T 3^2,2,1^2 0"]

    def test_followers_json(self, capsys):
        _, out, _ = run(capsys, "followers", "5,3^2,2,1^2", "--format", "json")
        doc = json.loads(out)
        assert doc["followers"]["L"] == {"partition": [4, 2, 2, 1], "sg": 2}
        assert doc["followers"]["T"] == {"partition": [3, 3, 2, 1, 1], "sg": 0}

    def test_reachable_count(self, capsys):
        code, out, _ = run(capsys, "reachable", "5,3^2,2,1^2", "--count")
        assert code == 0 and out.strip() == "11"
        # count is the default
        assert run(capsys, "reachable", "5,3^2,2,1^2")[1].strip() == "11"

    def test_reachable_list(self, capsys):
        code, out, _ = run(capsys, "reachable", "6,5,4,3,2,1", "--list")
        assert code == 0
        assert out.splitlines() == ["()", "1", "2,1", "3,2,1", "4,3,2,1", "5,4,3,2,1"]

    def test_plays(self, capsys):
        assert run(capsys, "plays", "6,5,4,3,2,1")[1].strip() == "64"
        assert run(capsys, "plays", "5,3^2,2,1^2")[1].strip() == "29"

    def test_plays_json_is_valid(self, capsys):
        _, out, _ = run(capsys, "plays", "10^10", "--format", "json")
        doc = json.loads(out)
        assert doc["plays"] > 0


class TestVerify:
    def test_single_family(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "staircase")
        assert code == 0
        assert "family=staircase total=40 passed=40 failed=0" in out

    def test_all_with_tight_bounds(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--family",
            "all",
            "--bound",
            "max_width=8",
            "--bound",
            "max_height=8",
            "--bound",
            "max_rows=8",
            "--bound",
            "max_steps=8",
            "--bound",
            "max_arm=8",
            "--bound",
            "max_leg=8",
            "--bound",
            "max_half_width=4",
        )
        assert code == 0
        assert out.count("failed=0") == 6

    def test_json_document(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "staircase", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["reports"][0]["family"] == "staircase"

    def test_mismatch_exits_1(self, capsys, monkeypatch):
        from lctr import families

        monkeypatch.setattr(families, "sg_staircase", lambda steps: 2)
        code, out, _ = run(capsys, "verify", "--family", "staircase")
        assert code == 1
        assert "MISMATCH" in out

    def test_bad_bound_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "--family", "staircase", "--bound", "junk")
        assert code == 2 and "error" in err


class TestBench:
    def test_csv_output(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--sizes", "100,1000", "--shape", "staircase",
            "--engines", "grid,memo",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "engine,shape,size,millis"
        assert len(lines) == 5
        for line in lines[1:]:
            engine, shape, size, millis = line.split(",")
            assert engine in ("grid", "memo")
            assert shape == "staircase"
            assert int(size) >= 100
            assert float(millis) >= 0

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--sizes", "100", "--shape", "random",
            "--engines", "grid", "--seed", "7",
        )
        assert code == 0  # plain CSV by default; now the json form
        code, out, _ = run(
            capsys, "bench", "--sizes", "100", "--shape", "random",
            "--engines", "grid", "--seed", "7", "--format", "json",
        )
        doc = json.loads(out)
        assert code == 0 and doc["rows"][0]["engine"] == "grid"

    def test_reproducible_with_seed(self, capsys):
        _, first, _ = run(
            capsys, "bench", "--sizes", "500", "--shape", "random",
            "--engines", "grid", "--seed", "3",
        )
        _, second, _ = run(
            capsys, "bench", "--sizes", "500", "--shape", "random",
            "--engines", "grid", "--seed", "3",
        )
        size_of = lambda out: out.strip().splitlines()[1].split(",")[2]
        assert size_of(first) == size_of(second)

    def test_unknown_engine_exits_2(self, capsys):
        code, _, err = run(capsys, "bench", "--sizes", "100", "--engines", "warp")
        assert code == 2 and "error" in err


class TestServe:
    def test_port_validation(self):
        with pytest.raises(SystemExit) as exc:
            main(["serve", "--port", "70000"])
        assert exc.value.code == 2

    def test_log_path_from_env(self, capsys, monkeypatch, tmp_path):
        import uvicorn

        captured = {}

        def fake_run(app, host, port):
            captured["app"] = app
            captured["port"] = port

        monkeypatch.setattr(uvicorn, "run", fake_run)
        monkeypatch.setenv("LCTR_LOG", str(tmp_path / "moves.jsonl"))
        code = main(["serve", "--port", "8100"])
        assert code == 0
        assert captured["port"] == 8100
        assert captured["app"].state.store._log_path == str(tmp_path / "moves.jsonl")
