import json
import subprocess
import sys

from pentachip.cli import main

ZERO = "[[0,0],[0,0],[0,0],[0,0],[0,0]]"
WORKED = "[[3,1],[4,-6],[7,1],[-8,-8],[3,0]]"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCanonicalize:
    def test_human(self, capsys):
        code, out, _ = run_cli(capsys, "canonicalize", WORKED)
        assert code == 0
        assert "(0, 1, 0, 0, 0)" in out
        assert "-5-i" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "canonicalize", WORKED, "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["canonical"] == [0, 1, 0, 0, 0]
        assert payload["certificate"][0] == [-5, -1]

    def test_bad_json_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "canonicalize", "[[nope")
        assert code == 1
        assert "parse" in err

    def test_wrong_arity_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "canonicalize", "[[0,0]]")
        assert code == 1
        assert "error (validation)" in err


class TestEquivalent:
    def test_yes(self, capsys):
        code, out, _ = run_cli(capsys, "equivalent", WORKED,
                               "[[0,0],[1,0],[0,0],[0,0],[0,0]]")
        assert code == 0
        assert "equivalent: yes" in out

    def test_no(self, capsys):
        code, out, _ = run_cli(capsys, "equivalent", ZERO,
                               "[[3,0],[0,0],[0,0],[0,0],[0,0]]")
        assert code == 0
        assert "equivalent: no" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "equivalent", ZERO, ZERO, "--json")
        assert json.loads(out)["equivalent"] is True


class TestGroupAndBases:
    def test_group_preset(self, capsys):
        code, out, _ = run_cli(capsys, "group", "--preset", "r10")
        assert code == 0
        assert "Z/3 + Z/3 + Z/3 + Z/6" in out
        assert "order: 162" in out

    def test_group_json(self, capsys):
        code, out, _ = run_cli(capsys, "group", '{"r":2,"n":3,"D":[[-1],[-1]]}', "--json")
        assert json.loads(out) == {"invariant_factors": [3], "order": 3}

    def test_group_not_tu_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "group", '{"r":2,"n":4,"D":[[1,1],[-1,1]]}')
        assert code == 2
        assert "not totally unimodular" in err

    def test_group_requires_input(self, capsys):
        code, _, err = run_cli(capsys, "group")
        assert code == 1

    def test_bases(self, capsys):
        code, out, _ = run_cli(capsys, "bases", "--preset", "r10", "--json")
        assert code == 0
        assert json.loads(out)["count"] == 162

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO('{"r":2,"n":3,"D":[[-1],[-1]]}'))
        code, out, _ = run_cli(capsys, "bases", "-", "--json")
        assert json.loads(out)["count"] == 3


class TestPuzzleCommand:
    def test_deterministic(self, capsys):
        code1, out1, _ = run_cli(capsys, "puzzle", "--seed", "9", "--difficulty", "6", "--json")
        code2, out2, _ = run_cli(capsys, "puzzle", "--seed", "9", "--difficulty", "6", "--json")
        assert code1 == code2 == 0
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["seed"] == 9
        assert payload["moves_applied"] == 6

    def test_bad_difficulty_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "puzzle", "--seed", "1", "--difficulty", "0")
        assert code == 1


class TestSelftestCommand:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "selftest")
        assert code == 0
        assert "10/10 checks passed" in out
        assert out.count("[ok  ]") == 10


class TestSubprocessEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "pentachip", "canonicalize", ZERO, "--json"],
            capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["canonical"] == [0, 0, 0, 0, 0]

    def test_serve_round_trip(self):
        request = json.dumps({"op": "group", "params": {"preset": "r10"}, "id": 1})
        proc = subprocess.run(
            [sys.executable, "-m", "pentachip", "serve"],
            input=request + "\n", capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0
        response = json.loads(proc.stdout.strip())
        assert response["result"]["order"] == 162
