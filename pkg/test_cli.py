import orjson
import pytest
import typer.main

from lenscontact.main import OPERATIONS, app, run


def invoke(capsys, *args):
    code = run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_d3can_json(capsys):
    code, out, _ = invoke(capsys, "tight", "d3can", "-p", "7", "-q", "3", "--json")
    assert code == 0
    assert orjson.loads(out) == {"d3": "1/7"}


def test_plain_text_outputs(capsys):
    assert invoke(capsys, "rot", "-p", "7", "-q", "2")[1].strip() == "-1 1"
    assert invoke(capsys, "cf", "expand", "-p", "7", "-q", "2")[1].strip() == "-4 -2"
    assert invoke(capsys, "cf", "eval", "--coeffs=-4,-2")[1].strip() == "-7/2"
    assert invoke(capsys, "cf", "partner", "-p", "7", "-q", "2")[1].strip() == "L(7,4)"


def test_envelope(capsys):
    code, out, _ = invoke(capsys, "tight", "count", "-p", "7", "-q", "2", "--json", "--envelope")
    assert code == 0
    body = orjson.loads(out)
    assert set(body) == {"command", "parameters", "result", "version"}
    assert body["command"] == "tight count"
    assert body["result"] == {"count": 3}


def test_tight_list_csv(capsys):
    code, out, _ = invoke(capsys, "tight", "list", "-p", "7", "-q", "2", "--csv")
    assert code == 0
    assert out == "rvec,d3\n-2 0,-2/7\n0 0,0\n2 0,-2/7\n"


def test_table_output(capsys):
    code, out, _ = invoke(capsys, "tight", "spectrum", "-p", "7", "-q", "2")
    assert code == 0
    assert "-2/7" in out and "d3" in out


def test_feasible_json(capsys):
    code, out, _ = invoke(capsys, "feasible", "-p", "7", "-q", "2", "--tb-bar=-4", "--json")
    assert code == 0
    body = orjson.loads(out)
    assert body["verdict"] == "RULED_OUT"
    assert [r["rule"] for r in body["reasons"]] == ["STABILIZATIONS_NOT_COVERED"]


@pytest.mark.parametrize(
    "args,expected",
    [
        (["rot", "-p", "6", "-q", "4"], 2),
        (["sweep", "--check", "no-such-check"], 2),
        (["feasible", "-p", "7", "-q", "2", "--tb-bar=-7"], 2),
        (["tight", "list", "-p", "7", "-q", "2", "--cap", "2"], 3),
        (["tight", "nonsense"], 2),
    ],
)
def test_exit_codes(capsys, args, expected):
    code, _, err = invoke(capsys, *args)
    assert code == expected
    assert err


def test_capacity_error_detail(capsys):
    _, _, err = invoke(capsys, "tight", "list", "-p", "7", "-q", "2", "--cap", "2")
    assert err.startswith("error: ")
    detail = orjson.loads(err.splitlines()[1])
    assert detail["detail"] == {"count": 3, "cap": 2}


def test_version(capsys):
    code, out, _ = invoke(capsys, "--version")
    assert code == 0
    assert out.strip() == "1.0.0"


def test_every_operation_has_a_command():
    root = typer.main.get_command(app)
    for operation, path in OPERATIONS.items():
        node = root
        for name in path.split():
            assert name in node.commands, f"{operation} -> {path}"
            node = node.commands[name]


@pytest.mark.parametrize("workers", ["4", "16"])
def test_sweep_to_stdout_is_deterministic(capsys, workers):
    first = invoke(capsys, "sweep", "--check", "apq-oracle", "--pmax", "12", "--out", "-", "--workers", "1")
    again = invoke(capsys, "sweep", "--check", "apq-oracle", "--pmax", "12", "--out", "-", "--workers", "1")
    parallel = invoke(capsys, "sweep", "--check", "apq-oracle", "--pmax", "12", "--out", "-", "--workers", workers)
    assert first[0] == again[0] == parallel[0] == 0
    assert first[1] == again[1] == parallel[1]
    assert all(orjson.loads(line)["pass"] for line in first[1].splitlines())


def test_sweep_certificate_file(capsys, tmp_path):
    target = tmp_path / "triples.ndjson"
    code, out, _ = invoke(capsys, "sweep", "--check", "35-triples", "--out", str(target), "--json")
    assert code == 0
    assert orjson.loads(out)["rows"] == 35
    assert len(target.read_bytes().splitlines()) == 35
