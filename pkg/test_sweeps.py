import orjson
import pytest

from lenscontact.core.errors import OutOfScopeError, UsageError
from lenscontact.orchestrator.checks import CHECKS
from lenscontact.orchestrator.sweep_orchestrator import sweep_orchestrator

SMALL_PMAX = {
    "apq-oracle": 20,
    "f-recurrence": 40,
    "d3-bound": 25,
    "xican-min": 20,
    "count-bound": 40,
    "lp2-diophantine": 61,
    "35-triples": None,
    "p-bound-ai-2": 25,
    "p-bound-ai-large": 40,
    "thm-main": 20,
    "small-lens": 10,
    "det-product": 40,
    "r-bound": 40,
    "lp3-diophantine": 40,
    "f-bound-ai-large": 40,
    "large-negative": 15,
}


def collect(check, pmax, workers=1):
    lines = []
    summary = sweep_orchestrator.run(check, pmax=pmax, workers=workers, sink=lines.append)
    return summary, b"".join(lines)


def test_every_check_is_covered():
    assert set(SMALL_PMAX) == set(CHECKS)


@pytest.mark.parametrize("check", sorted(SMALL_PMAX))
def test_check_passes_on_small_range(check):
    summary, body = collect(check, SMALL_PMAX[check])
    assert summary.ok, summary.first_failure
    assert summary.rows > 0
    rows = [orjson.loads(line) for line in body.splitlines()]
    assert len(rows) == summary.rows
    assert all(row["pass"] for row in rows)


def test_35_triples():
    summary, body = collect("35-triples", None)
    rows = [orjson.loads(line) for line in body.splitlines()]
    assert summary.cases == summary.rows == 35
    assert len({tuple(row["coeffs"]) for row in rows}) == 35
    assert all(min(abs(a) for a in row["coeffs"]) == 3 for row in rows)


@pytest.mark.parametrize("check,pmax", [("apq-oracle", 15), ("p-bound-ai-2", 15), ("35-triples", None)])
def test_workers_do_not_change_certificate(check, pmax):
    certificates = [collect(check, pmax, workers=w)[1] for w in (1, 4, 16)]
    assert certificates[0] == certificates[1] == certificates[2]


def test_certificate_written_to_path(tmp_path):
    target = tmp_path / "certs" / "lp2.ndjson"
    summary = sweep_orchestrator.run("lp2-diophantine", pmax=31, workers=1, out=str(target))
    assert summary.certificate == str(target)
    lines = target.read_bytes().splitlines()
    assert len(lines) == summary.rows == 15
    assert orjson.loads(lines[2]) == {"p": 7, "rotation_numbers": [-1, 1], "pass": True}


def test_case_validation():
    with pytest.raises(UsageError):
        sweep_orchestrator.cases("no-such-check")
    with pytest.raises(OutOfScopeError):
        sweep_orchestrator.cases("apq-oracle", 1)
    assert sweep_orchestrator.cases("apq-oracle", 5) == [
        (2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4),
    ]
