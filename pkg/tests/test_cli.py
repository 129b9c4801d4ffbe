import json
import logging

import pytest

from main import build_parser, main
from utils.config import settings


@pytest.fixture(autouse=True)
def restore_settings():
    saved = settings.model_dump()
    yield
    for name, value in saved.items():
        setattr(settings, name, value)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_help_lists_checks():
    epilog = build_parser().epilog
    assert "serre.x" in epilog
    assert "remark3.7" in epilog


def test_pair_serre_expression(capsys):
    code, out = run(capsys, "pair", "--expr", "[X1,X2]", "--word", "x1x1x1x2")
    assert code == 0
    assert out == "0\n"


def test_pair_json(capsys):
    code, out = run(capsys, "pair", "--expr", "x1 x1", "--word", "x1x1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["word"] == "x1 x1"
    assert payload["value"]["den"] == [[0, "1", "0"]]


def test_config_file_enables_debug_logging(capsys, tmp_path):
    path = tmp_path / "nichols.env"
    path.write_text("NICHOLS_DEBUG=true\n")
    root = logging.getLogger()
    level = root.level
    try:
        code, _ = run(capsys, "pair", "--expr", "x1", "--word", "x1", "--config", str(path))
        assert code == 0
        assert root.level == logging.DEBUG
    finally:
        root.setLevel(level)


def test_relations_single_check(capsys):
    code, out = run(capsys, "relations", "--filter", "rel.2.4a")
    assert code == 0
    assert "rel.2.4a" in out
    assert "pass" in out


def test_relations_empty_filter(capsys):
    code, out = run(capsys, "relations", "--filter", "nonexistent.*")
    assert code == 0
    assert "0 checks" in out


def test_relations_json_omits_timings(capsys):
    code, out = run(capsys, "relations", "--filter", "serre.*", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert [r["check_id"] for r in payload["results"]] == ["serre.x", "serre.y"]
    assert all(r["status"] == "pass" for r in payload["results"])
    assert "wall_time" not in payload
    assert "wall_time" not in payload["results"][0]


def test_checks_listing(capsys):
    code, out = run(capsys, "checks", "--format", "json")
    assert code == 0
    ids = [entry["id"] for entry in json.loads(out)]
    assert ids[0] == "serre.x"
    assert "iso.thm4.1" in ids


def test_roots_json(capsys):
    code, out = run(capsys, "roots", "--max-degree", "4", "--format", "json")
    assert code == 0
    roots = {tuple(r["degree"]): r["mult"] for r in json.loads(out)["roots"]}
    assert roots[(1, 1)] == 1
    assert roots[(2, 2)] == 2
    assert roots[(1, 0)] == 1
    assert (2, 0) not in roots


def test_hilbert_csv(capsys):
    code, out = run(capsys, "hilbert", "--max-degree", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a1,a2,dimT,dimB,dimSerre"
    assert "0,0,1,1,1" in lines
    assert "1,1,2,2,2" in lines
    assert "2,1,3,3,3" in lines


def test_hilbert_rows_are_certified(capsys):
    code, out = run(capsys, "hilbert", "--max-degree", "2", "--no-serre", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows
    assert all(row["certified"] for row in rows)


def test_hilbert_to_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out = run(capsys, "hilbert", "--max-degree", "2", "--no-serre", "--format", "csv", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[1] == "0,0,1,1,"


def test_pbw_json(capsys):
    code, out = run(capsys, "pbw", "--degree", "2,2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 6
    assert len(payload["monomials"]) == 6


def test_series_listing(capsys):
    code, out = run(capsys, "series", "--name", "X", "--order", "2")
    assert code == 0
    assert out.startswith("u^2: ")


def test_subquotient_primitive(capsys):
    code, out = run(capsys, "subquotient", "--primitive", "L1")
    assert code == 0
    assert out == "primitive\n"


def test_subquotient_coproduct_json(capsys):
    code, out = run(capsys, "subquotient", "--coproduct", "L1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["expr"] == "L1"
    assert payload["coordinates"]


@pytest.mark.parametrize(
    "argv",
    [
        ["pair", "--expr", "[x1,", "--word", "x1"],
        ["relations", "--filter", "serre.x", "--format", "csv"],
        ["pbw", "--degree", "a,b"],
        ["hilbert", "--max-degree", "2", "--rank-points", "0"],
        ["subquotient", "--coproduct", "X2"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
