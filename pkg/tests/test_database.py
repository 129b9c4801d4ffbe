import json
from pathlib import Path

import pytest
from alembic.config import Config
from alembic.script import ScriptDirectory

from database.models import CheckRecord, DimensionRecord, SuiteRun
from utils.validation import CheckResult, DimensionRow, Report, ReportSummary, RootRecord


def sample_report():
    results = [
        CheckResult(check_id="serre.x", description="[X1,X2] = 0", status="pass", instances=1, wall_time=0.5),
        CheckResult(
            check_id="rel.2.4b",
            status="skipped",
            parameters={"max_letters": 8, "skipped": ["[L3,L1^2]"]},
            wall_time=0.0,
        ),
    ]
    return Report(
        filter="*",
        parameters={"rank_method": "multipoint"},
        results=results,
        summary=ReportSummary.from_results(results),
        wall_time=0.5,
    )


# --- Connection ---


def test_connection(database):
    assert database.test_connection()
    assert database.get_health_status()["status"] == "healthy"


# --- Persistence ---


def test_save_report(database, reports):
    run_id = reports.save_report(sample_report())
    with database.session_scope() as session:
        run = session.get(SuiteRun, run_id)
        assert run.status == "pass"
        assert run.total == 2
        assert run.skipped == 1
        assert sorted(check.check_id for check in run.checks) == ["rel.2.4b", "serre.x"]
        assert run.to_dict()["counts"]["passed"] == 1
        assert run.to_dict()["counts"]["partial"] == 0


def test_failed_gate_recorded(database, reports):
    results = [CheckResult(check_id="toy.fail", status="fail", residual="x1: 1 * x1")]
    report = Report(results=results, summary=ReportSummary.from_results(results))
    run_id = reports.save_report(report)
    with database.session_scope() as session:
        assert session.get(SuiteRun, run_id).status == "fail"
        record = session.query(CheckRecord).filter_by(run_id=run_id).one()
        assert record.residual == "x1: 1 * x1"


def test_save_dimensions(database, reports):
    rows = [
        DimensionRow(a1=1, a2=1, dim_t=2, dim_b=2, dim_serre=2, method="exact"),
        DimensionRow(a1=2, a2=2, dim_t=6, dim_b=6, method="multipoint"),
        DimensionRow(a1=2, a2=1, dim_t=3, dim_b=3, method="multipoint", certified=True),
    ]
    assert reports.save_dimensions(rows) == 3
    with database.session_scope() as session:
        stored = {(r.a1, r.a2): r for r in session.query(DimensionRecord).all()}
        assert stored[(1, 1)].certified
        assert not stored[(2, 2)].certified
        assert stored[(2, 2)].dim_serre is None
        assert stored[(2, 1)].certified


# --- Rendering ---


def test_json_report_without_timings(reports):
    payload = json.loads(reports.render_json(sample_report(), include_timings=False))
    assert payload["schema"] == 1
    assert "wall_time" not in payload
    assert all("wall_time" not in result for result in payload["results"])


def test_json_report_with_timings(reports):
    payload = json.loads(reports.render_json(sample_report(), include_timings=True))
    assert payload["wall_time"] == 0.5


def test_text_report(reports):
    text = reports.render_text(sample_report())
    assert "serre.x" in text
    assert "skipped [L3,L1^2]" in text
    assert "2 checks: 1 passed, 0 failed, 1 skipped" in text


def test_render_rejects_csv_reports(reports):
    with pytest.raises(ValueError, match="text or json"):
        reports.render(sample_report(), "csv")


def test_hilbert_formats(reports):
    rows = [DimensionRow(a1=1, a2=1, dim_t=2, dim_b=2, dim_serre=2)]
    assert reports.render_hilbert(rows, "csv") == "a1,a2,dimT,dimB,dimSerre\n1,1,2,2,2\n"
    assert json.loads(reports.render_hilbert(rows, "json"))["rows"][0]["dim_b"] == 2
    assert "(1,1)" in reports.render_hilbert(rows, "text")
    assert "lower bound" in reports.render_hilbert(rows, "text")


def test_roots_formats(reports):
    records = [RootRecord(degree=(2, 2), multiplicity=2, height=None, generators=["L2", "M1^2"])]
    assert reports.render_roots(records, "csv").splitlines()[1] == "2,2,2,,L2 M1^2"
    payload = json.loads(reports.render_roots(records, "json"))
    assert payload["roots"] == [
        {"degree": [2, 2], "mult": 2, "height": None, "generators": ["L2", "M1^2"], "certified": False}
    ]
    assert "inf" in reports.render_roots(records, "text")
    assert "lower bound" in reports.render_roots(records, "text")
    certified = [RootRecord(degree=(1, 1), multiplicity=1, height=2, generators=["M1"], certified=True)]
    assert "lower bound" not in reports.render_roots(certified, "text")


def test_write_to_file(reports, tmp_path):
    target = tmp_path / "out.txt"
    reports.write("hello\n", str(target))
    assert target.read_text() == "hello\n"


def test_migration_script_resolves():
    config = Config(str(Path(__file__).resolve().parents[1] / "alembic.ini"))
    script = ScriptDirectory.from_config(config)
    assert script.get_current_head() == "3c1f7a9d2e40"
