import pytest
from pydantic import ValidationError

from utils.config import Settings, load_settings
from utils.validation import (
    CheckResult,
    DimensionRow,
    Report,
    ReportSummary,
    RunConfig,
    parse_degree,
    validate_degree,
    validate_run_config,
)


def test_run_config_normalises_case():
    config = RunConfig(rank_method="EXACT", output_format="Json", height_convention="Literal")
    assert config.rank_method == "exact"
    assert config.output_format == "json"
    assert config.height_convention == "literal"


@pytest.mark.parametrize(
    "field, value",
    [("rank_method", "guess"), ("output_format", "xml"), ("rank_points", 0), ("max_degree", 0), ("jobs", 0)],
)
def test_run_config_rejects(field, value):
    with pytest.raises(ValidationError):
        RunConfig(**{field: value})


def test_csv_only_for_tables():
    assert validate_run_config(RunConfig(subcommand="hilbert", output_format="csv")) == []
    assert validate_run_config(RunConfig(subcommand="roots", output_format="csv")) == []
    assert validate_run_config(RunConfig(subcommand="relations", output_format="csv"))


def test_parse_degree():
    assert parse_degree("3,2") == (3, 2)
    assert parse_degree(" 1 , 0 ") == (1, 0)
    for bad in ("3", "a,b", "1,2,3", "-1,2"):
        with pytest.raises(ValueError, match="Degree must look like"):
            parse_degree(bad)


def test_validate_degree():
    assert validate_degree((2, 2)) == []
    assert validate_degree((2, 2), max_degree=3)
    assert validate_degree((-1, 2))


def test_check_status_validated():
    with pytest.raises(ValidationError):
        CheckResult(check_id="x", status="maybe")


def test_summary_counts_gated_failures():
    results = [
        CheckResult(check_id="a", status="pass"),
        CheckResult(check_id="b", status="fail"),
        CheckResult(check_id="c", status="fail", gated=False),
        CheckResult(check_id="d", status="skipped"),
    ]
    summary = ReportSummary.from_results(results)
    assert (summary.total, summary.passed, summary.failed, summary.skipped) == (4, 1, 2, 1)
    assert summary.gated_failures == 1
    assert not Report(results=results, summary=summary).passed_gate


def test_report_schema_alias():
    report = Report()
    assert report.schema_version == 1
    assert report.model_dump(by_alias=True)["schema"] == 1
    assert Report(schema=2).schema_version == 2


def test_dimension_row_csv():
    assert DimensionRow(a1=1, a2=1, dim_t=2, dim_b=2, dim_serre=2).csv_row() == "1,1,2,2,2"
    assert DimensionRow(a1=1, a2=0, dim_t=1, dim_b=1).csv_row() == "1,0,1,1,"


def test_settings_from_file(tmp_path):
    path = tmp_path / "nichols.env"
    path.write_text("NICHOLS_RANK_METHOD=exact\nNICHOLS_MAX_LETTERS=10\n")
    loaded = load_settings(str(path))
    assert loaded.rank_method == "exact"
    assert loaded.max_letters == 10


def test_settings_defaults():
    defaults = Settings(_env_file=None)
    assert defaults.max_letters == 14
    assert defaults.rank_points >= 3


def test_database_label_hides_credentials():
    settings = Settings(_env_file=None, database_url="postgresql://user:secret@db:5432/nichols")
    assert settings.database_label == "db:5432/nichols"
