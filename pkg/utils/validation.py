"""Run configuration and report models."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from utils.config import HEIGHT_CONVENTIONS, OUTPUT_FORMATS, RANK_METHODS

CHECK_STATUSES = ("pass", "partial", "fail", "skipped")
REPORT_SCHEMA = 1


class RunConfig(BaseModel):
    """Flags of one CLI invocation."""

    subcommand: str = Field(default="relations")
    max_degree: int = Field(default=10, ge=1, le=24, description="Max total degree")
    order: int = Field(default=7, ge=1, le=16, description="Series truncation order")
    rank_method: str = Field(default="multipoint")
    rank_points: int = Field(default=3, ge=1, le=32)
    rank_seed: int = Field(default=1)
    height_convention: str = Field(default="characteristic-zero")
    output_format: str = Field(default="text")
    output: str | None = Field(default=None, description="Output path")
    jobs: int = Field(default=1, ge=1, le=64)

    @field_validator("rank_method")
    @classmethod
    def validate_rank_method(cls, v: str) -> str:
        if v.lower() not in RANK_METHODS:
            raise ValueError(f"Rank method must be one of: {list(RANK_METHODS)}")
        return v.lower()

    @field_validator("height_convention")
    @classmethod
    def validate_height_convention(cls, v: str) -> str:
        if v.lower() not in HEIGHT_CONVENTIONS:
            raise ValueError(
                f"Height convention must be one of: {list(HEIGHT_CONVENTIONS)}"
            )
        return v.lower()

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        if v.lower() not in OUTPUT_FORMATS:
            raise ValueError(f"Output format must be one of: {list(OUTPUT_FORMATS)}")
        return v.lower()


class CheckResult(BaseModel):
    """Outcome of one registered check."""

    check_id: str
    description: str = ""
    status: str
    gated: bool = True
    residual: str = "0"
    instances: int = Field(default=0, ge=0)
    failures: list[str] = Field(default_factory=list)
    reason: str | None = None
    parameters: dict[str, Any] = Field(default_factory=dict)
    wall_time: float | None = Field(default=None, ge=0)

    @field_validator("status")
    @classmethod
    def validate_status(cls, v: str) -> str:
        if v not in CHECK_STATUSES:
            raise ValueError(f"Check status must be one of: {list(CHECK_STATUSES)}")
        return v

    @property
    def blocks_gate(self) -> bool:
        return self.gated and self.status == "fail"


class ReportSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    partial: int = 0
    gated_failures: int = 0

    @classmethod
    def from_results(cls, results: list[CheckResult]) -> "ReportSummary":
        return cls(
            total=len(results),
            passed=sum(r.status == "pass" for r in results),
            failed=sum(r.status == "fail" for r in results),
            skipped=sum(r.status == "skipped" for r in results),
            partial=sum(r.status == "partial" for r in results),
            gated_failures=sum(r.blocks_gate for r in results),
        )


class Report(BaseModel):
    """A suite run, serialised with a versioned ``schema`` field."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=REPORT_SCHEMA, alias="schema")
    filter: str = "*"
    parameters: dict[str, Any] = Field(default_factory=dict)
    results: list[CheckResult] = Field(default_factory=list)
    summary: ReportSummary = Field(default_factory=ReportSummary)
    wall_time: float | None = None

    @property
    def passed_gate(self) -> bool:
        return self.summary.gated_failures == 0


class RootRecord(BaseModel):
    degree: tuple[int, int]
    multiplicity: int = Field(ge=0)
    height: int | None = None
    generators: list[str] = Field(default_factory=list)
    certified: bool = False


class DimensionRow(BaseModel):
    a1: int = Field(ge=0)
    a2: int = Field(ge=0)
    dim_t: int = Field(ge=0)
    dim_b: int = Field(ge=0)
    dim_serre: int | None = Field(default=None, ge=0)
    method: str = "multipoint"
    points: list[str] = Field(default_factory=list)
    certified: bool = False

    def csv_row(self) -> str:
        serre = "" if self.dim_serre is None else str(self.dim_serre)
        return f"{self.a1},{self.a2},{self.dim_t},{self.dim_b},{serre}"


def parse_degree(text: str) -> tuple[int, int]:
    """Read ``a1,a2``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ValueError(f"Degree must look like 'a1,a2', got '{text}'")
    return int(parts[0]), int(parts[1])


def validate_degree(degree: tuple[int, int], max_degree: int | None = None) -> list[str]:
    """Validate a bidegree against the sweep bound."""

    errors = []
    if len(degree) != 2:
        errors.append(f"Degree must have two entries, got {len(degree)}")
        return errors
    if any(d < 0 for d in degree):
        errors.append(f"Degree entries must be non-negative, got {degree}")
    if max_degree is not None and sum(degree) > max_degree:
        errors.append(f"Total degree {sum(degree)} exceeds the bound {max_degree}")
    return errors


def validate_run_config(config: RunConfig) -> list[str]:
    """Cross-field checks that the field validators cannot express."""

    errors = []
    if config.output_format == "csv" and config.subcommand not in ("hilbert", "roots"):
        errors.append("CSV output is only available for hilbert and roots")
    return errors
