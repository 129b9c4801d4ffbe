"""Database models for stored verification runs and dimension tables."""

import uuid
from typing import Any

from sqlalchemy import (
    JSON,
    Boolean,
    Column,
    DateTime,
    Float,
    ForeignKey,
    Integer,
    String,
    Text,
)
from sqlalchemy.orm import declarative_base, relationship
from sqlalchemy.sql import func

Base = declarative_base()


class SuiteRun(Base):
    """One invocation of the check suite."""

    __tablename__ = "suite_runs"

    id = Column(String, primary_key=True, default=lambda: str(uuid.uuid4()))
    created_at = Column(DateTime, nullable=False, default=func.now())

    filter = Column(String, nullable=False, default="*")
    parameters = Column(JSON, nullable=False, default=dict)
    status = Column(String, nullable=False, default="pass")  # pass, fail

    total = Column(Integer, nullable=False, default=0)
    passed = Column(Integer, nullable=False, default=0)
    failed = Column(Integer, nullable=False, default=0)
    skipped = Column(Integer, nullable=False, default=0)
    partial = Column(Integer, nullable=False, default=0)  # ran within budget, some instances skipped
    duration = Column(Float, nullable=True)  # seconds

    report = Column(JSON, nullable=True)

    checks = relationship("CheckRecord", back_populates="run", cascade="all, delete-orphan")

    def __repr__(self):
        return f"<SuiteRun(id='{self.id}', filter='{self.filter}', status='{self.status}')>"

    def to_dict(self) -> dict[str, Any]:
        return {
            "run_id": self.id,
            "created_at": self.created_at.isoformat() if self.created_at else None,
            "filter": self.filter,
            "parameters": self.parameters,
            "status": self.status,
            "counts": {
                "total": self.total,
                "passed": self.passed,
                "failed": self.failed,
                "skipped": self.skipped,
                "partial": self.partial,
            },
            "duration": self.duration,
        }

    @classmethod
    def from_report(cls, report: Any) -> "SuiteRun":
        """Build a run and its check records from a ``Report``."""
        summary = report.summary
        run = cls(
            filter=report.filter,
            parameters=report.parameters,
            status="pass" if report.passed_gate else "fail",
            total=summary.total,
            passed=summary.passed,
            failed=summary.failed,
            skipped=summary.skipped,
            partial=summary.partial,
            duration=report.wall_time,
            report=report.model_dump(mode="json", by_alias=True),
        )
        run.checks = [CheckRecord.from_result(result) for result in report.results]
        return run


class CheckRecord(Base):
    """Result of one check within a stored run."""

    __tablename__ = "check_records"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(String, ForeignKey("suite_runs.id"), nullable=False, index=True)
    check_id = Column(String, nullable=False, index=True)
    status = Column(String, nullable=False)  # pass, partial, fail, skipped
    gated = Column(Boolean, nullable=False, default=True)
    residual = Column(Text, nullable=False, default="0")
    instances = Column(Integer, nullable=False, default=0)
    wall_time = Column(Float, nullable=True)
    parameters = Column(JSON, nullable=False, default=dict)

    run = relationship("SuiteRun", back_populates="checks")

    def __repr__(self):
        return f"<CheckRecord(check_id='{self.check_id}', status='{self.status}')>"

    @classmethod
    def from_result(cls, result: Any) -> "CheckRecord":
        return cls(
            check_id=result.check_id,
            status=result.status,
            gated=result.gated,
            residual=result.residual,
            instances=result.instances,
            wall_time=result.wall_time,
            parameters=result.parameters,
        )


class DimensionRecord(Base):
    """A Hilbert table row."""

    __tablename__ = "dimension_records"

    id = Column(Integer, primary_key=True, autoincrement=True)
    created_at = Column(DateTime, nullable=False, default=func.now())

    a1 = Column(Integer, nullable=False)
    a2 = Column(Integer, nullable=False)
    rank_method = Column(String, nullable=False)
    dim_t = Column(Integer, nullable=False)
    dim_b = Column(Integer, nullable=False)
    dim_serre = Column(Integer, nullable=True)
    # Exact ranks, and multipoint ranks matching the PBW count
    certified = Column(Boolean, nullable=False, default=False)

    def __repr__(self):
        return f"<DimensionRecord(degree=({self.a1},{self.a2}), dim_b={self.dim_b})>"

    @classmethod
    def from_row(cls, row: Any) -> "DimensionRecord":
        return cls(
            a1=row.a1,
            a2=row.a2,
            rank_method=row.method,
            dim_t=row.dim_t,
            dim_b=row.dim_b,
            dim_serre=row.dim_serre,
            certified=row.certified or row.method == "exact",
        )
