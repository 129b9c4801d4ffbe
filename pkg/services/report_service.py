import json
import logging
import sys
from typing import Any

from database.connection import DatabaseManager, db_manager
from database.models import DimensionRecord, SuiteRun
from utils.config import settings
from utils.validation import DimensionRow, Report, RootRecord

logger = logging.getLogger(__name__)

HILBERT_HEADER = "a1,a2,dimT,dimB,dimSerre"
ROOTS_HEADER = "a1,a2,multiplicity,height,generators"


class ReportService:
    """Serialise reports and tables, and persist them on request."""

    def __init__(self, database: DatabaseManager | None = None):
        self.database = database or db_manager
        self._tables_ready = False

    # Serialisation

    def to_payload(self, report: Report, include_timings: bool | None = None) -> dict[str, Any]:
        """JSON-ready dict; wall times only when timings are requested."""
        if include_timings is None:
            include_timings = settings.include_timings
        exclude: dict[str, Any] = {}
        if not include_timings:
            exclude = {"wall_time": True, "results": {"__all__": {"wall_time"}}}
        return report.model_dump(mode="json", by_alias=True, exclude=exclude)

    def render_json(self, report: Report, include_timings: bool | None = None) -> str:
        return json.dumps(self.to_payload(report, include_timings), indent=2, ensure_ascii=False) + "\n"

    def render_text(self, report: Report) -> str:
        lines = [f"Checks matching '{report.filter}'"]
        width = max((len(r.check_id) for r in report.results), default=8)
        for result in report.results:
            gate = "" if result.gated else "  (ungated)"
            timing = f"{result.wall_time:8.2f}s" if result.wall_time is not None else ""
            lines.append(
                f"  {result.check_id:<{width}}  {result.status:<7}  {result.instances:>4} inst  {timing}{gate}"
            )
            if result.reason:
                lines.append(f"      {result.reason}")
            if result.status == "fail":
                for residual_line in result.residual.splitlines():
                    lines.append(f"      residual {residual_line}")
            skipped = result.parameters.get("skipped")
            if skipped:
                lines.append(f"      skipped {', '.join(skipped)}")
        s = report.summary
        lines.append(
            f"{s.total} checks: {s.passed} passed, {s.failed} failed, {s.skipped} skipped, {s.partial} partial"
            f" ({s.gated_failures} gated failures)"
        )
        if report.wall_time is not None:
            lines.append(f"Total time {report.wall_time:.2f}s")
        return "\n".join(lines) + "\n"

    def render(self, report: Report, output_format: str) -> str:
        if output_format == "json":
            return self.render_json(report)
        if output_format == "text":
            return self.render_text(report)
        raise ValueError(f"Reports render as text or json, not {output_format}")

    def render_hilbert(self, rows: list[DimensionRow], output_format: str) -> str:
        if output_format == "csv":
            return "\n".join([HILBERT_HEADER] + [row.csv_row() for row in rows]) + "\n"
        if output_format == "json":
            payload = {"schema": 1, "rows": [row.model_dump(mode="json") for row in rows]}
            return json.dumps(payload, indent=2) + "\n"
        lines = [f"{'degree':<10}{'dim T':>8}{'dim B':>8}{'dim Serre':>11}  dim B status"]
        for row in rows:
            serre = "-" if row.dim_serre is None else str(row.dim_serre)
            status = "certified" if row.certified else "lower bound"
            lines.append(f"{f'({row.a1},{row.a2})':<10}{row.dim_t:>8}{row.dim_b:>8}{serre:>11}  {status}")
        return "\n".join(lines) + "\n"

    def render_roots(self, records: list[RootRecord], output_format: str) -> str:
        if output_format == "csv":
            body = [
                f"{r.degree[0]},{r.degree[1]},{r.multiplicity},"
                f"{'' if r.height is None else r.height},{' '.join(r.generators)}"
                for r in records
            ]
            return "\n".join([ROOTS_HEADER] + body) + "\n"
        if output_format == "json":
            payload = {
                "schema": 1,
                "roots": [
                    {
                        "degree": list(r.degree),
                        "mult": r.multiplicity,
                        "height": r.height,
                        "generators": r.generators,
                        "certified": r.certified,
                    }
                    for r in records
                ],
            }
            return json.dumps(payload, indent=2) + "\n"
        lines = [f"{'degree':<10}{'mult':>6}{'height':>8}  generators"]
        for r in records:
            height = "inf" if r.height is None else str(r.height)
            note = "" if r.certified else "  (dim B is a lower bound)"
            lines.append(
                f"{str(r.degree).replace(' ', ''):<10}{r.multiplicity:>6}{height:>8}  {', '.join(r.generators)}{note}"
            )
        return "\n".join(lines) + "\n"

    def write(self, text: str, path: str | None = None) -> None:
        if path is None:
            sys.stdout.write(text)
            return
        try:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
            logger.info(f"Wrote {path}")
        except OSError as e:
            logger.error(f"Failed to write {path}: {str(e)}")
            raise

    # Persistence

    def _ensure_tables(self) -> None:
        if not self._tables_ready:
            self.database.create_tables()
            self._tables_ready = True

    def save_report(self, report: Report) -> str:
        """Store a suite run with its check records and return the run id."""
        self._ensure_tables()
        run = SuiteRun.from_report(report)
        with self.database.session_scope() as session:
            session.add(run)
            session.flush()
            run_id = run.id
        logger.info(f"Stored run {run_id} ({report.summary.total} checks)")
        return run_id

    def save_dimensions(self, rows: list[DimensionRow]) -> int:
        self._ensure_tables()
        with self.database.session_scope() as session:
            session.add_all([DimensionRecord.from_row(row) for row in rows])
        logger.info(f"Stored {len(rows)} dimension rows")
        return len(rows)


# Global report service instance
report_service = ReportService()
