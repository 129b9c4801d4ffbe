import fnmatch
import logging
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

from algebra.free_algebra import FreeElement, TensorElement
from algebra.nichols import NicholsKernel, nichols_kernel
from algebra.scalars import Scalar, to_text
from utils.config import settings
from utils.validation import CheckResult, Report, ReportSummary

logger = logging.getLogger(__name__)


class UnknownCheckError(KeyError):
    """Raised for a check id that is not registered."""


class CheckContext:
    """Collects the instances of one check run.

    Instances longer than ``max_letters`` are recorded as skipped before
    anything is built, so checks call ``skip`` first and construct second.
    """

    def __init__(self, kernel: NicholsKernel, params: dict[str, Any], max_letters: int):
        self.kernel = kernel
        self.params = params
        self.max_letters = max_letters
        self.instances = 0
        self.failures: list[str] = []
        self.skipped: list[str] = []
        self.residuals: list[str] = []

    def param(self, name: str, default: Any) -> Any:
        return self.params.get(name, default)

    def skip(self, label: str, letters: int) -> bool:
        if letters > self.max_letters:
            self.skipped.append(label)
            return True
        return False

    def _record(self, label: str, holds: bool, residual: str) -> None:
        self.instances += 1
        if holds:
            return
        self.failures.append(label)
        self.residuals.append(f"{label}: {residual}")
        logger.warning(f"Instance {label} failed")

    def expect_zero(self, label: str, element: FreeElement) -> None:
        if self.kernel.is_zero(element):
            self._record(label, True, "0")
            return
        # Confirm the failure through a single pairing before reporting it
        witness = next(iter(sorted(self.kernel.dual_coordinates(element))), None)
        if witness is None or not self.kernel.pairing(element, witness):
            raise RuntimeError(f"Zero test and pairing disagree on {label}")
        self._record(label, False, element.to_text())

    def expect_equal(self, label: str, lhs: FreeElement, rhs: FreeElement) -> None:
        self.expect_zero(label, lhs - rhs)

    def expect_tensor_zero(self, label: str, tensor: TensorElement) -> None:
        holds = self.kernel.tensor_is_zero(tensor)
        self._record(label, holds, "0" if holds else tensor.to_text())

    def expect_true(self, label: str, condition: bool, detail: str = "") -> None:
        self._record(label, bool(condition), "0" if condition else detail or "false")

    def expect_value(self, label: str, actual: Scalar | int | None, expected: Scalar | int) -> None:
        holds = actual is not None and actual == expected
        if holds:
            self._record(label, True, "0")
        elif actual is None:
            self._record(label, False, "not in the expected span")
        elif isinstance(expected, int):
            self._record(label, False, f"{actual} != {expected}")
        else:
            self._record(label, False, f"{to_text(actual)} != {to_text(expected)}")


def _skip_reason(context: CheckContext) -> str | None:
    if not context.skipped:
        return None
    if not context.instances:
        return "every instance exceeds the letter budget"
    return f"{len(context.skipped)} of {len(context.skipped) + context.instances} instances exceed the letter budget"


@dataclass(frozen=True)
class CheckDefinition:
    check_id: str
    description: str
    gated: bool
    func: Callable[[CheckContext], None]


class VerifierService:
    """Registry of named checks and the suite runner."""

    def __init__(self, kernel: NicholsKernel | None = None):
        self.kernel = kernel or nichols_kernel
        self._checks: dict[str, CheckDefinition] = {}

    def register(self, check_id: str, description: str, gated: bool = True):
        """Decorator adding a check function under ``check_id``."""

        def decorator(func: Callable[[CheckContext], None]) -> Callable[[CheckContext], None]:
            if check_id in self._checks:
                raise ValueError(f"Check '{check_id}' is already registered")
            self._checks[check_id] = CheckDefinition(check_id, description, gated, func)
            return func

        return decorator

    def check_ids(self) -> list[str]:
        return list(self._checks)

    def describe(self) -> list[CheckDefinition]:
        return list(self._checks.values())

    def get(self, check_id: str) -> CheckDefinition:
        definition = self._checks.get(check_id)
        if definition is None:
            raise UnknownCheckError(check_id)
        return definition

    def run_check(self, check_id: str, params: dict[str, Any] | None = None) -> CheckResult:
        """Run one check and return its result."""
        definition = self.get(check_id)
        params = dict(params or {})
        context = CheckContext(self.kernel, params, params.get("max_letters", settings.max_letters))
        start = time.perf_counter()
        try:
            definition.func(context)
        except Exception as e:
            logger.error(f"Check {check_id} raised: {str(e)}")
            raise
        elapsed = time.perf_counter() - start

        if context.failures:
            status = "fail"
        elif context.skipped:
            status = "partial" if context.instances else "skipped"
        else:
            status = "pass"
        parameters = {
            **params,
            "max_letters": context.max_letters,
            "rank_method": self.kernel.rank_method,
        }
        if self.kernel.rank_method == "multipoint":
            parameters["rank_points"] = self.kernel.rank_points
            parameters["rank_seed"] = self.kernel.rank_seed
        if context.skipped:
            parameters["skipped"] = list(context.skipped)
        result = CheckResult(
            check_id=check_id,
            description=definition.description,
            status=status,
            gated=definition.gated,
            residual="\n".join(context.residuals) if context.residuals else "0",
            instances=context.instances,
            failures=context.failures,
            reason=_skip_reason(context),
            parameters=parameters,
            wall_time=elapsed,
        )
        logger.info(f"{check_id}: {status} ({context.instances} instances, {elapsed:.2f}s)")
        return result

    def select(self, pattern: str = "*") -> list[str]:
        return [check_id for check_id in self._checks if fnmatch.fnmatchcase(check_id, pattern)]

    def run_suite(
        self,
        pattern: str = "*",
        params: dict[str, Any] | None = None,
        jobs: int | None = None,
    ) -> Report:
        """Run every check whose id matches ``pattern``, in catalogue order."""
        selected = self.select(pattern)
        jobs = jobs or settings.jobs
        logger.info(f"Running {len(selected)} checks matching '{pattern}' with {jobs} job(s)")
        start = time.perf_counter()
        if jobs > 1 and len(selected) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(lambda check_id: self.run_check(check_id, params), selected))
        else:
            results = [self.run_check(check_id, params) for check_id in selected]
        parameters = {
            "rank_method": self.kernel.rank_method,
            "max_letters": (params or {}).get("max_letters", settings.max_letters),
            "series_order": settings.series_order,
        }
        summary = ReportSummary.from_results(results)
        if summary.partial or summary.skipped:
            logger.warning(
                f"{summary.partial} checks ran partially and {summary.skipped} were skipped under the letter budget"
            )
        if self.kernel.rank_method == "multipoint":
            parameters["rank_points"] = self.kernel.rank_points
            parameters["rank_seed"] = self.kernel.rank_seed
        return Report(
            filter=pattern,
            parameters=parameters,
            results=results,
            summary=summary,
            wall_time=time.perf_counter() - start,
        )


# Global verifier instance
verifier_service = VerifierService()
register = verifier_service.register
