"""relations and checks: run the verifier suite or list what it contains."""

import argparse
import json

from commands import emit, output_format, should_store
from services import checks  # noqa: F401  (fills the registry)
from services.report_service import report_service
from services.verifier_service import verifier_service
from utils.config import settings


def catalogue_text() -> str:
    width = max(len(check_id) for check_id in verifier_service.check_ids())
    lines = ["registered checks:"]
    for definition in verifier_service.describe():
        gate = "" if definition.gated else " (ungated)"
        lines.append(f"  {definition.check_id:<{width}}  {definition.description}{gate}")
    return "\n".join(lines)


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "relations",
        parents=parents,
        help="run registered checks",
        epilog=catalogue_text(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--filter", default="*", help="glob over check ids (default: *)")
    parser.add_argument("--max-letters", type=int, default=None, help="largest word length a check instance may test")
    parser.set_defaults(handler=cmd_relations)

    listing = subparsers.add_parser("checks", parents=parents, help="list registered checks")
    listing.set_defaults(handler=cmd_checks)


def cmd_relations(args: argparse.Namespace) -> int:
    params = {}
    if args.max_letters is not None:
        params["max_letters"] = args.max_letters
    report = verifier_service.run_suite(args.filter, params, jobs=args.jobs or settings.jobs)
    emit(report_service.render(report, output_format(args)), args)
    if should_store(args):
        report_service.save_report(report)
    return 0 if report.passed_gate else 1


def cmd_checks(args: argparse.Namespace) -> int:
    if output_format(args) == "json":
        payload = [
            {"id": d.check_id, "description": d.description, "gated": d.gated}
            for d in verifier_service.describe()
        ]
        emit(json.dumps(payload, indent=2) + "\n", args)
    else:
        emit(catalogue_text() + "\n", args)
    return 0
