"""roots and pbw: the root table and PBW listings."""

import argparse
import json

from algebra.lyndon import root_system
from algebra.nichols import nichols_kernel
from commands import emit, output_format
from services.report_service import report_service
from utils.config import settings
from utils.validation import RootRecord, parse_degree, validate_degree


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("roots", parents=parents, help="root multiplicities up to --max-degree")
    parser.set_defaults(handler=cmd_roots)

    pbw = subparsers.add_parser("pbw", parents=parents, help="PBW monomials at one degree")
    pbw.add_argument("--degree", required=True, help="bidegree a1,a2")
    pbw.set_defaults(handler=cmd_pbw)


def root_records(max_degree: int) -> list[RootRecord]:
    return [
        RootRecord(
            degree=datum.degree,
            multiplicity=datum.multiplicity,
            height=datum.height,
            generators=[root.name for root in datum.generators],
            certified=datum.certified,
        )
        for datum in root_system.compute_roots(max_degree)
    ]


def cmd_roots(args: argparse.Namespace) -> int:
    records = root_records(settings.max_degree)
    emit(report_service.render_roots(records, output_format(args)), args)
    return 0


def cmd_pbw(args: argparse.Namespace) -> int:
    degree = parse_degree(args.degree)
    errors = validate_degree(degree)
    if errors:
        raise ValueError("; ".join(errors))
    monomials = root_system.pbw_monomials(degree)
    dimension = nichols_kernel.dimension(degree)
    if output_format(args) == "json":
        payload = {
            "schema": 1,
            "degree": list(degree),
            "dimension": dimension,
            "monomials": [m.name for m in monomials],
        }
        emit(json.dumps(payload, indent=2) + "\n", args)
    else:
        lines = [f"degree {degree}: {len(monomials)} monomials, dim B = {dimension}"]
        lines.extend(f"  {m.name}" for m in monomials)
        emit("\n".join(lines) + "\n", args)
    return 0
