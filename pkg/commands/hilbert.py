"""hilbert: graded dimensions of T(V), B(V) and the Serre quotient."""

import argparse
import logging

from algebra.free_algebra import words_of_degree
from algebra.lyndon import root_system
from algebra.nichols import nichols_kernel
from commands import emit, output_format, should_store
from services.report_service import report_service
from utils.config import settings
from utils.validation import DimensionRow

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("hilbert", parents=parents, help="dimension table up to --max-degree")
    parser.add_argument("--no-serre", action="store_true", help="skip the Serre quotient column")
    parser.set_defaults(handler=cmd_hilbert)


def hilbert_rows(max_degree: int, serre: bool = True) -> list[DimensionRow]:
    rows = []
    for total in range(max_degree + 1):
        for a1 in range(total + 1):
            degree = (a1, total - a1)
            result = root_system.certify_dimension(degree)
            rows.append(
                DimensionRow(
                    a1=degree[0],
                    a2=degree[1],
                    dim_t=len(words_of_degree(degree)),
                    dim_b=result.rank,
                    dim_serre=nichols_kernel.serre_quotient_dimension(degree) if serre else None,
                    method=result.method,
                    points=result.points,
                    certified=result.certified,
                )
            )
        logger.info(f"Total degree {total} done")
    return rows


def cmd_hilbert(args: argparse.Namespace) -> int:
    rows = hilbert_rows(settings.max_degree, serre=not args.no_serre)
    emit(report_service.render_hilbert(rows, output_format(args)), args)
    if should_store(args):
        report_service.save_dimensions(rows)
    return 0
