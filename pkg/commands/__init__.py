"""CLI subcommands. Each module exposes ``add_parser`` and sets a ``handler`` default."""

import argparse

from services.report_service import report_service
from utils.config import settings


def output_format(args: argparse.Namespace) -> str:
    return args.format or settings.output_format


def emit(text: str, args: argparse.Namespace) -> None:
    report_service.write(text, getattr(args, "output", None))


def should_store(args: argparse.Namespace) -> bool:
    return bool(getattr(args, "store", False) or settings.store_results)
