"""series: coefficients of the named series and the derived elements."""

import argparse
import json

from algebra.series import DERIVED_NAMES, SERIES_NAMES, derived_element, named_series
from commands import emit, output_format
from utils.config import settings


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("series", parents=parents, help="print series coefficients")
    parser.add_argument("--name", required=True, choices=SERIES_NAMES + DERIVED_NAMES)
    parser.set_defaults(handler=cmd_series)


def _derived_indices(name: str, order: int) -> list[int]:
    if name == "Lbar":
        return list(range(2, order + 1, 2))
    if name == "Mbar":
        return list(range(1, order + 1, 2))
    return list(range(4, order + 1, 4))


def coefficients(name: str, order: int) -> list[tuple[str, object]]:
    """(label, FreeElement) pairs in increasing index."""
    if name in DERIVED_NAMES:
        return [(f"{name}{n}", derived_element(name, n)) for n in _derived_indices(name, order)]
    series = named_series(name, order)
    return [(f"u^{k}", series.coefficient(k)) for k in series.exponents()]


def cmd_series(args: argparse.Namespace) -> int:
    order = settings.series_order
    entries = coefficients(args.name, order)
    if output_format(args) == "json":
        payload = {
            "schema": 1,
            "name": args.name,
            "order": order,
            "coefficients": [{"label": label, "terms": element.to_json()} for label, element in entries],
        }
        emit(json.dumps(payload, indent=2) + "\n", args)
    else:
        lines = [f"{label}: {element.to_text()}" for label, element in entries] or ["0"]
        emit("\n".join(lines) + "\n", args)
    return 0
