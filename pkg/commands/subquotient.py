"""subquotient: balanced coproducts and primitivity of parsed elements."""

import argparse
import json

from algebra.free_algebra import word_text
from algebra.nichols import nichols_kernel
from algebra.scalars import scalar_to_json, to_text
from algebra.subquotient import is_primitive, subquotient_coproduct
from commands import emit, output_format
from utils.expressions import parse_expression


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("subquotient", parents=parents, help="coproduct or primitivity in K>=1/K>1")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--coproduct", metavar="EXPR", help="balanced coproduct of EXPR")
    target.add_argument("--primitive", metavar="EXPR", help="test EXPR for primitivity")
    parser.set_defaults(handler=cmd_subquotient)


def cmd_subquotient(args: argparse.Namespace) -> int:
    fmt = output_format(args)
    if args.primitive is not None:
        primitive = is_primitive(parse_expression(args.primitive))
        if fmt == "json":
            emit(json.dumps({"expr": args.primitive, "primitive": primitive}) + "\n", args)
        else:
            emit(f"{'primitive' if primitive else 'not primitive'}\n", args)
        return 0

    tensor = subquotient_coproduct(parse_expression(args.coproduct))
    coordinates = sorted(nichols_kernel.tensor_coordinates(tensor).items())
    if fmt == "json":
        payload = {
            "schema": 1,
            "expr": args.coproduct,
            "coordinates": [
                {"left": word_text(v), "right": word_text(w), "value": scalar_to_json(c)}
                for (v, w), c in coordinates
            ],
        }
        emit(json.dumps(payload, indent=2) + "\n", args)
    else:
        emit(tensor.to_text() + "\n", args)
    return 0
