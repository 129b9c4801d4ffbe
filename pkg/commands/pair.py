"""pair: evaluate an expression against a word."""

import argparse
import json

from algebra.free_algebra import parse_word, word_text
from algebra.nichols import nichols_kernel
from algebra.scalars import scalar_to_json, to_text
from commands import emit, output_format
from utils.expressions import parse_expression


def add_parser(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("pair", parents=parents, help="pairing of an expression with a word")
    parser.add_argument("--expr", required=True, help='e.g. "[X1,X2]"')
    parser.add_argument("--word", required=True, help="e.g. x1x1x1x2")
    parser.set_defaults(handler=cmd_pair)


def cmd_pair(args: argparse.Namespace) -> int:
    element = parse_expression(args.expr)
    word = parse_word(args.word)
    value = nichols_kernel.pairing(element, word)
    if output_format(args) == "json":
        payload = {"expr": args.expr, "word": word_text(word), "value": scalar_to_json(value)}
        emit(json.dumps(payload, indent=2) + "\n", args)
    else:
        emit(to_text(value) + "\n", args)
    return 0
