"""Command-line entry point for the Nichols algebra engine."""

import argparse
import logging
import sys

from pydantic import ValidationError

from algebra.lyndon import root_system
from algebra.nichols import nichols_kernel
from commands import hilbert, pair, relations, roots, series, subquotient
from database.connection import db_manager
from services.verifier_service import UnknownCheckError
from utils.config import load_settings, settings
from utils.expressions import ExpressionError
from utils.validation import RunConfig, validate_run_config

logger = logging.getLogger(__name__)

COMMANDS = (relations, roots, hilbert, series, pair, subquotient)


def common_flags() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; unset flags fall back to settings."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", help="key=value settings file (also NICHOLS_CONFIG)")
    parent.add_argument("--max-degree", type=int, help=f"total degree bound (default {settings.max_degree})")
    parent.add_argument("--order", type=int, help=f"series truncation order (default {settings.series_order})")
    parent.add_argument("--rank-method", choices=("exact", "multipoint"), help=f"default {settings.rank_method}")
    parent.add_argument("--rank-points", type=int, help=f"evaluation points (default {settings.rank_points})")
    parent.add_argument("--rank-seed", type=int, help=f"point seed (default {settings.rank_seed})")
    parent.add_argument("--height-convention", choices=("characteristic-zero", "literal"))
    parent.add_argument("--format", choices=("text", "json", "csv"), help=f"default {settings.output_format}")
    parent.add_argument("--output", help="write to a file instead of stdout")
    parent.add_argument("--store", action="store_true", help="persist results to the database")
    parent.add_argument("--jobs", type=int, help=f"parallel checks (default {settings.jobs})")
    parent.add_argument("--debug", action="store_true", help="debug logging")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nichols",
        description="Relations, root systems and dimension tables of B(V) over Q(i)(q).",
        epilog=relations.catalogue_text(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_flags()]
    for command in COMMANDS:
        command.add_parser(subparsers, parents)
    return parser


def _reload_settings(path: str) -> None:
    loaded = load_settings(path)
    for name in type(settings).model_fields:
        setattr(settings, name, getattr(loaded, name))


def apply_config(args: argparse.Namespace) -> RunConfig:
    """Merge flags over settings and push the result into the engine."""
    if args.config:
        _reload_settings(args.config)

    def pick(value, default):
        return default if value is None else value

    config = RunConfig(
        subcommand=args.command,
        max_degree=pick(args.max_degree, settings.max_degree),
        order=pick(args.order, settings.series_order),
        rank_method=pick(args.rank_method, settings.rank_method),
        rank_points=pick(args.rank_points, settings.rank_points),
        rank_seed=pick(args.rank_seed, settings.rank_seed),
        height_convention=pick(args.height_convention, settings.height_convention),
        output_format=pick(args.format, settings.output_format),
        output=args.output,
        jobs=pick(args.jobs, settings.jobs),
    )
    errors = validate_run_config(config)
    if errors:
        raise ValueError("; ".join(errors))

    settings.max_degree = config.max_degree
    settings.series_order = config.order
    settings.output_format = config.output_format
    settings.jobs = config.jobs
    settings.debug = settings.debug or args.debug
    nichols_kernel.configure(config.rank_method, config.rank_points, config.rank_seed)
    root_system.height_convention = config.height_convention
    args.format = config.output_format
    args.jobs = config.jobs
    return config


def log_startup(args: argparse.Namespace, config: RunConfig) -> None:
    logger.info(f"✓ Rank method: {config.rank_method}" + (
        f" ({config.rank_points} points, seed {config.rank_seed})" if config.rank_method == "multipoint" else ""
    ))
    if args.store or settings.store_results:
        logger.info(f"✓ Storing results in {settings.database_label}")
        if db_manager.test_connection():
            logger.info("✓ Database reachable")
        else:
            logger.error("✗ Database not reachable")
    else:
        logger.info("✗ Result storage off")


def configure_logging(debug: bool) -> None:
    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(logging.DEBUG if debug else logging.INFO)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(settings.debug or args.debug)

    try:
        config = apply_config(args)
        # a --config file may switch debug on
        configure_logging(settings.debug)
        log_startup(args, config)
        return args.handler(args)
    except ExpressionError as e:
        logger.error(f"Parse error: {str(e)}")
        return 2
    except UnknownCheckError as e:
        logger.error(f"Unknown check id: {e.args[0]}")
        return 2
    except (ValidationError, ValueError) as e:
        logger.error(f"Usage error: {str(e)}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
