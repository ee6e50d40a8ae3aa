import argparse
import json
from collections.abc import Sequence
from pathlib import Path
from typing import Callable, Optional

from pydantic import ValidationError

from threetangle.cli import commands
from threetangle.storage import LocalStorageManager, StorageManager
from threetangle.utils.exceptions import (
    DomainError,
    InfeasibleConfigurationError,
    InvalidStateError,
    TangleError,
    UnsupportedFamilyError,
    UnsupportedFileTypeError,
)
from threetangle.utils.logger_m import logger
from threetangle.version import __version__

__all__ = [
    "EXIT_INFEASIBLE",
    "EXIT_INVALID_STATE",
    "EXIT_OK",
    "EXIT_USAGE",
    "build_parser",
    "main",
]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID_STATE = 3
EXIT_INFEASIBLE = 4

Handler = Callable[[argparse.Namespace, StorageManager], int]


def _grid_count(value: str) -> int:
    count = int(value)
    if count < 2:
        raise argparse.ArgumentTypeError(
            f"grid needs at least two points, got {count}"
        )
    return count


def _positive_float(value: str) -> float:
    number = float(value)
    if not number > 0.0:
        raise argparse.ArgumentTypeError(f"expected a positive number: {value}")
    return number


def _add_out(parser: argparse.ArgumentParser, default: str = "-") -> None:
    parser.add_argument(
        "--out",
        default=default,
        help="output file, '-' for standard output (default: %(default)s)",
    )


def _add_roof_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("convex-roof search")
    group.add_argument("--seed", type=int, help="seed of the search (required)")
    group.add_argument(
        "-m", "--ensemble-size", type=int, help="members per decomposition"
    )
    group.add_argument("--restarts", type=int, help="independent searches")
    group.add_argument("--iters", type=int, help="iterations per search")
    group.add_argument("--workers", type=int, help="process pool size")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tangle",
        description="Three-tangle of GHZ-mixture states: closed forms, "
        "decompositions and numerical convex roofs.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    pure = subparsers.add_parser("pure", help="three-tangle of a pure state")
    pure.add_argument("input", type=Path, help="pure-state JSON file")
    pure.set_defaults(handler=commands.cmd_tangle_pure)

    sweep = subparsers.add_parser("sweep", help="piecewise family tangle")
    sweep.add_argument("--family", required=True)
    sweep.add_argument("--grid", type=_grid_count, default=1001)
    _add_out(sweep)
    sweep.set_defaults(handler=commands.cmd_family_sweep)

    curves = subparsers.add_parser(
        "curves", help="characteristic curves and their convex envelope"
    )
    curves.add_argument("--family", required=True)
    curves.add_argument("--phase-step", type=_positive_float)
    curves.add_argument("--grid", type=_grid_count, default=200)
    curves.add_argument(
        "--cap", type=int, help="maximum number of curves (default: settings)"
    )
    _add_out(curves)
    curves.set_defaults(handler=commands.cmd_curves)

    optimize = subparsers.add_parser(
        "optimize", help="numerical convex roof of a density matrix"
    )
    optimize.add_argument(
        "input", type=Path, nargs="?", help="density-matrix JSON file"
    )
    optimize.add_argument(
        "--family", help="search a family state instead of an input file"
    )
    optimize.add_argument("--x", type=float, help="mixing value for --family")
    _add_roof_flags(optimize)
    _add_out(optimize)
    optimize.set_defaults(handler=commands.cmd_optimize)

    ckw = subparsers.add_parser("ckw", help="monogamy report of a family")
    ckw.add_argument("--family", required=True)
    ckw.add_argument("--grid", type=_grid_count, default=200)
    ckw.add_argument(
        "--cross-check",
        action="store_true",
        help="compare the rank5 closed form against the estimator",
    )
    ckw.add_argument(
        "--detailed",
        action="store_true",
        help="append one_tangle_direct, c2_ab, c2_ac and estimated columns",
    )
    _add_roof_flags(ckw)
    _add_out(ckw)
    ckw.set_defaults(handler=commands.cmd_ckw)

    decompose = subparsers.add_parser(
        "decompose", help="optimal decomposition of a family state"
    )
    decompose.add_argument("--family", required=True)
    decompose.add_argument("--x", type=float, required=True)
    _add_out(decompose)
    decompose.set_defaults(handler=commands.cmd_decompose)

    constants = subparsers.add_parser(
        "constants", help="published transition constants next to computed"
    )
    _add_out(constants)
    constants.set_defaults(handler=commands.cmd_constants)
    return parser


def main(
    argv: Optional[Sequence[str]] = None,
    storage: Optional[StorageManager] = None,
) -> int:
    """
    Runs the ``tangle`` command line.

    Returns:
        0 on success, 2 for usage and parse errors, 3 for invalid state
        data, 4 for infeasible configurations.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_OK if ex.code in (0, None) else EXIT_USAGE
    handler: Handler = args.handler
    storage = storage if storage is not None else LocalStorageManager()
    logger.info(f"tangle {args.command} started")
    try:
        code = handler(args, storage)
    except (
        OSError,
        json.JSONDecodeError,
        ValidationError,
        UnsupportedFamilyError,
        UnsupportedFileTypeError,
        commands.MissingArgumentError,
    ) as ex:
        logger.error(f"tangle {args.command}: {ex}")
        return EXIT_USAGE
    except (InvalidStateError, DomainError) as ex:
        logger.error(f"tangle {args.command}: {ex}")
        return EXIT_INVALID_STATE
    except InfeasibleConfigurationError as ex:
        logger.error(f"tangle {args.command}: {ex}")
        return EXIT_INFEASIBLE
    except TangleError as ex:
        logger.error(f"tangle {args.command}: {ex}")
        return EXIT_USAGE
    logger.info(f"tangle {args.command} finished")
    return code
