import argparse
import importlib
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, Tuple

from stable_tau.common import InputError, InternalError, RefusedError, ResourceAbort, parse_positive, parse_seed
from stable_tau.config import EXIT_CHECK_FAILURE, EXIT_INPUT_ERROR, EXIT_RESOURCE_ABORT
from stable_tau.linalg import FieldSpec


COMMANDS: Tuple[str, ...] = (
    "commands.enumerate",
    "commands.skew",
    "commands.verify",
)


def positive_int(raw: str) -> int:
    return parse_positive(raw, "value")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", type=Path, help="JSON input document")
    common.add_argument("--json", dest="json_path", type=Path, help="write the report here instead of stdout")
    common.add_argument("--dot", dest="dot_path", type=Path, help="write a DOT graph here")
    common.add_argument("--max-vertices", type=positive_int, help="abort enumeration past this many pairs")
    common.add_argument("--field", type=FieldSpec.parse, help="Q or Fp:<prime>, overrides the document")
    common.add_argument("--seed", type=parse_seed, help="random seed, decimal or 0x hex")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="stable-tau", description="Support tau-tilting pairs, group actions and skew group algebras")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        importlib.import_module(name).setup(subparsers, [common])
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO)
    try:
        return args.handler(args)
    except InputError as error:
        logging.error("Input error: %s", error)
        return EXIT_INPUT_ERROR
    except ResourceAbort as error:
        logging.error("Aborted: %s", error)
        return EXIT_RESOURCE_ABORT
    except RefusedError as error:
        logging.error("Refused: %s", error)
        return EXIT_CHECK_FAILURE
    except InternalError:
        logging.exception("Internal check failed")
        return EXIT_CHECK_FAILURE


if __name__ == "__main__":
    sys.exit(main())
