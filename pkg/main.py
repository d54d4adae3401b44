#!/usr/bin/env python3
"""
lnk - Linking numbers in rational homology spheres, branched and infinite
cyclic covers, and crossing-change identities.

Usage:
    lnk COMMAND --input FILE [options]

Examples:
    lnk alexander --input trefoil.json
    lnk lambda-omega --input hopf.json --pair K1,K2 --omega 1/3
    lnk branched-lk --input trefoil.json --p 3 --pair K1@1,K1@2
    lnk crossing-signature --input trefoil.json --v 1,0 --n 1 --omega 1/2
    lnk selftest --seed 7 --report report.json
"""

import argparse
import sys
from typing import Dict, List, Optional

from src.commands import COMMAND_CLASSES, BaseCommand
from src.config import Config, ConfigError
from src.errors import LinkingError
from src.logger import get_logger


def build_parser(commands: Dict[str, BaseCommand]) -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="Output format (default: text)",
    )
    common.add_argument(
        "--precision",
        type=int,
        default=None,
        help="Starting precision in bits (default: LNK_PRECISION or 128)",
    )
    common.add_argument(
        "--precision-cap",
        type=int,
        default=None,
        help="Largest precision tried before giving up (default: LNK_PRECISION_CAP or 4096)",
    )
    common.add_argument(
        "--verbose",
        action="store_true",
        help="Enable detailed logs (DEBUG level)",
    )
    common.add_argument(
        "--env-file",
        type=str,
        default=None,
        help="Path to .env file (optional)",
    )

    parser = argparse.ArgumentParser(
        prog="lnk",
        description="Exact linking numbers, covers, polynomials and signatures of links",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    for name, command in commands.items():
        sub = subparsers.add_parser(name, help=command.help, parents=[common])
        if command.input_kinds:
            sub.add_argument("--input", type=str, required=True, help="Input JSON document")
        command.add_arguments(sub)

    return parser


def parse_args(
    argv: Optional[List[str]], commands: Dict[str, BaseCommand]
) -> argparse.Namespace:
    """Parse command line arguments."""
    return build_parser(commands).parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Return code (0 = success, 1 = input error, 2 = math error, 3 = numerical error)
    """
    commands = {}
    for cls in COMMAND_CLASSES:
        command = cls()
        commands[command.name] = command

    try:
        args = parse_args(argv, commands)
    except SystemExit as e:
        # argparse exits 2 on usage errors; usage errors are input errors here
        return 0 if e.code in (0, None) else 1

    logger = get_logger(level="DEBUG" if args.verbose else "INFO")

    try:
        config = Config(env_file=args.env_file).override(
            precision=args.precision,
            precision_cap=args.precision_cap,
        )
        if not args.verbose:
            logger.set_level(config.log_level)
        logger.debug(f"Configuration: {config!r}")

        return commands[args.command].run(args, config)

    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return 1

    except LinkingError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code

    except KeyboardInterrupt:
        logger.print("\n\nOperation interrupted by user", style="red")
        return 1

    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
