"""Tuning lab CLI interface."""

import argparse
import logging
import sys
from collections.abc import Callable
from typing import NoReturn

from logging_config import setup_logging

from .campaign import load_campaign
from .config import get_settings
from .services import CampaignService, CommandResult, report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with the usage error code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _overrides(args: argparse.Namespace) -> dict:
    return {
        "master_seed": getattr(args, "seed", None),
        "workers": getattr(args, "workers", None),
        "output": getattr(args, "out", None),
        "strategy": getattr(args, "strategy", None),
    }


def _execute(
    name: str, action: Callable[[], CommandResult]
) -> int:
    """Run a command and map failures to exit codes.

    Returns:
        0 on success, 1 for usage or configuration errors, 2 otherwise
    """
    try:
        result = action()
    except FileNotFoundError as e:
        logger.error(f"File not found: {e}")
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        logger.error(f"Validation error: {e}")
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Unexpected error during {name}")
        print(f"❌ Unexpected error: {e}", file=sys.stderr)
        return EXIT_RUNTIME

    logger.info(f"{name} complete: {result.summary}")
    print(f"\n✅ {result.summary}")
    for path in result.outputs:
        print(f"   {path}")
    return EXIT_OK


def run_command(args: argparse.Namespace) -> int:
    """Execute run command.

    Args:
        args: Parsed command line arguments

    Returns:
        Exit code
    """

    def action() -> CommandResult:
        campaign = load_campaign(args.config, _overrides(args))
        return CampaignService(campaign).run()

    return _execute("run", action)


def tune_command(args: argparse.Namespace) -> int:
    """Execute tune command."""

    def action() -> CommandResult:
        campaign = load_campaign(args.config, _overrides(args))
        return CampaignService(campaign).tune(validate=not args.no_validate)

    return _execute("tune", action)


def oracle_command(args: argparse.Namespace) -> int:
    """Execute oracle command."""

    def action() -> CommandResult:
        campaign = load_campaign(args.config, _overrides(args))
        return CampaignService(campaign).oracle()

    return _execute("oracle", action)


def report_command(args: argparse.Namespace) -> int:
    """Execute report command."""
    return _execute("report", lambda: report(args.results, args.out))


def _add_common(parser: argparse.ArgumentParser, config: bool) -> None:
    if config:
        parser.add_argument(
            "--config",
            type=str,
            required=True,
            help="Path to the campaign file (YAML)",
        )
    parser.add_argument(
        "--out",
        type=str,
        default=None,
        help="Output directory (default: campaign 'output')",
    )
    parser.add_argument(
        "--log-format",
        type=str,
        choices=["json", "text"],
        default=None,
        help="Log format (default: TUNING_LAB_LOG_FORMAT or json)",
    )
    parser.add_argument(
        "--log-level",
        type=str,
        default=None,
        help="Log level (default: TUNING_LAB_LOG_LEVEL or INFO)",
    )


def _add_execution(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Master seed (default: campaign 'master_seed')",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes (default: campaign 'workers')",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser for CLI.

    Returns:
        Configured argument parser
    """
    parser = _ArgumentParser(
        prog="tuning_lab",
        description="Parameter tuning campaigns for metaheuristics",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Assess one configuration with N seeded runs
  python -m tuning_lab run --config campaigns/ackley2_bbo.yaml

  # Tune a grid with the two-phase strategy on 4 workers
  python -m tuning_lab tune --config campaigns/eggholder16.yaml \\
    --strategy 2 --workers 4

  # Brute-force optimum of a small problem
  python -m tuning_lab oracle --config campaigns/ackley2_bbo.yaml

  # Compare the tuning reports of a results directory
  python -m tuning_lab report results/
        """,
    )

    subparsers = parser.add_subparsers(
        dest="command",
        help="Available commands",
        required=True,
    )

    run_parser = subparsers.add_parser(
        "run", help="Assess the campaign's optimizer configuration"
    )
    _add_common(run_parser, config=True)
    _add_execution(run_parser)
    run_parser.set_defaults(handler=run_command)

    tune_parser = subparsers.add_parser(
        "tune", help="Tune the campaign's parameter grid"
    )
    _add_common(tune_parser, config=True)
    _add_execution(tune_parser)
    tune_parser.add_argument(
        "--strategy",
        type=int,
        choices=[1, 2],
        default=None,
        help="1: best of one grid pass, 2: phased grid control",
    )
    tune_parser.add_argument(
        "--no-validate",
        action="store_true",
        help="Skip the fresh-seed validation of the tuned configuration",
    )
    tune_parser.set_defaults(handler=tune_command)

    oracle_parser = subparsers.add_parser(
        "oracle", help="Enumerate the campaign's space for its optimum"
    )
    _add_common(oracle_parser, config=True)
    oracle_parser.set_defaults(handler=oracle_command)

    report_parser = subparsers.add_parser(
        "report", help="Compare the tuning reports of a directory"
    )
    report_parser.add_argument(
        "results",
        type=str,
        help="Directory holding *_report.json files",
    )
    _add_common(report_parser, config=False)
    report_parser.set_defaults(handler=report_command)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Execute main CLI workflow.

    Returns:
        Exit code
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    settings = get_settings()
    setup_logging(
        level=args.log_level or settings.log_level,
        format_type=args.log_format or settings.log_format,
    )
    return int(args.handler(args))


if __name__ == "__main__":
    sys.exit(main())
