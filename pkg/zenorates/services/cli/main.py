"""
zenorates command-line entry point.

Run:
    zenorates curve -c run.conf -o curve.csv
    zenorates figure 1a --output-dir out/ --plot-script
    zenorates selftest

Exit codes: 0 success, 1 parse/validation error, 2 numerical
non-convergence, 3 self-test failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from zenorates.core.errors import ConfigParseError, ConfigValidationError, QuadratureNonConvergence
from zenorates.figures import registry
from zenorates.schemas.run import RunConfig
from zenorates.services.cli import commands
from zenorates.services.cli.config_file import parse_config
from zenorates.settings import settings

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 is reserved for non-convergence here."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(commands.EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zenorates", description="Zeno / anti-Zeno decay rates of a measured two-level system")
    parser.add_argument("--log-level", default=None, help=f"Logging level (default {settings.log_level})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_config(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("-c", "--config", type=Path, default=None, help="Run-config file (defaults if omitted)")
        return p

    p_eval = with_config(sub.add_parser("eval", help="Γ, survival and deficit terms at one tau"))
    p_eval.add_argument("--tau", type=float, required=True)

    for name, help_text in (
        ("curve", "Write Γ(τ) to a curve CSV"),
        ("transition", "Write the extrema of Γ(τ) to a transitions CSV"),
        ("compare", "Write Γ⁽⁰⁾ and Γ⁽¹⁾ side by side to a compare CSV"),
    ):
        p = with_config(sub.add_parser(name, help=help_text))
        p.add_argument("-o", "--output", type=Path, default=None, help="Output CSV (overrides the config's output)")
        p.add_argument("--plot-script", action="store_true", help="Also write a matplotlib script")

    figures = "\n".join(
        f"  {name:<4} {description.strip().splitlines()[0]}"
        for name, description in registry.list_with_descriptions().items()
    )
    p_figure = sub.add_parser(
        "figure",
        help="Reproduce a reference figure",
        epilog=f"figures:\n{figures}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_figure.add_argument("name", choices=registry.list())
    p_figure.add_argument("--output-dir", type=Path, default=None, help=f"Default {settings.output_dir}")
    p_figure.add_argument("--plot-script", action="store_true")

    sub.add_parser("selftest", help="Run the oracle self-test suite")
    return parser


def load_run(path: Path | None) -> RunConfig:
    if path is None:
        return parse_config("")
    return parse_config(path.read_text(encoding="utf-8"))


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "selftest":
        return commands.cmd_selftest()
    if args.command == "figure":
        output_dir = args.output_dir or commands.default_output_dir()
        return commands.cmd_figure(args.name, output_dir, plot_script=args.plot_script)

    run = load_run(args.config)
    if args.command == "eval":
        return commands.cmd_eval(run, args.tau)

    if args.plot_script:
        run = run.model_copy(update={"plot_script": True})
    output = args.output or Path(run.output)
    handlers = {
        "curve": commands.cmd_curve,
        "transition": commands.cmd_transition,
        "compare": commands.cmd_compare,
    }
    return handlers[args.command](run, output)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one command, map failures to exit codes."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, (args.log_level or settings.log_level).upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        return dispatch(args)
    except (ConfigParseError, ConfigValidationError) as e:
        print(f"❌ Invalid configuration: {e}", file=sys.stderr)
        if isinstance(e, ConfigValidationError):
            for issue in e.issues:
                print(f"   • {issue}", file=sys.stderr)
        return commands.EXIT_INVALID
    except ValidationError as e:
        print(f"❌ Invalid input: {e}", file=sys.stderr)
        return commands.EXIT_INVALID
    except OSError as e:
        print(f"❌ {e}", file=sys.stderr)
        return commands.EXIT_INVALID
    except QuadratureNonConvergence as e:
        logger.error(f"Numerical failure: {e}")
        print(f"💥 {e}", file=sys.stderr)
        return commands.EXIT_NON_CONVERGENCE


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
