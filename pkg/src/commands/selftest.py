"""
Selftest command - Runs the seeded property suite.
"""

import argparse
from typing import Optional

from ..config import Config
from ..documents import InputData
from ..errors import InputError
from ..properties import PROPERTIES, SuiteContext, find_property, run_property, scaled_samples
from ..report import CheckReport
from .base import BaseCommand, CommandResult


class SelftestCommand(BaseCommand):
    """Runs every property (or the selected ones) and prints a summary table."""

    @property
    def name(self) -> str:
        return "selftest"

    @property
    def help(self) -> str:
        return "Run the seeded property suite"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--seed", type=int, default=0, help="Seed of the run (default: 0)")
        parser.add_argument(
            "--only",
            type=str,
            default=None,
            help="Comma-separated property names (default: all)",
        )
        parser.add_argument(
            "--scale",
            type=float,
            default=None,
            help="Multiply sample counts (default: LNK_SELFTEST_SCALE)",
        )
        parser.add_argument("--report", type=str, default=None, help="Write a JSON report to FILE")

    def select(self, only: Optional[str]) -> list:
        if not only:
            return list(PROPERTIES)
        selected = []
        for name in (part.strip() for part in only.split(",")):
            prop = find_property(name)
            if prop is None:
                known = ", ".join(p.name for p in PROPERTIES)
                raise InputError(f"Unknown property '{name}' (known: {known})")
            selected.append(prop)
        return selected

    def compute(self, data: Optional[InputData], args: argparse.Namespace) -> CommandResult:
        scale = args.scale if args.scale is not None else self.config.selftest_scale
        if not 0 < scale <= 1:
            raise InputError(f"--scale must lie in (0, 1], got {scale}")
        properties = self.select(args.only)
        ctx = SuiteContext(*self.precision)
        report = CheckReport(seed=args.seed)

        self.logger.section("PROPERTY SUITE")
        with self.logger.create_progress() as progress:
            for prop in properties:
                samples = scaled_samples(prop, scale)
                task = progress.add_task(f"{prop.name}...", total=1)
                run_property(prop, args.seed, ctx, samples, report)
                progress.advance(task)
                stats = report.stats[prop.name]
                if stats["failed"]:
                    self.logger.failure(
                        f"{prop.name}: {stats['failed']} of {samples} samples failed"
                    )
                else:
                    self.logger.success(
                        f"{prop.name}: {stats['passed']} passed, {stats['skipped']} skipped"
                    )

        self.logger.table(
            "Properties",
            {
                name: f"✓ {s['passed']} passed, "
                f"↷ {s['skipped']} skipped, ✗ {s['failed']} failed"
                for name, s in report.get_stats().items()
            },
        )
        if args.report:
            report.save(args.report)

        summary = report.get_summary()
        text = (
            f"{summary['passed']} passed, {summary['skipped']} skipped, "
            f"{summary['failed']} failed"
        )
        return CommandResult(text, {"seed": args.seed, "summary": summary, "ok": report.ok})

    def run(self, args: argparse.Namespace, config: Config) -> int:
        """Like BaseCommand.run, but a failing property makes the exit code 1."""
        self.config = config
        result = self.compute(None, args)
        self.emit(result, args.format)
        return 0 if result.payload["ok"] else 1
