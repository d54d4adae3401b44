"""
Report - Collects property-check statistics and saves them as JSON.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional

from .logger import get_logger

STAT_TYPES = ("passed", "failed", "skipped")


class CheckReport:
    """Per-property pass/fail/skip counts and failure messages for a selftest run."""

    def __init__(self, seed: int, reports_dir: str = "reports") -> None:
        """
        Initialize the report.

        Args:
            seed: Seed of the run (recorded for reproduction)
            reports_dir: Directory where reports are saved
        """
        self.seed = seed
        self.reports_dir = Path(reports_dir)
        self.logger = get_logger()

        # Structure: {property: {passed: N, failed: M, skipped: K}}
        self.stats: Dict[str, Dict[str, int]] = {}
        self.failures: Dict[str, List[str]] = {}

    def register(self, property_name: str) -> None:
        """Start counting a property."""
        self.stats.setdefault(property_name, {stat: 0 for stat in STAT_TYPES})
        self.failures.setdefault(property_name, [])

    def increment_stat(self, property_name: str, stat_type: str) -> None:
        """
        Increment a statistic.

        Args:
            property_name: Property name
            stat_type: One of passed, failed, skipped
        """
        if stat_type not in STAT_TYPES:
            raise ValueError(f"Unknown stat type: {stat_type}")
        self.register(property_name)
        self.stats[property_name][stat_type] += 1

    def add_failure(self, property_name: str, sample: int, message: str) -> None:
        """Record a failing sample."""
        self.increment_stat(property_name, "failed")
        self.failures[property_name].append(f"sample {sample}: {message}")
        self.logger.debug(f"{property_name} failed on sample {sample}: {message}")

    def get_stats(self) -> Dict[str, Dict[str, int]]:
        """Return statistics."""
        return self.stats

    def get_summary(self) -> Dict[str, int]:
        """
        Calculate global summary of statistics.

        Returns:
            Dictionary with totals passed, failed, skipped
        """
        summary = {stat: 0 for stat in STAT_TYPES}
        for property_stats in self.stats.values():
            for key, value in property_stats.items():
                summary[key] += value
        return summary

    @property
    def ok(self) -> bool:
        return self.get_summary()["failed"] == 0

    def save(self, filename: Optional[str] = None) -> Path:
        """
        Save statistics and failures to a JSON file.

        Args:
            filename: Target path; auto-generated under reports_dir if absent

        Returns:
            Path of saved file
        """
        if filename is None:
            self.reports_dir.mkdir(exist_ok=True)
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filepath = self.reports_dir / f"selftest_{timestamp}.json"
        else:
            filepath = Path(filename)

        data = {
            "timestamp": datetime.now().isoformat(),
            "seed": self.seed,
            "stats": self.stats,
            "failures": {name: messages for name, messages in self.failures.items() if messages},
            "summary": self.get_summary(),
        }

        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, ensure_ascii=False)

        self.logger.info(f"Report saved to: {filepath}")
        return filepath

    def __repr__(self) -> str:
        """Report representation."""
        summary = self.get_summary()
        return (
            f"CheckReport(seed={self.seed}, passed={summary['passed']}, "
            f"failed={summary['failed']}, skipped={summary['skipped']})"
        )
