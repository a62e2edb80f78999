"""
Export of check results
"""
import json
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Sequence

import pandas as pd

from src.models.results import CheckResult, Summary, Verdict

logger = logging.getLogger(__name__)

COLUMNS = ["suite", "item", "verdict", "source", "detail", "oracle", "elapsed"]


class ResultExporter:
    """Write suite results as JSON lines, CSV, and a per-suite verdict table"""

    def __init__(self, results_dir: Path = None):
        """
        Initialize result exporter

        Args:
            results_dir: Directory for result files. Defaults to data/results
        """
        if results_dir is None:
            from config.settings import settings
            results_dir = settings.RESULTS_DIR

        self.results_dir = Path(results_dir)
        self.results_dir.mkdir(parents=True, exist_ok=True)
        logger.debug(f"Result exporter initialized with directory: {self.results_dir}")

    def _path(self, filename: str, stem: str, suffix: str) -> Path:
        if filename is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"{stem}_{timestamp}.{suffix}"
        return self.results_dir / filename

    @staticmethod
    def to_frame(results: Sequence[CheckResult]) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in results], columns=COLUMNS)

    def to_jsonl(self, results: Sequence[CheckResult], filename: str = None) -> str:
        """
        One CheckResult per line

        Returns:
            Path to exported file
        """
        filepath = self._path(filename, "checks", "jsonl")
        try:
            with open(filepath, "w", encoding="utf-8") as f:
                for result in results:
                    f.write(json.dumps(result.to_dict(), ensure_ascii=False) + "\n")
        except OSError as e:
            logger.error(f"Error exporting to JSON lines: {e}")
            raise
        logger.info(f"Exported {len(results)} results to JSON lines: {filepath}")
        return str(filepath)

    def to_csv(self, results: Sequence[CheckResult], filename: str = None) -> str:
        filepath = self._path(filename, "checks", "csv")
        try:
            self.to_frame(results).to_csv(filepath, index=False)
        except OSError as e:
            logger.error(f"Error exporting to CSV: {e}")
            raise
        logger.info(f"Exported {len(results)} results to CSV: {filepath}")
        return str(filepath)

    @classmethod
    def summary_table(cls, results: Sequence[CheckResult]) -> pd.DataFrame:
        """Verdict counts per suite, suites in first-seen order"""
        verdicts = [v.value for v in Verdict]
        df = cls.to_frame(results)
        if df.empty:
            return pd.DataFrame(columns=verdicts + ["total"])
        order = list(dict.fromkeys(df["suite"]))
        table = (
            df.pivot_table(index="suite", columns="verdict", values="item", aggfunc="count", fill_value=0)
            .reindex(index=order, columns=verdicts, fill_value=0)
            .astype(int)
        )
        table["total"] = table.sum(axis=1)
        table.columns.name = None
        return table

    def write_summary(self, results: Sequence[CheckResult], summary: Summary, filename: str = None) -> str:
        """Summary JSON with the per-suite table attached"""
        filepath = self._path(filename, "summary", "json")
        data = summary.to_dict()
        data["table"] = self.summary_table(results).to_dict(orient="index")
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, ensure_ascii=False)
        logger.info(f"Wrote summary: {filepath}")
        return str(filepath)

    def export_all(self, results: Sequence[CheckResult], summary: Summary) -> List[str]:
        stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        return [
            self.to_jsonl(results, f"checks_{stamp}.jsonl"),
            self.to_csv(results, f"checks_{stamp}.csv"),
            self.write_summary(results, summary, f"summary_{stamp}.json"),
        ]
