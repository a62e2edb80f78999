#!/usr/bin/env python3
"""
Utility script to run every check suite once and write the results
"""
import sys
import argparse
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import settings
from src.utils.logging_config import setup_logging
from src.storage.export import ResultExporter
from src.verify import SuiteRunner, get_grid


def main():
    """Run all suites once"""
    parser = argparse.ArgumentParser(description="Run all twistcheck suites")
    parser.add_argument("--grid", default=settings.DEFAULT_GRID)
    parser.add_argument("--order", type=int, default=None)
    parser.add_argument("--workers", type=int, default=settings.WORKERS)
    args = parser.parse_args()

    logger = setup_logging()

    logger.info("=" * 60)
    logger.info("Running all suites...")
    logger.info("=" * 60)

    runner = SuiteRunner(get_grid(args.grid, args.order), workers=args.workers)
    results, summary = runner.run_all()

    ResultExporter().export_all(results, summary)

    # Exit with error code if any check failed
    sys.exit(summary.exit_code)


if __name__ == "__main__":
    main()
