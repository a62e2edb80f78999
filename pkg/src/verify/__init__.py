"""
Check suites over parameter grids and the runner that executes them
"""
from .grids import GRIDS, Grid, get_grid
from .suites import SUITES, Item, Suite, build_items, get_suite
from .runner import SuiteRunner, execute, run_all, run_suite

__all__ = [
    "GRIDS", "Grid", "get_grid",
    "SUITES", "Item", "Suite", "build_items", "get_suite",
    "SuiteRunner", "execute", "run_all", "run_suite",
]
