"""
Storage module for result export
"""
from .export import ResultExporter

__all__ = ["ResultExporter"]
