"""Exact and numerical checks of sufficient conditions for k-factor-criticality."""

from __future__ import annotations

__version__ = "0.1.0"

from ._kernels import BACKEND
from .graph import Graph, GraphError
from .families import CliqueJoinFamily, FamilyError, parse_family, realize

__all__ = ["BACKEND", "CliqueJoinFamily", "FamilyError", "Graph", "GraphError", "__version__", "parse_family", "realize"]
