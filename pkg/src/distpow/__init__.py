"""Exact distinguishing numbers, indices and total distinguishing numbers of small graphs,
their powers and subdivisions, plus constructive labelers and a claim-checking harness."""

from .graph import Graph, build
from .powers import fractional_power, power, subdivide

__all__ = ["Graph", "build", "power", "subdivide", "fractional_power"]
