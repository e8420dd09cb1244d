"""Spread-area model for unassembled jigsaw puzzles: A_s = sqrt(3) * A_a."""

from ._core import __version__, empirical, geometry, model, packing, svg

__all__ = ["__version__", "empirical", "geometry", "model", "packing", "svg"]
