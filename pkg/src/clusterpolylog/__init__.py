"""Exact symbol calculus for cluster polylogarithms."""
from . import exactalg, words, points, corr, confspace, cluster, quad, gangl

__all__ = ["exactalg", "words", "points", "corr", "confspace", "cluster", "quad", "gangl"]
__version__ = "0.1.0"
