"""
Output transformers.

Renders curve graphs, divisor complexes and surface graphs as Graphviz DOT.
"""

from jung.transformers.dot import DotRenderer

__all__ = ["DotRenderer"]
