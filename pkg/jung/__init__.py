"""Jung - canonical embedded resolution of f(x, y) + z^2 from a resolution graph of f."""

__version__ = "0.1.0"
