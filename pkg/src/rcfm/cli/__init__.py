"""Command line front end and its expression language."""

from .expr import eval_text, parse_expr, to_source
from .main import render_window, run

__all__ = ["eval_text", "parse_expr", "to_source", "render_window", "run"]
