"""
Expression language and canonical rendering for the command line
"""
from .expression import canonical, evaluate, parse_element, parse_expr, parse_generator
from .render import element_to_json, render_element, render_series, render_tensor, render_u

__all__ = [
    "canonical", "evaluate", "parse_element", "parse_expr", "parse_generator",
    "element_to_json", "render_element", "render_series", "render_tensor", "render_u",
]
