"""Python front end for the wallcross library.

Diagrams cross the boundary as JSON text in the same schema the CLI reads and writes;
the helpers below also accept dicts.
"""

import json

from . import _wallcross
from ._wallcross import InputError, MathError, catalan, trees

__all__ = [
    "InputError",
    "MathError",
    "act",
    "catalan",
    "complete",
    "crossing_sequence",
    "is_consistent",
    "log_seed",
    "mc_solve",
    "path_ordered_product",
    "render_svg",
    "trees",
]


def _text(diagram):
    return diagram if isinstance(diagram, str) else json.dumps(diagram)


def log_seed(exponent, max_order):
    return json.loads(_wallcross.log_seed(exponent, max_order))


def complete(diagram, order=None):
    return json.loads(_wallcross.complete(_text(diagram), order))


def path_ordered_product(diagram, start_ray=None, order=None):
    return _wallcross.path_ordered_product(_text(diagram), start_ray, order)


def crossing_sequence(diagram, start_ray=None):
    return _wallcross.crossing_sequence(_text(diagram), start_ray)


def is_consistent(diagram):
    return _wallcross.is_consistent(_text(diagram))


def act(diagram, monomial, wall=None, inverse=False, order=None):
    return _wallcross.act(_text(diagram), tuple(monomial), wall, inverse, order)


def render_svg(diagram):
    return _wallcross.render_svg(_text(diagram))


def mc_solve(problem):
    return json.loads(_wallcross.mc_solve(_text(problem)))
