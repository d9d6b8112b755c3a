"""Generators that emit staged systems for each assembly technique."""

from .counter import gen_counter
from .crazy import gen_crazy_string
from .jigsaw import gen_square_jigsaw
from .lines import gen_line, gen_line_pow2
from .monotone import gen_monotone
from .scale2 import gen_scale2
from .simulate import gen_simulation
from .spanning import gen_spanning_tree

__all__ = [
    "gen_line",
    "gen_line_pow2",
    "gen_square_jigsaw",
    "gen_spanning_tree",
    "gen_scale2",
    "gen_monotone",
    "gen_counter",
    "gen_crazy_string",
    "gen_simulation",
]
