"""Exact colorful ham-sandwich cuts, grid unique sink orientations and
bicolored stretchability.

Objects use the CLI's JSON shapes; rationals come back as "num/den"
strings, see ``fraction``.
"""

from fractions import Fraction

from ._hamcut import *  # noqa: F401,F403
from ._hamcut import GridOrientation, HamcutError


def fraction(value):
    """Exact value of a rational as returned by this package."""
    return Fraction(value)


def point(values):
    return tuple(Fraction(v) for v in values)
