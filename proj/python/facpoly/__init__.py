"""Factorial series, the M/P operator algebra and difference-equation solvers."""

from ._facpoly import *  # noqa: F401,F403
from ._facpoly import __doc__  # noqa: F401
