"""Cyclic reducibility, toric heaps and toric posets for Coxeter groups."""

from ._core import *  # noqa: F401,F403
from ._core import CoxeterGraph, Error, ResourceLimit  # noqa: F401
