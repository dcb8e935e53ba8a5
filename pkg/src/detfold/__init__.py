"""Exact-arithmetic toolkit for cubic fourfolds containing a plane, built
from symmetric 4x4 determinantal representations of plane sextics."""

__version__ = "0.1.0"
