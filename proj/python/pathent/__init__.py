"""Generalized entropies, diffusion entropy analysis, pathway fractional
integrals and fractional kinetics."""

from ._pathent import *  # noqa: F401,F403

__version__ = "0.1.0"
