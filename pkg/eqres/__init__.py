"""Equivariant modules over Sym V and their minimal free resolutions."""

import importlib.metadata

from .app import EqresApplication

__all__ = ["EqresApplication", "VERSION"]


VERSION = importlib.metadata.version("eqres")
