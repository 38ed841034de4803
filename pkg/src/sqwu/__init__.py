"""Mod 2 Steenrod algebra engine and characteristic-class verifier."""

from __future__ import annotations

__version__ = "0.1.0"
