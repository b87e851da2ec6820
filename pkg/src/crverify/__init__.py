"""Exact verification toolkit: cyclotomic arithmetic, permutation groups,
character tables, polynomial invariants and the numerical constraints of a
Fano threefold classification argument."""

from __future__ import annotations

__version__ = "0.1.0"

__all__ = ["__version__", "exactnum", "permgrp", "chartab", "polyinv", "fano", "cli"]
