"""Certified desk-scale graph algorithms with brute-force cross-checks."""

from __future__ import annotations

__version__ = "0.1.0"
