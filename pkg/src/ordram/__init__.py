"""Ordered Ramsey numbers and extremal functions of forbidden 0-1 patterns."""

from __future__ import annotations

__version__ = "0.1.0"
