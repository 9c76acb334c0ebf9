"""Backtracking pattern queries over s-expression data."""

from sxq._core import Query, Value, elements, read, suffixes, write

__all__ = ["Query", "Value", "elements", "read", "suffixes", "write"]
