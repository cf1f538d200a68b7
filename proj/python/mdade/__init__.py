"""Exact computations with Mackey functors, subquotient rings and Dade groups."""

from ._mdade import Group, catalog_ids, make_group, verify

__all__ = ["Group", "catalog_ids", "make_group", "verify"]
