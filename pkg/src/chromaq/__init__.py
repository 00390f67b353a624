"""Exact-arithmetic engine for chromatic quasisymmetric functions of
graphs on [n], with natural unit interval orders, basis expansions,
closed forms, and principal specializations."""

__version__ = "0.1.0"
