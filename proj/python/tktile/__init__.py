"""Exact finite-instance tools for generalised triangle tilings of k-graphs.

Results come back as plain dicts shaped like the CLI's JSON reports, with
exact rationals as "p/q" strings.
"""

import json
from fractions import Fraction

from ._core import (
    Error,
    KGraph,
    __version__,
    count_tk_copies,
    extremal_construction,
    format_kgraph,
    max_tiling,
    min_codegree,
    parse_kgraph,
    perfect_fractional_tiling,
    perfect_tiling,
    random_kgraph,
    read_kgraph,
    run_cli,
    verify_certificate,
    write_kgraph,
)


def cli(*args):
    """Runs a CLI command in-process and returns (exit_code, report dict or None)."""
    code, out, err = run_cli([str(a) for a in args])
    if not out.strip():
        return code, None
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out


def fraction(pq):
    """Parses a "p/q" report string into a Fraction."""
    return Fraction(pq)


__all__ = [
    "Error",
    "KGraph",
    "__version__",
    "cli",
    "count_tk_copies",
    "extremal_construction",
    "format_kgraph",
    "fraction",
    "max_tiling",
    "min_codegree",
    "parse_kgraph",
    "perfect_fractional_tiling",
    "perfect_tiling",
    "random_kgraph",
    "read_kgraph",
    "run_cli",
    "verify_certificate",
    "write_kgraph",
]
