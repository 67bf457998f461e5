"""Exact modelling and classification of fractal squares.

Thin wrappers over the native ``_core`` module: structured results travel as
JSON text across the binding and are parsed into plain dicts here.
"""

import json as _json

from fracsq import _core

burnside = _core.burnside
enumerate_keys = _core.enumerate_keys
render_pbm = _core.render_pbm
render_svg = _core.render_svg
scan_csv = _core.scan_csv


def classify(rows, kmax=6):
    """Classification record (type, certificates, boundary cover) as a dict."""
    return _json.loads(_core.classify(rows, kmax))


def fingerprint(rows, depth=4, order="yx"):
    """Topological fingerprint (trees, cycles, deletion samples) as a dict."""
    return _json.loads(_core.fingerprint(rows, depth, order))


def equivalence(n, m):
    """Equivalence partition of the (n, m) congruence classes as a dict."""
    return _json.loads(_core.equivalence(n, m))


def search_witness(rows_from, rows_to):
    """Affine map between two attractors as a dict, or None if none is found."""
    raw = _core.search_witness(rows_from, rows_to)
    return None if raw is None else _json.loads(raw)


__all__ = [
    "burnside",
    "classify",
    "enumerate_keys",
    "equivalence",
    "fingerprint",
    "render_pbm",
    "render_svg",
    "scan_csv",
    "search_witness",
]
