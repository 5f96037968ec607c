"""Exact computations for the coterie cone of a simple root system.

Report functions return decoded JSON documents unless a text format is
requested. Coordinates may be given as ints, strings or Fractions.
"""

import json
from fractions import Fraction

from . import _coterie
from ._coterie import ResourceLimitExceeded, supported_types

__all__ = [
    "ResourceLimitExceeded",
    "arrangement",
    "faces",
    "inequalities",
    "member",
    "polytope",
    "rays",
    "supported_types",
    "to_fractions",
]


def _coords(xs):
    return [str(x) for x in xs]


def _decode(text, fmt):
    return json.loads(text) if fmt == "json" else text


def to_fractions(entries):
    return [Fraction(e) for e in entries]


def inequalities(type_name, reduced=True, symbolic=False, fmt="json"):
    return _decode(_coterie.inequalities(type_name, reduced, symbolic, fmt), fmt)


def rays(type_name, fmt="json"):
    return _decode(_coterie.rays(type_name, fmt), fmt)


def member(type_name, x, mode="open", method="geometric"):
    return _coterie.member(type_name, _coords(x), mode, method)


def faces(type_name, max_rank=9, fmt="json"):
    return _decode(_coterie.faces(type_name, max_rank, fmt), fmt)


def polytope(type_name, y, orbit_cap=100_000, fmt="json"):
    return _decode(_coterie.polytope(type_name, _coords(y), orbit_cap, fmt), fmt)


def arrangement(type_name=None, path=None, orbit_cap=100_000, fmt="json"):
    if (type_name is None) == (path is None):
        raise ValueError("give exactly one of type_name and path")
    if path is not None:
        return _decode(_coterie.arrangement_file(str(path), orbit_cap, fmt), fmt)
    return _decode(_coterie.arrangement(type_name, orbit_cap, fmt), fmt)
