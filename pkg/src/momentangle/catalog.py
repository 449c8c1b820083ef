"""Named fixture complexes: ``pentagon``, ``boundary-simplex:d``, ``points:n``, ..."""

from __future__ import annotations

import itertools

from .errors import InputError
from .simplicial import (SimplicialComplex, boundary_of_simplex, cycle_complex,
                         discrete_complex, from_facets, simplex_complex, skeleton)


def _cross_polytope(n: int) -> SimplicialComplex:
    # vertices 2k-1, 2k are antipodal
    facets = [[2 * k + 1 + bit for k, bit in enumerate(bits)]
              for bits in itertools.product((0, 1), repeat=n)]
    return from_facets(2 * n, facets)


def _ints(parts: list[str], count: int, name: str) -> list[int]:
    if len(parts) != count:
        raise InputError(f"catalog entry {name!r} expects {count} integer parameter(s)")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InputError(f"catalog entry {name!r} has non-integer parameters") from None


def catalog(name: str) -> SimplicialComplex:
    head, *params = name.split(":")
    if head == "pentagon" and not params:
        return cycle_complex(5)
    if head == "octahedron" and not params:
        return _cross_polytope(3)
    if head == "ngon":
        (n,) = _ints(params, 1, name)
        if n < 3:
            raise InputError("ngon needs n >= 3")
        return cycle_complex(n)
    if head == "boundary-simplex":
        (d,) = _ints(params, 1, name)
        if d < 1:
            raise InputError("boundary-simplex needs d >= 1")
        return boundary_of_simplex(d + 1)
    if head == "simplex":
        (d,) = _ints(params, 1, name)
        if d < 0:
            raise InputError("simplex needs d >= 0")
        return simplex_complex(d + 1)
    if head == "points":
        (n,) = _ints(params, 1, name)
        if n < 1:
            raise InputError("points needs n >= 1")
        return discrete_complex(n)
    if head == "skeleton":
        d, i = _ints(params, 2, name)
        if d < 0 or i < -1:
            raise InputError("skeleton needs d >= 0 and i >= -1")
        return skeleton(simplex_complex(d + 1), i)
    if head == "path":
        (n,) = _ints(params, 1, name)
        if n < 1:
            raise InputError("path needs n >= 1")
        return from_facets(n, [[i, i + 1] for i in range(1, n)] or [[1]])
    if head == "cross-polytope":
        (n,) = _ints(params, 1, name)
        if n < 1:
            raise InputError("cross-polytope needs n >= 1")
        return _cross_polytope(n)
    if head == "empty":
        (m,) = _ints(params, 1, name)
        if m < 0:
            raise InputError("empty needs m >= 0")
        return from_facets(m, [])
    raise InputError(f"unknown catalog entry {name!r}")


# deterministic fixture set used by the test-suite and the acceptance gate
STANDARD_ENTRIES = (
    "pentagon", "ngon:4", "ngon:6", "octahedron",
    "boundary-simplex:1", "boundary-simplex:2", "boundary-simplex:3",
    "simplex:0", "simplex:2", "simplex:3",
    "points:2", "points:3", "points:4",
    "skeleton:3:0", "skeleton:3:1", "skeleton:4:1", "skeleton:4:2",
    "path:3", "path:4", "cross-polytope:2", "empty:2",
)
