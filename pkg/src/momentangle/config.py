"""Capacity caps, overridable through environment variables.

``MOMENTANGLE_MAX_CELLS``        cells in any constructed complex
``MOMENTANGLE_MAX_RADIUS``       word-length radius for group balls
``MOMENTANGLE_MAX_ELEMENTS``     group elements in a ball
``MOMENTANGLE_MAX_ISO_VERTICES`` vertices accepted by the isomorphism test
"""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_cells: int = 2_000_000
    max_radius: int = 8
    max_elements: int = 1_000_000
    max_iso_vertices: int = 16
    max_cross_check_vertices: int = 12
    max_real_vertices: int = 20


_ENV = {
    "max_cells": "MOMENTANGLE_MAX_CELLS",
    "max_radius": "MOMENTANGLE_MAX_RADIUS",
    "max_elements": "MOMENTANGLE_MAX_ELEMENTS",
    "max_iso_vertices": "MOMENTANGLE_MAX_ISO_VERTICES",
}


def limits() -> Limits:
    overrides = {}
    for field, var in _ENV.items():
        raw = os.environ.get(var)
        if raw:
            overrides[field] = int(raw)
    return Limits(**overrides)
