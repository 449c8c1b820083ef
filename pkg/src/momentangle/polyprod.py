"""Polyhedral products ``Z_K(A, B)`` as explicit cell complexes.

All coordinates use the same CW pair. A product cell is an ``m``-tuple of
cells of ``A`` whose non-``B`` coordinates form a simplex of ``K``; its
boundary follows the graded Leibniz rule with factors ordered by coordinate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .cellcx import Cell, CellComplex, CornerLabel, CubicalLabel, ProductLabel
from .config import limits
from .errors import CapacityError, InputError, StructureError
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class CWPairModel:
    """Finite CW model of a pair ``(A, B)``; ``subcomplex`` lists B's cells."""

    name: str
    cells: tuple[tuple[str, int], ...]
    boundary: dict[str, dict[str, int]] = field(compare=False)
    subcomplex: frozenset[str] = frozenset()

    def dim_of(self, cell: str) -> int:
        return dict(self.cells)[cell]

    def check(self) -> None:
        dims = dict(self.cells)
        for c, faces in self.boundary.items():
            for f, v in faces.items():
                if f not in dims or dims[f] != dims[c] - 1:
                    raise StructureError(f"{self.name}: bad face {f!r} of {c!r}")
                if c in self.subcomplex and v and f not in self.subcomplex:
                    raise StructureError(f"{self.name}: B is not a subcomplex at {c!r}")
        for c in dims:
            acc: dict[str, int] = {}
            for f, v in self.boundary.get(c, {}).items():
                for g, w in self.boundary.get(f, {}).items():
                    acc[g] = acc.get(g, 0) + v * w
            if any(acc.values()):
                raise StructureError(f"{self.name}: boundary of boundary of {c!r} is nonzero")
        if not self.subcomplex <= set(dims):
            raise StructureError(f"{self.name}: B has cells outside A")

    def as_complex(self, relative: bool = False) -> CellComplex:
        """``A`` as a cell complex, or ``B`` when ``relative`` is set."""
        keep = [c for c in self.cells if not relative or c[0] in self.subcomplex]
        ids = {c for c, _ in keep}
        return CellComplex([Cell(c, d) for c, d in keep],
                           {c: {f: v for f, v in self.boundary.get(c, {}).items() if f in ids}
                            for c in ids})


REAL_PAIR = CWPairModel(
    "real", (("-", 0), ("+", 0), ("D", 1)),
    {"D": {"+": 1, "-": -1}}, frozenset({"-", "+"}))

COMPLEX_PAIR = CWPairModel(
    "complex", (("v", 0), ("e", 1), ("f", 2)),
    {"f": {"e": 1}}, frozenset({"v", "e"}))

QUATERNIONIC_PAIR = CWPairModel(
    "quaternionic", (("v", 0), ("c3", 3), ("c4", 4)),
    {"c4": {"c3": 1}}, frozenset({"v", "c3"}))

# [-1,1] split at 0: "<" is [-1,0], ">" is [0,1]
SUBDIVIDED_REAL_PAIR = CWPairModel(
    "real-subdivided", (("-", 0), ("0", 0), ("+", 0), ("<", 1), (">", 1)),
    {"<": {"0": 1, "-": -1}, ">": {"+": 1, "0": -1}}, frozenset({"-", "+"}))

BUILTIN_PAIRS = {p.name: p for p in (REAL_PAIR, COMPLEX_PAIR, QUATERNIONIC_PAIR)}


def builtin_pair_model(name: str) -> CWPairModel:
    try:
        return BUILTIN_PAIRS[name]
    except KeyError:
        raise InputError(f"unknown pair {name!r}; expected one of {sorted(BUILTIN_PAIRS)}") from None


def _check_capacity(K: SimplicialComplex, per_free: int, per_fixed: int) -> None:
    m = K.vertex_count
    total = sum(per_free ** len(s) * per_fixed ** (m - len(s)) for s in K.members)
    cap = limits().max_cells
    if total > cap:
        raise CapacityError(f"construction needs {total} cells, cap is {cap}")


def build_polyhedral_product(K: SimplicialComplex, pair: CWPairModel) -> CellComplex:
    pair.check()
    m = K.vertex_count
    dims = dict(pair.cells)
    inner = [c for c, _ in pair.cells if c in pair.subcomplex]
    outer = [c for c, _ in pair.cells if c not in pair.subcomplex]
    if pair.name == "real" and m > limits().max_real_vertices:
        raise CapacityError(f"real moment-angle complex refused for m > {limits().max_real_vertices}")
    _check_capacity(K, len(outer), len(inner))

    def name(t: tuple[str, ...]) -> str:
        return "(" + ",".join(t) + ")"

    cells: list[Cell] = []
    boundary: dict[str, dict[str, int]] = {}
    for sigma in sorted(K.members, key=lambda s: (len(s), s)):
        choices = [outer if i in sigma else inner for i in range(1, m + 1)]
        for t in itertools.product(*choices):
            cid = name(t)
            cells.append(Cell(cid, sum(dims[c] for c in t), ProductLabel(t)))
            faces: dict[str, int] = {}
            sign_dim = 0
            for k, c in enumerate(t):
                for f, v in pair.boundary.get(c, {}).items():
                    face = t[:k] + (f,) + t[k + 1:]
                    support = tuple(i + 1 for i, x in enumerate(face) if x not in pair.subcomplex)
                    assert support in K.members, "B must be a subcomplex"
                    fid = name(face)
                    faces[fid] = faces.get(fid, 0) + (-1) ** sign_dim * v
                sign_dim += dims[c]
            boundary[cid] = faces
    cells.sort(key=lambda c: c.dim)
    return CellComplex(cells, boundary)


def rk_cell_id(support: tuple[int, ...], signs: tuple[int, ...]) -> str:
    return str(CubicalLabel(support, signs))


def build_rk(K: SimplicialComplex) -> CellComplex:
    """The real moment-angle complex as a cubical subcomplex of ``[-1,1]^m``.

    The face pair of ``(I, eps)`` in direction ``i_j`` enters with sign
    ``(-1)^(j-1)``: the ``+1`` face minus the ``-1`` face.
    """
    m = K.vertex_count
    if m > limits().max_real_vertices:
        raise CapacityError(f"real moment-angle complex refused for m > {limits().max_real_vertices}")
    _check_capacity(K, 1, 2)
    cells: list[Cell] = []
    boundary: dict[str, dict[str, int]] = {}
    for sigma in sorted(K.members, key=lambda s: (len(s), s)):
        rest = [i for i in range(1, m + 1) if i not in sigma]
        for signs in itertools.product((-1, 1), repeat=len(rest)):
            cid = rk_cell_id(sigma, signs)
            cells.append(Cell(cid, len(sigma), CubicalLabel(sigma, signs)))
            if not sigma:
                continue
            eps = dict(zip(rest, signs))
            faces = {}
            for j, i in enumerate(sigma):
                face = sigma[:j] + sigma[j + 1:]
                face_rest = sorted(rest + [i])
                for s in (1, -1):
                    eps[i] = s
                    fid = rk_cell_id(face, tuple(eps[x] for x in face_rest))
                    faces[fid] = (-1) ** j * s
                del eps[i]
            boundary[cid] = faces
    return CellComplex(cells, boundary)


def build_rk_subdivided(K: SimplicialComplex) -> CellComplex:
    """Real moment-angle complex with every interval split at 0."""
    return build_polyhedral_product(K, SUBDIVIDED_REAL_PAIR)


def cc_cell_id(free: tuple[int, ...], zero: tuple[int, ...], m: int) -> str:
    return str(CornerLabel(free, zero, m))


def build_cc(K: SimplicialComplex) -> tuple[CellComplex, dict[int, frozenset[str]]]:
    """The chamber ``R_K ∩ [0,1]^m`` and its mirrors.

    A cell is a face of ``[0,1]^m`` given by free coordinates ``F`` and
    coordinates ``Z`` pinned at 0, every other coordinate pinned at 1, with
    ``F ∪ Z`` a simplex of ``K``. Mirror ``i`` is the face-closed set of
    cells with ``i`` in ``Z`` (the hyperplane ``x_i = 0``).
    """
    m = K.vertex_count
    _check_capacity(K, 2, 1)
    cells: list[Cell] = []
    boundary: dict[str, dict[str, int]] = {}
    mirrors: dict[int, set[str]] = {i: set() for i in range(1, m + 1)}
    for sigma in sorted(K.members, key=lambda s: (len(s), s)):
        for k in range(len(sigma) + 1):
            for free in itertools.combinations(sigma, k):
                zero = tuple(i for i in sigma if i not in free)
                cid = cc_cell_id(free, zero, m)
                cells.append(Cell(cid, len(free), CornerLabel(free, zero, m)))
                for i in zero:
                    mirrors[i].add(cid)
                faces = {}
                for j, i in enumerate(free):
                    rest = free[:j] + free[j + 1:]
                    # far face (x_i = 1) minus near face (x_i = 0)
                    faces[cc_cell_id(rest, zero, m)] = (-1) ** j
                    faces[cc_cell_id(rest, tuple(sorted(zero + (i,))), m)] = -(-1) ** j
                if faces:
                    boundary[cid] = faces
    cells.sort(key=lambda c: c.dim)
    return CellComplex(cells, boundary), {i: frozenset(s) for i, s in mirrors.items()}


def euler_formula(K: SimplicialComplex) -> int:
    """Euler characteristic of the real moment-angle complex from ``K`` alone."""
    m = K.vertex_count
    return sum((-1) ** len(s) * 2 ** (m - len(s)) for s in K.members)


def cube_skeleton_counts(m: int, i: int) -> list[int]:
    """Cells per dimension of the ``i``-skeleton of the ``m``-cube."""
    return [comb(m, d) * 2 ** (m - d) for d in range(min(i, m) + 1)]


def sign_orbits(C: CellComplex) -> dict[int, int]:
    """Number of coordinatewise sign-change orbits of cells per dimension.

    Works on product-labelled complexes built from ``SUBDIVIDED_REAL_PAIR``
    or on ``build_rk`` output.
    """
    flip = {"-": "+", "+": "+", "0": "0", "<": ">", ">": ">"}
    orbits: dict[int, set] = {}
    for c in C.all_cells():
        if isinstance(c.label, ProductLabel):
            key = tuple(flip[x] for x in c.label.factors)
        elif isinstance(c.label, CubicalLabel):
            key = c.label.support
        else:
            raise InputError("cells carry no sign-action labels")
        orbits.setdefault(c.dim, set()).add(key)
    return {d: len(s) for d, s in sorted(orbits.items())}
