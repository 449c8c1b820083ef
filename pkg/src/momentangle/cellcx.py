"""Finite cell complexes with integer boundary matrices.

Cells are graded by dimension and addressed by string ids. The boundary of a
``d``-cell is stored sparsely as ``{face index: coefficient}`` over the
``(d-1)``-cells. Cubical complexes additionally support vertex links and the
link-condition check for nonpositive curvature.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .config import limits
from .errors import CapacityError, StructureError
from .simplicial import FlagWitness, Simplex, SimplicialComplex, flag_witness


@dataclass(frozen=True)
class CubicalLabel:
    """Cell ``prod_{i in support} [-1,1] x prod_{j not in support} {signs_j}``."""

    support: tuple[int, ...]
    signs: tuple[int, ...]  # +1/-1 for each coordinate outside support, ascending

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.support)) + "|" + \
            "".join("+" if s > 0 else "-" for s in self.signs) + ")"


@dataclass(frozen=True)
class ProductLabel:
    factors: tuple[str, ...]

    def __str__(self) -> str:
        return "(" + ",".join(self.factors) + ")"


@dataclass(frozen=True)
class CornerLabel:
    """Face of ``[0,1]^m``: free coordinates, coordinates pinned at 0, rest at 1."""

    free: tuple[int, ...]
    zero: tuple[int, ...]
    m: int

    def __str__(self) -> str:
        chars = []
        for i in range(1, self.m + 1):
            chars.append("*" if i in self.free else "0" if i in self.zero else "1")
        return "[" + "".join(chars) + "]"


@dataclass(frozen=True)
class ChamberLabel:
    word: tuple[int, ...]
    cell: str

    def __str__(self) -> str:
        w = ",".join(map(str, self.word)) if self.word else "e"
        return f"({w}|{self.cell})"


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    label: object = None

    def label_text(self) -> str | None:
        return None if self.label is None else str(self.label)


class CellComplex:
    """Immutable graded cell complex.

    ``boundary`` maps a cell id to ``{face id: coefficient}``; zero
    coefficients are dropped and 0-cells have empty boundary.
    """

    def __init__(self, cells: Iterable[Cell], boundary: Mapping[str, Mapping[str, int]]):
        by_dim: dict[int, list[Cell]] = {}
        index: dict[str, tuple[int, int]] = {}
        for c in cells:
            if c.id in index:
                raise StructureError(f"duplicate cell id {c.id!r}")
            if c.dim < 0:
                raise StructureError(f"cell {c.id!r} has negative dimension")
            bucket = by_dim.setdefault(c.dim, [])
            index[c.id] = (c.dim, len(bucket))
            bucket.append(c)
        cap = limits().max_cells
        if len(index) > cap:
            raise CapacityError(f"{len(index)} cells exceed the cap of {cap}")
        top = max(by_dim, default=-1)
        self._cells = tuple(tuple(by_dim.get(d, ())) for d in range(top + 1))
        self._index = index
        cols: list[list[dict[int, int]]] = []
        for d, layer in enumerate(self._cells):
            layer_cols = []
            for c in layer:
                col: dict[int, int] = {}
                for face, coeff in boundary.get(c.id, {}).items():
                    if coeff == 0:
                        continue
                    if face not in index:
                        raise StructureError(f"cell {c.id!r} has unknown face {face!r}")
                    fd, pos = index[face]
                    if fd != d - 1:
                        raise StructureError(
                            f"boundary of {c.id!r} (dim {d}) meets {face!r} (dim {fd})")
                    col[pos] = col.get(pos, 0) + coeff
                layer_cols.append({k: v for k, v in col.items() if v})
            cols.append(layer_cols)
        self._boundary = tuple(tuple(c) for c in cols)

    @property
    def dim(self) -> int:
        return len(self._cells) - 1

    def cells(self, d: int) -> tuple[Cell, ...]:
        return self._cells[d] if 0 <= d < len(self._cells) else ()

    def all_cells(self) -> Iterable[Cell]:
        for layer in self._cells:
            yield from layer

    def counts(self) -> list[int]:
        return [len(layer) for layer in self._cells]

    def __len__(self) -> int:
        return len(self._index)

    def __contains__(self, cell_id: str) -> bool:
        return cell_id in self._index

    def cell(self, cell_id: str) -> Cell:
        d, pos = self._index[cell_id]
        return self._cells[d][pos]

    def position(self, cell_id: str) -> tuple[int, int]:
        return self._index[cell_id]

    def boundary_columns(self, d: int) -> tuple[dict[int, int], ...]:
        """Sparse columns of the boundary map from ``d``-cells to ``(d-1)``-cells."""
        return self._boundary[d] if 0 <= d < len(self._boundary) else ()

    def boundary_of(self, cell_id: str) -> dict[str, int]:
        d, pos = self._index[cell_id]
        faces = self.cells(d - 1)
        return {faces[r].id: v for r, v in self._boundary[d][pos].items()}

    def boundary_matrix(self, d: int) -> list[list[int]]:
        """Dense ``#(d-1)-cells x #d-cells`` boundary matrix."""
        rows = len(self.cells(d - 1))
        cols = self.boundary_columns(d)
        mat = [[0] * len(cols) for _ in range(rows)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                mat[i][j] = v
        return mat

    def to_json(self) -> dict:
        """JSON-ready dict; dims ascending, ids lexicographic within each dim."""
        dims = []
        bnd: dict[str, list[list]] = {}
        for d, layer in enumerate(self._cells):
            entries = []
            for c in sorted(layer, key=lambda c: c.id):
                entries.append({"id": c.id, "label": c.label_text()})
                if d > 0:
                    bnd[c.id] = [[f, v] for f, v in sorted(self.boundary_of(c.id).items())]
            dims.append({"d": d, "cells": entries})
        return {"dims": dims, "boundary": {k: bnd[k] for k in sorted(bnd)}}

    @classmethod
    def from_json(cls, data: Mapping) -> CellComplex:
        cells = [Cell(e["id"], layer["d"], e.get("label"))
                 for layer in data["dims"] for e in layer["cells"]]
        boundary = {k: {f: v for f, v in pairs} for k, pairs in data["boundary"].items()}
        return cls(cells, boundary)


# -- validation ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    d: int
    column: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(C: CellComplex) -> ValidationReport:
    """Check that every composite boundary vanishes.

    Includes the augmentation ``C_0 -> Z``: the coefficients of each 1-cell
    boundary must sum to zero.
    """
    out: list[Violation] = []
    for j, col in enumerate(C.boundary_columns(1)):
        if sum(col.values()) != 0:
            out.append(Violation(1, C.cells(1)[j].id, "augmentation of boundary is nonzero"))
    for d in range(2, C.dim + 1):
        lower = C.boundary_columns(d - 1)
        for j, col in enumerate(C.boundary_columns(d)):
            acc: dict[int, int] = {}
            for r, v in col.items():
                for rr, vv in lower[r].items():
                    acc[rr] = acc.get(rr, 0) + v * vv
            if any(acc.values()):
                out.append(Violation(d, C.cells(d)[j].id, "boundary of boundary is nonzero"))
    return ValidationReport(tuple(out))


def euler_characteristic(C: CellComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(C.counts()))


# -- cubical structure and vertex links ------------------------------------

@dataclass(frozen=True)
class LinkComplex:
    """Vertex link: ``simplices`` maps each link simplex to its incident cell."""

    vertex: str
    complex: SimplicialComplex
    simplices: dict[Simplex, str] = field(compare=False)

    @property
    def edges(self) -> tuple[str, ...]:
        """Incident edge ids; link vertex ``k`` is ``edges[k-1]``."""
        return tuple(self.simplices[(k,)] for k in range(1, self.complex.vertex_count + 1))


class CubicalIndex:
    """Closure data for a cubical complex, shared across many link queries."""

    def __init__(self, C: CellComplex):
        self.complex = C
        verts: list[list[frozenset[int]]] = []
        edges: list[list[frozenset[int]]] = []
        for d in range(C.dim + 1):
            vlayer: list[frozenset[int]] = []
            elayer: list[frozenset[int]] = []
            for pos, col in enumerate(C.boundary_columns(d)):
                cid = C.cells(d)[pos].id
                if d == 0:
                    vlayer.append(frozenset([pos]))
                    elayer.append(frozenset())
                    continue
                if len(col) != 2 * d or any(abs(v) != 1 for v in col.values()):
                    raise StructureError(f"cell {cid!r} does not have 2*{d} unit facets")
                vs = frozenset().union(*(verts[d - 1][r] for r in col))
                if len(vs) != 2 ** d:
                    raise StructureError(f"cell {cid!r} has {len(vs)} vertices, expected {2 ** d}")
                vlayer.append(vs)
                if d == 1:
                    elayer.append(frozenset([pos]))
                else:
                    elayer.append(frozenset().union(*(edges[d - 1][r] for r in col)))
            verts.append(vlayer)
            edges.append(elayer)
        self._verts = verts
        self._edges = edges
        incident: dict[int, list[tuple[int, int]]] = {}
        for d in range(1, C.dim + 1):
            for pos, vs in enumerate(verts[d]):
                for v in vs:
                    incident.setdefault(v, []).append((d, pos))
        self._incident = incident

    def link(self, vertex_id: str) -> LinkComplex:
        C = self.complex
        d0, v = C.position(vertex_id)
        if d0 != 0:
            raise StructureError(f"{vertex_id!r} is not a 0-cell")
        cells = self._incident.get(v, [])
        at_v = sorted((pos for d, pos in cells if d == 1), key=lambda p: C.cells(1)[p].id)
        label = {pos: k for k, pos in enumerate(at_v, start=1)}
        simplices: dict[Simplex, str] = {}
        for d, pos in cells:
            simplex = tuple(sorted(label[e] for e in self._edges[d][pos] if e in label))
            cid = C.cells(d)[pos].id
            if len(simplex) != d:
                raise StructureError(f"cell {cid!r} meets {vertex_id!r} in {len(simplex)} edges, expected {d}")
            if simplex in simplices:
                raise StructureError(f"cells {simplices[simplex]!r} and {cid!r} span the same link simplex")
            simplices[simplex] = cid
        K = SimplicialComplex._from_sets(len(at_v), simplices)
        if len(K.members) - 1 != len(simplices):
            raise StructureError(f"link of {vertex_id!r} is not a simplicial complex")
        return LinkComplex(vertex_id, K, simplices)


def vertex_link(C: CellComplex, vertex_id: str) -> LinkComplex:
    return CubicalIndex(C).link(vertex_id)


@dataclass(frozen=True)
class LinkConditionVerdict:
    passed: bool
    vertices_checked: int
    vertex: str | None = None
    witness: FlagWitness | None = None

    def __bool__(self) -> bool:
        return self.passed


def gromov_link_condition(C: CellComplex, vertices: Sequence[str] | None = None) -> LinkConditionVerdict:
    """Check that every vertex link (or those of ``vertices``) is flag."""
    index = CubicalIndex(C)
    ids = [c.id for c in C.cells(0)] if vertices is None else list(vertices)
    for vid in ids:
        w = flag_witness(index.link(vid).complex)
        if w is not None:
            return LinkConditionVerdict(False, len(ids), vid, w)
    return LinkConditionVerdict(True, len(ids))


# -- isomorphism -----------------------------------------------------------

def _joint_refine(A: SimplicialComplex, B: SimplicialComplex) -> tuple[dict[int, int], dict[int, int]]:
    """Color refinement of both complexes over one shared palette."""
    palette: dict[tuple, int] = {}

    def paint(sig: tuple) -> int:
        return palette.setdefault(sig, len(palette))

    def seed(K: SimplicialComplex) -> dict[int, int]:
        return {v: paint(tuple(sorted(len(f) for f in K.facets if v in f)))
                for v in range(1, K.vertex_count + 1)}

    def step(K: SimplicialComplex, colors: dict[int, int]) -> dict[int, int]:
        out = {}
        for v in colors:
            sig = sorted(tuple(sorted(colors[w] for w in f if w != v)) for f in K.facets if v in f)
            out[v] = paint((colors[v], tuple(sig)))
        return out

    ca, cb = seed(A), seed(B)
    for _ in range(max(A.vertex_count, B.vertex_count)):
        na, nb = step(A, ca), step(B, cb)
        stable = len(set(na.values())) == len(set(ca.values())) and \
            len(set(nb.values())) == len(set(cb.values()))
        ca, cb = na, nb
        if stable:
            break
    return ca, cb


def isomorphic_to(A: SimplicialComplex, B: SimplicialComplex) -> bool:
    """Exact isomorphism test by color refinement plus backtracking."""
    cap = limits().max_iso_vertices
    if max(A.vertex_count, B.vertex_count) > cap:
        raise CapacityError(f"isomorphism test limited to {cap} vertices")
    if A.vertex_count != B.vertex_count or len(A.facets) != len(B.facets):
        return False
    if sorted(map(len, A.facets)) != sorted(map(len, B.facets)):
        return False
    if A.is_empty or B.is_empty:
        return A.is_empty and B.is_empty
    ca, cb = _joint_refine(A, B)
    if sorted(ca.values()) != sorted(cb.values()):
        return False
    order = sorted(ca, key=lambda v: (sum(1 for w in ca if ca[w] == ca[v]), v))
    nbr_a, nbr_b = A.neighbors, B.neighbors
    facets_b = set(B.facets)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return all(tuple(sorted(mapping[v] for v in f)) in facets_b for f in A.facets)
        v = order[k]
        for w in sorted(cb):
            if w in used or cb[w] != ca[v]:
                continue
            if any((u in nbr_a[v]) != (mapping[u] in nbr_b[w]) for u in order[:k]):
                continue
            mapping[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


def relabel(K: SimplicialComplex, perm: Mapping[int, int]) -> SimplicialComplex:
    """Apply a vertex bijection ``perm`` to ``K``."""
    return SimplicialComplex._from_sets(
        K.vertex_count, [frozenset(perm[v] for v in f) for f in K.facets])

