"""Exact cellular homology over the integers and mod 2.

Integer invariants come from the Smith normal form. ``smith_normal_form``
is the reference routine: dense, least-absolute-value pivoting, and it
records every elementary operation so the diagonalization can be replayed.
``invariant_factors`` is the fast path used for boundary matrices: it first
eliminates unit pivots sparsely (unimodular, so the invariant factors are
unchanged) and hands the small remainder to the dense routine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cellcx import CellComplex, validate
from .config import limits
from .errors import CapacityError, InputError, StructureError
from .simplicial import SimplicialComplex, full_subcomplex

Matrix = list[list[int]]
# ("swap_rows", i, j) | ("swap_cols", i, j) | ("add_row", src, dst, k): row dst += k*row src
# | ("add_col", src, dst, k) | ("neg_row", i) | ("neg_col", j)
Operation = tuple


@dataclass(frozen=True)
class SmithDecomposition:
    diagonal: tuple[int, ...]
    rank: int
    shape: tuple[int, int]
    operations: tuple[Operation, ...] = ()

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.diagonal[:self.rank]


def apply_operation(M: Matrix, op: Operation) -> None:
    kind = op[0]
    if kind == "swap_rows":
        _, i, j = op
        M[i], M[j] = M[j], M[i]
    elif kind == "swap_cols":
        _, i, j = op
        for row in M:
            row[i], row[j] = row[j], row[i]
    elif kind == "add_row":
        _, src, dst, k = op
        M[dst] = [a + k * b for a, b in zip(M[dst], M[src])]
    elif kind == "add_col":
        _, src, dst, k = op
        for row in M:
            row[dst] += k * row[src]
    elif kind == "neg_row":
        M[op[1]] = [-a for a in M[op[1]]]
    elif kind == "neg_col":
        for row in M:
            row[op[1]] = -row[op[1]]
    else:
        raise InputError(f"unknown operation {kind!r}")


def replay(M: Sequence[Sequence[int]], operations: Iterable[Operation]) -> Matrix:
    """Apply recorded operations to a copy of ``M``."""
    out = [list(row) for row in M]
    for op in operations:
        apply_operation(out, op)
    return out


def diagonal_matrix(shape: tuple[int, int], diagonal: Sequence[int]) -> Matrix:
    rows, cols = shape
    out = [[0] * cols for _ in range(rows)]
    for i, d in enumerate(diagonal):
        out[i][i] = d
    return out


def smith_normal_form(M: Sequence[Sequence[int]], record: bool = True) -> SmithDecomposition:
    """Smith normal form ``d1 | d2 | ... | dr``, zeros trailing.

    Pivot is the nonzero entry of least absolute value in the active block
    (ties: smallest row, then column). Python integers are unbounded, so no
    overflow handling is needed.
    """
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(len(r) != cols for r in A):
        raise InputError("ragged matrix")
    ops: list[Operation] = []

    def do(op: Operation) -> None:
        apply_operation(A, op)
        if record:
            ops.append(op)

    def least(row_range: Iterable[int], col_range: Iterable[int]) -> tuple[int, int] | None:
        best = None
        col_range = list(col_range)
        for i in row_range:
            Ai = A[i]
            for j in col_range:
                a = Ai[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        return i, j
        return None if best is None else (best[1], best[2])

    t = 0
    while t < min(rows, cols):
        pos = least(range(t, rows), range(t, cols))
        if pos is None:
            break
        while True:
            i, j = pos
            if i != t:
                do(("swap_rows", t, i))
            if j != t:
                do(("swap_cols", t, j))
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        do(("add_row", t, i, -q))
                    dirty |= A[i][t] != 0
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        do(("add_col", t, j, -q))
                    dirty |= A[t][j] != 0
            if dirty:
                # a smaller remainder appeared in the pivot row or column
                pos = least(range(t, rows), [t]) or (t, t)
                alt = least([t], range(t, cols))
                if alt and abs(A[alt[0]][alt[1]]) < abs(A[pos[0]][pos[1]]):
                    pos = alt
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if A[i][j] % p), None)
            if bad is None:
                break
            do(("add_row", bad[0], t, 1))
            pos = (t, t)
        if A[t][t] < 0:
            do(("neg_row", t))
        t += 1
    diag = tuple(A[i][i] for i in range(min(rows, cols)))
    rank = sum(1 for d in diag if d)
    return SmithDecomposition(diag, rank, (rows, cols), tuple(ops))


def _unit_eliminate(columns: Sequence[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Sparse elimination of unit pivots.

    Returns the number of unit invariant factors split off and the remaining
    columns (rows still indexed by the original row numbers).
    """
    cols = {j: dict(c) for j, c in enumerate(columns) if c}
    rows: dict[int, set[int]] = {}
    for j, c in cols.items():
        for i in c:
            rows.setdefault(i, set()).add(j)
    units = 0
    while True:
        pivot = None
        best = None
        for j, c in cols.items():
            for i, v in c.items():
                if v in (1, -1):
                    cost = (len(c) - 1) * (len(rows[i]) - 1)
                    if best is None or cost < best:
                        best, pivot = cost, (i, j)
                        if cost == 0:
                            break
            if best == 0:
                break
        if pivot is None:
            break
        i, j = pivot
        pcol = cols.pop(j)
        u = pcol[i]
        for r in pcol:
            rows[r].discard(j)
        # column ops clear row i elsewhere: col_k -= (a_ik * u) col_j, u = 1/u
        for k in list(rows[i]):
            ck = cols[k]
            f = ck[i] * u
            for r, v in pcol.items():
                nv = ck.get(r, 0) - f * v
                if nv:
                    if r not in ck:
                        rows[r].add(k)
                    ck[r] = nv
                elif r in ck:
                    del ck[r]
                    rows[r].discard(k)
            if not ck:
                del cols[k]
        units += 1
        for r in pcol:
            if r in rows and not rows[r]:
                del rows[r]
    return units, list(cols.values())


def invariant_factors(columns: Sequence[dict[int, int]]) -> list[int]:
    """Nonzero Smith invariant factors of a sparse column matrix."""
    units, rest = _unit_eliminate(columns)
    if not rest:
        return [1] * units
    row_ids = sorted({i for c in rest for i in c})
    where = {i: k for k, i in enumerate(row_ids)}
    dense = [[0] * len(rest) for _ in row_ids]
    for j, c in enumerate(rest):
        for i, v in c.items():
            dense[where[i]][j] = v
    snf = smith_normal_form(dense, record=False)
    return [1] * units + list(snf.invariant_factors)


def rank_mod2(columns: Sequence[dict[int, int]]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for c in columns:
        v = 0
        for i, a in c.items():
            if a & 1:
                v |= 1 << i
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                rank += 1
                break
    return rank


# -- homology results ------------------------------------------------------

@dataclass(frozen=True)
class DegreeHomology:
    d: int
    betti: int
    torsion: tuple[int, ...] = ()


@dataclass(frozen=True)
class HomologyResult:
    coeffs: str  # "Z" or "Z2"
    degrees: tuple[DegreeHomology, ...]

    def betti(self, d: int) -> int:
        for deg in self.degrees:
            if deg.d == d:
                return deg.betti
        return 0

    def torsion(self, d: int) -> tuple[int, ...]:
        for deg in self.degrees:
            if deg.d == d:
                return deg.torsion
        return ()

    @property
    def betti_numbers(self) -> list[int]:
        return [deg.betti for deg in self.degrees]

    def to_json(self) -> dict:
        return {"coeffs": self.coeffs,
                "betti": [x.betti for x in self.degrees],
                "degrees": [{"d": x.d, "betti": x.betti, "torsion": list(x.torsion)}
                            for x in self.degrees]}


def _normalize_coeffs(coeffs: str) -> str:
    key = str(coeffs).upper()
    if key in ("Z", "INTEGERS", "INT"):
        return "Z"
    if key in ("Z2", "Z/2", "MOD2", "F2", "2"):
        return "Z2"
    raise InputError(f"unsupported coefficients {coeffs!r}; use 'Z' or 'Z2'")


def chain_homology(sizes: dict[int, int], boundaries: dict[int, Sequence[dict[int, int]]],
                   coeffs: str = "Z") -> HomologyResult:
    """Homology of a chain complex given by sizes and sparse boundary columns.

    ``boundaries[d]`` maps ``d``-chains to ``(d-1)``-chains.
    """
    coeffs = _normalize_coeffs(coeffs)
    ranks: dict[int, int] = {}
    factors: dict[int, list[int]] = {}
    for d, cols in boundaries.items():
        if coeffs == "Z2":
            ranks[d] = rank_mod2(cols)
        else:
            factors[d] = invariant_factors(cols)
            ranks[d] = len(factors[d])
    out = []
    for d in sorted(sizes):
        b = sizes[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        tors = tuple(f for f in factors.get(d + 1, ()) if f > 1)
        out.append(DegreeHomology(d, b, tors))
    return HomologyResult(coeffs, tuple(out))


def homology(C: CellComplex, coeffs: str = "Z") -> HomologyResult:
    report = validate(C)
    if not report.ok:
        v = report.violations[0]
        raise StructureError(f"invalid complex at degree {v.d}, cell {v.column!r}: {v.message}")
    sizes = {d: n for d, n in enumerate(C.counts())}
    boundaries = {d: C.boundary_columns(d) for d in range(1, C.dim + 1)}
    return chain_homology(sizes, boundaries, coeffs)


def rational_betti(H: HomologyResult) -> list[int]:
    if H.coeffs != "Z":
        raise InputError("rational betti numbers need integer homology")
    return H.betti_numbers


# -- simplicial homology ---------------------------------------------------

def simplicial_boundaries(K: SimplicialComplex) -> tuple[dict[int, int], dict[int, list[dict[int, int]]]]:
    """Augmented simplicial chain complex: degree -1 holds the empty simplex."""
    faces = {d: K.faces(d) for d in range(-1, K.dim + 1)}
    index = {d: {s: i for i, s in enumerate(fs)} for d, fs in faces.items()}
    sizes = {d: len(fs) for d, fs in faces.items()}
    boundaries: dict[int, list[dict[int, int]]] = {}
    for d in range(0, K.dim + 1):
        cols = []
        for s in faces[d]:
            col = {}
            for k in range(len(s)):
                col[index[d - 1][s[:k] + s[k + 1:]]] = (-1) ** k
            cols.append(col)
        boundaries[d] = cols
    return sizes, boundaries


def reduced_simplicial_homology(K: SimplicialComplex, coeffs: str = "Z") -> HomologyResult:
    """Reduced homology in degrees ``-1..dim K``.

    The empty complex has rank 1 in degree -1; every other complex has rank 0
    there.
    """
    sizes, boundaries = simplicial_boundaries(K)
    return chain_homology(sizes, boundaries, coeffs)


def simplicial_chain_complex(K: SimplicialComplex) -> CellComplex:
    """The simplices of ``K`` as an (unaugmented) cell complex."""
    from .cellcx import Cell

    def name(s):
        return "{" + ",".join(map(str, s)) + "}"

    cells = [Cell(name(s), len(s) - 1) for d in range(K.dim + 1) for s in K.faces(d)]
    boundary = {}
    for d in range(1, K.dim + 1):
        for s in K.faces(d):
            boundary[name(s)] = {name(s[:k] + s[k + 1:]): (-1) ** k for k in range(len(s))}
    return CellComplex(cells, boundary)


# -- cross-oracle ----------------------------------------------------------

@dataclass(frozen=True)
class CrossCheckRow:
    d: int
    direct: int
    splitting: int


@dataclass(frozen=True)
class CrossCheckReport:
    rows: tuple[CrossCheckRow, ...]
    contributions: dict[int, dict[tuple[int, ...], int]]

    @property
    def agrees(self) -> bool:
        return all(r.direct == r.splitting for r in self.rows)

    def __bool__(self) -> bool:
        return self.agrees


def hochster_cross_check(K: SimplicialComplex) -> CrossCheckReport:
    """Compare mod-2 reduced homology of the real moment-angle complex with
    the sum over nonempty vertex sets ``J`` of ``H~_{i-1}(K_J)``."""
    from .polyprod import build_rk

    m = K.vertex_count
    cap = limits().max_cross_check_vertices
    if m > cap:
        raise CapacityError(f"cross-check limited to {cap} vertices")
    H = homology(build_rk(K), "Z2")
    direct = {deg.d: deg.betti - (1 if deg.d == 0 else 0) for deg in H.degrees}
    split: dict[int, int] = {}
    contributions: dict[int, dict[tuple[int, ...], int]] = {}
    for size in range(1, m + 1):
        for J in itertools.combinations(range(1, m + 1), size):
            HJ = reduced_simplicial_homology(full_subcomplex(K, J), "Z2")
            for deg in HJ.degrees:
                if deg.betti:
                    split[deg.d + 1] = split.get(deg.d + 1, 0) + deg.betti
                    contributions.setdefault(deg.d + 1, {})[J] = deg.betti
    degrees = sorted(set(direct) | set(split))
    rows = tuple(CrossCheckRow(d, direct.get(d, 0), split.get(d, 0)) for d in degrees)
    return CrossCheckReport(rows, contributions)
