"""The basic construction over the mirrored chamber ``R_K ∩ [0,1]^m``.

A cell of ``U(W, X)`` is a class ``[(w, c)]`` of a group element and a
chamber cell, where ``(w, c) ~ (w', c)`` iff ``w^-1 w'`` lies in the
subgroup generated by the mirrors containing ``c``. Each class is stored
under its shortlex-least representative.

Two groups are supported: the finite group ``(Z/2)^m`` (the result is the
real moment-angle complex, subdivided) and finite balls of the right-angled
Coxeter group ``W_K`` (finite pieces of the Davis complex).
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cellcx import (Cell, CellComplex, ChamberLabel, CornerLabel, CubicalIndex,
                     gromov_link_condition, isomorphic_to)
from .coxeter import (NormalForm, RacgPresentation, Word, ball_elements, lambda_map,
                      normal_form, racg_from_complex)
from .errors import DomainError, InputError, StructureError
from .homology import homology, smith_normal_form
from .polyprod import build_cc, build_rk, build_rk_subdivided
from .simplicial import FlagWitness, SimplicialComplex, flag_witness


@dataclass(frozen=True)
class MirroredChamber:
    complex: CellComplex
    mirrors: dict[int, frozenset[str]] = field(compare=False)

    def mirror_set(self, cell_id: str) -> frozenset[int]:
        """Generators whose mirror contains the cell."""
        return frozenset(i for i, cells in self.mirrors.items() if cell_id in cells)


def mirrored_chamber(K: SimplicialComplex) -> MirroredChamber:
    C, mirrors = build_cc(K)
    return MirroredChamber(C, mirrors)


@dataclass(frozen=True)
class BasicConstruction:
    base: MirroredChamber
    group: str  # "z2" or "ball"
    radius: int | None
    complex: CellComplex
    classes: dict[str, tuple[Word, str]] = field(compare=False)
    interior: frozenset[str] = frozenset()
    chambers: tuple[Word, ...] = ()

    def representative(self, cell_id: str) -> tuple[Word, str]:
        return self.classes[cell_id]

    def cone_vertices(self) -> list[str]:
        """0-cells at the corner ``(1,...,1)`` of each chamber copy."""
        m = max(self.base.mirrors, default=0)
        corner = str(CornerLabel((), (), m))
        return [c.id for c in self.complex.cells(0) if self.classes[c.id][1] == corner]


def class_id(w: Word, cell: str) -> str:
    return str(ChamberLabel(w, cell))


def _z2_coset_rep(w: Word, S: frozenset[int]) -> Word:
    return tuple(s for s in w if s not in S)


def _racg_coset_rep(P: RacgPresentation) -> Callable[[Word, frozenset[int]], Word]:
    cache: dict[tuple[Word, frozenset[int]], Word] = {}

    def rep(w: Word, S: frozenset[int]) -> Word:
        key = (w, S)
        if key not in cache:
            gens = sorted(S)
            best = None
            for k in range(len(gens) + 1):
                for u in itertools.combinations(gens, k):
                    x = normal_form(P, w + u)
                    if best is None or x < best:
                        best = x
            cache[key] = best.word
        return cache[key]

    return rep


def _coset(w: Word, S: frozenset[int], mult: Callable[[Word], Word]) -> list[Word]:
    gens = sorted(S)
    return [mult(w + u) for k in range(len(gens) + 1) for u in itertools.combinations(gens, k)]


def _construct(chamber: MirroredChamber, elements: Sequence[Word],
               coset_rep: Callable[[Word, frozenset[int]], Word],
               mult: Callable[[Word], Word], present: Callable[[Word], bool],
               group: str, radius: int | None) -> BasicConstruction:
    X = chamber.complex
    stab = {c.id: chamber.mirror_set(c.id) for c in X.all_cells()}
    cells: list[Cell] = []
    boundary: dict[str, dict[str, int]] = {}
    classes: dict[str, tuple[Word, str]] = {}
    interior = set()
    for w in elements:
        for c in X.all_cells():
            rep = coset_rep(w, stab[c.id])
            cid = class_id(rep, c.id)
            if cid in classes:
                continue
            classes[cid] = (rep, c.id)
            cells.append(Cell(cid, c.dim, ChamberLabel(rep, c.id)))
            faces = {}
            for f, v in X.boundary_of(c.id).items():
                faces[class_id(coset_rep(rep, stab[f]), f)] = v
            if faces:
                boundary[cid] = faces
            if all(present(x) for x in _coset(rep, stab[c.id], mult)):
                interior.add(cid)
    cells.sort(key=lambda c: c.dim)
    return BasicConstruction(chamber, group, radius, CellComplex(cells, boundary),
                             classes, frozenset(interior), tuple(elements))


def basic_construction(K: SimplicialComplex, group: str | int = "z2",
                       chamber: MirroredChamber | None = None) -> BasicConstruction:
    """``U(G, chamber)`` for ``G = (Z/2)^m`` (``group="z2"``) or the ball of
    radius ``group`` in ``W_K`` (an integer)."""
    chamber = chamber or mirrored_chamber(K)
    m = K.vertex_count
    if group == "z2":
        elements = [tuple(i for i in range(1, m + 1) if bits[i - 1])
                    for bits in itertools.product((0, 1), repeat=m)]
        elements.sort(key=lambda w: (len(w), w))

        def mult(w: Word) -> Word:
            return tuple(i for i in range(1, m + 1) if w.count(i) % 2)

        return _construct(chamber, elements, _z2_coset_rep, mult, lambda w: True, "z2", None)
    if group == "full":
        P = racg_from_complex(K)
        if len(P.commuting) != m * (m - 1) // 2:
            raise InputError("W_K is infinite unless every pair of generators commutes")
        group = m
    if not isinstance(group, int):
        raise InputError(f"group must be 'z2', 'full' or a radius, not {group!r}")
    P = racg_from_complex(K)
    elements = [x.word for x in ball_elements(P, group)]
    rep = _racg_coset_rep(P)
    radius = group

    def mult(w: Word) -> Word:
        return normal_form(P, w).word

    return _construct(chamber, elements, rep, mult, lambda w: len(w) <= radius, "ball", radius)


def davis_ball(K: SimplicialComplex, r: int) -> BasicConstruction:
    """Chambers of the Davis complex indexed by elements of length ``<= r``."""
    if flag_witness(K) is not None:
        warnings.warn("K is not flag; the construction is not the Davis complex of a CAT(0) cube complex",
                      stacklevel=2)
    return basic_construction(K, r)


# -- covering check --------------------------------------------------------

def covering_image(m: int, w: Word, chamber_cell: CornerLabel) -> str:
    """Cell of the subdivided real moment-angle complex hit by ``[(w, c)]``."""
    signs = lambda_map(w, m)
    out = []
    for i in range(1, m + 1):
        if i in chamber_cell.free:
            out.append("<" if signs[i - 1] else ">")
        elif i in chamber_cell.zero:
            out.append("0")
        else:
            out.append("-" if signs[i - 1] else "+")
    return "(" + ",".join(out) + ")"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    witnesses: tuple[str, ...] = ()
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class CoveringReport:
    radius: int
    well_defined: CheckResult
    surjective: CheckResult
    interior_links: CheckResult
    interior_vertices: int
    kernel_in_ball: int
    chamber_multiplicity: dict[str, int] = field(compare=False)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in (self.well_defined, self.surjective, self.interior_links))

    def to_json(self) -> dict:
        return {
            "radius": self.radius,
            "checks": [{"name": c.name, "status": c.status, "witnesses": list(c.witnesses),
                        "detail": c.detail}
                       for c in (self.well_defined, self.surjective, self.interior_links)],
            "interior_vertices": self.interior_vertices,
            "kernel_in_ball": self.kernel_in_ball,
            "passed": self.passed,
        }


def covering_check(K: SimplicialComplex, r: int) -> CoveringReport:
    """Check the chamber map ``[(w, c)] -> lambda(w) . c`` onto the subdivided ``R_K``."""
    if r < 1:
        raise InputError("radius must be at least 1")
    m = K.vertex_count
    U = _quiet_ball(K, r)
    target = build_rk_subdivided(K)
    P = racg_from_complex(K)
    X = U.base.complex
    label = {c.id: c.label for c in X.all_cells()}
    ball = set(U.chambers)

    # (a) every representative in the ball gives the same image, and faces go to faces
    image: dict[str, str] = {}
    bad: list[str] = []
    for cid, (rep, c) in U.classes.items():
        S = U.base.mirror_set(c)
        imgs = set()
        gens = sorted(S)
        for k in range(len(gens) + 1):
            for u in itertools.combinations(gens, k):
                w = normal_form(P, rep + u).word
                if w in ball:
                    imgs.add(covering_image(m, w, label[c]))
        if len(imgs) != 1 or next(iter(imgs)) not in target:
            bad.append(cid)
            continue
        image[cid] = imgs.pop()
    for cid in image:
        faces = U.complex.boundary_of(cid)
        target_faces = set(target.boundary_of(image[cid]))
        if {image[f] for f in faces if f in image} != target_faces:
            bad.append(cid)
    well_defined = CheckResult("well-defined", "fail" if bad else "pass", tuple(sorted(bad)[:10]))

    # (b) surjectivity once every sign pattern is realized in the ball
    if r >= m:
        missed = sorted({c.id for c in target.all_cells()} - set(image.values()))
        surjective = CheckResult("surjective", "fail" if missed else "pass", tuple(missed[:10]))
    else:
        surjective = CheckResult("surjective", "skipped", detail=f"radius {r} < m = {m}")

    # (c) links at interior vertices map isomorphically
    interior_vertices = [c.id for c in U.complex.cells(0) if c.id in U.interior]
    src_index, dst_index = CubicalIndex(U.complex), CubicalIndex(target)
    failures = []
    for v in interior_vertices:
        if not _link_map_is_isomorphism(src_index, dst_index, v, image):
            failures.append(v)
    interior_links = CheckResult("interior-links", "fail" if failures else "pass",
                                 tuple(failures[:10]), f"{len(interior_vertices)} interior vertices")

    kernel = sum(1 for w in U.chambers if not any(lambda_map(w, m)))
    top = X.dim
    multiplicity = Counter(image[cid] for cid, (_, c) in U.classes.items()
                           if cid in image and X.cell(c).dim == top)
    return CoveringReport(r, well_defined, surjective, interior_links, len(interior_vertices),
                          kernel, dict(sorted(multiplicity.items())))


def _quiet_ball(K: SimplicialComplex, r: int) -> BasicConstruction:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return davis_ball(K, r)


def _link_map_is_isomorphism(src: CubicalIndex, dst: CubicalIndex, v: str,
                             image: dict[str, str]) -> bool:
    if v not in image:
        return False
    a = src.link(v)
    b = dst.link(image[v])
    cells_a = set(a.simplices.values())
    if not all(c in image for c in cells_a):
        return False
    mapped = {image[c] for c in cells_a}
    if len(mapped) != len(cells_a) or mapped != set(b.simplices.values()):
        return False
    # link vertices correspond through the edge map; simplices must match
    vert_map = {k: b.edges.index(image[e]) + 1 for k, e in enumerate(a.edges, start=1)}
    for simplex, cell in a.simplices.items():
        target = tuple(sorted(vert_map[k] for k in simplex))
        if b.simplices.get(target) != image[cell]:
            return False
    return True


# -- nonpositive curvature certificate -------------------------------------

@dataclass(frozen=True)
class NpcCertificate:
    issued: bool
    facts: tuple[str, ...] = ()
    witness: FlagWitness | None = None
    failing_vertex: str | None = None

    def __bool__(self) -> bool:
        return self.issued

    def to_json(self) -> dict:
        return {"issued": self.issued, "facts": list(self.facts),
                "witness": list(self.witness.missing_face) if self.witness else None,
                "vertex": self.failing_vertex}


def npc_certificate(K: SimplicialComplex, r_check: int = 2) -> NpcCertificate:
    """Certify that every checked vertex link is flag, and isomorphic to ``K``
    at the group-element vertices."""
    w = flag_witness(K)
    if w is not None:
        return NpcCertificate(False, ("K is not flag",), w)
    facts = ["K is flag"]
    rk = build_rk(K)
    verdict = gromov_link_condition(rk)
    if not verdict:
        return NpcCertificate(False, tuple(facts), verdict.witness, verdict.vertex)
    index = CubicalIndex(rk)
    for c in rk.cells(0):
        if not isomorphic_to(index.link(c.id).complex, K):
            return NpcCertificate(False, tuple(facts), None, c.id)
    facts.append(f"all {verdict.vertices_checked} vertex links of R_K are flag and isomorphic to K")
    U = davis_ball(K, r_check)
    interior = [c.id for c in U.complex.cells(0) if c.id in U.interior]
    verdict = gromov_link_condition(U.complex, interior)
    if not verdict:
        return NpcCertificate(False, tuple(facts), verdict.witness, verdict.vertex)
    index = CubicalIndex(U.complex)
    cones = U.cone_vertices()
    for v in cones:
        if not isomorphic_to(index.link(v).complex, K):
            return NpcCertificate(False, tuple(facts), None, v)
    facts.append(f"all {len(interior)} interior vertex links of the radius-{r_check} Davis ball are flag")
    facts.append(f"all {len(cones)} chamber-corner vertex links of the radius-{r_check} Davis ball "
                 "are isomorphic to K")
    return NpcCertificate(True, tuple(facts))


# -- fundamental group presentations ---------------------------------------

@dataclass(frozen=True)
class Pi1Presentation:
    generators: tuple[str, ...]  # non-tree edge ids
    relators: tuple[tuple[tuple[int, int], ...], ...]  # (generator index, +1/-1)
    abelianization: tuple[int, ...]  # invariant factors; 0 stands for a free Z summand

    @property
    def abelian_rank(self) -> int:
        return self.abelianization.count(0)

    @property
    def abelian_torsion(self) -> tuple[int, ...]:
        return tuple(x for x in self.abelianization if x > 1)


def _edge_ends(C: CellComplex, e: str) -> tuple[str, str]:
    bnd = C.boundary_of(e)
    if not bnd:
        if len(C.cells(0)) == 1:
            v = C.cells(0)[0].id
            return v, v
        raise StructureError(f"edge {e!r} has zero boundary but the complex has several vertices")
    head = [v for v, c in bnd.items() if c == 1]
    tail = [v for v, c in bnd.items() if c == -1]
    if len(head) != 1 or len(tail) != 1 or len(bnd) != 2:
        raise StructureError(f"edge {e!r} is not a regular 1-cell")
    return tail[0], head[0]


def _boundary_loop(C: CellComplex, f: str, ends: dict[str, tuple[str, str]]) -> list[tuple[str, int]]:
    """Order the boundary edges of a 2-cell into a closed edge path."""
    terms = list(C.boundary_of(f).items())
    if any(abs(c) != 1 for _, c in terms):
        raise StructureError(f"2-cell {f!r} is not attached along a simple loop")
    steps = []
    for e, c in terms:
        a, b = ends[e]
        steps.append((e, c, a, b) if c == 1 else (e, c, b, a))
    steps.sort()
    path = [steps.pop(0)]
    while steps:
        here = path[-1][3]
        nxt = next((k for k, s in enumerate(steps) if s[2] == here), None)
        if nxt is None:
            raise StructureError(f"boundary of 2-cell {f!r} is not a closed loop")
        path.append(steps.pop(nxt))
    if path[-1][3] != path[0][2]:
        raise StructureError(f"boundary of 2-cell {f!r} is not a closed loop")
    return [(e, c) for e, c, _, _ in path]


def pi1_presentation(C: CellComplex) -> Pi1Presentation:
    """Edge-path presentation of the fundamental group of the 2-skeleton."""
    verts = sorted(c.id for c in C.cells(0))
    if not verts:
        raise DomainError("empty complex")
    ends = {e.id: _edge_ends(C, e.id) for e in C.cells(1)}
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in verts}
    for e in sorted(ends):
        a, b = ends[e]
        adj[a].append((e, b))
        adj[b].append((e, a))
    tree: set[str] = set()
    seen = {verts[0]}
    todo = deque([verts[0]])
    while todo:
        v = todo.popleft()
        for e, w in adj[v]:
            if w not in seen:
                seen.add(w)
                tree.add(e)
                todo.append(w)
    if len(seen) != len(verts):
        raise DomainError("complex is not connected")
    gens = tuple(sorted(e for e in ends if e not in tree))
    gindex = {e: k for k, e in enumerate(gens)}
    relators = []
    for f in sorted(c.id for c in C.cells(2)):
        loop = _boundary_loop(C, f, ends)
        relators.append(tuple((gindex[e], c) for e, c in loop if e in gindex))
    matrix = [[0] * len(gens) for _ in relators]
    for i, rel in enumerate(relators):
        for g, c in rel:
            matrix[i][g] += c
    if relators and gens:
        snf = smith_normal_form(matrix, record=False)
        factors = [d for d in snf.invariant_factors if d != 1]
        free = len(gens) - snf.rank
    else:
        factors, free = [], len(gens)
    return Pi1Presentation(gens, tuple(relators), tuple(factors) + (0,) * free)


def h1_invariants(C: CellComplex) -> tuple[tuple[int, ...], int]:
    """Torsion and rank of integral ``H_1``, for comparison with the abelianization."""
    H = homology(C, "Z")
    return H.torsion(1), H.betti(1)


@dataclass(frozen=True)
class SimpleConnectivityEvidence:
    status: str  # "trivial" | "nontrivial" | "inconclusive"
    abelianization_trivial: bool
    detail: str = ""


def _free_reduce(word: list[tuple[int, int]]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for g, c in word:
        if out and out[-1][0] == g:
            c += out.pop()[1]
        if c:
            out.append((g, c))
    # cyclic reduction
    while len(out) > 1 and out[0][0] == out[-1][0]:
        g, c = out.pop()
        c += out[0][1]
        out = [(g, c)] + out[1:] if c else out[1:]
    return out


def _tietze_kill(relators) -> tuple[set[int], list[list[tuple[int, int]]]]:
    """Drop generators that some relator sets equal to the identity."""
    rels = [_free_reduce(list(r)) for r in relators]
    killed: set[int] = set()
    changed = True
    while changed:
        changed = False
        for r in rels:
            if len(r) == 1 and abs(r[0][1]) == 1:
                killed.add(r[0][0])
                changed = True
        if changed:
            rels = [_free_reduce([x for x in r if x[0] not in killed]) for r in rels]
        rels = [r for r in rels if r]
    return killed, rels


def coset_count(generators: int, relators, max_cosets: int = 5000) -> int | None:
    """Order of ``<x_0..x_{n-1} | relators>`` by coset enumeration, or None past the bound.

    Relators are sequences of ``(generator index, exponent)``.
    """
    from sympy.combinatorics.fp_groups import FpGroup, coset_enumeration_r
    from sympy.combinatorics.free_groups import free_group

    F, *xs = free_group(",".join(f"x{k}" for k in range(generators)))
    rels = []
    for rel in relators:
        word = F.identity
        for g, c in rel:
            word = word * xs[g] ** c
        rels.append(word)
    try:
        table = coset_enumeration_r(FpGroup(F, rels), [], max_cosets=max_cosets)
    except ValueError:
        return None
    table.compress()
    return len(table.table)


def simply_connected_evidence(C: CellComplex, max_cosets: int = 5000) -> SimpleConnectivityEvidence:
    """Abelianization, then Tietze elimination and bounded coset enumeration."""
    pres = pi1_presentation(C)
    if pres.abelianization:
        return SimpleConnectivityEvidence("nontrivial", False, "abelianization is nontrivial")
    killed, relators = _tietze_kill(pres.relators)
    live = [g for g in range(len(pres.generators)) if g not in killed]
    if not live:
        return SimpleConnectivityEvidence("trivial", True, "every generator is killed by a relator")
    index = {g: k for k, g in enumerate(live)}
    n = coset_count(len(live), [[(index[g], c) for g, c in r] for r in relators], max_cosets)
    if n is None:
        return SimpleConnectivityEvidence("inconclusive", True, f"more than {max_cosets} cosets")
    return SimpleConnectivityEvidence("trivial" if n == 1 else "nontrivial", True,
                                      f"coset enumeration closed with {n} cosets")
