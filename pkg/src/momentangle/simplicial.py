"""Finite abstract simplicial complexes on the vertex set ``1..m``.

A complex is stored by its facets (inclusion-maximal members). Simplices are
plain tuples of strictly increasing vertex indices; the empty tuple is the
empty simplex.

Every declared vertex is a member, with one exception: the *empty complex*
whose only member is the empty simplex. ``from_facets`` fills in uncovered
vertices as 0-dimensional facets ("ghost" vertices), and returns the empty
complex only when no nonempty facet is listed.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DomainError, InputError

Simplex = tuple[int, ...]


def _maximal(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-maximal members of ``sets`` (duplicates dropped)."""
    kept: list[frozenset[int]] = []
    for s in sorted(set(sets), key=len, reverse=True):
        if not any(s <= k for k in kept):
            kept.append(s)
    return kept


@dataclass(frozen=True)
class FlagWitness:
    """A set of pairwise adjacent vertices that does not span a simplex."""

    missing_face: Simplex


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: tuple[Simplex, ...]
    # relabeling[k-1] is the vertex of the parent complex now called k
    relabeling: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        m = self.vertex_count
        if m < 0:
            raise InputError("vertex count must be nonnegative")
        if not self.facets:
            raise InputError("the void complex (no members at all) is not allowed")
        covered: set[int] = set()
        for f in self.facets:
            if any(b <= a for a, b in zip(f, f[1:])):
                raise InputError(f"simplex {f} is not strictly increasing")
            if f and (f[0] < 1 or f[-1] > m):
                raise InputError(f"simplex {f} has a vertex outside 1..{m}")
            covered.update(f)
        sets = [frozenset(f) for f in self.facets]
        if len(_maximal(sets)) != len(sets):
            raise InputError("facets must form an antichain")
        if self.facets != ((),) and covered != set(range(1, m + 1)):
            raise InputError("every declared vertex must be a member")
        if list(self.facets) != sorted(self.facets):
            object.__setattr__(self, "facets", tuple(sorted(self.facets)))

    @classmethod
    def _from_sets(cls, m: int, sets: Iterable[Iterable[int]],
                   relabeling: tuple[int, ...] | None = None) -> SimplicialComplex:
        facets = _maximal(frozenset(s) for s in sets)
        if not facets:
            facets = [frozenset()]
        return cls(m, tuple(sorted(tuple(sorted(f)) for f in facets)), relabeling)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_empty(self) -> bool:
        """True for the complex whose only member is the empty simplex."""
        return self.facets == ((),)

    @cached_property
    def members(self) -> frozenset[Simplex]:
        out: set[Simplex] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(itertools.combinations(f, k))
        return frozenset(out)

    def faces(self, d: int) -> list[Simplex]:
        """Members of dimension ``d`` in lexicographic order."""
        return sorted(s for s in self.members if len(s) == d + 1)

    def f_vector(self) -> list[int]:
        return [len(self.faces(d)) for d in range(self.dim + 1)]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for f in self.facets:
            for a, b in itertools.combinations(f, 2):
                nbrs[a].add(b)
                nbrs[b].add(a)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @property
    def edges(self) -> list[Simplex]:
        return self.faces(1)

    def __contains__(self, simplex: Iterable[int]) -> bool:
        return tuple(sorted(simplex)) in self.members


def from_facets(m: int, facets: Sequence[Sequence[int]]) -> SimplicialComplex:
    """Complex on ``1..m`` generated by ``facets``; redundant facets are absorbed."""
    if m < 0:
        raise InputError("vertex count must be nonnegative")
    sets = []
    for f in facets:
        for v in f:
            if not 1 <= v <= m:
                raise InputError(f"vertex {v} outside 1..{m}")
        if len(set(f)) != len(f):
            raise InputError(f"facet {list(f)} repeats a vertex")
        sets.append(frozenset(f))
    if any(sets):
        covered = set().union(*sets)
        sets.extend(frozenset([v]) for v in range(1, m + 1) if v not in covered)
    return SimplicialComplex._from_sets(m, sets)


def simplex_complex(m: int) -> SimplicialComplex:
    """The full simplex on ``m`` vertices (``m >= 1``)."""
    return from_facets(m, [list(range(1, m + 1))])


def boundary_of_simplex(m: int) -> SimplicialComplex:
    """Boundary of the simplex on ``m`` vertices (``m >= 2``)."""
    return from_facets(m, [[v for v in range(1, m + 1) if v != w] for w in range(1, m + 1)])


def cycle_complex(n: int) -> SimplicialComplex:
    """Boundary of an ``n``-gon (``n >= 3``)."""
    return from_facets(n, [[i, i % n + 1] for i in range(1, n + 1)])


def discrete_complex(m: int) -> SimplicialComplex:
    return from_facets(m, [[v] for v in range(1, m + 1)])


# -- flagness --------------------------------------------------------------

def _cliques_of_size(K: SimplicialComplex, k: int) -> Iterable[Simplex]:
    """All ``k``-cliques of the 1-skeleton, in lexicographic order."""
    nbrs = K.neighbors

    def extend(clique: Simplex, candidates: list[int]) -> Iterable[Simplex]:
        if len(clique) == k:
            yield clique
            return
        for i, v in enumerate(candidates):
            yield from extend(clique + (v,), [w for w in candidates[i + 1:] if w in nbrs[v]])

    yield from extend((), list(range(1, K.vertex_count + 1)))


def flag_witness(K: SimplicialComplex) -> FlagWitness | None:
    """Smallest (then lexicographically least) clique that is not a member."""
    members = K.members
    k = 3
    while True:
        found = False
        for clique in _cliques_of_size(K, k):
            found = True
            if clique not in members:
                return FlagWitness(clique)
        if not found:
            return None
        k += 1


def is_flag(K: SimplicialComplex) -> bool:
    return flag_witness(K) is None


# -- derived complexes -----------------------------------------------------

def full_subcomplex(K: SimplicialComplex, J: Iterable[int]) -> SimplicialComplex:
    """Members of ``K`` inside ``J``, relabeled order-preservingly to ``1..|J|``."""
    J = sorted(set(J))
    for v in J:
        if not 1 <= v <= K.vertex_count:
            raise InputError(f"vertex {v} outside 1..{K.vertex_count}")
    new = {v: i for i, v in enumerate(J, start=1)}
    sets = [frozenset(new[v] for v in f if v in new) for f in K.facets]
    return SimplicialComplex._from_sets(len(J), sets, tuple(J))


def link(K: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Link of a member ``sigma``, relabeled to its own vertex support."""
    sigma = frozenset(sigma)
    if tuple(sorted(sigma)) not in K.members:
        raise DomainError(f"{sorted(sigma)} is not a simplex of the complex")
    rest = [frozenset(f) - sigma for f in K.facets if sigma <= frozenset(f)]
    support = sorted(set().union(*rest))
    new = {v: i for i, v in enumerate(support, start=1)}
    return SimplicialComplex._from_sets(
        len(support), [frozenset(new[v] for v in s) for s in rest], tuple(support))


def skeleton(K: SimplicialComplex, i: int) -> SimplicialComplex:
    if i < -1:
        raise InputError("skeleton dimension must be at least -1")
    sets: list[frozenset[int]] = []
    for f in K.facets:
        if len(f) <= i + 1:
            sets.append(frozenset(f))
        else:
            sets.extend(frozenset(c) for c in itertools.combinations(f, i + 1))
    return SimplicialComplex._from_sets(K.vertex_count, sets)


def is_conelike(K: SimplicialComplex, v: int) -> bool:
    if not 1 <= v <= K.vertex_count:
        raise InputError(f"vertex {v} outside 1..{K.vertex_count}")
    if K.is_empty:
        return False
    return len(K.neighbors[v]) == K.vertex_count - 1


def euler_characteristic(K: SimplicialComplex) -> int:
    """Unreduced Euler characteristic (the empty simplex is not counted)."""
    return sum((-1) ** (len(s) - 1) for s in K.members if s)


def _connected(vertices: Iterable[int], nbrs: dict[int, frozenset[int]]) -> bool:
    vertices = set(vertices)
    if not vertices:
        return True
    start = min(vertices)
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for w in nbrs[v]:
            if w in vertices and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == vertices


# -- sphere recognition ----------------------------------------------------

class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Tier(str, Enum):
    EXACT = "exact"
    HOMOLOGY = "homology-certified"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SphereVerdict:
    verdict: Verdict
    tier: Tier
    reason: str

    def __bool__(self) -> bool:
        return self.verdict is Verdict.YES


def _is_cycle(K: SimplicialComplex) -> bool:
    if K.dim != 1 or any(len(f) != 2 for f in K.facets):
        return False
    if any(len(K.neighbors[v]) != 2 for v in K.vertices):
        return False
    return _connected(K.vertices, K.neighbors)


def _pseudomanifold_failure(K: SimplicialComplex) -> str | None:
    n = K.dim
    if any(len(f) != n + 1 for f in K.facets):
        return "not pure"
    ridges: dict[Simplex, list[Simplex]] = {}
    for f in K.facets:
        for r in itertools.combinations(f, n):
            ridges.setdefault(r, []).append(f)
    bad = [r for r, fs in ridges.items() if len(fs) != 2]
    if bad:
        return f"ridge {list(bad[0])} lies in {len(ridges[bad[0]])} facets"
    # strong connectivity through ridges
    adj: dict[Simplex, set[Simplex]] = {f: set() for f in K.facets}
    for a, b in ridges.values():
        adj[a].add(b)
        adj[b].add(a)
    seen = {K.facets[0]}
    todo = [K.facets[0]]
    while todo:
        f = todo.pop()
        for g in adj[f] - seen:
            seen.add(g)
            todo.append(g)
    if len(seen) != len(K.facets):
        return "not strongly connected"
    return None


def _has_sphere_homology(K: SimplicialComplex, n: int) -> bool:
    from .homology import reduced_simplicial_homology

    H = reduced_simplicial_homology(K, "Z")
    for deg in H.degrees:
        expected = 1 if deg.d == n else 0
        if deg.betti != expected or deg.torsion:
            return False
    return True


def is_sphere_triangulation(K: SimplicialComplex) -> SphereVerdict:
    """Decide whether ``K`` triangulates a sphere of dimension ``dim K``.

    Exact through dimension 2. In higher dimensions the answer is either an
    exact ``NO`` (a necessary condition fails) or a ``YES`` at the
    homology-certified tier: pseudomanifold, connected links, and sphere
    homology for ``K`` and every link of a nonempty face.
    """
    n = K.dim
    if n == -1:
        return SphereVerdict(Verdict.YES, Tier.EXACT, "empty complex triangulates S^-1")
    if n == 0:
        ok = len(K.facets) == 2
        return SphereVerdict(Verdict.YES if ok else Verdict.NO, Tier.EXACT,
                             f"{len(K.facets)} points")
    if n == 1:
        ok = _is_cycle(K)
        return SphereVerdict(Verdict.YES if ok else Verdict.NO, Tier.EXACT,
                             "single cycle" if ok else "not a single cycle")
    failure = _pseudomanifold_failure(K)
    if failure:
        return SphereVerdict(Verdict.NO, Tier.EXACT, failure)
    if n == 2:
        for v in K.vertices:
            if not _is_cycle(link(K, [v])):
                return SphereVerdict(Verdict.NO, Tier.EXACT, f"link of vertex {v} is not a cycle")
        if not _connected(K.vertices, K.neighbors):
            return SphereVerdict(Verdict.NO, Tier.EXACT, "not connected")
        chi = euler_characteristic(K)
        if chi != 2:
            return SphereVerdict(Verdict.NO, Tier.EXACT, f"closed surface with Euler characteristic {chi}")
        return SphereVerdict(Verdict.YES, Tier.EXACT, "connected closed surface with Euler characteristic 2")
    if not _has_sphere_homology(K, n):
        return SphereVerdict(Verdict.NO, Tier.EXACT, f"homology differs from S^{n}")
    for sigma in sorted(K.members):
        if not sigma:
            continue
        L = link(K, sigma)
        k = n - len(sigma)
        if k >= 1 and not _connected(L.vertices, L.neighbors):
            return SphereVerdict(Verdict.NO, Tier.EXACT, f"link of {list(sigma)} is disconnected")
        if not _has_sphere_homology(L, k):
            return SphereVerdict(Verdict.NO, Tier.EXACT, f"link of {list(sigma)} is not a homology S^{k}")
    return SphereVerdict(Verdict.YES, Tier.HOMOLOGY,
                         "pseudomanifold whose links and total space have sphere homology")


# -- .scx text format ------------------------------------------------------

def parse_scx(text: str) -> SimplicialComplex:
    """Parse the ``.scx`` format: ``vertices <m>`` then ``f <v1> <v2> ...`` lines."""
    m: int | None = None
    facets: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            values = [int(x) for x in rest]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if m is None:
            if head != "vertices" or len(values) != 1 or values[0] < 0:
                raise InputError(f"line {lineno}: expected 'vertices <m>'")
            m = values[0]
        elif head == "f":
            for v in values:
                if not 1 <= v <= m:
                    raise InputError(f"line {lineno}: vertex {v} outside 1..{m}")
            if len(set(values)) != len(values):
                raise InputError(f"line {lineno}: repeated vertex")
            facets.append(values)
        else:
            raise InputError(f"line {lineno}: unknown directive {head!r}")
    if m is None:
        raise InputError("missing 'vertices <m>' line")
    return from_facets(m, facets)


def format_scx(K: SimplicialComplex) -> str:
    lines = [f"vertices {K.vertex_count}"]
    if not K.is_empty:
        lines.extend("f " + " ".join(map(str, f)) for f in K.facets)
    return "\n".join(lines) + "\n"


def read_scx(path: str | Path) -> SimplicialComplex:
    return parse_scx(Path(path).read_text(encoding="utf-8"))


def write_scx(K: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(format_scx(K), encoding="utf-8", newline="\n")
