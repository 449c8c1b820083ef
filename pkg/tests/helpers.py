"""Random complexes and brute-force oracles shared by the test modules.

The oracles work from facet lists only and never call the library's own
membership or clique code.
"""

import itertools
import random

from hypothesis import strategies as st

from momentangle.simplicial import from_facets


def subsets(m):
    for k in range(m + 1):
        yield from itertools.combinations(range(1, m + 1), k)


def brute_members(facets):
    out = {()}
    for f in facets:
        for k in range(len(f) + 1):
            out.update(itertools.combinations(sorted(f), k))
    return out


def brute_is_flag(m, facets):
    members = brute_members(facets)
    edges = {s for s in members if len(s) == 2}
    for s in subsets(m):
        if len(s) >= 3 and s not in members:
            if all(p in edges for p in itertools.combinations(s, 2)):
                return False
    return True


def clique_facets(m, edges):
    """Facets of the clique complex of a graph, by exhaustive search."""
    edges = {tuple(sorted(e)) for e in edges}
    cliques = [s for s in subsets(m)
               if s and all(p in edges for p in itertools.combinations(s, 2))]
    return [s for s in cliques if not any(set(s) < set(t) for t in cliques)]


def random_complex(rng, m, flag_bias=0.3):
    """Mix of clique complexes and random facet families, ghosts allowed."""
    if rng.random() < flag_bias:
        edges = [e for e in itertools.combinations(range(1, m + 1), 2) if rng.random() < 0.5]
        return from_facets(m, clique_facets(m, edges))
    count = rng.randint(0, m + 2)
    facets = []
    for _ in range(count):
        k = rng.randint(1, max(1, min(m, 4)))
        facets.append(rng.sample(range(1, m + 1), k))
    return from_facets(m, facets)


def random_complexes(seed, n, m_range):
    rng = random.Random(seed)
    return [random_complex(rng, rng.choice(m_range)) for _ in range(n)]


@st.composite
def complexes(draw, min_m=1, max_m=5):
    m = draw(st.integers(min_m, max_m))
    facets = draw(st.lists(st.sets(st.integers(1, m), min_size=1, max_size=m),
                           max_size=m + 2))
    return from_facets(m, [sorted(f) for f in facets])


def brute_isomorphic(A, B):
    if A.vertex_count != B.vertex_count:
        return False
    fa = {frozenset(f) for f in A.facets}
    fb = {frozenset(f) for f in B.facets}
    if len(fa) != len(fb):
        return False
    m = A.vertex_count
    for perm in itertools.permutations(range(1, m + 1)):
        if {frozenset(perm[v - 1] for v in f) for f in fa} == fb:
            return True
    return False
