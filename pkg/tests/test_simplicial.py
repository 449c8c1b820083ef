import pytest
from hypothesis import given, settings

from helpers import brute_is_flag, brute_members, complexes, random_complexes
from momentangle.errors import DomainError, InputError
from momentangle.simplicial import (SimplicialComplex, Tier, Verdict, boundary_of_simplex,
                                    cycle_complex, discrete_complex, euler_characteristic,
                                    flag_witness, format_scx, from_facets, full_subcomplex,
                                    is_conelike, is_flag, is_sphere_triangulation, link,
                                    parse_scx, read_scx, simplex_complex, skeleton, write_scx)
from momentangle.catalog import STANDARD_ENTRIES, catalog


def test_facets_are_normalized():
    K = from_facets(4, [[2, 1], [1, 2, 3], [3]])
    assert K.facets == ((1, 2, 3), (4,))
    assert K.dim == 2
    assert K.f_vector() == [4, 3, 1]


def test_void_complex_rejected():
    with pytest.raises(InputError):
        SimplicialComplex(3, ())


def test_empty_complex():
    K = from_facets(3, [])
    assert K.is_empty
    assert K.dim == -1
    assert K.members == {()}
    assert K.vertices == ()


def test_non_antichain_rejected():
    with pytest.raises(InputError):
        SimplicialComplex(2, ((1,), (1, 2)))


def test_out_of_range_vertex():
    with pytest.raises(InputError):
        from_facets(2, [[1, 3]])


def test_flag_witness_triangle_boundary():
    w = flag_witness(boundary_of_simplex(3))
    assert w.missing_face == (1, 2, 3)
    assert is_flag(cycle_complex(4))
    assert not is_flag(cycle_complex(3))


def test_flag_witness_is_minimal():
    # boundary of the tetrahedron: every triangle is present, the 4-clique is missing
    K = boundary_of_simplex(4)
    assert flag_witness(K).missing_face == (1, 2, 3, 4)
    # two missing triangles; the lexicographically first is reported
    K = from_facets(5, [[1, 2], [1, 3], [2, 3], [3, 4], [3, 5], [4, 5]])
    assert flag_witness(K).missing_face == (1, 2, 3)


def test_flag_agrees_with_brute_force():
    for K in random_complexes(1, 150, range(1, 7)):
        assert is_flag(K) == brute_is_flag(K.vertex_count, K.facets), K


@given(complexes(max_m=6))
def test_members_match_facets(K):
    assert K.members == brute_members(K.facets)
    assert euler_characteristic(K) == sum((-1) ** (len(s) - 1) for s in K.members if s)


def test_full_subcomplex_relabels():
    K = catalog("pentagon")
    L = full_subcomplex(K, [1, 3, 4])
    assert L.vertex_count == 3
    assert L.facets == ((1,), (2, 3))
    assert L.relabeling == (1, 3, 4)


def test_link():
    K = catalog("octahedron")
    L = link(K, [1])
    assert L.vertex_count == 4
    assert is_sphere_triangulation(L).verdict is Verdict.YES
    assert link(simplex_complex(3), [1, 2, 3]).is_empty
    with pytest.raises(DomainError):
        link(catalog("pentagon"), [1, 3])


def test_skeleton():
    K = skeleton(simplex_complex(4), 1)
    assert K.f_vector() == [4, 6]
    assert skeleton(K, -1).is_empty
    with pytest.raises(InputError):
        skeleton(K, -2)


def test_conelike():
    K = simplex_complex(3)
    assert all(is_conelike(K, v) for v in K.vertices)
    assert not is_conelike(catalog("pentagon"), 1)
    assert not is_conelike(discrete_complex(2), 1)
    assert is_conelike(discrete_complex(1), 1)


@pytest.mark.parametrize("name,expected", [
    ("boundary-simplex:1", Verdict.YES),
    ("boundary-simplex:2", Verdict.YES),
    ("boundary-simplex:3", Verdict.YES),
    ("pentagon", Verdict.YES),
    ("octahedron", Verdict.YES),
    ("cross-polytope:4", Verdict.YES),
    ("empty:2", Verdict.YES),
    ("points:3", Verdict.NO),
    ("path:3", Verdict.NO),
    ("simplex:2", Verdict.NO),
    ("skeleton:4:1", Verdict.NO),
])
def test_sphere_check(name, expected):
    assert is_sphere_triangulation(catalog(name)).verdict is expected


def test_sphere_check_tiers():
    assert is_sphere_triangulation(catalog("pentagon")).tier is Tier.EXACT
    v = is_sphere_triangulation(catalog("cross-polytope:4"))
    assert v.tier is Tier.HOMOLOGY
    # two tetrahedron boundaries sharing a vertex: not a pseudomanifold link
    K = from_facets(7, [f for f in boundary_of_simplex(4).facets] +
                    [tuple(sorted({4, 5, 6, 7} - {x})) for x in (4, 5, 6, 7)])
    assert is_sphere_triangulation(K).verdict is Verdict.NO


def test_scx_round_trip(tmp_path):
    for name in STANDARD_ENTRIES:
        K = catalog(name)
        path = tmp_path / "k.scx"
        write_scx(K, path)
        assert read_scx(path) == K
        assert b"\r" not in path.read_bytes()


@settings(max_examples=50)
@given(complexes(max_m=6))
def test_scx_round_trip_random(K):
    assert parse_scx(format_scx(K)) == K


@pytest.mark.parametrize("text", [
    "",
    "f 1 2\n",
    "vertices 2\nf 1 3\n",
    "vertices 2\nf 1 1\n",
    "vertices 2\ng 1\n",
    "vertices x\n",
])
def test_scx_errors(text):
    with pytest.raises(InputError):
        parse_scx(text)


def test_scx_comments_and_ghosts():
    K = parse_scx("# a triangle edge\nvertices 3\nf 1 2  # edge\n")
    assert K.facets == ((1, 2), (3,))
