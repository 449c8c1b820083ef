import pytest

from helpers import random_complexes
from momentangle.catalog import catalog
from momentangle.cellcx import (CornerLabel, CubicalIndex, euler_characteristic, isomorphic_to,
                                validate)
from momentangle.davis import (_tietze_kill, basic_construction, coset_count, covering_check,
                               covering_image, davis_ball, h1_invariants, mirrored_chamber,
                               npc_certificate, pi1_presentation, simply_connected_evidence)
from momentangle.errors import InputError
from momentangle.homology import homology
from momentangle.polyprod import build_rk


def test_chamber_of_point():
    X = mirrored_chamber(catalog("simplex:0"))
    assert X.mirror_set("[0]") == {1}
    assert X.mirror_set("[1]") == set()


def test_z2_construction_two_points_is_circle():
    U = basic_construction(catalog("boundary-simplex:1"), "z2")
    assert homology(U.complex).betti_numbers == [1, 1]
    assert U.complex.counts() == [8, 8]


def test_z2_construction_matches_rk():
    for K in random_complexes(31, 25, range(1, 5)):
        U = basic_construction(K, "z2")
        C = build_rk(K)
        assert validate(U.complex).ok
        assert homology(U.complex).to_json() == homology(C).to_json()
        assert euler_characteristic(U.complex) == euler_characteristic(C)


def test_full_group_needs_finite_w():
    U = basic_construction(catalog("simplex:2"), "full")
    assert homology(U.complex).betti_numbers == [1, 0, 0, 0]
    with pytest.raises(InputError):
        basic_construction(catalog("pentagon"), "full")
    with pytest.raises(InputError):
        basic_construction(catalog("pentagon"), "huge")


def test_davis_ball_is_contractible():
    for name in ("pentagon", "points:3", "path:3", "simplex:1"):
        U = davis_ball(catalog(name), 2)
        assert homology(U.complex).betti_numbers == [1] + [0] * U.complex.dim


def test_davis_ball_warns_when_not_flag():
    with pytest.warns(UserWarning):
        davis_ball(catalog("boundary-simplex:2"), 1)


def test_cone_vertex_links():
    K = catalog("pentagon")
    U = davis_ball(K, 2)
    index = CubicalIndex(U.complex)
    inner = [v for v in U.cone_vertices() if v in U.interior]
    assert inner
    for v in inner:
        assert isomorphic_to(index.link(v).complex, K)


def test_covering_image():
    assert covering_image(2, (), CornerLabel((), (), 2)) == "(+,+)"
    assert covering_image(2, (1,), CornerLabel((), (1,), 2)) == "(0,+)"
    assert covering_image(2, (), CornerLabel((1,), (), 2)) == "(>,+)"
    assert covering_image(2, (1,), CornerLabel((1,), (), 2)) == "(<,+)"


@pytest.mark.parametrize("name", ["simplex:2", "boundary-simplex:1", "pentagon", "path:3"])
def test_covering_check_passes(name):
    report = covering_check(catalog(name), 3)
    assert report.passed
    assert report.kernel_in_ball == 1


def test_covering_report_json():
    data = covering_check(catalog("pentagon"), 2).to_json()
    assert [c["name"] for c in data["checks"]] == ["well-defined", "surjective", "interior-links"]
    assert data["checks"][1]["status"] == "skipped"


def test_npc_certificate():
    cert = npc_certificate(catalog("pentagon"))
    assert cert.issued
    refused = npc_certificate(catalog("boundary-simplex:2"))
    assert not refused.issued
    assert refused.witness.missing_face == (1, 2, 3)


def test_pi1_of_rk():
    # R of three points is a graph with 8 vertices and 12 edges: free of rank 5
    pres = pi1_presentation(build_rk(catalog("points:3")))
    assert len(pres.generators) == 5
    assert not pres.relators
    # R of the pentagon is the orientable surface of genus 5
    assert h1_invariants(build_rk(catalog("pentagon"))) == ((), 10)
    # R of the 4-cycle is a torus
    assert h1_invariants(build_rk(catalog("ngon:4"))) == ((), 2)


def test_simple_connectivity():
    # boundaries of cubes are spheres
    for d in (2, 3):
        assert simply_connected_evidence(build_rk(catalog(f"boundary-simplex:{d}"))).status == "trivial"
    # flag K with a missing edge: aspherical with infinite fundamental group
    assert simply_connected_evidence(build_rk(catalog("octahedron"))).status == "nontrivial"
    assert simply_connected_evidence(build_rk(catalog("ngon:4"))).status == "nontrivial"
    U = davis_ball(catalog("pentagon"), 2)
    assert simply_connected_evidence(U.complex).status == "trivial"


def test_tietze_kill():
    killed, rels = _tietze_kill([[(0, 1)], [(0, 1), (1, -1)], [(1, 1), (2, 1), (1, -1), (2, -1)]])
    assert killed == {0, 1}
    assert rels == []


def test_coset_count():
    # A5 = <a, b | a^2, b^3, (ab)^5>
    assert coset_count(2, [[(0, 2)], [(1, 3)], [(0, 1), (1, 1)] * 5]) == 60
    # a presentation of the trivial group with trivial abelianization and no short relator
    assert coset_count(2, [[(1, -1), (0, 1), (1, 1), (0, -2)],
                           [(0, -1), (1, 1), (0, 1), (1, -2)]]) == 1
    assert coset_count(1, [], max_cosets=50) is None
