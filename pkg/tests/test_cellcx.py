import json
import random

import pytest
from hypothesis import given, settings

from helpers import brute_isomorphic, complexes, random_complexes
from momentangle.catalog import catalog
from momentangle.cellcx import (Cell, CellComplex, CornerLabel, CubicalLabel, CubicalIndex,
                                euler_characteristic, gromov_link_condition, isomorphic_to,
                                relabel, validate, vertex_link)
from momentangle.errors import CapacityError, StructureError
from momentangle.polyprod import build_rk
from momentangle.simplicial import from_facets


def circle():
    """One vertex, one loop."""
    return CellComplex([Cell("v", 0), Cell("e", 1)], {})


def test_labels_render():
    assert str(CubicalLabel((1, 3), (1, -1))) == "(1,3|+-)"
    assert str(CornerLabel((2,), (1,), 3)) == "[0*1]"


def test_unknown_face_rejected():
    with pytest.raises(StructureError):
        CellComplex([Cell("a", 1)], {"a": {"x": 1}})


def test_wrong_dimension_face_rejected():
    with pytest.raises(StructureError):
        CellComplex([Cell("v", 0), Cell("f", 2)], {"f": {"v": 1}})


def test_duplicate_id_rejected():
    with pytest.raises(StructureError):
        CellComplex([Cell("v", 0), Cell("v", 0)], {})


def test_cell_cap(monkeypatch):
    monkeypatch.setenv("MOMENTANGLE_MAX_CELLS", "3")
    with pytest.raises(CapacityError):
        CellComplex([Cell(str(k), 0) for k in range(4)], {})


def test_validate_catches_bad_boundary():
    C = CellComplex([Cell("a", 0), Cell("b", 0), Cell("e", 1), Cell("f", 2)],
                    {"e": {"b": 1, "a": -1}, "f": {"e": 1}})
    report = validate(C)
    assert not report.ok
    assert report.violations[0].column == "f"
    C = CellComplex([Cell("a", 0), Cell("b", 0), Cell("e", 1)], {"e": {"b": 1, "a": 1}})
    assert not validate(C)
    assert validate(circle())


def test_json_round_trip():
    C = build_rk(catalog("pentagon"))
    data = C.to_json()
    text = json.dumps(data)
    D = CellComplex.from_json(json.loads(text))
    assert D.counts() == C.counts()
    assert D.to_json() == data
    assert [layer["d"] for layer in data["dims"]] == [0, 1, 2]


def test_euler():
    assert euler_characteristic(circle()) == 0
    assert euler_characteristic(build_rk(catalog("pentagon"))) == -8


def test_rk_vertex_link_is_k():
    K = catalog("pentagon")
    C = build_rk(K)
    L = vertex_link(C, C.cells(0)[0].id)
    assert isomorphic_to(L.complex, K)
    assert len(L.edges) == 5


def test_cubical_index_rejects_non_cubes():
    C = CellComplex([Cell("a", 0), Cell("b", 0), Cell("c", 0), Cell("ab", 1), Cell("bc", 1),
                     Cell("ca", 1), Cell("t", 2)],
                    {"ab": {"b": 1, "a": -1}, "bc": {"c": 1, "b": -1}, "ca": {"a": 1, "c": -1},
                     "t": {"ab": 1, "bc": 1, "ca": 1}})
    with pytest.raises(StructureError):
        CubicalIndex(C)


def test_gromov_fails_for_hollow_triangle():
    C = build_rk(catalog("boundary-simplex:2"))
    verdict = gromov_link_condition(C)
    assert not verdict.passed
    assert verdict.witness.missing_face == (1, 2, 3)
    assert gromov_link_condition(build_rk(catalog("octahedron"))).passed


def test_isomorphic_examples():
    P = catalog("pentagon")
    assert isomorphic_to(P, relabel(P, {1: 3, 2: 1, 3: 4, 4: 5, 5: 2}))
    assert not isomorphic_to(P, catalog("path:5"))
    assert not isomorphic_to(catalog("ngon:6"), from_facets(6, [[1, 2], [2, 3], [3, 1],
                                                                [4, 5], [5, 6], [6, 4]]))


def test_isomorphism_cap():
    K = catalog("points:17")
    with pytest.raises(CapacityError):
        isomorphic_to(K, K)


def test_isomorphic_vs_brute_force():
    rng = random.Random(7)
    for K in random_complexes(3, 120, range(1, 7)):
        perm = list(range(1, K.vertex_count + 1))
        rng.shuffle(perm)
        L = relabel(K, dict(zip(range(1, K.vertex_count + 1), perm)))
        assert isomorphic_to(K, L)
        M = random_complexes(rng.random(), 1, [K.vertex_count])[0]
        assert isomorphic_to(K, M) == brute_isomorphic(K, M)


@settings(max_examples=60, deadline=None)
@given(complexes(max_m=5), complexes(max_m=5))
def test_isomorphic_hypothesis(A, B):
    assert isomorphic_to(A, B) == brute_isomorphic(A, B)
