"""Combinatorics of glued-simplex complexes: faces, links, validation."""

import pytest

from tropcomplex import (
    DeltaComplex,
    Disconnected,
    DimensionExceeded,
    SimplicialIdentityViolation,
    build_complex,
    link_of,
)

# vertices u, v, w = 0, 1, 2; edges uv, uw, vw = 0, 1, 2; one triangle
TRIANGLE = DeltaComplex(
    2,
    [3, 3, 1],
    {1: [[1, 0], [2, 0], [2, 1]], 2: [[2, 1, 0]]},
)


def test_counts_and_faces():
    assert TRIANGLE.counts == (3, 3, 1)
    assert TRIANGLE.faces[2] == ((2, 1, 0),)


def test_face_returns_simplex_pairs():
    # dropping slot j of the triangle gives the edge opposite vertex j
    assert TRIANGLE.face((2, 0), 0) == (1, 2)
    assert TRIANGLE.face((2, 0), 1) == (1, 1)
    assert TRIANGLE.face((2, 0), 2) == (1, 0)


def test_vertices_of_uses_slot_order():
    # slot i of a simplex is recovered by dropping every other slot
    assert TRIANGLE.vertices_of((2, 0)) == (0, 1, 2)
    assert TRIANGLE.vertices_of((1, 0)) == (0, 1)
    assert TRIANGLE.vertices_of((1, 2)) == (1, 2)


def test_edge_slot_convention():
    # faces[1][e] = (boundary_0, boundary_1); slot 0 holds faces[1][e][1]
    for e in range(3):
        d0, d1 = TRIANGLE.faces[1][e]
        assert TRIANGLE.vertex_at((1, e), 0) == d1
        assert TRIANGLE.vertex_at((1, e), 1) == d0


def test_link_of_vertex_in_triangle():
    elems = link_of(TRIANGLE, (0, 0))
    # vertex u: two edge cofaces (uv, uw) and one triangle coface
    assert [t.coface for t in elems[0]] == [(1, 0), (1, 1)]
    assert [t.coface for t in elems[1]] == [(2, 0)]
    assert [TRIANGLE.opp_vertex(t) for t in elems[0]] == [1, 2]


def test_link_face_matches_slot_reindexing():
    (tri_elem,) = TRIANGLE.link((0, 0))[1]
    ends = {TRIANGLE.link_face(tri_elem, 0), TRIANGLE.link_face(tri_elem, 1)}
    assert ends == set(TRIANGLE.link((0, 0))[0])


def test_loop_link_has_two_elements():
    loop = DeltaComplex(1, [1, 1], {1: [[0, 0]]})
    elems = loop.link((0, 0))[0]
    assert len(elems) == 2
    assert loop.degree((0, 0)) == 2
    assert not loop.is_regular()
    assert [t.slots for t in elems] == [(0,), (1,)]


def test_regularity_of_standard_complexes():
    assert TRIANGLE.is_regular()


def test_json_round_trip():
    data = TRIANGLE.to_json()
    assert build_complex(data) == TRIANGLE
    loop = DeltaComplex(1, [1, 1], {1: [[0, 0]]})
    assert build_complex(loop.to_json()) == loop


def test_simplicial_identity_violation():
    # swap one boundary edge so that vertex sets of the faces disagree
    with pytest.raises(SimplicialIdentityViolation) as exc:
        DeltaComplex(2, [3, 3, 1], {1: [[1, 0], [2, 0], [2, 1]], 2: [[0, 1, 2]]})
    assert exc.value.simplex[0] == 2


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        DeltaComplex(1, [3, 1], {1: [[1, 0]]})
    with pytest.raises(Disconnected):
        DeltaComplex(0, [2], {})


def test_count_shape_mismatches():
    with pytest.raises(DimensionExceeded):
        DeltaComplex(2, [3, 3], {1: [[1, 0], [2, 0], [2, 1]], 2: [[2, 1, 0]]})
    with pytest.raises(DimensionExceeded):
        DeltaComplex(1, [2, 1], {1: [[1, 0, 0]]})
    with pytest.raises(DimensionExceeded):
        build_complex({"n": -1, "simplices": [], "faces": []})


def test_face_index_out_of_range():
    with pytest.raises(DimensionExceeded):
        DeltaComplex(1, [2, 1], {1: [[2, 0]]})


def test_fixture_complexes_validate(fx):
    from tests.conftest import ABSTRACT

    for name in ABSTRACT:
        X = fx[name].complex
        # every iterated boundary satisfies the simplicial identity, which
        # the constructor checked; spot-check vertex recovery agrees with
        # face composition
        for k in range(1, X.n + 1):
            for i in range(X.counts[k]):
                verts = X.vertices_of((k, i))
                assert len(verts) == k + 1
                for slot in range(k + 1):
                    assert X.vertex_at((k, i), slot) == verts[slot]


def test_nonregular_gluing_two_sheets():
    # two edges glued to the same vertex pair form a cycle of length two
    cyc = DeltaComplex(1, [2, 2], {1: [[1, 0], [1, 0]]})
    assert cyc.degree((0, 0)) == 2
    assert cyc.degree((0, 1)) == 2
    assert cyc.is_regular()
