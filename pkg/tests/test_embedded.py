"""Embedded subdivisions: balancing import, sheets, robustness, push-forward."""

import random
from fractions import Fraction

import pytest

from tropcomplex.embedded import UnboundedCell
from tropcomplex import (
    Divisor,
    IndexMismatch,
    EmbeddedComplex,
    InconsistentSheets,
    NoSolution,
    NonUnimodular,
    NotConstantOnUnbounded,
    alpha_from_balancing,
    check_weak,
    derive_structure,
    div_vertex_function,
    duplicate_sheets,
    embedded_weights,
    push_forward_and_compare,
    robustness_check,
)

PLANE_COEFFS = {
    0: ((1, 0), 1),
    1: ((1, 1), 2),
    2: ((1, 1), 2),
    3: ((-2, 3), 1),
    4: ((0, 1), 1),
    5: ((1, 1), 2),
    6: ((0, 1), 1),
    7: ((1, 1), 2),
    8: ((2, 0), 2),
    9: ((2, 0), 2),
    10: ((0, 1), 1),
    11: ((1, 0), 1),
}


def toy_segment(sheet_counts=None, sheet_maps=None):
    return EmbeddedComplex(
        1,
        [[0, 1], [1, 1]],
        [[(0,), (1,)], [(0, 1)]],
        [],
        sheet_counts=sheet_counts,
        sheet_maps=sheet_maps,
    )


# -- loading and validation -------------------------------------------------


def test_plane_shape(plane):
    E = plane.embedded
    assert E.N == 2
    assert E.n == 2 and E.bounded_dim() == 2
    assert [len(cells) for cells in E.bounded] == [7, 12, 6]
    assert len(E.unbounded) == 24


def test_twosheet_shape(twosheet):
    E = twosheet.embedded
    assert E.N == 2
    assert E.n == 1 and E.bounded_dim() == 1
    assert E.sheets(1, 0) == 2
    assert E.sheets(0, 0) == 1
    assert E.sheet_map(1, 0, 0) == (0, 0)


def test_non_unimodular_edge_rejected():
    with pytest.raises(NonUnimodular):
        EmbeddedComplex(1, [[0, 1], [2, 1]], [[(0,), (1,)], [(0, 1)]], [])


def test_vertices_must_sit_at_height_one():
    with pytest.raises(IndexMismatch):
        EmbeddedComplex(1, [[0, 2], [1, 2]], [[(0,), (1,)], [(0, 1)]], [])


def test_face_closure_required():
    with pytest.raises(IndexMismatch):
        EmbeddedComplex(1, [[0, 1], [1, 1]], [[(0,)], [(0, 1)]], [])


# -- sheet duplication ------------------------------------------------------


def test_duplicate_plane_is_isomorphic(plane):
    X, pi = duplicate_sheets(plane.embedded)
    assert X.n == 2
    assert X.counts == (7, 12, 6)
    # all sheet counts are one, so the projection is a bijection per level
    for k in range(3):
        assert list(pi[k]) == list(range(X.counts[k]))


def test_duplicate_twosheet_gives_cycle(twosheet):
    X, pi = duplicate_sheets(twosheet.embedded)
    assert X.counts == (2, 2)
    ends = {
        tuple(sorted((X.faces[1][e][0], X.faces[1][e][1]))) for e in range(2)
    }
    assert ends == {(0, 1)}
    assert X.degree((0, 0)) == 2 and X.degree((0, 1)) == 2
    assert list(pi[1]) == [0, 0]


def test_duplicate_custom_two_sheet_vertex():
    E = toy_segment(
        sheet_counts={(0, 0): 2, (1, 0): 2},
        sheet_maps={(1, 0, 0): (0, 0), (1, 0, 1): (0, 1)},
    )
    X, pi = duplicate_sheets(E)
    assert X.counts == (3, 2)
    assert list(pi[0]) == [0, 0, 1]


def test_inconsistent_sheet_map_rejected():
    with pytest.raises(InconsistentSheets):
        duplicate_sheets(
            toy_segment(
                sheet_counts={(1, 0): 2},
                sheet_maps={(1, 0, 0): (0, 5), (1, 0, 1): (0, 0)},
            )
        )


# -- balancing coefficients -------------------------------------------------


def test_plane_balancing_table(plane):
    E = plane.embedded
    for ridge, (coeffs, d) in PLANE_COEFFS.items():
        sol = alpha_from_balancing(E, ridge)
        assert sol.coefficients == coeffs, ridge
        assert sol.d == d
        assert sum(sol.coefficients) == sol.d


def test_balancing_coefficient_sum_rule(plane, twosheet):
    for E in (plane.embedded, twosheet.embedded):
        n = E.n
        for ridge in range(len(E.bounded[n - 1])):
            sol = alpha_from_balancing(E, ridge)
            assert sum(sol.coefficients) == sol.d


def test_derive_structure_is_weak(plane, twosheet):
    for fixture in (plane, twosheet):
        X, pi, T, sols = derive_structure(fixture.embedded)
        report = check_weak(X, T.alpha)
        assert report.passed
        assert set(sols) == set(range(len(fixture.embedded.bounded[T.complex.n - 1])))


def test_plane_alpha_values(plane):
    _, _, T, _ = derive_structure(plane.embedded)
    for ridge, (coeffs, _) in PLANE_COEFFS.items():
        for slot, c in enumerate(coeffs):
            assert T.alpha[(ridge, slot)] == c


def test_unbalanced_input_has_no_solution():
    # one bounded edge in the plane with a single orthogonal ray cannot
    # balance at vertex 0
    E = EmbeddedComplex(
        2,
        [[0, 0, 1], [1, 0, 1]],
        [[(0,), (1,)], [(0, 1)]],
        [UnboundedCell((0,), ((0, 1),))],
    )
    with pytest.raises(NoSolution):
        alpha_from_balancing(E, 0)


# -- robustness -------------------------------------------------------------


def test_hexagon_robustness_verdicts(plane):
    E = plane.embedded
    u = robustness_check(E, 0, 0)
    assert (u.robust, u.certificate, u.maximal_unbounded_cell) == (
        True,
        (-1, 0),
        None,
    )
    v = robustness_check(E, 0, 1)
    assert (v.robust, v.certificate, v.maximal_unbounded_cell) == (
        False,
        None,
        None,
    )
    w = robustness_check(E, 0, 2)
    assert w.robust and w.certificate == (1, 0)
    assert w.maximal_unbounded_cell == 1


def test_robustness_toy_quadrant():
    # vertex with two axis rays: the all-ones functional certifies it
    E = EmbeddedComplex(
        2,
        [[0, 0, 1]],
        [[(0,)]],
        [
            UnboundedCell((0,), ((1, 0),)),
            UnboundedCell((0,), ((0, 1),)),
        ],
    )
    r = robustness_check(E, 0, 0)
    assert r.robust
    assert r.certificate == (1, 1)


def test_robustness_tropical_line_vertex_not_robust():
    E = EmbeddedComplex(
        2,
        [[0, 0, 1]],
        [[(0,)]],
        [
            UnboundedCell((0,), ((-1, 0),)),
            UnboundedCell((0,), ((0, -1),)),
            UnboundedCell((0,), ((1, 1),)),
        ],
    )
    r = robustness_check(E, 0, 0)
    assert not r.robust
    assert r.certificate is None


def test_robustness_certificate_separates(plane):
    E = plane.embedded
    for idx in range(len(E.bounded[0])):
        r = robustness_check(E, 0, idx)
        if r.robust and any(r.certificate):
            cell = E.bounded[0][idx]
            for u in E.unbounded:
                if set(cell) <= set(u.vertices) and u.dim == 1:
                    for ray in u.rays:
                        dot = sum(a * b for a, b in zip(r.certificate, ray))
                        assert dot > 0


# -- push-forward and the weight oracle -------------------------------------


def test_pushforward_of_vertex_function(plane):
    res = push_forward_and_compare(plane.embedded, f=plane.functions["f1"])
    assert res.verdict == "pass"
    assert res.pushed == {
        0: 0,
        1: 1,
        2: -1,
        3: 1,
        4: 0,
        5: -1,
        6: 1,
        7: -1,
        8: -2,
        9: -2,
        10: 1,
        11: 1,
    }
    assert res.oracle == res.pushed


def test_pushforward_constant_function_vanishes(plane):
    res = push_forward_and_compare(plane.embedded, f=[4] * 7)
    assert res.verdict == "pass"
    assert all(v == 0 for v in res.pushed.values())


def test_pushforward_random_functions_match_oracle(plane):
    rng = random.Random(17)
    for _ in range(10):
        f = [rng.randint(-5, 5) for _ in range(7)]
        res = push_forward_and_compare(plane.embedded, f=f)
        assert res.verdict == "pass"
        assert res.pushed == embedded_weights(plane.embedded, f)


def test_pushforward_on_twosheet(twosheet):
    res = push_forward_and_compare(twosheet.embedded, f=twosheet.functions["f1"])
    assert res.verdict == "pass"
    assert res.pushed == {0: 2, 1: -2}


def test_pushforward_of_divisor(twosheet):
    res = push_forward_and_compare(
        twosheet.embedded, D=twosheet.divisors["Ddup"]
    )
    assert res.pushed == {0: 1, 1: 2}
    assert res.oracle is None and res.verdict is None


def test_pushforward_adds_sheet_multiplicities():
    E = toy_segment(
        sheet_counts={(0, 0): 2, (1, 0): 2},
        sheet_maps={(1, 0, 0): (0, 0), (1, 0, 1): (0, 1)},
    )
    res = push_forward_and_compare(E, D=Divisor.on_ridges({0: 1, 1: 2}))
    assert res.pushed[0] == 3


def test_pushforward_requires_constant_on_rays(plane):
    with pytest.raises(NotConstantOnUnbounded):
        push_forward_and_compare(
            plane.embedded,
            f=plane.functions["f1"],
            f_ray_slopes={(1, 0): 1},
        )


def test_pushforward_checks_vertex_count(plane):
    with pytest.raises(IndexMismatch):
        push_forward_and_compare(plane.embedded, f=[0, 1])


def test_pushforward_divisor_matches_vertex_function_route(plane):
    # feeding div(f o pi) through the divisor route gives the same fiber sums
    E = plane.embedded
    f = plane.functions["f1"]
    X, pi, T, _ = derive_structure(E)
    fpi = [int(f[E.bounded[0][cell][0]]) for cell in pi[0]]
    d = div_vertex_function(T, fpi)
    res_d = push_forward_and_compare(E, D=d)
    res_f = push_forward_and_compare(E, f=f)
    assert res_d.pushed == res_f.pushed
