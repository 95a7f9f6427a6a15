"""JSON round-trips, fixture detection, canonical form."""

import json
from fractions import Fraction

import pytest

from tropcomplex import Divisor, InputError, canonical_json, load_fixture
from tropcomplex.curves import BreakpointFunction, PointSum
from tropcomplex.serialize import (
    FORMAT,
    breakpoints_from_json,
    curve_from_json,
    curve_to_json,
    detect_kind,
    divisor_from_json,
    divisor_to_json,
    point_sum_to_json,
    rat,
    unrat,
)
from tests.conftest import fixture_path


def test_rational_encoding():
    assert rat(Fraction(3, 4)) == [3, 4]
    assert rat(5) == [5, 1]
    assert unrat([3, 4]) == Fraction(3, 4)
    assert unrat(7) == Fraction(7)


def test_divisor_round_trip(tetrahedron):
    for d in tetrahedron.divisors.values():
        assert divisor_from_json(divisor_to_json(d)) == d
    bare = divisor_from_json([[0, -2], [5, 2]])
    assert bare == tetrahedron.divisors["E"]


def test_curve_round_trip(tetrahedron):
    for c in tetrahedron.curves.values():
        assert curve_from_json(curve_to_json(c)) == c


def test_point_sum_serialization():
    ps = PointSum.of(
        {("v", 1): Fraction(2), ("e", 0, Fraction(1, 2)): Fraction(-1, 3)}
    )
    data = point_sum_to_json(ps)
    assert [["v", 1], 2, 1] in data
    assert [["e", 0, 1, 2], -1, 3] in data


def test_breakpoints_parsing():
    f = breakpoints_from_json([[0, [[0, 1, 0, 1], [1, 1, 2, 1]]]])
    assert isinstance(f, BreakpointFunction)
    assert f.edge_data(0) == ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(2)))


def test_detect_kind():
    assert detect_kind({"N": 2, "vertices": []}) == "embedded"
    assert detect_kind({"mode": "strict"}) == "degeneration"
    assert detect_kind({"n": 1, "simplices": [1, 1]}) == "abstract"
    assert detect_kind({"kind": "abstract"}) == "abstract"


def test_format_gate():
    with pytest.raises(InputError):
        load_fixture({"format": "other-1", "kind": "abstract"})


def test_fixture_kinds(fx):
    assert fx["triangle"].kind == "abstract"
    assert fx["plane"].kind == "embedded"
    assert fx["tet-degen"].kind == "degeneration"
    with pytest.raises(InputError):
        fx["plane"].structure()


def test_canonical_json_is_sorted_and_indented():
    text = canonical_json({"b": 1, "a": [1, 2]})
    assert text == json.dumps({"a": [1, 2], "b": 1}, sort_keys=True, indent=2)


def test_fixture_files_declare_format():
    for name in ["triangle", "plane", "tet-degen"]:
        data = json.loads(fixture_path(name).read_text())
        assert data["format"] == FORMAT


def test_divisor_facet_piece_round_trip(tetrahedron):
    from tropcomplex import TwoPieceFunction, div_two_piece

    T = tetrahedron.structure()
    d = div_two_piece(T, TwoPieceFunction(0, (2, 0), Fraction(1, 2)))
    back = divisor_from_json(divisor_to_json(d))
    assert back == d
