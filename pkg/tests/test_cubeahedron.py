import pytest

from assocmodels.cubeahedron import (
    TubeError,
    build_CP,
    compatible,
    enumerate_design_tubings,
    ordinary_path_poset,
    round_tube,
    square_tube,
    tube_text,
    tubing_from_json,
    tubing_text,
    tubing_to_expression,
    tubing_to_json,
    verify_composed,
    verify_cubeahedron_iso,
)
from assocmodels.multiplihedron import expr_text
from assocmodels.poset import check_order_iso, f_vector, is_simple, search_iso


def test_compatible():
    assert compatible(round_tube(1, 2), round_tube(1, 3))  # nested
    assert compatible(round_tube(1, 1), round_tube(3, 4))  # a gap between
    assert not compatible(round_tube(1, 2), round_tube(2, 3))  # overlap
    assert not compatible(round_tube(1, 2), round_tube(3, 4))  # adjacent
    assert compatible(square_tube(1), square_tube(2))
    assert compatible(square_tube(3), round_tube(1, 2))
    assert not compatible(square_tube(2), round_tube(1, 2))
    with pytest.raises(TubeError):
        round_tube(3, 1)


def test_tubing_counts():
    # little Schroeder numbers s(n+1)
    assert [len(enumerate_design_tubings(n)) for n in range(1, 5)] == [3, 11, 45, 197]


def test_build_CP_smallest():
    P = build_CP(1)
    assert f_vector(P) == (2, 1)
    assert sorted(P.elements) == ["[]", "[r1]", "[s1]"]
    assert P.top == "[]"


def test_CP_is_simple():
    for n in range(1, 5):
        assert is_simple(build_CP(n))


def test_tubing_text_and_json():
    u = frozenset({round_tube(1, 2), square_tube(3)})
    assert tubing_text(u) == "[r1-2 s3]"
    assert tube_text(round_tube(2, 2)) == "r2"
    n, back = tubing_from_json(tubing_to_json(3, u))
    assert (n, back) == (3, u)
    with pytest.raises(TubeError):
        tubing_from_json('{"n": 3, "tubes": [{"kind": "round", "nodes": [1, 2]}, '
                         '{"kind": "round", "nodes": [2, 3]}]}')
    with pytest.raises(TubeError):
        tubing_from_json('{"n": 2, "tubes": [{"kind": "round", "nodes": [1, 3]}]}')


def test_tubing_to_expression_examples():
    assert expr_text(tubing_to_expression(2, frozenset())) == "f(a1.a2.a3)"
    assert expr_text(tubing_to_expression(2, {square_tube(1)})) == "f(a1)f(a2.a3)"
    assert (
        expr_text(tubing_to_expression(2, {round_tube(1, 1)})) == "f((a1a2).a3)"
    )
    assert (
        expr_text(tubing_to_expression(2, {square_tube(1), round_tube(2, 2)}))
        == "f(a1)f(a2a3)"
    )


def test_verify_cubeahedron_iso():
    for n in range(1, 5):
        r = verify_cubeahedron_iso(n)
        assert r.passed
        assert r.counts["tubings"] == r.counts["expressions"]


def test_verify_composed():
    for n in range(1, 5):
        r = verify_composed(n)
        assert r.passed


def test_ordinary_path_poset_matches_bracketing_model():
    from assocmodels.associahedron import build_K

    for n in range(2, 6):
        P = ordinary_path_poset(n)
        K = build_K(n + 1)
        assert f_vector(P) == f_vector(K)
        m = search_iso(P, K)
        assert m is not None and check_order_iso(P, K, m).passed
