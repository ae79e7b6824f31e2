import pytest

from assocmodels import multiplihedron as M
from assocmodels.bracketing import Bracketing
from assocmodels.multiplihedron import (
    LEAF,
    PaintedTreeError,
    Phi,
    build_frakJ,
    build_Jprime,
    build_Jtree,
    collapse_codomain,
    collapse_edges,
    enumerate_expressions,
    enumerate_flat_expressions,
    enumerate_painted_trees,
    expr_text,
    painted_corolla,
    painted_dimension,
    painted_sexpr,
    parse_flat_expression,
    parse_painted_sexpr,
    phi_inverse,
    phi_map,
    validate_painted,
    verify_Phi,
    verify_phi,
)
from assocmodels.poset import f_vector


def test_painted_tree_counts():
    assert [len(enumerate_painted_trees(n)) for n in range(1, 5)] == [1, 3, 13, 67]


def test_expression_counts_match_trees():
    for n in range(1, 5):
        assert len(enumerate_expressions(n)) == len(enumerate_painted_trees(n))


def test_flat_expression_counts_are_schroeder():
    assert [len(enumerate_flat_expressions(n)) for n in range(1, 5)] == [1, 3, 11, 45]


def test_Jtree_f_vector():
    assert f_vector(build_Jtree(2)) == (2, 1)
    assert f_vector(build_Jtree(3)) == (6, 6, 1)


def test_painted_sexpr_round_trip():
    for t in enumerate_painted_trees(4):
        assert parse_painted_sexpr(painted_sexpr(t)) == t
    assert painted_sexpr(painted_corolla(3)) == "(t***)"


def test_validate_painted_rejections():
    with pytest.raises(PaintedTreeError):
        validate_painted(LEAF)
    with pytest.raises(PaintedTreeError):
        validate_painted(("u", (LEAF, LEAF)))  # unpainted root edge
    with pytest.raises(PaintedTreeError):
        validate_painted(("p", (LEAF, LEAF)))  # leaf edges painted
    with pytest.raises(PaintedTreeError):
        # painted node below an unpainted one
        validate_painted(("t", (("u", (("t", (LEAF,)), LEAF)),)))
    with pytest.raises(PaintedTreeError):
        parse_painted_sexpr("(t**")


def test_painted_dimension():
    assert painted_dimension(painted_corolla(3)) == 2
    binary = ("p", (("t", (LEAF,)), ("t", (LEAF, LEAF))))
    assert painted_dimension(binary) == 1
    vertex = ("p", (("t", (LEAF,)), ("t", (("u", (LEAF, LEAF)),))))
    assert painted_dimension(vertex) == 0


def test_collapse_edges():
    # collapsing the only edge of (t(u**)) gives the corolla
    t = ("t", (("u", (LEAF, LEAF)),))
    assert collapse_edges(t, {(0,)}) == painted_corolla(2)
    # a single p-t edge is inadmissible (mixed paint at the merged node)
    pt = ("p", (("t", (LEAF,)), ("t", (LEAF,))))
    assert collapse_edges(pt, {(0,)}) is None
    # the bunch of all edges under the p collapses to a t corolla
    assert collapse_edges(pt, {(0,), (1,)}) == painted_corolla(2)
    with pytest.raises(PaintedTreeError):
        collapse_edges(pt, {(5,)})


def test_Phi_example():
    t = parse_painted_sexpr("(p(t(u**))(p(t*)(t**)))")
    assert expr_text(Phi(t)) == "f(a1a2)(f(a3)f(a4.a5))"


def test_Phi_on_corolla_is_top():
    assert expr_text(Phi(painted_corolla(3))) == "f(a1.a2.a3)"


def test_collapse_codomain():
    e = Phi(parse_painted_sexpr("(p(t(u**))(p(t*)(t**)))"))
    assert expr_text(collapse_codomain(e)) == "f(a1a2)f(a3)f(a4.a5)"


def test_verify_Phi():
    for n in range(1, 5):
        r = verify_Phi(n)
        assert r.passed
        assert r.counts["trees"] == r.counts["expressions"]


def test_verify_phi():
    for n in range(1, 5):
        r = verify_phi(n)
        assert r.passed
        assert r.counts["flat"] == r.counts["bracketings"]


def test_phi_map_examples():
    e = parse_flat_expression("f(a1)f(a2)")
    assert phi_map(e) == Bracketing(3, {(2, 3)})
    e2 = parse_flat_expression("f((a1a2))")
    assert phi_map(e2) == Bracketing(3, {(1, 2)})
    e3 = parse_flat_expression("f(a1a2)")
    assert phi_map(e3) == Bracketing(3, {(1, 2)})
    e4 = parse_flat_expression("f(a1.a2)")
    assert phi_map(e4) == Bracketing(3, frozenset())


def test_phi_round_trip():
    for n in range(1, 6):
        for e in enumerate_flat_expressions(n):
            assert phi_inverse(phi_map(e)) == e


def test_Jprime_matches_K_counts():
    from assocmodels.associahedron import build_K

    for n in range(2, 6):
        assert f_vector(build_Jprime(n)) == f_vector(build_K(n + 1))


def test_frakJ_tops():
    P = build_frakJ(3)
    assert P.top == "f(a1.a2.a3)"
    assert build_Jprime(3).top == "f(a1.a2.a3)"


def test_parse_flat_expression_round_trip():
    for n in range(1, 5):
        for e in enumerate_flat_expressions(n):
            assert parse_flat_expression(expr_text(e)) == e


def test_parse_flat_expression_errors():
    for bad in ["", "f(a1", "f(a1)x", "f((a1))", "(a1a2)", "f(a1..a2)"]:
        with pytest.raises(ValueError):
            parse_flat_expression(bad)


def test_phi_map_rejects_nested():
    e = next(x for x in enumerate_expressions(3) if any(c[0] == "cb" for c in x[1]))
    with pytest.raises(ValueError):
        phi_map(e)
