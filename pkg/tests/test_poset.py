import json

import pytest

from assocmodels.poset import (
    APEX,
    CONE_TOP,
    CellComplex,
    FacePoset,
    Poset,
    PosetError,
    boundary_euler_characteristic,
    boundary_subcomplex,
    check_order_iso,
    close_order,
    complex_of,
    cone_complex,
    f_vector,
    is_simple,
    poset_from_json,
    poset_to_json,
    product_complex,
    search_iso,
    to_dot,
    union_complex,
)


def interval():
    return FacePoset(
        ["a", "b", "e"], {"a": ("e",), "b": ("e",), "e": ()},
        {"a": 0, "b": 0, "e": 1}, top="e",
    )


def square():
    """One 2-cell with 4 edges and 4 vertices."""
    vs = ["v1", "v2", "v3", "v4"]
    es = ["e12", "e23", "e34", "e41"]
    covers = {
        "v1": ("e12", "e41"), "v2": ("e12", "e23"),
        "v3": ("e23", "e34"), "v4": ("e34", "e41"),
    }
    covers.update({e: ("f",) for e in es})
    covers["f"] = ()
    rank = {v: 0 for v in vs}
    rank.update({e: 1 for e in es})
    rank["f"] = 2
    return FacePoset(vs + es + ["f"], covers, rank, top="f")


def square_pyramid():
    """Hand-built 3-polytope face poset; the apex breaks simplicity."""
    vs = ["A", "B", "C", "D", "T"]
    base_edges = {"AB": "AB", "BC": "BC", "CD": "CD", "DA": "DA"}
    edges = list(base_edges) + ["TA", "TB", "TC", "TD"]
    facets = ["base", "tAB", "tBC", "tCD", "tDA"]
    covers = {
        "A": ("AB", "DA", "TA"), "B": ("AB", "BC", "TB"),
        "C": ("BC", "CD", "TC"), "D": ("CD", "DA", "TD"),
        "T": ("TA", "TB", "TC", "TD"),
        "AB": ("base", "tAB"), "BC": ("base", "tBC"),
        "CD": ("base", "tCD"), "DA": ("base", "tDA"),
        "TA": ("tAB", "tDA"), "TB": ("tAB", "tBC"),
        "TC": ("tBC", "tCD"), "TD": ("tCD", "tDA"),
    }
    covers.update({f: ("P",) for f in facets})
    covers["P"] = ()
    rank = {v: 0 for v in vs}
    rank.update({e: 1 for e in edges})
    rank.update({f: 2 for f in facets})
    rank["P"] = 3
    return FacePoset(vs + edges + facets + ["P"], covers, rank, top="P")


def test_close_order_singleton_and_transitivity():
    p = close_order(set(), elements=["x"])
    assert p.elements == ("x",)
    assert p.le("x", "x")
    q = close_order({("a", "b"), ("b", "c")})
    assert q.le("a", "c")
    # the cover relation is the transitive reduction
    r = close_order({("a", "b"), ("b", "c"), ("a", "c")})
    assert r.covers_above["a"] == ("b",)


def test_close_order_rejects_cycle():
    with pytest.raises(PosetError, match="cycle"):
        close_order({("a", "b"), ("b", "a")})


def test_graded_checks():
    with pytest.raises(PosetError, match="graded"):
        FacePoset(["a", "b"], {"a": ("b",), "b": ()}, {"a": 0, "b": 2})
    with pytest.raises(PosetError, match="minimal"):
        FacePoset(["a"], {"a": ()}, {"a": 1})
    with pytest.raises(PosetError, match="top"):
        FacePoset(["a", "b"], {"a": (), "b": ()}, {"a": 0, "b": 0}, top="a")


def test_f_vector():
    assert f_vector(interval()) == (2, 1)
    assert f_vector(square()) == (4, 4, 1)
    with pytest.raises(PosetError):
        f_vector(FacePoset((), {}, {}))


def test_check_order_iso_identity_and_failure():
    P = interval()
    assert check_order_iso(P, P, {x: x for x in P.elements}).passed
    bad = check_order_iso(P, P, {x: "a" for x in P.elements})
    assert not bad.passed and bad.witness is not None


def test_check_order_iso_catches_order_violation():
    P = interval()
    chain = FacePoset(
        ["x", "y", "z"], {"x": ("y",), "y": ("z",), "z": ()},
        {"x": 0, "y": 1, "z": 2},
    )
    assert not check_order_iso(P, chain, {"a": "x", "b": "y", "e": "z"}).passed


def test_search_iso_small():
    P = interval()
    m = search_iso(P, P)
    assert m is not None and check_order_iso(P, P, m).passed
    # anchor forcing the swap
    m2 = search_iso(P, P, {"a": "b"})
    assert m2 == {"a": "b", "b": "a", "e": "e"}
    assert search_iso(P, square()) is None


def test_boundary_of_edge_and_square():
    edge = complex_of(interval())
    bd = boundary_subcomplex(edge)
    assert sorted(bd.elements) == ["a", "b"]
    sq = complex_of(square())
    assert len(boundary_subcomplex(sq)) == 8


def test_cone_point_is_interval():
    pt = CellComplex(FacePoset(["p"], {"p": ()}, {"p": 0}), topcells=("p",))
    c = cone_complex(pt)
    assert len(c) == 3
    assert f_vector(c.faces) == (2, 1)


def test_cone_of_empty_is_point():
    c = cone_complex(CellComplex.empty())
    assert c.elements == (APEX,)


def test_cone_adds_boundary_plus_two():
    sq = complex_of(square())
    bd = boundary_subcomplex(sq)
    c = cone_complex(sq)
    assert len(c) == len(sq) + len(bd) + 2
    assert c.faces.rank[CONE_TOP] == 3


def test_product_point_is_unit():
    pt = CellComplex(FacePoset(["p"], {"p": ()}, {"p": 0}), topcells=("p",))
    sq = complex_of(square())
    prod = product_complex(pt, sq)
    assert f_vector(prod.faces) == f_vector(sq.faces)


def test_product_f_vector_is_convolution():
    edge = complex_of(interval())
    prod = product_complex(edge, edge)
    assert f_vector(prod.faces) == (4, 4, 1)


def test_cross_cone_point_instance():
    """cone(pt) x cone(pt) and cone(pt x cone(pt) union cone(pt) x pt) are
    both squares with 9 cells."""
    ptx = CellComplex(FacePoset(["x"], {"x": ()}, {"x": 0}), topcells=("x",))
    pty = CellComplex(FacePoset(["y"], {"y": ()}, {"y": 0}), topcells=("y",))
    lhs = product_complex(cone_complex(ptx), cone_complex(pty))
    Z = union_complex(
        product_complex(ptx, cone_complex(pty)),
        product_complex(cone_complex(ptx), pty),
    )
    assert len(Z) == 5
    rhs = cone_complex(Z)
    assert len(lhs) == len(rhs) == 9
    m = search_iso(lhs.faces, rhs.faces)
    assert m is not None and check_order_iso(lhs.faces, rhs.faces, m).passed


def test_union_rank_clash_rejected():
    a = CellComplex(FacePoset(["s"], {"s": ()}, {"s": 0}), topcells=("s",))
    b = CellComplex(
        FacePoset(["s", "t"], {"t": ("s",), "s": ()}, {"t": 0, "s": 1}),
        topcells=("s",),
    )
    with pytest.raises(PosetError, match="clash"):
        union_complex(a, b)


def test_is_simple():
    assert is_simple(interval())
    assert is_simple(square())
    assert not is_simple(square_pyramid())


def test_boundary_euler_characteristic():
    assert boundary_euler_characteristic(square()) == 0  # circle
    assert boundary_euler_characteristic(square_pyramid()) == 2  # sphere


def test_json_round_trip():
    P = square()
    data = json.loads(poset_to_json(P))
    assert {"id": "f", "rank": 2} in data["elements"]
    Q = poset_from_json(poset_to_json(P))
    assert Q.elements == P.elements
    assert Q.covers_above == P.covers_above
    assert Q.top == "f"


def test_to_dot():
    out = to_dot(interval(), name="iv")
    assert 'digraph "iv"' in out
    assert '"a" -> "e";' in out
    assert out.count("->") == 2


def test_poset_up_sets():
    P = Poset(["a", "b", "c"], {"a": ("b",), "b": ("c",), "c": ()})
    assert P.up["a"] == frozenset({"b", "c"})
    assert P.minimal_elements() == ("a",)
    assert P.maximal_elements() == ("c",)
