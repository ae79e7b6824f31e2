"""Design tubings of a path and the resulting face poset.

A design tube on the path with nodes 1..n is either a round tube (a node
interval, possibly the whole path) or a square tube (a single marked node).
Two round tubes are compatible when nested or non-adjacent; a square is
compatible with a round tube unless it sits inside it; squares never
conflict with each other.  Tubings (sets of pairwise compatible tubes)
ordered by reverse inclusion form the face poset built here, which matches
the collapsed expression poset one letter up and, composed further, the
bracketing model two letters up.
"""

from __future__ import annotations

import json
from functools import lru_cache

from .bracketing import Bracketing
from .multiplihedron import block_from_brackets, expr_text, phi_map
from .poset import FacePoset, Report, check_order_iso


class TubeError(ValueError):
    pass


def round_tube(i, j):
    if i > j:
        raise TubeError(f"bad round tube ({i},{j})")
    return ("round", i, j)


def square_tube(k):
    return ("square", k, k)


def all_tubes(n):
    out = [square_tube(k) for k in range(1, n + 1)]
    out += [round_tube(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return out


def compatible(a, b):
    (ka, ia, ja), (kb, ib, jb) = a, b
    if ka == "round" and kb == "round":
        nested = (ia <= ib and jb <= ja) or (ib <= ia and ja <= jb)
        apart = jb + 1 < ia or ja + 1 < ib
        return nested or apart
    if ka == "square" and kb == "square":
        return True  # squares never conflict with each other
    # one square, one round: the square must stay outside the round tube
    sq, rd = (a, b) if ka == "square" else (b, a)
    return not (rd[1] <= sq[1] <= rd[2])


def enumerate_design_tubings(n):
    """All design tubings of the n-node path, the empty one included."""
    if n < 1:
        raise TubeError("path needs at least 1 node")
    tubes = all_tubes(n)
    out = []

    def go(i, chosen):
        if i == len(tubes):
            out.append(frozenset(chosen))
            return
        go(i + 1, chosen)
        t = tubes[i]
        if all(compatible(t, c) for c in chosen):
            chosen.append(t)
            go(i + 1, chosen)
            chosen.pop()

    go(0, [])
    return out


def _tube_key(t):
    kind, i, j = t
    return (i, j, 0 if kind == "round" else 1)


def tube_text(t):
    kind, i, j = t
    if kind == "square":
        return f"s{i}"
    return f"r{i}" if i == j else f"r{i}-{j}"


def tubing_text(tubing):
    return "[" + " ".join(tube_text(t) for t in sorted(tubing, key=_tube_key)) + "]"


def tubing_to_json(n, tubing):
    tubes = [
        {"kind": kind, "nodes": [i] if i == j else [i, j]}
        for kind, i, j in sorted(tubing, key=_tube_key)
    ]
    return json.dumps({"n": n, "tubes": tubes})


def tubing_from_json(text):
    data = json.loads(text)
    tubing = set()
    for rec in data["tubes"]:
        nodes = rec["nodes"]
        if rec["kind"] == "square":
            tubing.add(square_tube(nodes[0]))
        else:
            tubing.add(round_tube(nodes[0], nodes[-1]))
    for t in tubing:
        if not (1 <= t[1] <= t[2] <= data["n"]):
            raise TubeError(f"tube {t} outside the path")
    bad = [
        (a, b)
        for a in tubing
        for b in tubing
        if _tube_key(a) < _tube_key(b) and not compatible(a, b)
    ]
    if bad:
        raise TubeError(f"incompatible tubes {bad[0]}")
    return data["n"], frozenset(tubing)


@lru_cache(maxsize=None)
def build_CP(n):
    """Face poset of design tubings: more tubes = smaller face."""
    tubings = enumerate_design_tubings(n)
    labels = {tubing_text(u): u for u in tubings}
    rank = {lab: n - len(u) for lab, u in labels.items()}
    covers = {
        lab: tuple(sorted(tubing_text(u - {t}) for t in u))
        for lab, u in labels.items()
    }
    return FacePoset(labels, covers, rank, top=tubing_text(frozenset()))


def tubing_to_expression(n, tubing):
    """A tubing of the n-node path as an expression on n+1 letters.

    Letter a_k sits left of node k (and a_{n+1} at the far right), so node
    k separates a_k from a_{k+1}.  Squares cut the word into f-blocks,
    round tubes over nodes i..j become domain brackets over a_i..a_{j+1},
    and nodes no tube covers are paint dots.
    """
    squares = sorted(i for kind, i, _ in tubing if kind == "square")
    # a square at node k cuts the word after letter a_k
    starts = [1] + [k + 1 for k in squares]
    ends = squares + [n + 1]
    brackets = {(i, j + 1) for kind, i, j in tubing if kind == "round"}
    blocks = []
    for lo, hi in zip(starts, ends):
        span = {x for x in brackets if lo <= x[0] and x[1] <= hi}
        blocks.append(block_from_brackets(lo, hi, span))
    return ("e", tuple(blocks))


def verify_cubeahedron_iso(n):
    """Design tubings vs the collapsed expression poset one letter up."""
    from .multiplihedron import build_Jprime

    P = build_CP(n)
    Q = build_Jprime(n + 1)
    mapping = {
        tubing_text(u): expr_text(tubing_to_expression(n, u))
        for u in enumerate_design_tubings(n)
    }
    got = check_order_iso(P, Q, mapping)
    counts = {"n": n, "tubings": len(P), "expressions": len(Q)}
    return Report("cubeahedron_iso", got.passed, counts, witness=got.witness)


def verify_composed(n):
    """Tubing -> expression -> bracketing lands on the associahedron two
    letters up; the plain (all-round, proper) tubings match it directly."""
    from .associahedron import build_K

    P = build_CP(n)
    Q = build_K(n + 2)
    mapping = {
        tubing_text(u): phi_map(tubing_to_expression(n, u)).text
        for u in enumerate_design_tubings(n)
    }
    got = check_order_iso(P, Q, mapping)
    counts = {"n": n, "tubings": len(P), "bracketings": len(Q)}
    if not got.passed:
        return Report("composed_iso", False, counts, witness=got.witness)

    # plain round tubings of the (n+1)-node path against the same model
    plain = ordinary_path_poset(n + 1)
    direct = {
        lab: Bracketing(n + 2, frozenset((i, j + 1) for _, i, j in u)).text
        for lab, u in _ordinary_tubings(n + 1).items()
    }
    got2 = check_order_iso(plain, Q, direct)
    counts["plain_tubings"] = len(plain)
    return Report("composed_iso", got2.passed, counts, witness=got2.witness)


def _ordinary_tubings(n):
    """Round-only tubings of the n-node path, the full tube excluded."""
    tubes = [
        round_tube(i, j)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if (i, j) != (1, n)
    ]
    out = {}

    def go(i, chosen):
        if i == len(tubes):
            u = frozenset(chosen)
            out[tubing_text(u)] = u
            return
        go(i + 1, chosen)
        t = tubes[i]
        if all(compatible(t, c) for c in chosen):
            chosen.append(t)
            go(i + 1, chosen)
            chosen.pop()

    go(0, [])
    return out


def ordinary_path_poset(n):
    """Face poset of plain tubings of the n-node path (no squares, no full
    tube); this is the bracketing model in tubing clothes."""
    labels = _ordinary_tubings(n)
    rank = {lab: n - 1 - len(u) for lab, u in labels.items()}
    covers = {
        lab: tuple(sorted(tubing_text(u - {t}) for t in u))
        for lab, u in labels.items()
    }
    return FacePoset(labels, covers, rank, top=tubing_text(frozenset()))
