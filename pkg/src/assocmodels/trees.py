"""Plane trees, binary trees, Loday weights, and leaf deletion.

A tree is a nested tuple: the leaf is the empty tuple () and an internal
node is the tuple of its children (arity >= 2 except transiently during
smoothing).  Canonical text encoding: leaf "*", internal node "(c1...ck)"
with children concatenated, e.g. "((**)*)".
"""

from __future__ import annotations

from functools import lru_cache

from .bracketing import Bracketing

LEAF = ()


class TreeError(ValueError):
    pass


def n_leaves(t):
    if t == LEAF:
        return 1
    return sum(n_leaves(c) for c in t)


def is_binary(t):
    if t == LEAF:
        return True
    return len(t) == 2 and all(is_binary(c) for c in t)


def to_sexpr(t):
    if t == LEAF:
        return "*"
    return "(" + "".join(to_sexpr(c) for c in t) + ")"


def parse_sexpr(text):
    t, rest = _parse_one(text)
    if rest:
        raise TreeError(f"trailing input {rest!r}")
    return t


def _parse_one(s):
    if not s:
        raise TreeError("unexpected end of input")
    if s[0] == "*":
        return LEAF, s[1:]
    if s[0] != "(":
        raise TreeError(f"unexpected {s[0]!r}")
    s = s[1:]
    children = []
    while s and s[0] != ")":
        c, s = _parse_one(s)
        children.append(c)
    if not s:
        raise TreeError("missing ')'")
    if len(children) < 2:
        raise TreeError("internal node needs arity >= 2")
    return tuple(children), s[1:]


@lru_cache(maxsize=None)
def _binary(n):
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(1, n):
        for left in _binary(k):
            for right in _binary(n - k):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def _plane(n):
    if n == 1:
        return (LEAF,)
    out = []
    for parts in compositions(n, 2):
        for kids in _forests(parts):
            out.append(kids)
    return tuple(out)


def compositions(n, min_parts):
    """Ordered compositions of n into >= min_parts positive parts."""
    out = []

    def go(rest, acc):
        if rest == 0:
            if len(acc) >= min_parts:
                out.append(tuple(acc))
            return
        for first in range(1, rest + 1):
            go(rest - first, acc + [first])

    go(n, [])
    return out


def _forests(parts):
    if not parts:
        yield ()
        return
    for head in _plane(parts[0]):
        for tail in _forests(parts[1:]):
            yield (head,) + tail


def enumerate_binary_trees(n):
    """All rooted plane binary trees with n leaves (Catalan(n-1) of them)."""
    if n < 2:
        raise TreeError("need at least 2 leaves")
    return list(_binary(n))


def enumerate_plane_trees(n):
    """All plane trees with n leaves and internal arity >= 2."""
    if n < 2:
        raise TreeError("need at least 2 leaves")
    return list(_plane(n))


def _spans(t, start):
    """Yield (first_leaf, last_leaf, is_root) for internal nodes, 1-indexed."""
    out = []

    def go(node, lo, root):
        if node == LEAF:
            return lo + 1
        pos = lo
        for c in node:
            pos = go(c, pos, False)
        out.append((lo + 1, pos, root))
        return pos

    go(t, start, True)
    return out


def tree_to_bracketing(t):
    """Internal non-root node spanning leaves k..l maps to bracket [k, l]."""
    n = n_leaves(t)
    if n < 2 or t == LEAF:
        raise TreeError("need at least 2 leaves")
    brackets = {(k, l) for k, l, root in _spans(t, 0) if not root}
    return Bracketing(n, frozenset(brackets))


def bracketing_to_tree(b: Bracketing):
    """Inverse of tree_to_bracketing."""

    def build(lo, hi, inner):
        # children of the node spanning letters lo..hi: maximal brackets
        # strictly inside, plus bare letters
        maximal = []
        for l, r in sorted(inner):
            if not any(l2 <= l and r <= r2 for l2, r2 in inner if (l2, r2) != (l, r)):
                maximal.append((l, r))
        kids = []
        pos = lo
        for l, r in maximal:
            kids.extend([LEAF] * (l - pos))
            nested = {br for br in inner if l <= br[0] and br[1] <= r and br != (l, r)}
            kids.append(build(l, r, nested))
            pos = r + 1
        kids.extend([LEAF] * (hi - pos + 1))
        return tuple(kids)

    return build(1, b.n, set(b.brackets))


def loday_point(t):
    """Weights a_i*b_i of the internal vertices, in left-to-right order.

    The i-th internal vertex sits between leaves i-1 and i; its weight is
    the product of the leaf counts of its left and right subtrees.
    """
    if not is_binary(t) or t == LEAF:
        raise TreeError("Loday points are defined for binary trees")
    coords = []

    def go(node):
        if node == LEAF:
            return 1
        left = go(node[0])
        # in-order position: the vertex is visited between its subtrees,
        # which matches the left-to-right numbering 1..n-1
        idx = len(coords)
        coords.append(None)
        right = go(node[1])
        coords[idx] = left * right
        return left + right

    go(t)
    return tuple(coords)


def delete_leaf(t, j):
    """Remove the j-th leaf (1-based); arity-1 nodes are smoothed away."""
    n = n_leaves(t)
    if not (1 <= j <= n):
        raise TreeError(f"leaf index {j} out of range 1..{n}")
    if n < 3:
        raise TreeError("need at least 3 leaves")

    def go(node, lo):
        # returns (new node or None, leaves consumed)
        if node == LEAF:
            return (None if lo + 1 == j else LEAF), 1
        kids = []
        used = 0
        for c in node:
            new, span = go(c, lo + used)
            used += span
            if new is not None:
                kids.append(new)
        if len(kids) == 1:
            return kids[0], used
        return tuple(kids), used

    result, _ = go(t, 0)
    return result
