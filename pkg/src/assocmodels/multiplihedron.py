"""Painted trees, the expression poset, and the collapsed multiplihedron.

Painted trees carry three node kinds: U (unpainted, arity >= 2), P (fully
painted, arity >= 2) and T (paint boundary, arity >= 1, unpainted children).
The paint region is connected and starts at the root edge, so the root node
is P or T and leaf edges are unpainted.

Expressions are formal terms built from f-blocks, paint dots and brackets;
the two sides are enumerated independently and matched by the bijections.
Text encodings: painted trees as s-expressions "(t*(u**))" (leaf "*"), and
expressions as printed, with "." for the paint dot, e.g.
"f(a1a2)(f(a3)f(a4.a5))".
"""

from __future__ import annotations

import re
from functools import lru_cache

from .bracketing import Bracketing
from .poset import (
    FacePoset,
    Report,
    check_order_iso,
    close_order,
    rank_by_longest_chain,
)
from .trees import LEAF, compositions

_KINDS = ("u", "p", "t")


class PaintedTreeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# painted trees


def n_leaves(t):
    if t == LEAF:
        return 1
    return sum(n_leaves(c) for c in t[1])


def validate_painted(t, at_root=True):
    if t == LEAF:
        raise PaintedTreeError("a bare leaf is not a painted tree")
    kind, children = t
    if at_root and kind == "u":
        raise PaintedTreeError("root edge must be painted")
    _validate_node(t)
    return t


def _validate_node(node):
    kind, children = node
    if kind not in _KINDS:
        raise PaintedTreeError(f"unknown node kind {kind!r}")
    min_arity = 1 if kind == "t" else 2
    if len(children) < min_arity:
        raise PaintedTreeError(f"{kind} node of arity {len(children)}")
    for c in children:
        if c == LEAF:
            if kind == "p":
                raise PaintedTreeError("leaf edges must be unpainted")
            continue
        painted_child = c[0] in ("p", "t")
        if kind == "p" and not painted_child:
            raise PaintedTreeError("p node with unpainted child edge")
        if kind in ("u", "t") and painted_child:
            raise PaintedTreeError(f"{kind} node with painted child edge")
        _validate_node(c)


def painted_sexpr(t):
    if t == LEAF:
        return "*"
    kind, children = t
    return "(" + kind + "".join(painted_sexpr(c) for c in children) + ")"


def parse_painted_sexpr(text):
    t, rest = _parse_pt(text)
    if rest:
        raise PaintedTreeError(f"trailing input {rest!r}")
    return validate_painted(t)


def _parse_pt(s):
    if not s:
        raise PaintedTreeError("unexpected end of input")
    if s[0] == "*":
        return LEAF, s[1:]
    if s[0] != "(" or len(s) < 2 or s[1] not in _KINDS:
        raise PaintedTreeError(f"cannot parse {s!r}")
    kind, s = s[1], s[2:]
    children = []
    while s and s[0] != ")":
        c, s = _parse_pt(s)
        children.append(c)
    if not s:
        raise PaintedTreeError("missing ')'")
    return (kind, tuple(children)), s[1:]


@lru_cache(maxsize=None)
def _unpainted(n):
    """Unpainted subtrees with n leaves: a leaf or a u node."""
    if n == 1:
        return (LEAF,)
    out = []
    for parts in compositions(n, 2):
        for kids in _kid_forests(parts, _unpainted):
            out.append(("u", kids))
    return tuple(out)


@lru_cache(maxsize=None)
def _painted(n):
    """Painted subtrees with n leaves: rooted at a t or p node."""
    out = []
    for parts in compositions(n, 1):
        for kids in _kid_forests(parts, _unpainted):
            out.append(("t", kids))
    for parts in compositions(n, 2):
        for kids in _kid_forests(parts, _painted):
            out.append(("p", kids))
    return tuple(out)


def _kid_forests(parts, gen):
    if not parts:
        yield ()
        return
    for head in gen(parts[0]):
        for tail in _kid_forests(parts[1:], gen):
            yield (head,) + tail


def enumerate_painted_trees(n):
    if n < 1:
        raise PaintedTreeError("need at least 1 leaf")
    return list(_painted(n))


def painted_corolla(n):
    return ("t", (LEAF,) * n)


def painted_dimension(t):
    """Face dimension: sum of (arity-2) over u/p nodes and (arity-1) over t."""
    if t == LEAF:
        return 0
    kind, children = t
    own = len(children) - (1 if kind == "t" else 2)
    return own + sum(painted_dimension(c) for c in children)


def internal_edges(t, prefix=()):
    """Addresses (child-index paths) of edges to internal nodes."""
    if t == LEAF:
        return
    for i, c in enumerate(t[1]):
        if c != LEAF:
            yield prefix + (i,)
        yield from internal_edges(c, prefix + (i,))


def collapse_edges(t, edges):
    """Quotient by a set of internal edges; None when inadmissible.

    A merged node must again be a u, p, or t node: mixed painted/unpainted
    child edges under a painted parent edge are inadmissible.
    """
    edges = set(map(tuple, edges))
    for addr in edges:
        node = t
        for i in addr:
            if node == LEAF or i >= len(node[1]):
                raise PaintedTreeError(f"bad edge address {addr}")
            node = node[1][i]
        if node == LEAF:
            raise PaintedTreeError(f"edge {addr} points at a leaf")

    bad = []

    def expand(node, addr):
        """Children of the merged class rooted at node, already rebuilt."""
        out = []
        for i, c in enumerate(node[1]):
            a = addr + (i,)
            if a in edges:
                out.extend(expand(c, a))
            else:
                out.append(build(c, a))
        return out

    def build(node, addr):
        if node == LEAF:
            return LEAF
        children = tuple(expand(node, addr))
        painted_parent = addr == () or node[0] in ("p", "t")
        kid_paint = {c != LEAF and c[0] in ("p", "t") for c in children}
        if not painted_parent:
            kind = "u"
            if True in kid_paint:
                bad.append(addr)
        elif kid_paint == {True}:
            kind = "p"
        elif len(kid_paint) == 1:
            kind = "t"
        else:
            bad.append(addr)
            kind = "t"
        return (kind, children)

    result = build(t, ())
    if bad:
        return None
    try:
        validate_painted(result)
    except PaintedTreeError:
        return None
    return result


def _single_coarsenings(t):
    """Generating collapse moves: one u-u, t-u, or p-p edge, or the bunch
    of all painted edges under a p node whose children are all t nodes."""
    out = []

    def node_at(addr):
        node = t
        for i in addr:
            node = node[1][i]
        return node

    for addr in internal_edges(t):
        child = node_at(addr)
        parent = node_at(addr[:-1])
        pk, ck = parent[0], child[0]
        if (pk, ck) in (("u", "u"), ("t", "u"), ("p", "p")):
            got = collapse_edges(t, {addr})
            if got is not None:
                out.append(got)

    def bunches(node, addr):
        if node == LEAF:
            return
        kind, children = node
        if kind == "p" and all(c != LEAF and c[0] == "t" for c in children):
            got = collapse_edges(t, {addr + (i,) for i in range(len(children))})
            if got is not None:
                out.append(got)
        for i, c in enumerate(children):
            bunches(c, addr + (i,))

    bunches(t, ())
    return out


def build_Jtree(n):
    """Painted-tree face poset: t <= t' iff t' is reachable by collapses."""
    elems = enumerate_painted_trees(n)
    labels = {painted_sexpr(t): t for t in elems}
    rank = {lab: painted_dimension(t) for lab, t in labels.items()}
    pairs = set()
    for lab, t in labels.items():
        for t2 in _single_coarsenings(t):
            lab2 = painted_sexpr(t2)
            if lab2 not in labels:
                raise PaintedTreeError(f"collapse left the enumeration: {lab2}")
            pairs.add((lab, lab2))
    reduced = close_order(pairs, elements=labels)
    return FacePoset(
        reduced.elements, reduced.covers_above, rank,
        top=painted_sexpr(painted_corolla(n)),
    )


# ---------------------------------------------------------------------------
# expressions
#
# structures (hashable tuples):
#   ("a", i)                       atom a_i
#   ("b", factors)                 bracketed domain word, >= 2 factors
#   ("f", "word", factors)        dot-free f-block (1 atom, or >= 2 factors)
#   ("f", "dots", factors)        dotted f-block, each segment one factor
#   ("cb", cofactors)              codomain bracket, >= 2 cofactors
#   ("e", cofactors)               whole expression (no outer bracket)


def expr_text(node):
    tag = node[0]
    if tag == "a":
        return f"a{node[1]}"
    if tag == "b" or tag == "cb":
        return "(" + "".join(expr_text(c) for c in node[1]) + ")"
    if tag == "f":
        sep = "." if node[1] == "dots" else ""
        return "f(" + sep.join(expr_text(c) for c in node[2]) + ")"
    if tag == "e":
        return "".join(expr_text(c) for c in node[1])
    raise ValueError(f"bad node {node!r}")


@lru_cache(maxsize=None)
def _factors(i, j):
    if i == j:
        return (("a", i),)
    # brackets need >= 2 inner factors, so the head is a proper prefix
    out = []
    for m in range(i, j):
        for head in _factors(i, m):
            for tail in _words(m + 1, j):
                out.append(("b", (head,) + tail))
    return tuple(out)


@lru_cache(maxsize=None)
def _words(i, j):
    """Nonempty factor sequences covering letters i..j."""
    out = [(f,) for f in _factors(i, j)]
    for m in range(i, j):
        for head in _factors(i, m):
            for tail in _words(m + 1, j):
                out.append((head,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _fblocks(i, j):
    out = []
    if i == j:
        out.append(("f", "word", (("a", i),)))
    else:
        for w in _words(i, j):
            if len(w) >= 2:
                out.append(("f", "word", w))
        for segs in _segmentations(i, j):
            out.append(("f", "dots", segs))
    return tuple(out)


def _segmentations(i, j):
    """Dotted arguments: >= 2 segments, each a single domain factor."""
    out = []
    for m in range(i, j):
        for head in _factors(i, m):
            for tail in _seg_tail(m + 1, j):
                out.append((head,) + tail)
    return out


def _seg_tail(i, j):
    out = [(f,) for f in _factors(i, j)]
    for m in range(i, j):
        for head in _factors(i, m):
            for tail in _seg_tail(m + 1, j):
                out.append((head,) + tail)
    return out


@lru_cache(maxsize=None)
def _cofactors(i, j):
    out = list(_fblocks(i, j))
    # codomain brackets need >= 2 cofactors, so the head is a proper prefix
    for m in range(i, j):
        for head in _cofactors(i, m):
            for tail in _coseqs(m + 1, j):
                out.append(("cb", (head,) + tail))
    return tuple(out)


@lru_cache(maxsize=None)
def _coseqs(i, j):
    """Nonempty cofactor sequences covering letters i..j."""
    out = [(c,) for c in _cofactors(i, j)]
    for m in range(i, j):
        for head in _cofactors(i, m):
            for tail in _coseqs(m + 1, j):
                out.append((head,) + tail)
    return tuple(out)


def enumerate_expressions(n):
    """All elements of the expression poset on a1..an."""
    if n < 1:
        raise ValueError("need at least 1 letter")
    out = []
    for seq in _coseqs(1, n):
        if len(seq) >= 2 or seq[0][0] == "f":
            out.append(("e", seq))
    return out


def enumerate_flat_expressions(n):
    """Sequences of f-blocks with no codomain brackets."""
    if n < 1:
        raise ValueError("need at least 1 letter")
    out = []

    def go(i):
        if i > n:
            yield ()
            return
        for m in range(i, n + 1):
            for head in _fblocks(i, m):
                for tail in go(m + 1):
                    yield (head,) + tail

    for blocks in go(1):
        out.append(("e", blocks))
    return out


def _make_fblock(segs):
    if len(segs) >= 2:
        return ("f", "dots", segs)
    f = segs[0]
    return ("f", "word", f[1] if f[0] == "b" else (f,))


def _refine_word(w):
    out = []
    for s in range(len(w)):
        for e in range(s + 2, len(w) + 1):
            if e - s < len(w):  # the full run adds a redundant bracket
                out.append(w[:s] + (("b", w[s:e]),) + w[e:])
    for i, f in enumerate(w):
        for f2 in _refine_factor(f):
            out.append(w[:i] + (f2,) + w[i + 1:])
    return out


def _refine_factor(f):
    if f[0] == "a":
        return []
    return [("b", w2) for w2 in _refine_word(f[1])]


def _refine_fblock(fb):
    """In-place rewrites (domain bracket adds and dot merges); splits are
    handled by the parent sequence.  Yields whole f-blocks."""
    _, mode, parts = fb
    if mode == "word":
        for w2 in _refine_word(parts):
            yield ("f", "word", w2)
    else:
        for i, f in enumerate(parts):
            for f2 in _refine_factor(f):
                yield ("f", "dots", parts[:i] + (f2,) + parts[i + 1:])
        m = len(parts)
        for s in range(m):
            for e in range(s + 2, m + 1):
                if e - s == m:
                    yield ("f", "word", parts)
                else:
                    merged = ("b", parts[s:e])
                    yield ("f", "dots", parts[:s] + (merged,) + parts[e:])


def _fblock_splits(fb):
    """Dot-to-')f(' rewrites: a dotted block breaks into a run of blocks,
    one per group of an arbitrary composition of its segments (the inverse
    of gluing a whole run of blocks back together in one step)."""
    _, mode, parts = fb
    if mode != "dots":
        return
    for comp in compositions(len(parts), 2):
        groups = []
        pos = 0
        for size in comp:
            groups.append(_make_fblock(parts[pos:pos + size]))
            pos += size
        yield tuple(groups)


def _refine_seq(seq, is_top, codomain):
    """Single-move rewrites of a cofactor sequence, as whole sequences."""
    out = []
    if codomain and len(seq) >= 3:
        for s in range(len(seq)):
            for e in range(s + 2, len(seq) + 1):
                if e - s < len(seq):
                    out.append(seq[:s] + (("cb", seq[s:e]),) + seq[e:])
    for i, c in enumerate(seq):
        if c[0] == "cb":
            for sub in _refine_seq(c[1], False, codomain):
                out.append(seq[:i] + (("cb", sub),) + seq[i + 1:])
        else:
            for fb2 in _refine_fblock(c):
                out.append(seq[:i] + (fb2,) + seq[i + 1:])
            for groups in _fblock_splits(c):
                if not codomain:
                    out.append(seq[:i] + groups + seq[i + 1:])
                elif is_top and len(seq) == 1:
                    out.append(groups)
                else:
                    out.append(seq[:i] + (("cb", groups),) + seq[i + 1:])
    return out


def refinements(e, codomain=True):
    """All expressions one generating move below e."""
    return [("e", seq) for seq in _refine_seq(e[1], True, codomain)]


def _expr_poset(elems, codomain, top):
    labels = {expr_text(e): e for e in elems}
    pairs = set()
    for lab, e in labels.items():
        for e2 in refinements(e, codomain):
            lab2 = expr_text(e2)
            if lab2 not in labels:
                raise ValueError(f"move left the enumeration: {lab2} (from {lab})")
            pairs.add((lab2, lab))
    reduced = close_order(pairs, elements=labels)
    rank = rank_by_longest_chain(reduced.elements, reduced.covers_above)
    return FacePoset(reduced.elements, reduced.covers_above, rank, top=top)


def _top_label(n):
    if n == 1:
        return "f(a1)"
    return "f(" + ".".join(f"a{i}" for i in range(1, n + 1)) + ")"


def build_frakJ(n):
    """The expression poset, enumerated directly from the grammar."""
    return _expr_poset(enumerate_expressions(n), codomain=True, top=_top_label(n))


def build_Jprime(n):
    """The collapsed poset: codomain bracketing erased."""
    return _expr_poset(
        enumerate_flat_expressions(n), codomain=False, top=_top_label(n)
    )


# ---------------------------------------------------------------------------
# the bijections


def Phi(t):
    """Painted tree -> expression, by bottom-up node labeling."""
    validate_painted(t)

    def conv(node, lo):
        if node == LEAF:
            return ("a", lo)
        kind, children = node
        parts = []
        pos = lo
        for c in children:
            parts.append(conv(c, pos))
            pos += n_leaves(c)
        parts = tuple(parts)
        if kind == "u":
            return ("b", parts)
        if kind == "t":
            return _make_fblock(parts) if len(parts) == 1 else ("f", "dots", parts)
        return ("cb", parts)

    root = conv(t, 1)
    return ("e", root[1] if root[0] == "cb" else (root,))


def collapse_codomain(e):
    """Erase codomain brackets, preserving block order and arguments."""

    def flat(seq):
        for c in seq:
            if c[0] == "f":
                yield c
            else:
                yield from flat(c[1])

    return ("e", tuple(flat(e[1])))


def _block_span(fb):
    def width(node):
        if node[0] == "a":
            return 1
        return sum(width(c) for c in node[1])

    return sum(width(f) for f in fb[2])


def phi_map(e):
    """Flat expression over a1..an -> bracketing of a1..a_{n+1}."""
    blocks = e[1]
    if any(c[0] != "f" for c in blocks):
        raise ValueError("phi is defined on flat expressions")
    brackets = set()

    def walk_factor(f, lo):
        if f[0] == "a":
            return 1
        used = 0
        for sub in f[1]:
            used += walk_factor(sub, lo + used)
        brackets.add((lo, lo + used - 1))
        return used

    pos = 1
    starts = []
    for fb in blocks:
        starts.append(pos)
        _, mode, parts = fb
        used = 0
        for f in parts:
            used += walk_factor(f, pos + used)
        if mode == "word" and used >= 2:
            brackets.add((pos, pos + used - 1))
        pos += used
    n = pos - 1
    for s in starts[1:]:
        brackets.add((s, n + 1))
    return Bracketing(n + 1, frozenset(brackets))


def _inside(brs, l, r):
    return {x for x in brs if l <= x[0] and x[1] <= r and x != (l, r)}


def _factor_from_brackets(l, r, brs):
    if l == r:
        return ("a", l)
    return ("b", _word_from_brackets(l, r, _inside(brs, l, r)))


def _word_from_brackets(l, r, brs):
    parts = []
    pos = l
    for bl, br_ in _maximal_brackets(brs):
        parts.extend(("a", k) for k in range(pos, bl))
        parts.append(("b", _word_from_brackets(bl, br_, _inside(brs, bl, br_))))
        pos = br_ + 1
    parts.extend(("a", k) for k in range(pos, r + 1))
    return tuple(parts)


def block_from_brackets(i, j, span):
    """Reconstruct an f-block on letters i..j from the domain brackets it
    contains: a bracket over the whole span means a dot-free argument,
    otherwise the maximal brackets and loose letters become dot segments."""
    if i == j:
        return ("f", "word", (("a", i),))
    if (i, j) in span:
        return ("f", "word", _word_from_brackets(i, j, _inside(span, i, j)))
    segs = []
    pos = i
    for bl, br_ in _maximal_brackets(span):
        segs.extend(("a", k) for k in range(pos, bl))
        segs.append(_factor_from_brackets(bl, br_, span))
        pos = br_ + 1
    segs.extend(("a", k) for k in range(pos, j + 1))
    return ("f", "dots", tuple(segs))


def phi_inverse(b: Bracketing):
    """Explicit inverse: the chain of brackets holding the last letter
    fixes the block structure; block contents are read back as arguments."""
    n = b.n - 1
    chain = sorted(l for l, r in b.brackets if r == b.n)
    starts = [1] + chain
    ends = [s - 1 for s in chain] + [n]
    inner = {br for br in b.brackets if br[1] <= n}
    blocks = tuple(
        block_from_brackets(i, j, {x for x in inner if i <= x[0] and x[1] <= j})
        for i, j in zip(starts, ends)
    )
    return ("e", blocks)


def _maximal_brackets(brs):
    return sorted(
        (l, r)
        for l, r in brs
        if not any(l2 <= l and r <= r2 for l2, r2 in brs if (l2, r2) != (l, r))
    )


def verify_Phi(n):
    """Painted-tree poset vs expression poset under the node-labeling map."""
    P = build_Jtree(n)
    Q = build_frakJ(n)
    mapping = {
        painted_sexpr(t): expr_text(Phi(t)) for t in enumerate_painted_trees(n)
    }
    got = check_order_iso(P, Q, mapping)
    counts = {"n": n, "trees": len(P), "expressions": len(Q)}
    return Report("Phi_iso", got.passed, counts, witness=got.witness)


def verify_phi(n):
    """Collapsed expression poset vs the bracketing model one letter up."""
    from .associahedron import build_K

    P = build_Jprime(n)
    Q = build_K(n + 1)
    mapping = {
        expr_text(e): phi_map(e).text for e in enumerate_flat_expressions(n)
    }
    got = check_order_iso(P, Q, mapping)
    counts = {"n": n, "flat": len(P), "bracketings": len(Q)}
    return Report("phi_iso", got.passed, counts, witness=got.witness)


# ---------------------------------------------------------------------------
# parsing (CLI surface)

_TOKEN = re.compile(r"f\(|\(|\)|\.|a\d+")


def parse_flat_expression(text):
    """Parse the canonical flat form, e.g. "f(a1.(a2a3))f(a4)"."""
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != text:
        raise ValueError(f"cannot parse {text!r}")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected and tok != expected):
            raise ValueError(f"unexpected token {tok!r} in {text!r}")
        pos += 1
        return tok

    def parse_factor():
        tok = peek()
        if tok == "(":
            take()
            w = []
            while peek() != ")":
                w.append(parse_factor())
            take(")")
            if len(w) < 2:
                raise ValueError("bracket needs at least 2 factors")
            return ("b", tuple(w))
        if tok and tok.startswith("a"):
            return ("a", int(take()[1:]))
        raise ValueError(f"unexpected token {tok!r}")

    def parse_block():
        take("f(")
        segs = [parse_factor()]
        dotted = False
        while peek() == ".":
            take()
            dotted = True
            segs.append(parse_factor())
        if not dotted:
            while peek() not in (")", None):
                segs.append(parse_factor())
        take(")")
        if dotted:
            return ("f", "dots", tuple(segs))
        if len(segs) == 1:
            f = segs[0]
            if f[0] == "b":
                return ("f", "word", f[1])
            return ("f", "word", (f,))
        return ("f", "word", tuple(segs))

    blocks = []
    while peek() is not None:
        blocks.append(parse_block())
    if not blocks:
        raise ValueError("empty expression")
    return ("e", tuple(blocks))
