"""Finite graded posets and abstract polytopal cell complexes.

Elements are opaque string labels; every model module defines its own
canonical labels so that unions and isomorphism searches can identify
shared faces by plain equality.  All values are immutable after
construction and all operations are pure and deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class PosetError(ValueError):
    pass


@dataclass
class Report:
    """Outcome of a verification run.

    Failures are report contents (with a witness), not exceptions.
    """

    name: str
    passed: bool
    counts: dict = field(default_factory=dict)
    witness: object = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return json.dumps(
            {
                "name": self.name,
                "pass": self.passed,
                "counts": self.counts,
                "witness": self.witness,
                "notes": self.notes,
            },
            sort_keys=True,
        )

    def summary(self):
        status = "pass" if self.passed else "FAIL"
        bits = " ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        out = f"{self.name}: {status} {bits}".rstrip()
        if not self.passed and self.witness is not None:
            out += f" witness={self.witness!r}"
        return out


class Poset:
    """Finite poset given by its cover relation; closure is computed lazily.

    ``elements`` is a sorted tuple of labels.  ``covers_above[x]`` lists the
    elements covering x, in label order.
    """

    def __init__(self, elements, covers_above):
        self.elements = tuple(sorted(elements))
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise PosetError("duplicate labels")
        self.covers_above = {
            x: tuple(sorted(covers_above.get(x, ()))) for x in self.elements
        }
        for x, ys in self.covers_above.items():
            for y in ys:
                if y not in self._index:
                    raise PosetError(f"cover target {y!r} is not an element")
        self._up = None  # label -> frozenset of labels strictly above

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    @property
    def up(self):
        """Strict up-sets, computed once from the cover relation."""
        if self._up is None:
            order = _topo_order(self.elements, self.covers_above)
            up = {}
            for x in reversed(order):
                acc = set()
                for y in self.covers_above[x]:
                    acc.add(y)
                    acc |= up[y]
                up[x] = frozenset(acc)
            self._up = up
        return self._up

    def le(self, x, y):
        return x == y or y in self.up[x]

    def covers_below(self):
        below = {x: [] for x in self.elements}
        for x, ys in self.covers_above.items():
            for y in ys:
                below[y].append(x)
        return {x: tuple(sorted(v)) for x, v in below.items()}

    def cover_pairs(self):
        """All (lower, upper) cover pairs in canonical order."""
        return [
            (x, y) for x in self.elements for y in self.covers_above[x]
        ]

    def maximal_elements(self):
        return tuple(x for x in self.elements if not self.covers_above[x])

    def minimal_elements(self):
        below = self.covers_below()
        return tuple(x for x in self.elements if not below[x])


def _topo_order(elements, covers_above):
    """Topological order (low to high); raises with an offending cycle."""
    indeg = {x: 0 for x in elements}
    for x in elements:
        for y in covers_above[x]:
            indeg[y] += 1
    queue = sorted(x for x in elements if indeg[x] == 0)
    order = []
    while queue:
        queue.sort()
        x = queue.pop(0)
        order.append(x)
        for y in covers_above[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(order) != len(elements):
        cycle = _find_cycle(elements, covers_above)
        raise PosetError(f"cycle detected: {cycle}")
    return order


def _find_cycle(elements, covers_above):
    color = {}
    stack = []

    def dfs(x):
        color[x] = 1
        stack.append(x)
        for y in covers_above[x]:
            if color.get(y) == 1:
                return stack[stack.index(y):] + [y]
            if y not in color:
                found = dfs(y)
                if found:
                    return found
        color[x] = 2
        stack.pop()
        return None

    for x in elements:
        if x not in color:
            found = dfs(x)
            if found:
                return found
    return None


def close_order(covers, elements=()):
    """Build a Poset as the reflexive-transitive closure of a cover set.

    Rejects cyclic input with the offending cycle.  The resulting poset's
    cover relation is the transitive reduction of the input.
    """
    labels = set(elements)
    above = {}
    for a, b in covers:
        labels.add(a)
        labels.add(b)
        above.setdefault(a, set()).add(b)
    above = {x: tuple(sorted(above.get(x, ()))) for x in labels}
    _topo_order(sorted(labels), above)
    poset = Poset(labels, above)
    # reduce to true covers: drop (a,b) when some c has a < c < b
    up = poset.up
    reduced = {}
    for x in poset.elements:
        ys = poset.covers_above[x]
        reduced[x] = tuple(
            y for y in ys if not any(y in up[z] for z in ys if z != y)
        )
    return Poset(labels, reduced)


class FacePoset(Poset):
    """Graded poset of faces: rank raises by exactly 1 along covers.

    ``top`` is the greatest element when one exists.  Every minimal element
    must have rank 0 so that maximal chains have well defined length.
    """

    def __init__(self, elements, covers_above, rank, top=None):
        super().__init__(elements, covers_above)
        self.rank = {x: rank[x] for x in self.elements}
        self.top = top
        for x in self.elements:
            if self.rank[x] < 0:
                raise PosetError(f"negative rank at {x!r}")
            for y in self.covers_above[x]:
                if self.rank[y] != self.rank[x] + 1:
                    raise PosetError(
                        f"not graded: cover {x!r} < {y!r} jumps rank "
                        f"{self.rank[x]} -> {self.rank[y]}"
                    )
        for x in self.minimal_elements():
            if self.rank[x] != 0:
                raise PosetError(f"minimal element {x!r} has rank {self.rank[x]}")
        if top is not None:
            maxes = self.maximal_elements()
            if maxes != (top,):
                raise PosetError(f"declared top {top!r} but maxima are {maxes}")

    @classmethod
    def from_order_pairs(cls, pairs, rank, elements=(), top=None):
        """Build from arbitrary strict order pairs (lower, upper)."""
        reduced = close_order(pairs, elements)
        return cls(reduced.elements, reduced.covers_above, rank, top=top)

    def dimension(self):
        return max(self.rank.values()) if self.elements else -1

    def restrict(self, subset, top=None):
        """Induced subposet on a downward-closed subset of elements."""
        subset = set(subset)
        covers = {
            x: tuple(y for y in self.covers_above[x] if y in subset)
            for x in subset
        }
        return FacePoset(subset, covers, self.rank, top=top)


def rank_by_longest_chain(elements, covers_above):
    """Rank each element by its longest chain from below (for generated orders)."""
    below = {x: [] for x in elements}
    for x in elements:
        for y in covers_above[x]:
            below[y].append(x)
    rank = {}
    for x in _topo_order(tuple(elements), covers_above):
        rank[x] = max((rank[b] + 1 for b in below[x]), default=0)
    return rank


class CellComplex:
    """Abstract polytopal cell complex: a graded poset plus its top cells.

    Downward closure is automatic (the poset *is* the complex); top cells
    default to the maximal elements, under which every cell lies.
    """

    def __init__(self, faces: FacePoset, topcells=None):
        self.faces = faces
        if topcells is None:
            topcells = faces.maximal_elements()
        self.topcells = tuple(sorted(topcells))
        covered = set()
        for t in self.topcells:
            if t not in faces:
                raise PosetError(f"top cell {t!r} is not a cell")
            covered.add(t)
        up = faces.up
        for x in faces.elements:
            if x not in covered and not any(t in up[x] for t in self.topcells):
                raise PosetError(f"cell {x!r} lies below no top cell")

    @property
    def elements(self):
        return self.faces.elements

    @property
    def rank(self):
        return self.faces.rank

    def __len__(self):
        return len(self.faces)

    @classmethod
    def empty(cls):
        return cls(FacePoset((), {}, {}), topcells=())


def f_vector(P: FacePoset):
    """Face counts by rank; rejects the empty poset."""
    if not P.elements:
        raise PosetError("f-vector of the empty poset")
    counts = [0] * (P.dimension() + 1)
    for x in P.elements:
        counts[P.rank[x]] += 1
    return tuple(counts)


def boundary_euler_characteristic(P: FacePoset):
    """Alternating f-vector sum excluding the top face."""
    if P.top is None:
        raise PosetError("boundary requires a top face")
    total = 0
    for x in P.elements:
        if x != P.top:
            total += (-1) ** P.rank[x]
    return total


def is_simple(P: FacePoset):
    """True iff every vertex lies below exactly dim(P) facets."""
    if P.top is None:
        raise PosetError("simplicity check requires a top face")
    d = P.rank[P.top]
    facets = {x for x in P.elements if P.rank[x] == d - 1}
    for v in P.elements:
        if P.rank[v] == 0 and v != P.top:
            if sum(1 for f in facets if P.le(v, f)) != d:
                return False
    return True


def check_order_iso(P: FacePoset, Q: FacePoset, mapping):
    """Verify that ``mapping`` is a rank-preserving order-isomorphism P -> Q.

    Both directions of x <= y <=> m(x) <= m(y) are checked.  Failures are
    reported with a witness, never raised.
    """
    m = mapping if callable(mapping) else mapping.__getitem__
    counts = {"P": len(P), "Q": len(Q)}
    images = {}
    seen = {}
    for x in P.elements:
        try:
            y = m(x)
        except KeyError:
            return Report("order_iso", False, counts, witness=("unmapped", x))
        if y not in Q:
            return Report("order_iso", False, counts, witness=("not in Q", x, y))
        if y in seen:
            return Report("order_iso", False, counts, witness=("collision", seen[y], x))
        if P.rank[x] != Q.rank[y]:
            return Report("order_iso", False, counts, witness=("rank", x, y))
        seen[y] = x
        images[x] = y
    if len(images) != len(Q):
        return Report("order_iso", False, counts, witness=("not surjective",))
    upP, upQ = P.up, Q.up
    inv = {v: k for k, v in images.items()}
    for x, y in images.items():
        if {images[z] for z in upP[x]} != set(upQ[y]):
            for z in upP[x]:
                if images[z] not in upQ[y]:
                    # x <= z in P but m(x) !<= m(z) in Q
                    return Report("order_iso", False, counts, witness=("order", x, z))
            for w in upQ[y]:
                if inv[w] not in upP[x]:
                    # m(x) <= w in Q but x !<= inverse(w) in P
                    return Report("order_iso", False, counts, witness=("order", x, inv[w]))
    return Report("order_iso", True, counts)


def _refine_colors(P: FacePoset):
    """Weisfeiler-Leman color refinement on the Hasse diagram."""
    below = P.covers_below()
    color = {x: (P.rank[x], len(P.covers_above[x]), len(below[x])) for x in P.elements}
    while True:
        sig = {
            x: (
                color[x],
                tuple(sorted(color[y] for y in P.covers_above[x])),
                tuple(sorted(color[y] for y in below[x])),
            )
            for x in P.elements
        }
        # canonical renaming so colors are comparable across posets
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {x: palette[sig[x]] for x in P.elements}
        if len(set(new.values())) == len(set(color.values())):
            return new
        color = new


def search_iso(P: FacePoset, Q: FacePoset, anchors=None):
    """Find a rank-preserving order-isomorphism P -> Q extending ``anchors``.

    Returns the mapping dict, or None.  Deterministic: candidates are tried
    in label order and the next element is chosen by fewest candidates.
    Completeness over cleverness - instances stay in the low thousands of
    cells - but a WL refinement pass prunes the candidate classes first.
    """
    anchors = dict(anchors or {})
    if len(P) != len(Q):
        return None
    colP, colQ = _refine_colors(P), _refine_colors(Q)
    byQ = {}
    for y in Q.elements:
        byQ.setdefault(colQ[y], []).append(y)
    candidates = {}
    for x in P.elements:
        candidates[x] = sorted(byQ.get(colP[x], []))
        if not candidates[x]:
            return None
    for x, y in anchors.items():
        if x not in P or y not in Q or P.rank[x] != Q.rank[y]:
            return None
        if y not in candidates[x]:
            return None
        candidates[x] = [y]
    if len(set(anchors.values())) != len(anchors):
        return None

    upP, upQ = P.up, Q.up
    mapped = dict(anchors)
    used = set(anchors.values())

    def consistent(x, y):
        ux, uy = upP[x], upQ[y]
        for a, b in mapped.items():
            if (a in ux) != (b in uy):
                return False
            if (x in upP[a]) != (y in upQ[b]):
                return False
        return True

    order = [x for x in P.elements if x not in mapped]

    def solve():
        if not order:
            return True
        # most-constrained element first, ties by label
        best_i, best_opts = None, None
        for i, x in enumerate(order):
            opts = [y for y in candidates[x] if y not in used and consistent(x, y)]
            if best_opts is None or len(opts) < len(best_opts):
                best_i, best_opts = i, opts
                if not opts:
                    return False
                if len(opts) == 1:
                    break
        x = order.pop(best_i)
        for y in best_opts:
            mapped[x] = y
            used.add(y)
            if solve():
                return True
            del mapped[x]
            used.discard(y)
        order.insert(best_i, x)
        return False

    if not solve():
        return None
    return mapped


def boundary_subcomplex(C: CellComplex):
    """Downward closure of the facets lying in exactly one top cell.

    Requires a pure ball-like complex (all top cells of one rank d); for
    d = 0 the boundary is empty.
    """
    if not C.elements:
        return CellComplex.empty()
    ranks = {C.rank[t] for t in C.topcells}
    if len(ranks) != 1:
        raise PosetError(f"mixed top-cell ranks {sorted(ranks)}")
    d = ranks.pop()
    up = C.faces.up
    free = [
        x
        for x in C.elements
        if C.rank[x] == d - 1 and sum(1 for t in C.topcells if t in up[x]) == 1
    ]
    keep = set(free)
    for x in C.elements:
        if any(f in up[x] or f == x for f in free):
            keep.add(x)
    if not keep:
        return CellComplex.empty()
    return CellComplex(C.faces.restrict(keep), topcells=tuple(sorted(free)))


APEX = "[apex]"
CONE_TOP = "[top]"


def cone_label(cell):
    return f"[apex|{cell}]"


def cone_complex(C: CellComplex):
    """Cone over a ball-like complex.

    Adds an apex vertex, a cone cell over every boundary cell, and one top
    cell; the cone over the empty complex is a point (C(empty) = {*}).
    """
    if not C.elements:
        faces = FacePoset((APEX,), {APEX: ()}, {APEX: 0})
        return CellComplex(faces, topcells=(APEX,))
    bd = boundary_subcomplex(C)
    d = C.rank[C.topcells[0]]
    elements = list(C.elements) + [APEX, CONE_TOP]
    rank = dict(C.rank)
    rank[APEX] = 0
    rank[CONE_TOP] = d + 1
    covers = {x: set(C.faces.covers_above[x]) for x in C.elements}
    covers[APEX] = set()
    covers[CONE_TOP] = set()
    for g in bd.elements:
        cg = cone_label(g)
        elements.append(cg)
        rank[cg] = bd.rank[g] + 1
        covers[cg] = set()
        covers[g].add(cg)
        for h in bd.faces.covers_above[g]:
            covers[cg].add(cone_label(h))
        if bd.rank[g] == 0:
            covers[APEX].add(cg)
    # everything maximal so far lies under the new top cell
    for x in elements:
        if x != CONE_TOP and not covers[x]:
            covers[x].add(CONE_TOP)
    faces = FacePoset(elements, {x: tuple(sorted(v)) for x, v in covers.items()}, rank)
    return CellComplex(faces, topcells=(CONE_TOP,))


def product_label(a, b):
    return f"{a}|{b}"


def product_complex(C: CellComplex, D: CellComplex):
    """Cell-wise product: pairs with componentwise order and additive rank."""
    if not C.elements or not D.elements:
        return CellComplex.empty()
    elements = []
    rank = {}
    covers = {}
    for a in C.elements:
        for b in D.elements:
            ab = product_label(a, b)
            elements.append(ab)
            rank[ab] = C.rank[a] + D.rank[b]
            ups = {product_label(a2, b) for a2 in C.faces.covers_above[a]}
            ups |= {product_label(a, b2) for b2 in D.faces.covers_above[b]}
            covers[ab] = tuple(sorted(ups))
    tops = tuple(
        sorted(product_label(a, b) for a in C.topcells for b in D.topcells)
    )
    return CellComplex(FacePoset(elements, covers, rank), topcells=tops)


def union_complex(C: CellComplex, D: CellComplex):
    """Label-wise union; shared cells must carry identical ranks."""
    if not C.elements:
        return D
    if not D.elements:
        return C
    for x in set(C.elements) & set(D.elements):
        if C.rank[x] != D.rank[x]:
            raise PosetError(f"rank clash at shared cell {x!r}")
    rank = dict(D.rank)
    rank.update(C.rank)
    pairs = C.faces.cover_pairs() + D.faces.cover_pairs()
    faces = FacePoset.from_order_pairs(pairs, rank, elements=rank)
    return CellComplex(faces)


def complex_of(P: FacePoset):
    """View a face poset with a top face as a one-top-cell complex."""
    return CellComplex(P, topcells=(P.top,) if P.top else None)


def poset_to_json(P: FacePoset):
    return json.dumps(
        {
            "elements": [{"id": x, "rank": P.rank[x]} for x in P.elements],
            "covers": [[a, b] for a, b in P.cover_pairs()],
        },
        sort_keys=True,
    )


def poset_from_json(text):
    data = json.loads(text)
    rank = {e["id"]: e["rank"] for e in data["elements"]}
    covers = {}
    for a, b in data["covers"]:
        covers.setdefault(a, []).append(b)
    covers = {x: tuple(sorted(v)) for x, v in covers.items()}
    maxima = [x for x in rank if not covers.get(x)]
    top = maxima[0] if len(maxima) == 1 else None
    return FacePoset(rank, covers, rank, top=top)


def to_dot(P: FacePoset, name="poset"):
    """DOT digraph of the Hasse diagram, same-rank elements clustered."""
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    by_rank = {}
    for x in P.elements:
        by_rank.setdefault(P.rank[x], []).append(x)
    for r in sorted(by_rank):
        lines.append("  { rank = same;")
        for x in sorted(by_rank[r]):
            lines.append(f'    "{x}";')
        lines.append("  }")
    for a, b in P.cover_pairs():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
