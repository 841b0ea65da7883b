"""Finite posets on {1, ..., n} and the surgeries performed on them.

A :class:`Poset` is determined by its cover relations.  The full order is
cached as one bitmask per element (bit ``j`` of ``below[i]`` is set when
``j <= i``), which keeps ideal enumeration and comparability tests cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    CycleError,
    DisconnectedError,
    EmbeddingError,
    InputError,
    NotchError,
    NotStronglyPlanarError,
    ShapeError,
)

Edge = Tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> List[int]:
    return list(_bits(mask))


class Poset:
    """A partial order on 1..n given by its Hasse diagram.

    Instances are immutable.  Use :func:`poset_from_covers` to build one
    from arbitrary (possibly redundant) relations.
    """

    __slots__ = ("n", "covers", "below", "above", "redundant_edges", "_upper", "_lower")

    def __init__(self, n: int, covers: Iterable[Edge], below: Sequence[int], above: Sequence[int],
                 redundant_edges: Tuple[Edge, ...] = ()):
        self.n = n
        self.covers: Tuple[Edge, ...] = tuple(sorted(covers))
        self.below = tuple(below)
        self.above = tuple(above)
        self.redundant_edges = tuple(redundant_edges)
        upper: List[List[int]] = [[] for _ in range(n + 1)]
        lower: List[List[int]] = [[] for _ in range(n + 1)]
        for i, j in self.covers:
            upper[i].append(j)
            lower[j].append(i)
        self._upper = tuple(tuple(u) for u in upper)
        self._lower = tuple(tuple(v) for v in lower)

    # -- basic queries ----------------------------------------------------

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def is_cover(self, i: int, j: int) -> bool:
        return j in self._upper[i]

    def upper_covers(self, i: int) -> Tuple[int, ...]:
        return self._upper[i]

    def lower_covers(self, i: int) -> Tuple[int, ...]:
        return self._lower[i]

    def down_set(self, i: int) -> FrozenSet[int]:
        """The principal ideal P_{<=i}."""
        return frozenset(_bits(self.below[i]))

    def up_set(self, i: int) -> FrozenSet[int]:
        return frozenset(_bits(self.above[i]))

    def minimal_elements(self, within: Optional[int] = None) -> List[int]:
        """Minimal elements of the subposet on the bitmask ``within`` (default: all)."""
        if within is None:
            within = self.full_mask
        return [i for i in _bits(within) if not (self.below[i] & within) & ~(1 << i)]

    def maximal_elements(self, within: Optional[int] = None) -> List[int]:
        if within is None:
            within = self.full_mask
        return [i for i in _bits(within) if not (self.above[i] & within) & ~(1 << i)]

    def relations(self) -> List[Edge]:
        """All strict relations i < j, sorted."""
        return [(i, j) for j in self.elements for i in _bits(self.below[j]) if i != j]

    def incomparable_pairs(self) -> List[Edge]:
        return [(i, j) for i, j in combinations(self.elements, 2) if not self.comparable(i, j)]

    def is_naturally_labeled(self) -> bool:
        return all(i < j for i, j in self.covers)

    # -- graph structure --------------------------------------------------

    def hasse_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.covers)
        return g

    def connected_components(self) -> List[List[int]]:
        comps = [sorted(c) for c in nx.connected_components(self.hasse_graph())]
        return sorted(comps)

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.connected_components()) == 1

    # -- derived posets ---------------------------------------------------

    def induced(self, subset: Iterable[int]) -> Tuple["Poset", Dict[int, int]]:
        """Subposet on ``subset`` relabeled 1..k in increasing label order.

        Returns the poset and the map from old labels to new ones.
        """
        keep = sorted(set(subset))
        mapping = {old: new for new, old in enumerate(keep, start=1)}
        rels = [(mapping[i], mapping[j]) for i, j in self.relations() if i in mapping and j in mapping]
        return poset_from_covers(len(keep), rels), mapping

    def dual(self) -> "Poset":
        return Poset(self.n, [(j, i) for i, j in self.covers], self.above, self.below)

    def relabel(self, perm: Dict[int, int]) -> "Poset":
        """Apply the bijection old label -> new label."""
        return poset_from_covers(self.n, [(perm[i], perm[j]) for i, j in self.covers])

    def with_relation(self, i: int, j: int) -> "Poset":
        """The poset P_{i<j} generated by P together with i < j."""
        return poset_from_covers(self.n, list(self.covers) + [(i, j)])

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.n, self.covers))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={list(self.covers)})"


def poset_from_covers(n: int, edges: Iterable[Sequence[int]]) -> Poset:
    """Build a poset on 1..n from relations i < j.

    Edges implied by transitivity are dropped and listed in
    ``redundant_edges``.  A directed cycle raises CycleError.
    """
    if n < 0:
        raise InputError("element count must be nonnegative")
    edge_set = set()
    for e in edges:
        i, j = int(e[0]), int(e[1])
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"relation ({i},{j}) uses a label outside 1..{n}")
        if i == j:
            raise CycleError(f"relation ({i},{i}) is a loop")
        edge_set.add((i, j))
    succ: List[List[int]] = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for i, j in edge_set:
        succ[i].append(j)
        indeg[j] += 1
    order = [i for i in range(1, n + 1) if indeg[i] == 0]
    k = 0
    while k < len(order):
        i = order[k]
        k += 1
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
    if len(order) != n:
        raise CycleError("relations contain a directed cycle")
    below = [0] * (n + 1)
    for i in order:
        below[i] |= 1 << i
        for j in succ[i]:
            below[j] |= below[i]
    above = [0] * (n + 1)
    for j in range(1, n + 1):
        for i in _bits(below[j]):
            above[i] |= 1 << j
    covers = []
    redundant = []
    for i, j in sorted(edge_set):
        # (i, j) is a cover iff nothing lies strictly between
        between = below[j] & above[i] & ~(1 << i) & ~(1 << j)
        if between:
            redundant.append((i, j))
        else:
            covers.append((i, j))
    return Poset(n, covers, below, above, tuple(redundant))


def chain(n: int) -> Poset:
    return poset_from_covers(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> Poset:
    return poset_from_covers(n, [])


# -- linear extensions and ideals --------------------------------------------


def linear_extensions(P: Poset) -> Iterator[Tuple[int, ...]]:
    """All linear extensions in lexicographic order, by backtracking."""
    n = P.n
    word: List[int] = []
    below = P.below

    def rec(placed: int) -> Iterator[Tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for m in range(1, n + 1):
            bit = 1 << m
            if placed & bit:
                continue
            if (below[m] & ~bit) & ~placed:
                continue
            word.append(m)
            yield from rec(placed | bit)
            word.pop()

    yield from rec(0)


def count_linear_extensions(P: Poset) -> int:
    """|L(P)| by recursion over order ideals (removing minimal elements)."""
    memo: Dict[int, int] = {}
    full = P.full_mask

    def rec(ideal: int) -> int:
        if ideal == full:
            return 1
        hit = memo.get(ideal)
        if hit is not None:
            return hit
        total = sum(rec(ideal | 1 << m) for m in P.minimal_elements(full & ~ideal))
        memo[ideal] = total
        return total

    return rec(0)


def order_ideals(P: Poset) -> List[int]:
    """All order ideals (including the empty one) as bitmasks."""
    seen = {0}
    frontier = [0]
    full = P.full_mask
    while frontier:
        nxt = []
        for ideal in frontier:
            for m in P.minimal_elements(full & ~ideal):
                bigger = ideal | 1 << m
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen)


def _mask_connected(P: Poset, mask: int) -> bool:
    elems = elements_of(mask)
    if not elems:
        return False
    seen = 1 << elems[0]
    stack = [elems[0]]
    while stack:
        v = stack.pop()
        for w in P.upper_covers(v) + P.lower_covers(v):
            b = 1 << w
            if mask & b and not seen & b:
                seen |= b
                stack.append(w)
    return seen == mask


def connected_order_ideals(P: Poset) -> List[Tuple[int, ...]]:
    """Nonempty order ideals whose induced Hasse diagram is connected.

    Sorted by size, then lexicographically.
    """
    out = [tuple(elements_of(m)) for m in order_ideals(P) if m and _mask_connected(P, m)]
    return sorted(out, key=lambda s: (len(s), s))


def is_forest(P: Poset) -> bool:
    """Each element is covered by at most one element."""
    return all(len(P.upper_covers(i)) <= 1 for i in P.elements)


def has_acyclic_hasse(P: Poset) -> bool:
    return nx.is_forest(P.hasse_graph())


# -- blocks and circuits -----------------------------------------------------


@dataclass(frozen=True)
class Block:
    """A biconnected component of the Hasse diagram."""

    edges: Tuple[Edge, ...]
    vertices: Tuple[int, ...]


def biconnected_components(P: Poset) -> List[Block]:
    """2-connectivity blocks of the Hasse diagram, ordered by smallest edge."""
    blocks = []
    for comp in nx.biconnected_component_edges(P.hasse_graph()):
        edges = tuple(sorted((i, j) if P.is_cover(i, j) else (j, i) for i, j in comp))
        verts = tuple(sorted({v for e in edges for v in e}))
        blocks.append(Block(edges, verts))
    return sorted(blocks, key=lambda b: b.edges)


@dataclass(frozen=True)
class Circuit:
    """A simple cycle of the Hasse diagram with a chosen orientation.

    ``vertices`` lists the cycle starting at its lowest label, continuing
    toward the smaller of the two neighbours.  ``edges`` holds each cover
    (i, j) with a flag that is True when the walk traverses it upward.
    """

    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[Edge, bool], ...]

    @property
    def with_edges(self) -> Tuple[Edge, ...]:
        return tuple(e for e, up in self.edges if up)

    @property
    def against_edges(self) -> Tuple[Edge, ...]:
        return tuple(e for e, up in self.edges if not up)

    def reversed(self) -> "Circuit":
        """The opposite orientation, starting from the same vertex."""
        vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        edges = tuple((e, not up) for e, up in reversed(self.edges))
        return Circuit(vs, edges)


def _circuit_from_walk(vs: Sequence[int], P: Poset) -> Circuit:
    edges = []
    k = len(vs)
    for t in range(k):
        u, v = vs[t], vs[(t + 1) % k]
        up = P.is_cover(u, v)
        edges.append(((u, v) if up else (v, u), up))
    return Circuit(tuple(vs), tuple(edges))


def circuits(P: Poset) -> List[Circuit]:
    """All simple cycles of the Hasse diagram, each once, canonically oriented."""
    out = []
    for cyc in nx.simple_cycles(P.hasse_graph()):
        if len(cyc) < 3:
            continue
        k = cyc.index(min(cyc))
        vs = cyc[k:] + cyc[:k]
        if vs[1] > vs[-1]:
            vs = [vs[0]] + vs[1:][::-1]
        out.append(_circuit_from_walk(vs, P))
    return sorted(out, key=lambda c: (len(c.vertices), c.vertices))


def oriented_circuit(P: Poset, vertices: Sequence[int]) -> Circuit:
    """Circuit object for an explicit closed walk (either orientation)."""
    vs = list(vertices)
    for t in range(len(vs)):
        u, v = vs[t], vs[(t + 1) % len(vs)]
        if not (P.is_cover(u, v) or P.is_cover(v, u)):
            raise InputError(f"{u} and {v} are not joined by a Hasse edge")
    return _circuit_from_walk(vs, P)


# -- notches ----------------------------------------------------------------

VEE = "vee"
WEDGE = "wedge"


@dataclass(frozen=True)
class Notch:
    """a covered by b and c (vee), or a covering b and c (wedge); b < c."""

    a: int
    b: int
    c: int
    shape: str = VEE


def _separated(P: Poset, remove_mask: int, b: int, c: int) -> bool:
    """Are b and c in different components of the comparability graph of P minus the mask?"""
    keep = P.full_mask & ~remove_mask
    seen = 1 << b
    stack = [b]
    while stack:
        v = stack.pop()
        nbrs = (P.below[v] | P.above[v]) & keep & ~seen
        for w in _bits(nbrs):
            if w == c:
                return False
            seen |= 1 << w
            stack.append(w)
    return True


def is_valid_notch(P: Poset, notch: Notch) -> bool:
    a, b, c = notch.a, notch.b, notch.c
    if b == c or not all(1 <= v <= P.n for v in (a, b, c)):
        return False
    if notch.shape == VEE:
        if not (P.is_cover(a, b) and P.is_cover(a, c)):
            return False
        return _separated(P, P.below[a], b, c)
    if notch.shape == WEDGE:
        if not (P.is_cover(b, a) and P.is_cover(c, a)):
            return False
        return _separated(P, P.above[a], b, c)
    return False


def find_notches(P: Poset) -> List[Notch]:
    """All vee- and wedge-notches of P, vee first, each with b < c."""
    out = []
    for shape, nbrs in ((VEE, P.upper_covers), (WEDGE, P.lower_covers)):
        for a in P.elements:
            for b, c in combinations(sorted(nbrs(a)), 2):
                nt = Notch(a, b, c, shape)
                if is_valid_notch(P, nt):
                    out.append(nt)
    return out


def close_notch(P: Poset, notch: Notch) -> Tuple[Poset, Dict[int, int]]:
    """Identify b with c.

    The merged class keeps the label min(b, c) and the labels are compacted
    to 1..n-1.  Returns the quotient and the map old label -> new label.
    """
    if not is_valid_notch(P, notch):
        raise NotchError(f"{notch} is not a notch of {P}")
    keep, gone = min(notch.b, notch.c), max(notch.b, notch.c)
    mapping = {}
    for i in P.elements:
        src = keep if i == gone else i
        mapping[i] = src - (1 if src > gone else 0)
    edges = {(mapping[i], mapping[j]) for i, j in P.covers}
    try:
        quotient = poset_from_covers(P.n - 1, edges)
    except CycleError as exc:
        raise NotchError(f"closing {notch} creates a cycle") from exc
    return quotient, mapping


def delete_hasse_edges(P: Poset, edges: Iterable[Edge]) -> Poset:
    """Poset generated by the cover relations not in ``edges``."""
    drop = {tuple(e) for e in edges}
    missing = drop.difference(P.covers)
    if missing:
        raise InputError(f"not cover relations of P: {sorted(missing)}")
    return poset_from_covers(P.n, [e for e in P.covers if e not in drop])


# -- permutations -----------------------------------------------------------


def _check_permutation(w: Sequence[int]) -> Tuple[int, ...]:
    w = tuple(int(v) for v in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InputError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def poset_from_permutation(w: Sequence[int]) -> Poset:
    """i < j in P exactly when i < j as integers and i precedes j in w."""
    w = _check_permutation(w)
    pos = {v: k for k, v in enumerate(w)}
    n = len(w)
    rels = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[i] < pos[j]]
    return poset_from_covers(n, rels)


def is_132_avoiding(w: Sequence[int]) -> bool:
    """No positions p < q < r with w(p) < w(r) < w(q)."""
    w = _check_permutation(w)
    n = len(w)
    # For each middle position q, compare against the smallest value to its left.
    low = float("inf")
    for q in range(n):
        if low < w[q]:
            for r in range(q + 1, n):
                if low < w[r] < w[q]:
                    return False
        low = min(low, w[q])
    return True


# -- skew diagrams ----------------------------------------------------------


class SkewDiagram:
    """The cells of lambda/mu, rows numbered top to bottom and columns right to left."""

    __slots__ = ("lam", "mu", "r", "c", "cells")

    def __init__(self, lam: Sequence[int], mu: Sequence[int] = ()):
        lam = tuple(int(v) for v in lam)
        mu = tuple(int(v) for v in mu)
        if not lam or any(v <= 0 for v in lam):
            raise ShapeError("lambda must be a nonempty sequence of positive integers")
        if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
            raise ShapeError("lambda must be weakly decreasing")
        if len(mu) > len(lam):
            raise ShapeError("mu has more parts than lambda")
        mu = mu + (0,) * (len(lam) - len(mu))
        if any(v < 0 for v in mu) or any(mu[k] < mu[k + 1] for k in range(len(mu) - 1)):
            raise ShapeError("mu must be weakly decreasing and nonnegative")
        if any(m > l for m, l in zip(mu, lam)):
            raise ShapeError("mu is not contained in lambda")
        self.lam, self.mu = lam, mu
        self.r = len(lam)
        self.c = lam[0] - mu[-1]
        cells = set()
        for i, (l, m) in enumerate(zip(lam, mu), start=1):
            for k in range(m + 1, l + 1):
                cells.add((i, lam[0] + 1 - k))
        if not cells:
            raise ShapeError("the skew diagram has no cells")
        self.cells: FrozenSet[Tuple[int, int]] = frozenset(cells)

    def __repr__(self) -> str:
        return f"SkewDiagram({list(self.lam)}, {list(self.mu)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewDiagram):
            return NotImplemented
        return (self.lam, self.mu) == (other.lam, other.mu)

    def __hash__(self) -> int:
        return hash((self.lam, self.mu))


def skew_poset(D: SkewDiagram) -> Poset:
    """Bipartite poset with x_i (label i) below y_j (label r + j) for each cell (i, j)."""
    return poset_from_covers(D.r + D.c, [(i, D.r + j) for i, j in sorted(D.cells)])


def lattice_paths(D: SkewDiagram) -> List[Tuple[Tuple[int, int], ...]]:
    """Monotone south/west paths through cells from (1, 1) to (r, c)."""
    if not skew_poset(D).is_connected():
        raise DisconnectedError(f"{D} is not connected")
    target = (D.r, D.c)
    out: List[Tuple[Tuple[int, int], ...]] = []
    path = [(1, 1)]

    def rec() -> None:
        i, j = path[-1]
        if (i, j) == target:
            out.append(tuple(path))
            return
        for step in ((i, j + 1), (i + 1, j)):
            if step in D.cells:
                path.append(step)
                rec()
                path.pop()

    if (1, 1) in D.cells:
        rec()
    return sorted(out)


# -- planar embeddings ------------------------------------------------------


def extended_hasse_neighbors(P: Poset) -> Dict[int, List[int]]:
    """Hasse neighbours in P with a bottom 0 and a top n+1 adjoined."""
    top = P.n + 1
    nbrs: Dict[int, List[int]] = {v: [] for v in range(top + 1)}
    for i, j in P.covers:
        nbrs[i].append(j)
        nbrs[j].append(i)
    for m in P.minimal_elements():
        nbrs[0].append(m)
        nbrs[m].append(0)
    for m in P.maximal_elements():
        nbrs[top].append(m)
        nbrs[m].append(top)
    if P.n == 0:
        nbrs[0].append(top)
        nbrs[top].append(0)
    return nbrs


@dataclass(frozen=True)
class PlanarEmbedding:
    """Clockwise neighbour order around each vertex of P with 0 and n+1 adjoined."""

    rotation: Dict[int, Tuple[int, ...]] = field(hash=False)

    def faces(self) -> List[Tuple[int, ...]]:
        """Vertex sequences of the faces of the rotation system."""
        succ = {}
        for v, order in self.rotation.items():
            k = len(order)
            for t, u in enumerate(order):
                succ[(v, u)] = order[(t + 1) % k]
        unused = set()
        for v, order in self.rotation.items():
            for u in order:
                unused.add((u, v))
        out = []
        while unused:
            start = min(unused)
            face = []
            dart = start
            while True:
                unused.discard(dart)
                u, v = dart
                face.append(u)
                dart = (v, succ[(v, u)])
                if dart == start:
                    break
            out.append(tuple(face))
        return out


def validate_embedding(P: Poset, emb: PlanarEmbedding) -> List[Tuple[int, ...]]:
    """Check the rotation against the Hasse diagram and Euler's formula; return faces."""
    nbrs = extended_hasse_neighbors(P)
    if set(emb.rotation) != set(nbrs):
        raise EmbeddingError(f"embedding must list exactly the vertices 0..{P.n + 1}")
    for v, order in emb.rotation.items():
        if len(order) != len(set(order)) or set(order) != set(nbrs[v]):
            raise EmbeddingError(f"rotation at {v} is {list(order)}, expected the neighbours {sorted(nbrs[v])}")
    faces = emb.faces()
    V = len(nbrs)
    E = sum(len(v) for v in nbrs.values()) // 2
    if V - E + len(faces) != 2:
        raise EmbeddingError(f"rotation system has genus > 0 (V - E + F = {V - E + len(faces)})")
    return faces


@dataclass(frozen=True)
class Region:
    """A bounded face: its minimum, maximum and the two boundary chains between them."""

    min: int
    max: int
    left: Tuple[int, ...]
    right: Tuple[int, ...]


def _is_cover_chain(P: Poset, seq: Sequence[int]) -> bool:
    return all(P.is_cover(seq[t], seq[t + 1]) for t in range(len(seq) - 1))


def _is_above(P: Poset, v: int, u: int) -> bool:
    """Is the neighbour u above v in P with bottom 0 and top n+1 adjoined?"""
    top = P.n + 1
    if v == 0 or u == top:
        return True
    if v == top or u == 0:
        return False
    return P.lt(v, u)


def bounded_regions(P: Poset, emb: PlanarEmbedding) -> List[Region]:
    """Faces of the embedding that avoid the adjoined bottom and top.

    The rotation must be upward (neighbours above each vertex consecutive)
    with bottom and top on a common face, and each region must be bounded
    by two cover chains sharing their endpoints.
    """
    faces = validate_embedding(P, emb)
    top = P.n + 1
    for v, order in emb.rotation.items():
        ups = [_is_above(P, v, u) for u in order]
        switches = sum(1 for t in range(len(ups)) if ups[t] != ups[t - 1])
        if switches > 2:
            raise NotStronglyPlanarError(f"neighbours above {v} are not consecutive in its rotation")
    if not any(0 in face and top in face for face in faces):
        raise NotStronglyPlanarError("the adjoined bottom and top do not share a face")
    regions = []
    for face in faces:
        if 0 in face or top in face:
            continue
        if len(set(face)) != len(face):
            raise NotStronglyPlanarError(f"face {face} has a repeated vertex")
        mask = mask_of(face)
        lows = P.minimal_elements(mask)
        highs = P.maximal_elements(mask)
        if len(lows) != 1 or len(highs) != 1:
            raise NotStronglyPlanarError(f"face {face} does not have a unique minimum and maximum")
        lo, hi = lows[0], highs[0]
        k = face.index(lo)
        cyc = face[k:] + face[:k]
        h = cyc.index(hi)
        one = cyc[: h + 1]
        two = (lo,) + tuple(reversed(cyc[h:]))
        if not (_is_cover_chain(P, one) and _is_cover_chain(P, two)):
            raise NotStronglyPlanarError(f"face {face} is not bounded by two upward cover chains")
        left, right = sorted((one, two))
        regions.append(Region(lo, hi, left, right))
    return sorted(regions, key=lambda r: (r.min, r.max, r.left))
