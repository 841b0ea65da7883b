"""The valuations Psi_P, Phi_P and the Hilbert series of the root and weight cones.

The ``*_direct`` functions sum over linear extensions.  By default they walk
the lattice of order ideals so that extensions share work.  Psi and the root
Hilbert series grow extensions from the bottom: the contribution of all
completions of a prefix depends only on the set placed so far and its last
element.  Phi and the strict Hilbert series peel maximal elements off the
top, where every term depends only on the order ideal that remains.  Passing
``method="extensions"`` instead adds the terms one extension at a time.  Both
produce the same reduced value; the second is kept as a literal oracle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .cones import is_simplicial, root_cone
from .errors import InputError, ShapeError
from .poset import (
    Circuit,
    Notch,
    PlanarEmbedding,
    Poset,
    SkewDiagram,
    VEE,
    bounded_regions,
    biconnected_components,
    circuits,
    close_notch,
    delete_hasse_edges,
    is_forest,
    lattice_paths,
    linear_extensions,
    poset_from_covers,
)
from .symalg import (
    GeomRat,
    LinDenRat,
    Polynomial,
    QRat,
    geom_sum,
    linden_sum,
    total_residue,
)

EXTENSIONS = "extensions"
IDEALS = "ideals"


def _diff(n: int, i: int, j: int) -> Tuple[int, ...]:
    """Coefficient vector of x_i - x_j (1-based labels)."""
    v = [0] * n
    v[i - 1] += 1
    v[j - 1] -= 1
    return tuple(v)


def _indicator(n: int, mask: int) -> Tuple[int, ...]:
    return tuple(1 if mask >> i & 1 else 0 for i in range(1, n + 1))


def _check_method(method: str) -> None:
    if method not in (IDEALS, EXTENSIONS):
        raise InputError(f"unknown summation method {method!r}")


def _sum_over_ideals(P: Poset, step: Callable, one, total: Callable, track_last: bool):
    """Generic recursion F(I, last) = sum over minimal m of P - I of step(I, last, m) * F(I + m, m)."""
    full = P.full_mask
    memo: Dict = {}

    def rec(ideal: int, last: int):
        key = (ideal, last if track_last else 0)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if ideal == full:
            return one
        terms = []
        for m in P.minimal_elements(full & ~ideal):
            sub = rec(ideal | 1 << m, m)
            if sub.is_zero():
                continue
            terms.append(step(ideal, last, m, sub))
        value = total(terms)
        memo[key] = value
        return value

    return rec(0, 0)


# -- Psi and Phi -------------------------------------------------------------


def psi_direct(P: Poset, method: str = IDEALS) -> LinDenRat:
    """Psi_P: sum over extensions w of 1/prod (x_{w_i} - x_{w_{i+1}})."""
    _check_method(method)
    n = P.n
    if method == EXTENSIONS:
        terms = [
            LinDenRat.reciprocal_product([_diff(n, w[k], w[k + 1]) for k in range(n - 1)], n)
            for w in linear_extensions(P)
        ]
        return linden_sum(terms, n)

    def step(ideal, last, m, sub):
        if last == 0:
            return sub
        return sub.divide_by_forms([_diff(n, last, m)])

    return _sum_over_ideals(P, step, LinDenRat.one(n),
                            lambda ts: linden_sum(ts, n), track_last=True)


def phi_direct(P: Poset, method: str = IDEALS) -> LinDenRat:
    """Phi_P: sum over extensions w of 1/prod_k (x_{w_1} + ... + x_{w_k})."""
    _check_method(method)
    n = P.n
    if method == EXTENSIONS:
        terms = []
        for w in linear_extensions(P):
            forms = []
            acc = [0] * n
            for v in w:
                acc[v - 1] = 1
                forms.append(tuple(acc))
            terms.append(LinDenRat.reciprocal_product(forms, n))
        return linden_sum(terms, n)

    # The last prefix of every extension of an ideal I is I itself, so
    # Phi restricted to I equals (1/x_I) * sum over maximal m of Phi of I - m.
    memo: Dict[int, LinDenRat] = {0: LinDenRat.one(n)}

    def rec(ideal: int) -> LinDenRat:
        hit = memo.get(ideal)
        if hit is not None:
            return hit
        terms = [rec(ideal & ~(1 << m)) for m in P.maximal_elements(ideal)]
        value = linden_sum(terms, n).divide_by_forms([_indicator(n, ideal)])
        memo[ideal] = value
        return value

    return rec(P.full_mask)


def phi_forest(P: Poset) -> LinDenRat:
    """1 / prod_i (sum of x_j over j <= i), valid for forests."""
    if not is_forest(P):
        raise ShapeError("phi_forest needs a forest (each element covered at most once)")
    n = P.n
    return LinDenRat.reciprocal_product([_indicator(n, P.below[i]) for i in P.elements], n)


def _cover_forms(P: Poset) -> List[Tuple[int, ...]]:
    return [_diff(P.n, i, j) for i, j in P.covers]


def psi_tree(P: Poset) -> LinDenRat:
    """1 / prod over covers (x_i - x_j) when the Hasse diagram is a spanning tree."""
    if not P.is_connected() or len(P.covers) != P.n - 1:
        raise ShapeError("Hasse diagram is not a spanning tree")
    return LinDenRat.reciprocal_product(_cover_forms(P), P.n)


def _extremes_on(P: Poset, vertices: Sequence[int]) -> Tuple[List[int], List[int]]:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return P.minimal_elements(mask), P.maximal_elements(mask)


def psi_unicyclic(P: Poset) -> LinDenRat:
    """(sum over min(C) of x_i - sum over max(C) of x_j) / prod over covers, for one circuit C."""
    if not P.is_connected():
        raise ShapeError("poset is not connected")
    cs = circuits(P)
    if len(cs) != 1:
        raise ShapeError(f"expected exactly one circuit, found {len(cs)}")
    lows, highs = _extremes_on(P, cs[0].vertices)
    coeffs = [0] * P.n
    for i in lows:
        coeffs[i - 1] += 1
    for j in highs:
        coeffs[j - 1] -= 1
    return LinDenRat.from_factors(Polynomial.linear(coeffs), _cover_forms(P))


def psi_planar(P: Poset, emb: PlanarEmbedding) -> LinDenRat:
    """prod over regions (x_min - x_max) / prod over covers, for a strongly planar P."""
    regions = bounded_regions(P, emb)
    n = P.n
    if not P.is_connected():
        return LinDenRat.zero(n)
    num = Polynomial.constant(n, 1)
    for reg in regions:
        num = num.mul_linear(_diff(n, reg.min, reg.max))
    return LinDenRat.from_factors(num, _cover_forms(P))


def skew_names(D: SkewDiagram) -> List[str]:
    """Variable names x1..xr, y1..yc matching the labels of skew_poset(D)."""
    return [f"x{i}" for i in range(1, D.r + 1)] + [f"y{j}" for j in range(1, D.c + 1)]


def psi_skew_terms(D: SkewDiagram) -> List[LinDenRat]:
    """One term 1/prod_{(i,j) in path} (x_i - y_j) per lattice path."""
    n = D.r + D.c
    return [
        LinDenRat.reciprocal_product([_diff(n, i, D.r + j) for i, j in path], n)
        for path in lattice_paths(D)
    ]


def psi_skew(D: SkewDiagram) -> LinDenRat:
    """Psi of the bipartite poset of D as a sum over lattice paths."""
    return linden_sum(psi_skew_terms(D), D.r + D.c)


# -- biconnected factorization ---------------------------------------------


@dataclass(frozen=True)
class BlockFactor:
    poset: Poset
    labels: Tuple[int, ...]  # original label of each element 1..k of ``poset``
    psi: LinDenRat  # Psi of the block, written in the variables of the whole poset


def factor_biconnected(P: Poset) -> List[BlockFactor]:
    """Psi of each biconnected block, as a poset on the block's vertices."""
    if not P.is_connected():
        raise ShapeError("factorization over blocks needs a connected poset")
    out = []
    if P.n == 1:
        return out
    for block in biconnected_components(P):
        labels = block.vertices
        local = {v: k for k, v in enumerate(labels, start=1)}
        Q = poset_from_covers(len(labels), [(local[i], local[j]) for i, j in block.edges])
        psi = psi_direct(Q).remap({k - 1: v - 1 for k, v in enumerate(labels, start=1)}, P.n)
        out.append(BlockFactor(Q, labels, psi))
    return out


def psi_from_blocks(P: Poset) -> LinDenRat:
    value = LinDenRat.one(P.n)
    for f in factor_biconnected(P):
        value = value * f.psi
    return value


# -- notches -----------------------------------------------------------------


@dataclass(frozen=True)
class NotchComparison:
    closed: Poset
    mapping: Dict[int, int]
    lhs: object
    rhs: object

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def notch_comparison(P: Poset, notch: Notch) -> NotchComparison:
    """Psi of the closed poset against the transformed Psi_P (in the closed poset's variables)."""
    Q, mapping = close_notch(P, notch)
    n = P.n
    a, b, c = notch.a, notch.b, notch.c
    merged = psi_direct(P).substitute_equal(b - 1, c - 1)
    factor = _diff(n, a, b) if notch.shape == VEE else _diff(n, b, a)
    rhs = (merged * Polynomial.linear(factor)).remap({k - 1: v - 1 for k, v in mapping.items()}, Q.n)
    return NotchComparison(Q, mapping, psi_direct(Q), rhs)


def notch_identity_check(P: Poset, notch: Notch) -> bool:
    return notch_comparison(P, notch).holds


def hilb_notch_comparison(P: Poset, notch: Notch) -> NotchComparison:
    """Root-cone Hilbert series analogue: multiply by (1 - X_a/X_b) after X_c := X_b."""
    Q, mapping = close_notch(P, notch)
    n = P.n
    a, b, c = notch.a, notch.b, notch.c
    merged = hilb_root(P).substitute_equal(b - 1, c - 1)
    u = _diff(n, a, b) if notch.shape == VEE else _diff(n, b, a)
    factor = Polynomial(n, {(0,) * n: 1, u: -1})
    rhs = (merged * factor).remap({k - 1: v - 1 for k, v in mapping.items()}, Q.n)
    return NotchComparison(Q, mapping, hilb_root(Q), rhs)


# -- Hilbert series ----------------------------------------------------------


def hilb_root(P: Poset, method: str = IDEALS) -> GeomRat:
    """Sum over extensions w of 1/prod (1 - X_{w_i} X_{w_{i+1}}^{-1})."""
    _check_method(method)
    n = P.n
    if method == EXTENSIONS:
        terms = [GeomRat.reciprocal([_diff(n, w[k], w[k + 1]) for k in range(n - 1)], n)
                 for w in linear_extensions(P)]
        return geom_sum(terms, n)

    def step(ideal, last, m, sub):
        if last == 0:
            return sub
        return sub * GeomRat.reciprocal([_diff(n, last, m)], n)

    return _sum_over_ideals(P, step, GeomRat.one(n),
                            lambda ts: geom_sum(ts, n), track_last=True)


def hilb_strict(P: Poset, method: str = IDEALS) -> GeomRat:
    """Generating function of P-partitions for the labeling of P.

    Sum over extensions w of prod over descents w_i > w_{i+1} of X^{w_1..w_i},
    divided by prod_i (1 - X^{w_1..w_i}).
    """
    _check_method(method)
    n = P.n
    if method == EXTENSIONS:
        terms = []
        for w in linear_extensions(P):
            prefixes = []
            mono = [0] * n
            acc = [0] * n
            for k, v in enumerate(w):
                acc[v - 1] = 1
                prefixes.append(tuple(acc))
                if k + 1 < n and w[k] > w[k + 1]:
                    mono = [x + y for x, y in zip(mono, acc)]
            terms.append(GeomRat.reciprocal(prefixes, n, monomial=mono))
        return geom_sum(terms, n)

    # G(I, m): extensions of the ideal I ending in m.  Their last prefix is I,
    # and a descent before m contributes the monomial X^(I - m).
    memo: Dict[Tuple[int, int], GeomRat] = {}

    def rec(ideal: int, m: int) -> GeomRat:
        key = (ideal, m)
        hit = memo.get(key)
        if hit is not None:
            return hit
        rest = ideal & ~(1 << m)
        if not rest:
            value = GeomRat.reciprocal([_indicator(n, ideal)], n)
        else:
            terms = []
            for l in P.maximal_elements(rest):
                sub = rec(rest, l)
                if l > m:
                    sub = sub * GeomRat.reciprocal([], n, monomial=_indicator(n, rest))
                terms.append(sub)
            value = geom_sum(terms, n) * GeomRat.reciprocal([_indicator(n, ideal)], n)
        memo[key] = value
        return value

    full = P.full_mask
    if not full:
        return GeomRat.one(n)
    return geom_sum([rec(full, m) for m in P.maximal_elements(full)], n)


def natural_relabeling(P: Poset) -> Dict[int, int]:
    """old label -> new label along the lexicographically first linear extension."""
    first = next(linear_extensions(P))
    return {old: new for new, old in enumerate(first, start=1)}


def hilb_wt(P: Poset, method: str = IDEALS) -> GeomRat:
    """Hilbert series of the lattice points of the weight cone."""
    relabel = natural_relabeling(P)
    H = hilb_strict(P.relabel(relabel), method)
    back = {new - 1: old - 1 for old, new in relabel.items()}
    return H.remap(back, P.n)


def hilb_strict_forest(P: Poset) -> GeomRat:
    """prod over descent covers X^{P<=i} / prod_i (1 - X^{P<=i}) for forests."""
    if not is_forest(P):
        raise ShapeError("closed form needs a forest")
    n = P.n
    mono = [0] * n
    for i, j in P.covers:
        if i > j:
            mono = [x + y for x, y in zip(mono, _indicator(n, P.below[i]))]
    return GeomRat.reciprocal([_indicator(n, P.below[i]) for i in P.elements], n, monomial=mono)


# -- hooks and the major index ------------------------------------------------


@dataclass(frozen=True)
class HookData:
    hooks: Dict[int, int]
    descents: Tuple[Tuple[int, int], ...]
    maj: int


def hook_data(P: Poset) -> HookData:
    if not is_forest(P):
        raise ShapeError("hook data is defined for forests only")
    hooks = {i: bin(P.below[i]).count("1") for i in P.elements}
    des = tuple((i, j) for i, j in P.covers if i > j)
    return HookData(hooks, des, sum(hooks[i] for i, _ in des))


def maj(w: Sequence[int]) -> int:
    return sum(k for k in range(1, len(w)) if w[k - 1] > w[k])


def maj_generating_function(P: Poset, method: str = IDEALS) -> Dict[int, int]:
    """Coefficients of sum over extensions of q^maj(w)."""
    _check_method(method)
    if method == EXTENSIONS:
        return dict(sorted(Counter(maj(w) for w in linear_extensions(P)).items()))
    full = P.full_mask
    memo: Dict[Tuple[int, int], Counter] = {}

    def rec(ideal: int, last: int) -> Counter:
        key = (ideal, last)
        if key in memo:
            return memo[key]
        if ideal == full:
            return Counter({0: 1})
        size = bin(ideal).count("1")
        out: Counter = Counter()
        for m in P.minimal_elements(full & ~ideal):
            shift = size if last > m else 0
            for e, c in rec(ideal | 1 << m, m).items():
                out[e + shift] += c
        memo[key] = out
        return out

    return dict(sorted(rec(0, 0).items()))


@dataclass(frozen=True)
class QHookResult:
    direct: Dict[int, int]
    product: Optional[Dict[int, int]]

    @property
    def holds(self) -> bool:
        return self.product is not None and self.direct == self.product


def qhook_check(P: Poset) -> QHookResult:
    """Compare sum_w q^maj(w) with q^maj(P) [n]!_q / prod [h(i)]_q."""
    data = hook_data(P)
    n = P.n
    direct = maj_generating_function(P)
    # [n]!_q / prod [h]_q = prod (1 - q^k) / prod (1 - q^h); the (1 - q) counts agree.
    closed = QRat({data.maj: 1}, Counter(data.hooks.values()))
    cleared = closed.clear(range(1, n + 1))
    product = None
    if cleared is not None:
        product = {e: int(c) for e, c in sorted(cleared.items()) if c}
        if any(c.denominator != 1 for c in cleared.values()):
            product = None
    return QHookResult(direct, product)


# -- circuits, binomials and complete intersections ---------------------------


def _u_name(i: int, j: int, wide: bool) -> str:
    return f"U({i},{j})" if wide else f"U{i}{j}"


@dataclass(frozen=True)
class CircuitBinomial:
    """W(C) - A(C): products of U_ij over the with- and against-edges of C."""

    with_edges: Tuple[Tuple[int, int], ...]
    against_edges: Tuple[Tuple[int, int], ...]

    def degree(self, n: int) -> Tuple[int, ...]:
        """Common degree of both monomials in the root lattice."""
        v = [0] * n
        for i, j in self.with_edges:
            v[i - 1] += 1
            v[j - 1] -= 1
        return tuple(v)

    def render(self) -> str:
        wide = any(max(e) >= 10 for e in self.with_edges + self.against_edges)
        lhs = "*".join(_u_name(i, j, wide) for i, j in sorted(self.with_edges))
        rhs = "*".join(_u_name(i, j, wide) for i, j in sorted(self.against_edges))
        return f"{lhs}-{rhs}"

    def __str__(self) -> str:
        return self.render()


def circuit_binomial(C: Circuit) -> CircuitBinomial:
    return CircuitBinomial(tuple(sorted(C.with_edges)), tuple(sorted(C.against_edges)))


def circuit_binomials(P: Poset) -> List[CircuitBinomial]:
    return [circuit_binomial(C) for C in circuits(P)]


def root_cone_dimension(P: Poset) -> int:
    return P.n - len(P.connected_components())


def hilb_complete_intersection(P: Poset, degrees: Sequence[Sequence[int]]) -> GeomRat:
    """prod_i (1 - X^{delta_i}) / prod over covers (1 - X_i X_j^{-1})."""
    n = P.n
    expected = len(P.covers) - root_cone_dimension(P)
    if len(degrees) != expected:
        raise ShapeError(f"need {expected} relation degrees, got {len(degrees)}")
    num = Polynomial.constant(n, 1)
    for d in degrees:
        d = tuple(int(a) for a in d)
        if len(d) != n:
            raise ShapeError("relation degree has the wrong length")
        num = num * Polynomial(n, {(0,) * n: 1, d: -1})
    den = Counter(_cover_forms(P))
    return GeomRat(num, den)


def unicyclic_relation_degrees(P: Poset) -> List[Tuple[int, ...]]:
    cs = circuits(P)
    if len(cs) != 1:
        raise ShapeError(f"expected exactly one circuit, found {len(cs)}")
    return [circuit_binomial(cs[0]).degree(P.n)]


def planar_relation_degrees(P: Poset, emb: PlanarEmbedding) -> List[Tuple[int, ...]]:
    """e_min - e_max for each bounded region."""
    return [_diff(P.n, r.min, r.max) for r in bounded_regions(P, emb)]


# -- the main transformation --------------------------------------------------


@dataclass(frozen=True)
class MainTransformationResult:
    circuit: Circuit
    terms: Tuple[Tuple[Tuple[Tuple[int, int], ...], LinDenRat], ...]
    total: LinDenRat

    @property
    def holds(self) -> bool:
        return self.total.is_zero()


def main_transformation(P: Poset, circuit: Circuit) -> MainTransformationResult:
    """sum over E within W of (-1)^|E| Psi of P with the edges E removed."""
    if circuit is None:
        raise InputError("no circuit supplied")
    W = circuit.with_edges
    if not set(W) <= set(P.covers):
        raise InputError("circuit edges are not covers of P")
    terms = []
    for k in range(len(W) + 1):
        for E in combinations(W, k):
            value = psi_direct(delete_hasse_edges(P, E))
            terms.append((E, -value if k % 2 else value))
    total = linden_sum([t for _, t in terms], P.n)
    return MainTransformationResult(circuit, tuple(terms), total)


def main_transformation_check(P: Poset, circuit: Optional[Circuit] = None) -> bool:
    """True when the alternating sum vanishes; the first circuit of P by default."""
    if circuit is None:
        cs = circuits(P)
        if not cs:
            raise InputError("poset has no circuit")
        circuit = cs[0]
    return main_transformation(P, circuit).holds


# -- total residue -------------------------------------------------------------


def total_residue_check(P: Poset, cone: str) -> bool:
    """Recover Psi (root) or Phi (wt) from the Hilbert series by total residue."""
    if cone == "root":
        if not P.is_connected():
            raise ShapeError("root cone is full-dimensional only for connected posets")
        return total_residue(hilb_root(P), P.n - 1) == psi_direct(P)
    if cone == "wt":
        return total_residue(hilb_wt(P), P.n) == phi_direct(P)
    raise InputError(f"unknown cone {cone!r}")


def root_cone_flags(P: Poset) -> Tuple[bool, Optional[bool]]:
    return is_simplicial(root_cone(P))
