"""Root and weight cones of posets, lattice indices and exact cone membership.

Vectors are stored in ambient coordinates of R^n.  The root lattice is
spanned by e_i - e_{i+1}; :func:`root_coordinates` converts a vector of the
hyperplane sum(v) = 0 into that basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import CyclicityError, DependenceError, InputError, ShapeError
from .poset import Poset, connected_order_ideals, order_ideals, elements_of
from .symalg import LinDenRat, Polynomial

Vector = Tuple[int, ...]

ROOT = "root"
WT = "wt"
LATTICES = (ROOT, WT)


def root_coordinates(v: Sequence[int]) -> Vector:
    """Coordinates of v (with sum 0) in the basis e_1 - e_2, ..., e_{n-1} - e_n."""
    if sum(v) != 0:
        raise InputError(f"{tuple(v)} does not lie in the root hyperplane")
    out = []
    acc = 0
    for a in v[:-1]:
        acc += a
        out.append(acc)
    return tuple(out)


def from_root_coordinates(c: Sequence[int]) -> Vector:
    """Inverse of :func:`root_coordinates`."""
    if not c:
        return (0,)
    v = [c[0]] + [c[k] - c[k - 1] for k in range(1, len(c))] + [-c[-1]]
    return tuple(v)


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    rows = [[Fraction(a) for a in v] for v in vectors]
    if not rows:
        return 0
    r = 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for k in range(r + 1, len(rows)):
            if rows[k][col]:
                f = rows[k][col] / rows[r][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def lattice_index(vectors: Sequence[Sequence[int]], lattice: str = WT) -> int:
    """Index of the lattice spanned by independent integer vectors in its saturation.

    The vectors are given in the coordinates of the lattice named by
    ``lattice``.  Integer column operations bring the matrix with these
    rows to the shape [L | 0] with L lower triangular; the index is |det L|.
    A result of 1 means the vectors form a unimodular (lattice) basis.
    """
    if lattice not in LATTICES:
        raise InputError(f"unknown lattice {lattice!r}")
    rows = [list(int(a) for a in v) for v in vectors]
    if not rows:
        return 1
    m = len(rows[0])
    if any(len(r) != m for r in rows):
        raise InputError("vectors have different lengths")
    if len(rows) > m:
        raise DependenceError("more vectors than the ambient dimension")
    det = 1
    for r in range(len(rows)):
        # Euclid on columns r..m-1 restricted to row r.
        while True:
            nz = [c for c in range(r, m) if rows[r][c]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda c: abs(rows[r][c]))
            for c in nz:
                if c == piv:
                    continue
                q = rows[r][c] // rows[r][piv]
                for row in rows:
                    row[c] -= q * row[piv]
        nz = [c for c in range(r, m) if rows[r][c]]
        if not nz:
            raise DependenceError("vectors are linearly dependent")
        c = nz[0]
        if c != r:
            for row in rows:
                row[r], row[c] = row[c], row[r]
        det *= rows[r][r]
    return abs(det)


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone R_+{generators} in R^dim.

    ``rays`` is the minimal generating subset, supplied by the poset
    structure theory rather than computed by convex-hull methods.
    """

    dim: int
    lattice: str
    generators: Tuple[Vector, ...]
    rays: Tuple[Vector, ...]

    def lattice_vectors(self, vectors: Optional[Sequence[Vector]] = None) -> List[Vector]:
        """Vectors (default: rays) in the coordinates of the tagged lattice."""
        vectors = self.rays if vectors is None else vectors
        if self.lattice == ROOT:
            return [root_coordinates(v) for v in vectors]
        return [tuple(v) for v in vectors]

    def lattice_rank(self) -> int:
        """Dimension of the ambient lattice (n-1 for the root lattice, n otherwise)."""
        return self.dim - 1 if self.lattice == ROOT else self.dim

    def rank(self) -> int:
        return rank(self.rays)


def root_cone(P: Poset) -> Cone:
    """K^root_P: generated by e_i - e_j for i < j in P; rays from the covers."""
    n = P.n

    def e(i: int, j: int) -> Vector:
        v = [0] * n
        v[i - 1] += 1
        v[j - 1] -= 1
        return tuple(v)

    gens = tuple(e(i, j) for i, j in P.relations())
    rays = tuple(e(i, j) for i, j in P.covers)
    return Cone(n, ROOT, gens, rays)


def characteristic_vector(subset, n: int) -> Vector:
    v = [0] * n
    for i in subset:
        v[i - 1] = 1
    return tuple(v)


def wt_cone(P: Poset) -> Cone:
    """K^wt_P = {x >= 0 : x_i >= x_j whenever i < j in P}.

    Generated by the characteristic vectors of nonempty order ideals; the
    rays are those of connected order ideals.
    """
    n = P.n
    gens = tuple(characteristic_vector(elements_of(m), n) for m in order_ideals(P) if m)
    rays = tuple(characteristic_vector(J, n) for J in connected_order_ideals(P))
    return Cone(n, WT, gens, rays)


def is_simplicial(K: Cone) -> Tuple[bool, Optional[bool]]:
    """(simplicial?, unimodular?) with the second entry None when not simplicial."""
    if rank(K.rays) != len(K.rays):
        return False, None
    return True, lattice_index(K.lattice_vectors(), K.lattice) == 1


# -- exact membership -------------------------------------------------------


def _phase_one(A: List[List[Fraction]], b: List[Fraction]) -> bool:
    """Is {y >= 0 : A y = b} nonempty?  Phase-one simplex with Bland's rule."""
    m = len(A)
    if m == 0:
        return True
    ncols = len(A[0]) if A else 0
    rows = []
    for i in range(m):
        row = list(A[i])
        rhs = b[i]
        if rhs < 0:
            row = [-a for a in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art + [rhs])
    total = ncols + m
    basis = [ncols + i for i in range(m)]
    # objective: minimize sum of artificials; reduced costs
    cost = [Fraction(0)] * (total + 1)
    for row in rows:
        for k in range(ncols):
            cost[k] -= row[k]
        cost[total] -= row[total]
    while True:
        enter = next((k for k in range(total) if cost[k] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[total] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction cannot occur for a bounded-below phase-one objective
            break
        prow = rows[leave]
        pv = prow[enter]
        prow = [a / pv for a in prow]
        rows[leave] = prow
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [a - f * p for a, p in zip(rows[i], prow)]
        if cost[enter]:
            f = cost[enter]
            cost = [a - f * p for a, p in zip(cost, prow)]
        basis[leave] = enter
    return cost[total] == 0


def in_cone(p: Sequence, generators: Sequence[Sequence[int]]) -> bool:
    """Exact test whether p is a nonnegative combination of the generators."""
    p = [Fraction(a) for a in p]
    if not generators:
        return not any(p)
    d = len(p)
    A = [[Fraction(g[i]) for g in generators] for i in range(d)]
    return _phase_one(A, p)


def cone_member(p: Sequence, K: Cone) -> bool:
    return in_cone(p, K.generators)


# -- valuations of simplicial cones -----------------------------------------


def s_simplicial(K: Cone) -> LinDenRat:
    """|det| / prod <x, u> for a full-rank simplicial cone with primitive rays."""
    simplicial, _ = is_simplicial(K)
    if not simplicial:
        raise ShapeError("cone is not simplicial")
    if len(K.rays) != K.lattice_rank():
        raise ShapeError("cone is not full-dimensional in its lattice")
    index = lattice_index(K.lattice_vectors(), K.lattice)
    return LinDenRat.from_factors(Polynomial.constant(K.dim, index), K.rays)


def s_simplicial_vectors(rays: Sequence[Sequence[int]], lattice: str = WT) -> LinDenRat:
    """Same as :func:`s_simplicial` for an explicit list of independent rays."""
    rays = [tuple(r) for r in rays]
    if not rays:
        raise ShapeError("no rays given")
    K = Cone(len(rays[0]), lattice, tuple(rays), tuple(rays))
    return s_simplicial(K)


# -- the alternating characteristic-function identity -----------------------


def is_cyclic(W: Sequence[Sequence[int]], V: Sequence[Sequence[int]]) -> bool:
    """Is some strictly positive combination of W inside R_+ V?

    After rescaling the coefficients to be at least 1 this asks whether
    -sum(W) lies in the cone spanned by W and -V.
    """
    if not W:
        return True
    d = len(W[0])
    target = [-sum(w[i] for w in W) for i in range(d)]
    gens = [tuple(w) for w in W] + [tuple(-a for a in v) for v in V]
    return in_cone(target, gens)


def signed_subset_count(W: Sequence[Sequence[int]], V: Sequence[Sequence[int]], p: Sequence) -> int:
    """sum over B of (-1)^|B| [p in R_+(V u B)]."""
    total = 0
    idx = range(len(W))
    for k in range(len(W) + 1):
        for B in combinations(idx, k):
            if in_cone(p, list(V) + [W[t] for t in B]):
                total += (-1) ** k
    return total


def alternating_chi_check(W: Sequence[Sequence[int]], V: Sequence[Sequence[int]], samples: Sequence[Sequence]) -> bool:
    """Verify the vanishing signed sum of cone indicator functions at sample points."""
    if not is_cyclic(W, V):
        raise CyclicityError("W is not cyclic with respect to V")
    return all(signed_subset_count(W, V, p) == 0 for p in samples)
