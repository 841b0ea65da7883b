"""Hilbert-series shaped rational functions: Laurent numerator over prod (1 - X^u).

A denominator factor is stored by its integer exponent vector ``u``.  Within
one value each axis appears in a single orientation: ``1/(1 - X^-u)`` is
rewritten as ``-X^u/(1 - X^u)`` whenever both orientations would meet.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from ..errors import PoleError
from .poly import _SCREEN_PRIME, Exponent, Polynomial, default_names, factor_key, format_monomial, l1_key

Vector = Tuple[int, ...]


def _axis(u: Vector) -> Vector:
    lead = next(a for a in u if a)
    return u if lead > 0 else tuple(-a for a in u)


def _neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def is_primitive(u: Sequence[int]) -> bool:
    g = 0
    for a in u:
        g = gcd(g, a)
    return g == 1


_SCREEN_RNG = random.Random(0xC0FFEE)


def _screen_rejects(p: Polynomial, u: Vector) -> bool:
    """Cheap necessary test: p must vanish where X^u = 1 (modulo a prime).

    Uses a random point on that hypersurface, available when some entry of
    u is +-1.  Returns True only when p is certainly not divisible.
    """
    k = next((i for i, a in enumerate(u) if a in (1, -1)), None)
    if k is None:
        return False
    prime = _SCREEN_PRIME
    pt = [_SCREEN_RNG.randrange(1, prime) for _ in u]
    prod = 1
    for i, a in enumerate(u):
        if i != k and a:
            prod = prod * pow(pt[i], a, prime) % prime
    # X_k^{u_k} * prod = 1
    pt[k] = pow(prod, -1, prime) if u[k] == 1 else prod
    value = p._screen_value(pt)
    return value is not None and value != 0


def divide_one_minus_monomial(p: Polynomial, u: Sequence[int]) -> Optional[Polynomial]:
    """Exact quotient p / (1 - X^u) for a Laurent polynomial p, or None.

    Monomials split into cosets of the line Z*u; p is divisible iff every
    coset's coefficients sum to zero, and the quotient on a coset is given
    by partial sums along the line.
    """
    u = tuple(u)
    k = next((i for i, a in enumerate(u) if a), None)
    if k is None:
        raise PoleError("factor 1 - X^0 vanishes identically")
    if not p.terms:
        return p
    if _screen_rejects(p, u):
        return None
    uk = u[k]
    classes: Dict[Exponent, Dict[int, Fraction]] = {}
    for e, c in p.terms.items():
        t = e[k] // uk
        rep = tuple(a - t * b for a, b in zip(e, u))
        classes.setdefault(rep, {})[t] = c
    out: Dict[Exponent, Fraction] = {}
    for rep, coeffs in classes.items():
        if sum(coeffs.values()) != 0:
            return None
        lo, hi = min(coeffs), max(coeffs)
        running = 0
        for s in range(lo, hi):
            running += coeffs.get(s, 0)
            if running:
                out[tuple(a + s * b for a, b in zip(rep, u))] = running
    return Polynomial._raw(p.nvars, out)


def _one_minus(u: Vector, nvars: int) -> Polynomial:
    zero = (0,) * nvars
    return Polynomial._raw(nvars, {zero: 1, tuple(u): -1})


class GeomRat:
    """numerator / prod_u (1 - X^u)^mult, reduced by exact division attempts."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Optional[Mapping[Sequence[int], int]] = None,
                 *, reduced: bool = False):
        n = numerator.nvars
        num = numerator
        den: Counter = Counter()
        if denominator:
            items = [(tuple(int(a) for a in u), m) for u, m in denominator.items() if m]
            for u, m in items:
                if len(u) != n:
                    raise ValueError("denominator vector has wrong length")
                if not any(u):
                    raise PoleError("factor 1 - X^0 vanishes identically")
                if m < 0:
                    raise ValueError("negative multiplicity")
            # Orientation: the first orientation met on an axis is kept.
            chosen: Dict[Vector, Vector] = {}
            for u, m in items:
                chosen.setdefault(_axis(u), u)
            for u, m in items:
                target = chosen[_axis(u)]
                if u != target:
                    # 1/(1 - X^-v) = -X^v/(1 - X^v)
                    num = num.mul_monomial(tuple(a * m for a in target), (-1) ** m)
                den[target] += m
        if num.is_zero():
            den = Counter()
        self.numerator = num
        self.denominator = den
        if not reduced:
            self._reduce()

    @classmethod
    def zero(cls, nvars: int) -> "GeomRat":
        return cls(Polynomial.zero(nvars), reduced=True)

    @classmethod
    def one(cls, nvars: int) -> "GeomRat":
        return cls(Polynomial.constant(nvars, 1), reduced=True)

    @classmethod
    def from_parts(cls, numerator_monomials: Mapping[Sequence[int], object],
                   denominator: Iterable[Sequence[int]], nvars: int) -> "GeomRat":
        num = Polynomial(nvars, {tuple(k): v for k, v in numerator_monomials.items()})
        return cls(num, Counter(tuple(u) for u in denominator))

    @classmethod
    def reciprocal(cls, vectors: Iterable[Sequence[int]], nvars: int, monomial: Optional[Sequence[int]] = None) -> "GeomRat":
        """X^monomial / prod (1 - X^u)."""
        exps = tuple(monomial) if monomial is not None else (0,) * nvars
        return cls(Polynomial.monomial(exps, 1), Counter(tuple(u) for u in vectors))

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def factor_count(self) -> int:
        return sum(self.denominator.values())

    def denominator_vectors(self):
        return sorted(self.denominator.items(), key=lambda t: factor_key(t[0]))

    def _reduce(self) -> None:
        num = self.numerator
        if num.is_zero():
            self.denominator = Counter()
            return
        den = self.denominator
        for u in list(den):
            while den[u]:
                q = divide_one_minus_monomial(num, u)
                if q is None:
                    break
                num = q
                den[u] -= 1
            if not den[u]:
                del den[u]
        self.numerator = num

    # -- arithmetic -----------------------------------------------------

    def _aligned_to(self, axes: Mapping[Vector, Vector]) -> "GeomRat":
        """Same value with factors flipped to the orientations in ``axes``."""
        num = self.numerator
        den: Counter = Counter()
        for u, m in self.denominator.items():
            target = axes.get(_axis(u), u)
            if target != u:
                num = num.mul_monomial(tuple(a * m for a in target), (-1) ** m)
            den[target] += m
        return GeomRat(num, den, reduced=True)

    def __neg__(self) -> "GeomRat":
        return GeomRat(-self.numerator, self.denominator, reduced=True)

    def __add__(self, other: "GeomRat") -> "GeomRat":
        return geom_add(self, other)

    def __sub__(self, other: "GeomRat") -> "GeomRat":
        return geom_add(self, -other)

    def __mul__(self, other) -> "GeomRat":
        if isinstance(other, GeomRat):
            axes = {_axis(u): u for u in self.denominator}
            o = other._aligned_to(axes)
            den = Counter(self.denominator)
            den.update(o.denominator)
            return GeomRat(self.numerator * o.numerator, den)
        if isinstance(other, Polynomial):
            return GeomRat(self.numerator * other, self.denominator)
        return GeomRat(self.numerator.scale(other), self.denominator, reduced=True)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeomRat):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        return geom_add(self, -other).is_zero()

    def __hash__(self):
        raise TypeError("GeomRat is unhashable: equality is semantic")

    def __repr__(self) -> str:
        return f"GeomRat({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    # -- transformations -------------------------------------------------

    def reoriented(self, directions: Iterable[Sequence[int]]) -> "GeomRat":
        """Express factors along the given orientations where the axis matches."""
        axes = {}
        for u in directions:
            u = tuple(u)
            axes.setdefault(_axis(u), u)
        return self._aligned_to(axes)

    def substitute_equal(self, i: int, j: int) -> "GeomRat":
        """Set X_j := X_i (0-based), at the level of exponent vectors."""
        den: Counter = Counter()
        for u, m in self.denominator.items():
            v = list(u)
            v[i] += v[j]
            v[j] = 0
            if not any(v):
                raise PoleError("substitution annihilates a denominator factor")
            den[tuple(v)] += m
        return GeomRat(self.numerator.substitute_merge(i, j), den)

    def remap(self, mapping: Mapping[int, int], nvars: int) -> "GeomRat":
        den: Counter = Counter()
        for u, m in self.denominator.items():
            v = [0] * nvars
            for k, a in enumerate(u):
                if a:
                    v[mapping[k]] += a
            if not any(v):
                raise PoleError("renaming annihilates a denominator factor")
            den[tuple(v)] += m
        return GeomRat(self.numerator.remap(mapping, nvars), den)

    def evaluate(self, point: Sequence) -> Fraction:
        """Value at X = point (nonzero rationals)."""
        val = self.numerator.evaluate(point)
        if not val:
            return Fraction(0)
        for u, m in self.denominator.items():
            d = 1 - Polynomial.monomial(u).evaluate(point)
            if not d:
                raise PoleError("point is a pole")
            val /= d ** m
        return val

    def numerator_over(self, vectors: Iterable[Sequence[int]]) -> Polynomial:
        """Numerator when written over prod (1 - X^v) for the given vectors."""
        vectors = [tuple(v) for v in vectors]
        aligned = self.reoriented(vectors)
        extra = Counter(vectors)
        extra.subtract(aligned.denominator)
        if any(v < 0 for v in extra.values()):
            raise ValueError("target denominator is not a multiple of the reduced denominator")
        num = aligned.numerator
        for u, m in sorted(extra.items()):
            for _ in range(m):
                num = num * _one_minus(u, self.nvars)
        return num

    # -- rendering ------------------------------------------------------

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = default_names(self.nvars, "X")
        if self.numerator.is_zero():
            return "0"
        ntext = self.numerator.render(names, key=l1_key)
        if not self.denominator:
            return ntext
        if len(self.numerator.terms) > 1:
            ntext = f"({ntext})"
        factors = []
        for u, m in self.denominator_vectors():
            body = f"(1-{format_monomial(u, names)})"
            factors.append(body if m == 1 else f"{body}^{m}")
        dtext = factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")"
        return f"{ntext}/{dtext}"


def geom_add(f: GeomRat, g: GeomRat) -> GeomRat:
    """Exact sum over the least common multiset of factors, then reduction."""
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    axes = {_axis(u): u for u in f.denominator}
    g = g._aligned_to(axes)
    n = f.nvars
    lcm: Counter = Counter(f.denominator)
    for u, m in g.denominator.items():
        if m > lcm[u]:
            lcm[u] = m
    nf = f.numerator
    ng = g.numerator
    for u, m in lcm.items():
        for _ in range(m - f.denominator.get(u, 0)):
            nf = nf * _one_minus(u, n)
        for _ in range(m - g.denominator.get(u, 0)):
            ng = ng * _one_minus(u, n)
    return GeomRat(nf + ng, lcm)


def geom_sum(values: Sequence[GeomRat], nvars: int) -> GeomRat:
    items = list(values)
    if not items:
        return GeomRat.zero(nvars)
    while len(items) > 1:
        nxt = [geom_add(items[k], items[k + 1]) for k in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


class QRat:
    """Univariate q-series value: Laurent polynomial over prod (1 - q^k), k > 0."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Mapping[int, object], denominator: Optional[Mapping[int, int]] = None):
        num = Polynomial(1, {(e,): c for e, c in numerator.items()})
        den: Counter = Counter()
        for k, m in (denominator or {}).items():
            if not m:
                continue
            if k == 0:
                raise PoleError("factor 1 - q^0 vanishes identically")
            if k < 0:
                num = num.mul_monomial((-k * m,), (-1) ** m)
                k = -k
            den[k] += m
        for k in sorted(den):
            while den[k]:
                q = divide_one_minus_monomial(num, (k,))
                if q is None:
                    break
                num = q
                den[k] -= 1
            if not den[k]:
                del den[k]
        self.numerator = num
        self.denominator = den

    def coefficients(self) -> Dict[int, Fraction]:
        return {e[0]: c for e, c in self.numerator.terms.items()}

    def clear(self, ks: Iterable[int]) -> Optional[Dict[int, Fraction]]:
        """Multiply by prod (1 - q^k); the resulting Laurent polynomial, or None if not exact."""
        num = self.numerator
        for k in ks:
            num = num * _one_minus((k,), 1)
        for k, m in sorted(self.denominator.items()):
            for _ in range(m):
                num = divide_one_minus_monomial(num, (k,))
                if num is None:
                    return None
        return {e[0]: c for e, c in num.terms.items()}

    def evaluate(self, q) -> Fraction:
        q = Fraction(q)
        val = self.numerator.evaluate((q,))
        for k, m in self.denominator.items():
            d = 1 - q ** k
            if not d:
                raise PoleError("q is a pole")
            val /= d ** m
        return val

    def __eq__(self, other) -> bool:
        if not isinstance(other, QRat):
            return NotImplemented
        lhs = self.numerator
        for k, m in other.denominator.items():
            for _ in range(m):
                lhs = lhs * _one_minus((k,), 1)
        rhs = other.numerator
        for k, m in self.denominator.items():
            for _ in range(m):
                rhs = rhs * _one_minus((k,), 1)
        return lhs == rhs

    def __repr__(self) -> str:
        return f"QRat({self.render()!r})"

    def render(self) -> str:
        ntext = self.numerator.render(["q"], key=l1_key)
        if not self.denominator:
            return ntext
        if len(self.numerator.terms) > 1:
            ntext = f"({ntext})"
        factors = []
        for k in sorted(self.denominator):
            m = self.denominator[k]
            body = "(1-q)" if k == 1 else f"(1-q^{k})"
            factors.append(body if m == 1 else f"{body}^{m}")
        dtext = factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")"
        return f"{ntext}/{dtext}"


def q_specialize(F: GeomRat) -> QRat:
    """Set every X_j = q."""
    num: Dict[int, Fraction] = {}
    for e, c in F.numerator.terms.items():
        s = sum(e)
        num[s] = num.get(s, 0) + c
    den: Counter = Counter()
    for u, m in F.denominator.items():
        s = sum(u)
        if s == 0:
            raise PoleError(f"factor with exponent {u} becomes 1 - q^0")
        den[s] += m
    return QRat(num, den)
