"""Sparse multivariate polynomials over the rationals, and integer linear forms.

Variables are indexed from 0 internally; rendering uses 1-based names
(``x1 .. xn``) unless explicit names are given.  Exponent vectors may be
negative, which is how Laurent numerators of Hilbert series are stored.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

Exponent = Tuple[int, ...]

# Large prime for the modular indivisibility pre-check in divide_linear.
_PRIME = (1 << 61) - 1
# Prime below 2^31 for the vectorized screen: products of two residues fit in int64.
_SCREEN_PRIME = (1 << 31) - 1
_CHECK_RNG = random.Random(0x5EED)
_CHECK_POINTS: Dict[int, Tuple[int, ...]] = {}


def _check_point(nvars: int) -> Tuple[int, ...]:
    pt = _CHECK_POINTS.get(nvars)
    if pt is None:
        pt = tuple(_CHECK_RNG.randrange(1, _PRIME) for _ in range(nvars))
        _CHECK_POINTS[nvars] = pt
    return pt


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _coef(c):
    """Normalize a coefficient: integral values become ints (faster), others Fractions."""
    if type(c) is int:
        return c
    c = _frac(c)
    return c.numerator if c.denominator == 1 else c


def default_names(nvars: int, prefix: str = "x") -> list:
    return [f"{prefix}{i + 1}" for i in range(nvars)]


def format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(exps: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def lex_desc_key(exps: Exponent):
    return tuple(-e for e in exps)


def grlex_key(exps: Exponent):
    """Total degree descending, then lexicographically descending."""
    return (-sum(exps), tuple(-e for e in exps))


def factor_key(vec: Sequence[int]):
    """Display order of denominator factors: L1 norm, then support, then larger entries first."""
    support = tuple(i for i, a in enumerate(vec) if a)
    return (sum(abs(a) for a in vec), support, tuple(-a for a in vec))


def l1_key(exps: Exponent):
    """Size (sum of absolute exponents) ascending, then lexicographically descending."""
    return (sum(abs(e) for e in exps), tuple(-e for e in exps))


class Polynomial:
    """Exact sparse polynomial: a mapping from exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms", "_hash", "_screen")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, object]] = None):
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    if len(exps) != nvars:
                        raise ValueError(f"exponent {exps} has wrong length for {nvars} variables")
                    clean[tuple(exps)] = _coef(c)
        self.terms = clean
        self._hash = None
        self._screen = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        # Trusted constructor: terms already clean.
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        p._screen = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        c = _coef(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Polynomial":
        c = _coef(c)
        return cls._raw(len(exps), {tuple(exps): c} if c else {})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, a in enumerate(coeffs):
            if a:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = int(a)
        return cls._raw(n, terms)

    # -- basic protocol -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def constant_value(self) -> Optional[Fraction]:
        """The value if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (exps, c), = self.terms.items()
            if not any(exps):
                return c
        return None

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _coef(c)
        if not c:
            return Polynomial.zero(self.nvars)
        if c == 1:
            return self
        return Polynomial._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exps: Exponent, c=1) -> "Polynomial":
        c = _coef(c)
        return Polynomial._raw(
            self.nvars,
            {tuple(x + y for x, y in zip(e, exps)): v * c for e, v in self.terms.items()},
        )

    def mul_linear(self, coeffs: Sequence[int]) -> "Polynomial":
        """Multiply by the linear form sum(coeffs[i] * x_i)."""
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for i, a in enumerate(coeffs):
            if not a:
                continue
            for e, c in self.terms.items():
                ne = e[:i] + (e[i] + 1,) + e[i + 1:]
                out[ne] = get(ne, 0) + a * c
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    # -- structure ------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, maxdeg: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= maxdeg})

    def content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    # -- evaluation and substitution -----------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point (negative exponents allowed)."""
        pt = [_frac(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def evaluate_mod(self, point: Sequence[int], p: int = _PRIME) -> int:
        """Value modulo the prime p at an integer point (nonnegative exponents only)."""
        tables = []
        for i, x in enumerate(point):
            top = max((e[i] for e in self.terms), default=0)
            row = [1] * (top + 1)
            for k in range(1, top + 1):
                row[k] = row[k - 1] * x % p
            tables.append(row)
        idx = range(len(point))
        total = 0
        for e, c in self.terms.items():
            if type(c) is int:
                v = c
            else:
                v = c.numerator * pow(c.denominator, -1, p)
            for i in idx:
                k = e[i]
                if k:
                    v = v * tables[i][k] % p
            total += v
        return total % p

    def _screen_arrays(self):
        """(exponent matrix, coefficient residues mod a 31-bit prime), cached; None if unavailable."""
        p = _SCREEN_PRIME
        if self._screen is None:
            residues = []
            for c in self.terms.values():
                if type(c) is int:
                    residues.append(c % p)
                else:
                    d = c.denominator % p
                    if not d:
                        return None
                    residues.append(c.numerator * pow(d, -1, p) % p)
            exps = np.array(list(self.terms), dtype=np.int64).reshape(len(self.terms), self.nvars)
            self._screen = (exps, np.array(residues, dtype=np.int64))
        return self._screen

    def _screen_value(self, point: Sequence[int]) -> Optional[int]:
        """Value modulo the screening prime at a point with nonzero residues.

        Negative exponents use modular inverses.  None if the cached residues
        are unavailable.
        """
        p = _SCREEN_PRIME
        arrays = self._screen_arrays()
        if arrays is None:
            return None
        exps, vals = arrays
        vals = vals.copy()
        for i, x in enumerate(point):
            col = exps[:, i]
            if not len(col):
                break
            lo, hi = int(col.min()), int(col.max())
            if lo == hi == 0:
                continue
            x %= p
            cur = pow(x, lo, p) if lo >= 0 else pow(pow(x, -1, p), -lo, p)
            table = []
            for _ in range(lo, hi + 1):
                table.append(cur)
                cur = cur * x % p
            vals = vals * np.array(table, dtype=np.int64)[col - lo] % p
        return int(vals.sum() % p)

    def substitute_merge(self, i: int, j: int) -> "Polynomial":
        """Set x_j := x_i (variable j disappears)."""
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i] += le[j]
            le[j] = 0
            ne = tuple(le)
            out[ne] = out.get(ne, 0) + c
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    def remap(self, mapping: Mapping[int, int], nvars: int) -> "Polynomial":
        """Rename variable k to mapping[k] in a ring with ``nvars`` variables.

        Variables absent from ``mapping`` must not occur in the polynomial.
        Several old variables may map to the same new one.
        """
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for k, v in enumerate(e):
                if v:
                    if k not in mapping:
                        raise ValueError(f"variable {k} is not mapped")
                    ne[mapping[k]] += v
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
        return Polynomial._raw(nvars, {e: c for e, c in out.items() if c})

    # -- division by a linear form -------------------------------------

    def divide_linear(self, coeffs: Sequence[int]) -> Optional["Polynomial"]:
        """Exact quotient by the linear form ``sum(coeffs[i] x_i)``, or None if indivisible.

        Division is univariate in the form's leading variable k; the remainder is
        the polynomial restricted to the hyperplane, so a cheap modular evaluation
        on that hyperplane rules out most non-divisors before the exact pass.
        """
        n = self.nvars
        k = next((i for i, a in enumerate(coeffs) if a), None)
        if k is None:
            raise ZeroDivisionError("division by the zero linear form")
        if not self.terms:
            return self
        a = coeffs[k]
        arrays = self._screen_arrays()
        if arrays is not None:
            if int(arrays[0].min()) < 0:
                return None
        elif any(v < 0 for e in self.terms for v in e):
            return None
        # Modular screen: a point on the hyperplane coeffs . x = 0.
        if a % _SCREEN_PRIME:
            pt = [v % _SCREEN_PRIME for v in _check_point(n)]
            rest = sum(coeffs[i] * pt[i] for i in range(n) if i != k)
            pt[k] = (-rest) * pow(a, -1, _SCREEN_PRIME) % _SCREEN_PRIME
            if self._screen_value(pt):
                return None
        # Group by the power of x_k.
        by_power: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            m = e[k]
            if m < 0:
                return None
            by_power.setdefault(m, {})[e[:k] + (0,) + e[k + 1:]] = c
        top = max(by_power)
        rest_coeffs = [0 if i == k else coeffs[i] for i in range(n)]
        inv_a = 1 if a == 1 else Fraction(1, a)
        quotient: Dict[Exponent, Fraction] = {}
        carry = Polynomial._raw(n, by_power.get(top, {}))
        for m in range(top, 0, -1):
            # q_{m-1} = carry / a ; next carry = c_{m-1} - r * q_{m-1}
            q = carry.scale(inv_a)
            for e, c in q.terms.items():
                quotient[e[:k] + (m - 1,) + e[k + 1:]] = c
            lower = Polynomial._raw(n, by_power.get(m - 1, {}))
            carry = lower - q.mul_linear(rest_coeffs)
        if carry.terms:
            return None
        return Polynomial._raw(n, quotient)

    # -- rendering ------------------------------------------------------

    def sorted_terms(self, key=grlex_key):
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def render(self, names: Optional[Sequence[str]] = None, key=grlex_key) -> str:
        if names is None:
            names = default_names(self.nvars)
        if not self.terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms(key)):
            mono = format_monomial(e, names)
            neg = c < 0
            mag = -c if neg else c
            if mono:
                body = mono if mag == 1 else f"{format_coefficient(mag)}*{mono}"
            else:
                body = format_coefficient(mag)
            if idx == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("-" if neg else "+") + body)
        return "".join(out)


class LinearForm:
    """Primitive integer linear form a_1 x_1 + ... + a_n x_n.

    Canonical: coefficients coprime and the first nonzero coefficient positive.
    Use :meth:`normalize` to split an arbitrary integer vector into a scalar
    times a canonical form.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        coeffs = tuple(int(a) for a in coeffs)
        g = 0
        for a in coeffs:
            g = gcd(g, a)
        if g == 0:
            raise ValueError("zero linear form")
        lead = next(a for a in coeffs if a)
        if g != 1 or lead < 0:
            raise ValueError(f"linear form {coeffs} is not normalized; use LinearForm.normalize")
        self.coeffs = coeffs

    @classmethod
    def normalize(cls, coeffs: Sequence[int]) -> Tuple[int, "LinearForm"]:
        """Return (scalar, form) with coeffs == scalar * form.coeffs."""
        coeffs = tuple(int(a) for a in coeffs)
        g = 0
        for a in coeffs:
            g = gcd(g, a)
        if g == 0:
            raise ValueError("zero linear form")
        lead = next(a for a in coeffs if a)
        if lead < 0:
            g = -g
        form = cls.__new__(cls)
        form.coeffs = tuple(a // g for a in coeffs)
        return g, form

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LinearForm({self.render()!r})"

    def sort_key(self):
        return factor_key(self.coeffs)

    def __lt__(self, other: "LinearForm") -> bool:
        return self.sort_key() < other.sort_key()

    def as_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coeffs)

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((_frac(x) * a for x, a in zip(point, self.coeffs) if a), Fraction(0))

    def is_monomial(self) -> bool:
        return sum(1 for a in self.coeffs if a) == 1

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = default_names(self.nvars)
        out = []
        for name, a in zip(names, self.coeffs):
            if not a:
                continue
            mag = abs(a)
            body = name if mag == 1 else f"{mag}*{name}"
            if not out:
                out.append(("-" if a < 0 else "") + body)
            else:
                out.append(("-" if a < 0 else "+") + body)
        return "".join(out)
