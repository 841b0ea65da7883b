"""Rational functions whose denominators are products of linear forms.

This is the shape of every Psi_P, Phi_P and Laplace-transform valuation.
Values are kept fully reduced: no denominator factor divides the numerator.
Because linear forms are irreducible, trial division is a complete
reduction and the canonical form is unique.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from ..errors import PoleError
from .poly import LinearForm, Polynomial, default_names, grlex_key


def _factor_text(form: LinearForm, mult: int, names) -> str:
    body = form.render(names)
    if not form.is_monomial():
        body = f"({body})"
    return body if mult == 1 else f"{body}^{mult}"


class LinDenRat:
    """numerator / prod(form ** mult) with canonical, fully reduced parts."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Optional[Mapping[LinearForm, int]] = None,
                 *, reduced: bool = False):
        den = Counter()
        if denominator:
            for f, m in denominator.items():
                if m < 0:
                    raise ValueError("negative multiplicity")
                if m:
                    den[f] = m
        if numerator.is_zero():
            den = Counter()
        self.numerator = numerator
        self.denominator = den
        if not reduced:
            self._reduce()

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LinDenRat":
        return cls(Polynomial.zero(nvars), reduced=True)

    @classmethod
    def one(cls, nvars: int) -> "LinDenRat":
        return cls(Polynomial.constant(nvars, 1), reduced=True)

    @classmethod
    def from_factors(cls, numerator: Polynomial, forms: Iterable[Sequence[int]]) -> "LinDenRat":
        """numerator / prod(forms) for raw integer coefficient vectors."""
        scalar = Fraction(1)
        den: Counter = Counter()
        for coeffs in forms:
            g, form = LinearForm.normalize(coeffs)
            scalar /= g
            den[form] += 1
        return cls(numerator.scale(scalar), den)

    @classmethod
    def reciprocal_product(cls, forms: Iterable[Sequence[int]], nvars: int) -> "LinDenRat":
        """1 / prod(forms); no reduction is needed."""
        scalar = Fraction(1)
        den: Counter = Counter()
        for coeffs in forms:
            g, form = LinearForm.normalize(coeffs)
            scalar /= g
            den[form] += 1
        return cls(Polynomial.constant(nvars, scalar), den, reduced=True)

    # -- protocol -------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def degree(self) -> Optional[int]:
        """Degree of a homogeneous value (None for zero or inhomogeneous numerators)."""
        if self.is_zero() or not self.numerator.is_homogeneous():
            return None
        return self.numerator.degree() - sum(self.denominator.values())

    def denominator_forms(self):
        """Denominator factors as a sorted list of (form, multiplicity)."""
        return sorted(self.denominator.items(), key=lambda t: t[0].sort_key())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinDenRat):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, frozenset(self.denominator.items())))

    def __repr__(self) -> str:
        return f"LinDenRat({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    # -- reduction ------------------------------------------------------

    def _reduce(self) -> None:
        num = self.numerator
        if num.is_zero():
            self.denominator = Counter()
            return
        den = self.denominator
        # One pass suffices: a form that does not divide N cannot divide N / g.
        for form in list(den):
            while den[form]:
                q = num.divide_linear(form.coeffs)
                if q is None:
                    break
                num = q
                den[form] -= 1
            if not den[form]:
                del den[form]
        self.numerator = num

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "LinDenRat":
        return LinDenRat(-self.numerator, self.denominator, reduced=True)

    def __add__(self, other: "LinDenRat") -> "LinDenRat":
        return linden_add(self, other)

    def __sub__(self, other: "LinDenRat") -> "LinDenRat":
        return linden_add(self, -other)

    def __mul__(self, other) -> "LinDenRat":
        if isinstance(other, LinDenRat):
            if self.nvars != other.nvars:
                raise ValueError("variable count mismatch")
            den = Counter(self.denominator)
            den.update(other.denominator)
            return LinDenRat(self.numerator * other.numerator, den)
        if isinstance(other, Polynomial):
            return LinDenRat(self.numerator * other, self.denominator)
        return LinDenRat(self.numerator.scale(other), self.denominator, reduced=True)

    __rmul__ = __mul__

    def divide_by_forms(self, forms: Iterable[Sequence[int]]) -> "LinDenRat":
        """self / prod(forms)."""
        return self * LinDenRat.reciprocal_product(forms, self.nvars)

    # -- evaluation and substitution -----------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        val = self.numerator.evaluate(point)
        if not val:
            return Fraction(0)
        for form, m in self.denominator.items():
            d = form.evaluate(point)
            if not d:
                raise PoleError(f"point lies on the hyperplane {form.render()} = 0")
            val /= d ** m
        return val

    def substitute_equal(self, i: int, j: int) -> "LinDenRat":
        """Set x_j := x_i (0-based indices) and renormalize."""
        scalar = Fraction(1)
        den: Counter = Counter()
        for form, m in self.denominator.items():
            c = list(form.coeffs)
            c[i] += c[j]
            c[j] = 0
            if not any(c):
                raise PoleError(f"substitution annihilates the factor {form.render()}")
            g, nf = LinearForm.normalize(c)
            scalar /= Fraction(g) ** m
            den[nf] += m
        return LinDenRat(self.numerator.substitute_merge(i, j).scale(scalar), den)

    def remap(self, mapping: Mapping[int, int], nvars: int) -> "LinDenRat":
        """Rename variables (0-based) into a ring with ``nvars`` variables."""
        scalar = Fraction(1)
        den: Counter = Counter()
        for form, m in self.denominator.items():
            c = [0] * nvars
            for k, a in enumerate(form.coeffs):
                if a:
                    c[mapping[k]] += a
            if not any(c):
                raise PoleError(f"renaming annihilates the factor {form.render()}")
            g, nf = LinearForm.normalize(c)
            scalar /= Fraction(g) ** m
            den[nf] += m
        return LinDenRat(self.numerator.remap(mapping, nvars).scale(scalar), den)

    def numerator_over(self, forms: Iterable[Sequence[int]]) -> Polynomial:
        """The numerator when written over the (possibly larger) denominator prod(forms).

        Raises ValueError if prod(forms) is not a multiple of the reduced denominator.
        """
        scalar = Fraction(1)
        target: Counter = Counter()
        for coeffs in forms:
            g, form = LinearForm.normalize(coeffs)
            scalar *= g
            target[form] += 1
        extra = target.copy()
        extra.subtract(self.denominator)
        if any(v < 0 for v in extra.values()):
            raise ValueError("target denominator is not a multiple of the reduced denominator")
        num = self.numerator.scale(scalar)
        for form, m in sorted(extra.items(), key=lambda t: t[0].sort_key()):
            for _ in range(m):
                num = num.mul_linear(form.coeffs)
        return num

    # -- rendering ------------------------------------------------------

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = default_names(self.nvars)
        num = self.numerator
        if num.is_zero():
            return "0"
        ntext = num.render(names, key=grlex_key)
        if not self.denominator:
            return ntext
        if len(num.terms) > 1:
            ntext = f"({ntext})"
        factors = [_factor_text(f, m, names) for f, m in self.denominator_forms()]
        if len(factors) == 1:
            dtext = factors[0]
        else:
            dtext = "(" + "*".join(factors) + ")"
        return f"{ntext}/{dtext}"


def linden_add(f: LinDenRat, g: LinDenRat) -> LinDenRat:
    """Exact sum over the least common denominator, then full reduction."""
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    lcm: Counter = Counter(f.denominator)
    for form, m in g.denominator.items():
        if m > lcm[form]:
            lcm[form] = m
    nf = f.numerator
    for form, m in lcm.items():
        for _ in range(m - f.denominator.get(form, 0)):
            nf = nf.mul_linear(form.coeffs)
    ng = g.numerator
    for form, m in lcm.items():
        for _ in range(m - g.denominator.get(form, 0)):
            ng = ng.mul_linear(form.coeffs)
    return LinDenRat(nf + ng, lcm)


def linden_sum(values: Sequence[LinDenRat], nvars: int) -> LinDenRat:
    """Balanced-tree summation; keeps intermediate numerators small."""
    items = list(values)
    if not items:
        return LinDenRat.zero(nvars)
    while len(items) > 1:
        nxt = [linden_add(items[k], items[k + 1]) for k in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def substitute_equal(f: LinDenRat, i: int, j: int) -> LinDenRat:
    return f.substitute_equal(i, j)


def divide_by_linear(p: Polynomial, form: Sequence[int]) -> Optional[Polynomial]:
    """p / form when exact, else None (the Indivisible outcome)."""
    return p.divide_linear(form)
