"""Bernoulli numbers and the total residue of a Hilbert-series fraction."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import List

from .geom import GeomRat
from .linden import LinDenRat
from .poly import Polynomial

_BERNOULLI: List[Fraction] = [Fraction(1)]
_LOCK = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """B_m with the convention B_1 = -1/2 (coefficients of t/(e^t - 1))."""
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if m < len(_BERNOULLI):
        return _BERNOULLI[m]
    with _LOCK:
        while len(_BERNOULLI) <= m:
            k = len(_BERNOULLI)
            acc = sum(comb(k + 1, j) * _BERNOULLI[j] for j in range(k))
            _BERNOULLI.append(-acc / (k + 1))
    return _BERNOULLI[m]


def _linear_power_series(v, order: int, coeff, nvars: int) -> List[Polynomial]:
    """Homogeneous parts 0..order of coeff * sum_j c_j <v,x>^j, c_j = 1/j!."""
    parts = []
    power = Polynomial.constant(nvars, coeff)
    for j in range(order + 1):
        parts.append(power.scale(Fraction(1, factorial(j))))
        if j < order:
            power = power.mul_linear(v)
    return parts


def _truncated_product(a: List[Polynomial], b: List[Polynomial], order: int, nvars: int) -> List[Polynomial]:
    out = []
    for k in range(order + 1):
        acc = Polynomial.zero(nvars)
        for i in range(k + 1):
            if a[i] and b[k - i]:
                acc = acc + a[i] * b[k - i]
        out.append(acc)
    return out


def total_residue(F: GeomRat, d: int) -> LinDenRat:
    """(-1)^d times the degree -d part of F(e^x).

    With N denominator factors, 1/(1 - e^t) = -(1/t) * sum_m B_m t^m/m!, so
    only the expansion up to order N - d of the numerator and of each
    Bernoulli series contributes.
    """
    n = F.nvars
    factors = []
    for u, m in F.denominator.items():
        factors.extend([u] * m)
    N = len(factors)
    order = N - d
    if order < 0 or F.is_zero():
        return LinDenRat.zero(n)
    # numerator: sum_v c_v e^{<v,x>}
    num = [Polynomial.zero(n) for _ in range(order + 1)]
    for v, c in F.numerator.terms.items():
        if any(v):
            parts = _linear_power_series(v, order, c, n)
            for j in range(order + 1):
                num[j] = num[j] + parts[j]
        else:
            num[0] = num[0] + Polynomial.constant(n, c)
    bern_cache = [bernoulli(j) / factorial(j) for j in range(order + 1)]
    series = num
    for u in factors:
        parts = []
        power = Polynomial.constant(n, 1)
        for j in range(order + 1):
            parts.append(power.scale(bern_cache[j]))
            if j < order:
                power = power.mul_linear(u)
        series = _truncated_product(series, parts, order, n)
    top = series[order]
    if (N + d) % 2:
        top = -top
    return LinDenRat.from_factors(top, factors)
