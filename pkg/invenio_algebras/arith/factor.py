# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Factorization of univariate polynomials into monic irreducibles.

Rationals and prime fields delegate to sympy. Extension fields ``GF(p^k)``
are handled here with squarefree, distinct-degree and equal-degree
(Cantor-Zassenhaus) splitting, using a seeded random source so that the
output is reproducible.
"""

import random
from collections import defaultdict
from fractions import Fraction

from sympy import QQ
from sympy import Poly as SympyPoly
from sympy import Rational, Symbol
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from ..errors import UnsupportedFactorization
from .fields import EXTENSION_FIELD, PRIME_FIELD, RATIONALS
from .polys import Poly, poly_gcd

DEFAULT_DEGREE_CAP = 12

_x = Symbol("x")


def factor_poly(f, degree_cap=DEFAULT_DEGREE_CAP, seed=0):
    """Factor a monic polynomial into distinct monic irreducibles.

    :param f: Monic :class:`Poly` of degree at least one.
    :param degree_cap: Largest degree factored over the rationals.
    :param seed: Seed for equal-degree splitting over extension fields.
    :returns: List of ``(factor, multiplicity)`` sorted by degree, then by
        coefficients read from the constant term.
    """
    if f.degree < 1 or not f.is_monic():
        raise ValueError("factor_poly expects a monic polynomial of degree >= 1")
    kind = f.field.kind
    if kind == RATIONALS:
        if f.degree > degree_cap:
            raise UnsupportedFactorization(
                f"Degree {f.degree} exceeds the rational factorization cap {degree_cap}"
            )
        factors = _factor_rationals(f)
    elif kind == PRIME_FIELD:
        factors = _factor_prime_field(f)
    elif kind == EXTENSION_FIELD:
        factors = _factor_extension_field(f, random.Random(seed))
    else:
        raise UnsupportedFactorization(f"No factorization over {f.field}")
    return sorted(factors, key=lambda item: item[0].sort_key())


def is_irreducible(f, degree_cap=DEFAULT_DEGREE_CAP, seed=0):
    """Whether a nonconstant polynomial is irreducible."""
    if f.degree < 1:
        return False
    factors = factor_poly(f.monic(), degree_cap=degree_cap, seed=seed)
    return len(factors) == 1 and factors[0][1] == 1


def expand_factors(field, factors):
    """Multiply out a factor list."""
    result = Poly.one(field)
    for g, m in factors:
        result = result * g**m
    return result


#
# Rationals and prime fields
#
def _factor_rationals(f):
    coeffs = [Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    _, pairs = SympyPoly(coeffs, _x, domain=QQ).factor_list()
    out = []
    for g, m in pairs:
        g = SympyPoly(g, _x, domain=QQ).monic()
        raw = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        out.append((Poly.from_raw(f.field, raw), m))
    return out


def _factor_prime_field(f):
    p = f.field.p
    _, pairs = gf_factor(ZZ.map(list(reversed(f.coeffs))), p, ZZ)
    return [
        (Poly.from_raw(f.field, [int(c) % p for c in reversed(g)]), m) for g, m in pairs
    ]


#
# Extension fields
#
def _factor_extension_field(f, rng):
    out = []
    for part, mult in _squarefree(f):
        for degree_part, d in _distinct_degree(part):
            for g in _equal_degree(degree_part, d, rng):
                out.append((g.monic(), mult))
    return out


def _squarefree(f):
    """Pairwise coprime squarefree parts ``(g, m)`` with ``f = prod g^m``."""
    F = f.field
    one = Poly.one(F)
    parts = defaultdict(lambda: one)
    df = f.derivative()
    if df.is_zero():
        for g, m in _squarefree(f.compose_frobenius_root().monic()):
            parts[m * F.p] = parts[m * F.p] * g
    else:
        c = poly_gcd(f, df)
        w = f // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree > 0:
                parts[i] = parts[i] * z
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            for g, m in _squarefree(c.compose_frobenius_root().monic()):
                parts[m * F.p] = parts[m * F.p] * g
    return [(g.monic(), m) for m, g in sorted(parts.items()) if g.degree > 0]


def _distinct_degree(f):
    """Split a squarefree monic ``f`` into products of same-degree irreducibles."""
    F = f.field
    q = F.order
    x = Poly.x(F)
    out = []
    h = x % f
    i = 1
    while f.degree >= 2 * i:
        h = h.pow_mod(q, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _equal_degree(f, d, rng):
    """Split a product of distinct degree ``d`` irreducibles."""
    if f.degree == d:
        return [f.monic()]
    F = f.field
    q = F.order
    n = f.degree
    while True:
        a = Poly.from_raw(F, [F.random(rng) for _ in range(n)])
        if a.degree < 1:
            continue
        if F.p == 2:
            # absolute trace map to GF(2)
            b = a % f
            t = b
            for _ in range(F.k * d - 1):
                t = (t * t) % f
                b = b + t
        else:
            b = a.pow_mod((q**d - 1) // 2, f) - Poly.one(F)
        g = poly_gcd(f, b)
        if 0 < g.degree < n:
            return _equal_degree(g, d, rng) + _equal_degree((f // g).monic(), d, rng)
