# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Minimal polynomials and per-element classification."""

from fractions import Fraction
from math import lcm

from sympy import Symbol, cyclotomic_poly, factorint, totient

from ..algebras import linalg
from ..algebras.api import AlgElement
from ..arith.factor import DEFAULT_DEGREE_CAP, factor_poly
from ..arith.polys import Poly
from ..errors import UnsupportedFactorization

DEFAULT_TORSION_CAP = 10**6

_x = Symbol("x")


def minimal_polynomial(g):
    """The monic polynomial of least degree annihilating ``g``.

    Computed from the first linear dependency in ``1, g, g^2, ...``.
    """
    A = g.algebra
    F = A.field
    powers = [list(A.one)]
    while True:
        nxt = A.mul_vectors(powers[-1], g.coords)
        columns = linalg.transpose(powers)
        solution = linalg.solve(F, columns, nxt)
        if solution is not None:
            coeffs = [F.neg(c) for c in solution] + [F.one]
            return Poly.from_raw(F, coeffs)
        powers.append(nxt)


def poly_at_element(f, g):
    """``f(g)`` by Horner's rule inside the algebra."""
    A = g.algebra
    F = A.field
    acc = A.zero_vector()
    for c in reversed(f.coeffs):
        acc = A.mul_vectors(acc, g.coords)
        acc = linalg.add_vectors(F, acc, [F.mul(c, a) for a in A.one])
    return AlgElement(A, tuple(acc))


def _x_power_is_one(mu, e):
    F = mu.field
    return mu.degree >= 1 and Poly.x(F).pow_mod(e, mu) == Poly.one(F) % mu


def _order_dividing(mu, bound):
    """Least ``m`` dividing ``bound`` with ``x^m = 1`` modulo ``mu``."""
    m = bound
    for r in factorint(bound):
        while m % r == 0 and _x_power_is_one(mu, m // r):
            m //= r
    return m


def _cyclotomic_index(f):
    """``m`` with ``f`` equal to the ``m``-th cyclotomic polynomial, else ``None``."""
    d = f.degree
    for m in range(1, 2 * d * d + 3):
        if totient(m) != d:
            continue
        phi = cyclotomic_poly(m, _x, polys=True)
        coeffs = [Fraction(int(c)) for c in reversed(phi.all_coeffs())]
        if Poly.from_raw(f.field, coeffs) == f:
            return m
    return None


def _rational_torsion_order(mu, degree_cap):
    """Exact order over the rationals, ``None`` for elements of infinite order.

    A unit has finite order iff its minimal polynomial is squarefree with
    cyclotomic irreducible factors.
    """
    if any(c.denominator != 1 for c in mu.coeffs):
        return None
    order = 1
    for factor, mult in factor_poly(mu, degree_cap=degree_cap):
        m = _cyclotomic_index(factor) if mult == 1 else None
        if m is None:
            return None
        order = lcm(order, m)
    return order


def _finite_torsion_bound(mu, degree_cap, seed):
    """``lcm(q^d - 1) * p^t`` over the factors ``f^e`` of ``mu`` with ``p^t >= e``."""
    F = mu.field
    q, p = F.order, F.p
    bound, top = 1, 1
    for factor, mult in factor_poly(mu, degree_cap=degree_cap, seed=seed):
        bound = lcm(bound, q**factor.degree - 1)
        top = max(top, mult)
    t = 1
    while t < top:
        t *= p
    return bound * t


def torsion_data(
    g, mu=None, cap=DEFAULT_TORSION_CAP, degree_cap=DEFAULT_DEGREE_CAP, seed=0
):
    """Multiplicative order information for ``g``.

    :returns: ``(order, bound)``; ``order`` is ``None`` if ``g`` is not a unit,
        has infinite order, or its order exceeds ``cap``. ``bound`` is a
        multiple of the true order (``None`` when no finite order exists).
    :raises UnsupportedFactorization: over the rationals above ``degree_cap``.
    """
    mu = mu or minimal_polynomial(g)
    F = mu.field
    if F.is_zero(mu.coeff(0)):
        return None, None
    if F.is_finite:
        bound = _finite_torsion_bound(mu, degree_cap, seed)
        order = _order_dividing(mu, bound)
    else:
        order = _rational_torsion_order(mu, degree_cap)
        if order is None:
            return None, None
        bound = order
    if order > cap:
        return None, bound
    return order, bound


class ElementProfile:
    """Classification of a single algebra element."""

    def __init__(
        self,
        element,
        minimal_polynomial,
        nilpotency_index,
        is_unipotent,
        is_unit,
        torsion_order,
        torsion_bound,
        torsion_known=True,
    ):
        """Constructor."""
        self.element = element
        self.minimal_polynomial = minimal_polynomial
        self.nilpotency_index = nilpotency_index
        self.is_unipotent = is_unipotent
        self.is_unit = is_unit
        self.torsion_order = torsion_order
        self.torsion_bound = torsion_bound
        self.torsion_known = torsion_known
        self.is_algebraic = True

    @property
    def is_nilpotent(self):
        """Whether some power of the element vanishes."""
        return self.nilpotency_index is not None

    @property
    def is_torsion(self):
        """Whether a finite order below the cap was found."""
        return self.torsion_order is not None

    @property
    def torsion_capped(self):
        """The order exists but exceeds the configured cap."""
        return self.torsion_order is None and self.torsion_bound is not None

    def to_dict(self):
        """Serialize the profile."""
        return {
            "element": self.element.to_json(),
            "minimal_polynomial": self.minimal_polynomial.to_json(),
            "is_algebraic": self.is_algebraic,
            "is_nilpotent": self.is_nilpotent,
            "nilpotency_index": self.nilpotency_index,
            "is_unipotent": self.is_unipotent,
            "is_unit": self.is_unit,
            "torsion_order": self.torsion_order,
            "torsion_bound": self.torsion_bound,
            "torsion_capped": self.torsion_capped,
            "torsion_known": self.torsion_known,
        }


def _monomial_degree(f):
    """``j`` if ``f = x^j``, else ``None``."""
    if f.is_monic() and all(f.field.is_zero(c) for c in f.coeffs[:-1]):
        return f.degree
    return None


def classify(g, torsion_cap=DEFAULT_TORSION_CAP, degree_cap=DEFAULT_DEGREE_CAP, seed=0):
    """Minimal polynomial, nilpotency, unit and torsion data of ``g``."""
    mu = minimal_polynomial(g)
    nilpotency_index = _monomial_degree(mu)
    shifted = minimal_polynomial(g - g.algebra.unity)
    is_unit = not mu.field.is_zero(mu.coeff(0))
    torsion_known = True
    try:
        order, bound = torsion_data(
            g, mu=mu, cap=torsion_cap, degree_cap=degree_cap, seed=seed
        )
    except UnsupportedFactorization:
        order, bound, torsion_known = None, None, False
    return ElementProfile(
        element=g,
        minimal_polynomial=mu,
        nilpotency_index=nilpotency_index,
        is_unipotent=_monomial_degree(shifted) is not None,
        is_unit=is_unit,
        torsion_order=order,
        torsion_bound=bound,
        torsion_known=torsion_known,
    )


def is_nilpotent(g):
    """Whether ``g`` is nilpotent."""
    return _monomial_degree(minimal_polynomial(g)) is not None
