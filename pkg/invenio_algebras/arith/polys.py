# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Dense univariate polynomials over a :class:`FieldSpec`."""

from ..errors import FieldMismatch
from .fields import FieldScalar


class Poly:
    """Polynomial with raw coefficients, lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        """Constructor.

        :param field: The :class:`FieldSpec` of the coefficients.
        :param coeffs: Coercible coefficients (ints, fractions, scalars), lowest
            first. Use :meth:`from_raw` for raw values.
        """
        coeffs = [field.coerce(c) for c in coeffs]
        while coeffs and field.is_zero(coeffs[-1]):
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_raw(cls, field, coeffs):
        """Build from already reduced raw coefficients."""
        poly = cls.__new__(cls)
        coeffs = list(coeffs)
        while coeffs and field.is_zero(coeffs[-1]):
            coeffs.pop()
        poly.field = field
        poly.coeffs = tuple(coeffs)
        return poly

    @classmethod
    def x(cls, field):
        """The polynomial ``x``."""
        return cls.from_raw(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field, value):
        """A constant polynomial."""
        return cls.from_raw(field, [field.coerce(value)])

    @classmethod
    def one(cls, field):
        """The constant polynomial ``1``."""
        return cls.from_raw(field, [field.one])

    #
    # Properties
    #
    @property
    def degree(self):
        """Degree, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Raw leading coefficient (zero for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self):
        """Whether this is the zero polynomial."""
        return not self.coeffs

    def is_monic(self):
        """Whether the leading coefficient is one."""
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, i):
        """Raw coefficient of ``x^i``."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def monic(self):
        """Scale to a monic polynomial."""
        if self.is_zero():
            return self
        inv = self.field.inv(self.lc)
        return Poly.from_raw(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def sort_key(self):
        """Canonical ordering: degree, then coefficients from the constant term."""
        return (self.degree, tuple(self.field.sort_key(c) for c in self.coeffs))

    #
    # Arithmetic
    #
    def _check(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"Polynomials over {self.field} and {other.field}")
        return other

    def __add__(self, other):
        """Return self + other."""
        other = self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        coeffs = [F.add(self.coeff(i), other.coeff(i)) for i in range(n)]
        return Poly.from_raw(F, coeffs)

    __radd__ = __add__

    def __neg__(self):
        """Return -self."""
        return Poly.from_raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        """Return self - other."""
        return self + (-self._check(other))

    def __rsub__(self, other):
        """Return other - self."""
        return self._check(other) - self

    def __mul__(self, other):
        """Return self * other."""
        other = self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.from_raw(F, [])
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly.from_raw(F, out)

    __rmul__ = __mul__

    def scale(self, raw):
        """Multiply by a raw scalar."""
        F = self.field
        return Poly.from_raw(F, [F.mul(c, raw) for c in self.coeffs])

    def __pow__(self, n):
        """Return self ** n for ``n >= 0``."""
        result, base = Poly.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Euclidean division."""
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = other.degree
        inv_lc = F.inv(other.lc)
        quo = [F.zero] * max(len(rem) - dq, 0)
        for d in range(len(rem) - 1, dq - 1, -1):
            c = rem[d]
            if F.is_zero(c):
                continue
            t = F.mul(c, inv_lc)
            quo[d - dq] = t
            for i, b in enumerate(other.coeffs):
                rem[d - dq + i] = F.sub(rem[d - dq + i], F.mul(t, b))
        return Poly.from_raw(F, quo), Poly.from_raw(F, rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        """Quotient of Euclidean division."""
        return divmod(self, other)[0]

    def __mod__(self, other):
        """Remainder of Euclidean division."""
        return divmod(self, other)[1]

    def derivative(self):
        """Formal derivative."""
        F = self.field
        return Poly.from_raw(
            F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:]
        )

    def pow_mod(self, n, modulus):
        """``self ** n`` reduced modulo ``modulus``."""
        result, base = Poly.one(self.field), self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def compose_frobenius_root(self):
        """Polynomial ``h`` with ``h(x)^p = self`` for ``self`` in ``F[x^p]``."""
        F = self.field
        p = F.p
        return Poly.from_raw(F, [F.pth_root(c) for c in self.coeffs[::p]])

    def __call__(self, value):
        """Evaluate at a raw scalar with Horner's rule."""
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, value), c)
        return acc

    #
    # Identity
    #
    def __eq__(self, other):
        """Polynomials are equal when field and coefficients agree."""
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        """Hash over field and coefficients."""
        return hash((self.field, self.coeffs))

    def __repr__(self):
        """Return repr(self)."""
        return f"Poly({self.field!r}, {self.to_json()!r})"

    def to_json(self):
        """Coefficient array, lowest degree first."""
        return [self.field.to_json(c) for c in self.coeffs]


def poly_gcd(f, g):
    """Monic greatest common divisor."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_gcdex(f, g):
    """Extended Euclid: ``(s, t, h)`` with ``s f + t g = h`` monic gcd."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(F), Poly.from_raw(F, [])
    t0, t1 = Poly.from_raw(F, []), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return s0, t0, r0
    inv = F.inv(r0.lc)
    return s0.scale(inv), t0.scale(inv), r0.scale(inv)


def eval_poly(f, alpha):
    """Evaluate ``f`` at the scalar ``alpha`` exactly.

    :raises FieldMismatch: if ``alpha`` belongs to another field.
    """
    if isinstance(alpha, FieldScalar):
        if alpha.field != f.field:
            raise FieldMismatch(f"Scalar over {alpha.field} evaluated in {f.field}")
        raw = alpha.raw
    else:
        raw = f.field.coerce(alpha)
    return FieldScalar(f.field, f(raw))
