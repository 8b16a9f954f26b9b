# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact fields: the rationals, prime fields and their finite extensions.

A :class:`FieldSpec` owns the arithmetic. Internally every algorithm works on
*raw* values, which are cheap Python objects:

* rationals: :class:`fractions.Fraction` in lowest terms,
* ``GF(p)``: an ``int`` in ``[0, p)``,
* ``GF(p^k)``: an ``int`` encoding ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` of
  the residue ``c_0 + c_1 t + ... + c_{k-1} t^{k-1}`` modulo the defining
  polynomial.

:class:`FieldScalar` wraps a raw value together with its field for the
public API.
"""

import itertools
from fractions import Fraction

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from ..errors import FieldMismatch, InvalidFieldSpec

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"
EXTENSION_FIELD = "extension-field"

FIELD_KINDS = (RATIONALS, PRIME_FIELD, EXTENSION_FIELD)

# Fields at most this large get precomputed addition/multiplication tables.
_TABLE_LIMIT = 256


class FieldSpec:
    """A field in which all arithmetic is exact."""

    def __init__(self, kind, p=0, k=1, modulus=None):
        """Constructor.

        :param kind: One of ``rationals``, ``prime-field``, ``extension-field``.
        :param p: The characteristic (0 for the rationals).
        :param k: The degree over the prime field.
        :param modulus: Monic irreducible polynomial of degree ``k`` over
            ``GF(p)``, coefficients lowest degree first (extension case only).
        """
        if kind not in FIELD_KINDS:
            raise InvalidFieldSpec(f"Unknown field kind '{kind}'")
        if kind == RATIONALS:
            if p not in (0, None) or k != 1 or modulus:
                raise InvalidFieldSpec(
                    "The rationals have characteristic 0 and degree 1"
                )
            p, modulus = 0, None
        else:
            if not isinstance(p, int) or not isprime(p):
                raise InvalidFieldSpec(f"Characteristic {p} is not a prime")
            if kind == PRIME_FIELD:
                if k != 1:
                    raise InvalidFieldSpec("A prime field has degree 1")
                modulus = None
            else:
                if not isinstance(k, int) or k < 2:
                    raise InvalidFieldSpec("An extension field needs degree k >= 2")
                if modulus is None:
                    modulus = least_irreducible(p, k)
                modulus = tuple(int(c) % p for c in modulus)
                if len(modulus) != k + 1 or modulus[-1] != 1:
                    raise InvalidFieldSpec(
                        f"Modulus must be monic of degree {k}", location="modulus"
                    )
                if not gf_irreducible_p(ZZ.map(list(reversed(modulus))), p, ZZ):
                    raise InvalidFieldSpec(
                        f"Modulus is reducible over GF({p})", location="modulus"
                    )

        self.kind = kind
        self.p = p
        self.k = k
        self.modulus = modulus
        self._add_table = None
        self._mul_table = None
        self._inv_table = None

    #
    # Identity
    #
    def _key(self):
        return (self.kind, self.p, self.k, self.modulus)

    def __eq__(self, other):
        """Fields are equal when they have the same presentation."""
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        """Hash over the presentation."""
        return hash(self._key())

    def __repr__(self):
        """Return repr(self)."""
        if self.kind == RATIONALS:
            return "QQ"
        if self.kind == PRIME_FIELD:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    @property
    def is_finite(self):
        """Whether the field is finite."""
        return self.kind != RATIONALS

    @property
    def characteristic(self):
        """The characteristic of the field."""
        return self.p

    @property
    def order(self):
        """Number of elements, ``None`` for the rationals."""
        if self.kind == RATIONALS:
            return None
        return self.p**self.k

    #
    # Raw arithmetic
    #
    @property
    def zero(self):
        """Raw zero."""
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        """Raw one."""
        return Fraction(1) if self.kind == RATIONALS else 1

    def from_int(self, n):
        """Image of the integer ``n`` in the field."""
        if self.kind == RATIONALS:
            return Fraction(n)
        return n % self.p

    def is_zero(self, a):
        """Whether the raw value is zero."""
        return a == 0

    def add(self, a, b):
        """Raw sum."""
        if self.kind == RATIONALS:
            return a + b
        if self.kind == PRIME_FIELD:
            return (a + b) % self.p
        table = self._tables()[0]
        if table is not None:
            return table[a][b]
        return self._from_digits(
            [(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))]
        )

    def neg(self, a):
        """Raw additive inverse."""
        if self.kind == RATIONALS:
            return -a
        if self.kind == PRIME_FIELD:
            return (-a) % self.p
        return self._from_digits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a, b):
        """Raw difference."""
        if self.kind == RATIONALS:
            return a - b
        if self.kind == PRIME_FIELD:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        """Raw product."""
        if self.kind == RATIONALS:
            return a * b
        if self.kind == PRIME_FIELD:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        table = self._tables()[1]
        if table is not None:
            return table[a][b]
        return self._poly_mulmod(a, b)

    def inv(self, a):
        """Raw multiplicative inverse of a nonzero value."""
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.kind == RATIONALS:
            return 1 / a
        if self.kind == PRIME_FIELD:
            return pow(a, -1, self.p)
        table = self._tables()[2]
        if table is not None:
            return table[a]
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        """Raw quotient."""
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        """Raw power, negative exponents allowed for nonzero ``a``."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.kind == RATIONALS:
            return a**n
        if self.kind == PRIME_FIELD:
            return pow(a, n, self.p)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def pth_root(self, a):
        """The unique ``p``-th root of ``a`` in a finite field."""
        if self.kind == PRIME_FIELD:
            return a
        return self.pow(a, self.p ** (self.k - 1))

    def elements(self):
        """All raw elements of a finite field, in canonical order."""
        if self.kind == RATIONALS:
            raise ValueError("the rationals cannot be enumerated")
        return list(range(self.order))

    def nonzero_elements(self):
        """All nonzero raw elements of a finite field, in canonical order."""
        return self.elements()[1:]

    def sort_key(self, a):
        """Key ordering raw values canonically."""
        return a

    def random(self, rng, bound=5):
        """A random raw element; rational parts are bounded by ``bound``."""
        if self.kind == RATIONALS:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        return rng.randrange(self.order)

    #
    # Coercion and serialization
    #
    def coerce(self, value):
        """Convert ``value`` (int, Fraction, str, list, FieldScalar) to a raw value."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatch(f"Scalar over {value.field} used in {self}")
            return value.raw
        if isinstance(value, bool):
            raise InvalidFieldSpec(f"Cannot read {value!r} as a scalar of {self}")
        if self.kind == RATIONALS:
            try:
                if isinstance(value, (int, Fraction)):
                    return Fraction(value)
                if isinstance(value, str):
                    return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise InvalidFieldSpec(f"Cannot read {value!r} as a rational") from e
            raise InvalidFieldSpec(f"Cannot read {value!r} as a rational")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.div(
                self.from_int(value.numerator), self.from_int(value.denominator)
            )
        if isinstance(value, (list, tuple)):
            if len(value) > self.k or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in value
            ):
                raise InvalidFieldSpec(f"Cannot read {value!r} as an element of {self}")
            digits = [c % self.p for c in value] + [0] * (self.k - len(value))
            return self._from_digits(digits)
        raise InvalidFieldSpec(f"Cannot read {value!r} as an element of {self}")

    def scalar(self, value):
        """Wrap ``value`` as a :class:`FieldScalar` of this field."""
        return FieldScalar(self, self.coerce(value))

    def to_json(self, a):
        """Serialize a raw value: ``"p/q"`` or a coefficient list."""
        if self.kind == RATIONALS:
            return str(a)
        return self._digits(a)

    def to_dict(self):
        """Serialize the field block."""
        data = {"kind": self.kind}
        if self.kind != RATIONALS:
            data["p"] = self.p
        if self.kind == EXTENSION_FIELD:
            data["degree"] = self.k
            data["modulus"] = list(self.modulus)
        return data

    #
    # Extension field helpers
    #
    def digits(self, a):
        """Coefficients of a raw value over the prime field, lowest first."""
        return self._digits(a)

    def from_digits(self, digits):
        """Raw value from prime field coefficients, lowest first."""
        return self._from_digits([int(c) % self.p for c in digits])

    def _digits(self, a):
        digits = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            digits.append(r)
        return digits

    def _from_digits(self, digits):
        value = 0
        for c in reversed(digits):
            value = value * self.p + c
        return value

    def _poly_mulmod(self, a, b):
        p, k, modulus = self.p, self.k, self.modulus
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k + 1):
                    prod[d - k + i] = (prod[d - k + i] - c * modulus[i]) % p
        return self._from_digits(prod[:k])

    def _tables(self):
        if self._mul_table is None and self.order <= _TABLE_LIMIT:
            q = self.order
            elements = range(q)
            digits = [self._digits(a) for a in elements]
            self._add_table = [
                [
                    self._from_digits(
                        [(x + y) % self.p for x, y in zip(digits[a], digits[b])]
                    )
                    for b in elements
                ]
                for a in elements
            ]
            self._mul_table = [
                [self._poly_mulmod(a, b) if a and b else 0 for b in elements]
                for a in elements
            ]
            inverses = [None] * q
            for a in range(1, q):
                row = self._mul_table[a]
                inverses[a] = row.index(1)
            self._inv_table = inverses
        return self._add_table, self._mul_table, self._inv_table


class FieldScalar:
    """An element of a :class:`FieldSpec`."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        """Constructor (``raw`` must already be reduced)."""
        self.field = field
        self.raw = raw

    def _other(self, other):
        if not isinstance(other, (FieldScalar, int, Fraction)):
            return NotImplemented
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatch(f"Cannot combine {self.field} with {other.field}")
            return other.raw
        return self.field.coerce(other)

    def __add__(self, other):
        """Return self + other."""
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldScalar(self.field, self.field.add(self.raw, value))

    __radd__ = __add__

    def __sub__(self, other):
        """Return self - other."""
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldScalar(self.field, self.field.sub(self.raw, value))

    def __rsub__(self, other):
        """Return other - self."""
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldScalar(self.field, self.field.sub(value, self.raw))

    def __mul__(self, other):
        """Return self * other."""
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldScalar(self.field, self.field.mul(self.raw, value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Return self / other."""
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldScalar(self.field, self.field.div(self.raw, value))

    def __rtruediv__(self, other):
        """Return other / self."""
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldScalar(self.field, self.field.div(value, self.raw))

    def __neg__(self):
        """Return -self."""
        return FieldScalar(self.field, self.field.neg(self.raw))

    def __pow__(self, n):
        """Return self ** n."""
        return FieldScalar(self.field, self.field.pow(self.raw, n))

    def inverse(self):
        """Multiplicative inverse."""
        return FieldScalar(self.field, self.field.inv(self.raw))

    def is_zero(self):
        """Whether the scalar is zero."""
        return self.field.is_zero(self.raw)

    def __bool__(self):
        """Nonzero scalars are truthy."""
        return not self.is_zero()

    def __eq__(self, other):
        """Compare with scalars of the same field or coercible values."""
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.raw == other.raw
        try:
            return self.raw == self.field.coerce(other)
        except (FieldMismatch, InvalidFieldSpec):
            return NotImplemented

    def __hash__(self):
        """Hash over the field and raw value."""
        return hash((self.field, self.raw))

    def __repr__(self):
        """Return repr(self)."""
        return f"FieldScalar({self.field!r}, {self.to_json()!r})"

    def __str__(self):
        """Human readable form."""
        if self.field.kind == RATIONALS:
            return str(self.raw)
        if self.field.kind == PRIME_FIELD:
            return str(self.raw)
        return str(self.field.to_json(self.raw))

    def to_json(self):
        """Serialize the scalar."""
        return self.field.to_json(self.raw)


def rationals():
    """The field of rational numbers."""
    return FieldSpec(RATIONALS)


def prime_field(p):
    """The prime field ``GF(p)``."""
    return FieldSpec(PRIME_FIELD, p=p)


def extension_field(p, k, modulus=None):
    """The field ``GF(p^k)``; the modulus defaults to :func:`least_irreducible`."""
    return FieldSpec(EXTENSION_FIELD, p=p, k=k, modulus=modulus)


def least_irreducible(p, k):
    """Least monic irreducible polynomial of degree ``k`` over ``GF(p)``.

    Coefficients are returned lowest degree first; the comparison runs over
    the coefficient vector read from the constant term upwards.
    """
    for lower in itertools.product(range(p), repeat=k):
        candidate = list(lower) + [1]
        if candidate[0] == 0:
            continue
        if gf_irreducible_p(ZZ.map(list(reversed(candidate))), p, ZZ):
            return tuple(candidate)
    raise InvalidFieldSpec(f"No irreducible polynomial of degree {k} over GF({p})")


def field_from_dict(data):
    """Build a field from its serialized block."""
    kind = data.get("kind")
    if kind == RATIONALS:
        return rationals()
    if kind == PRIME_FIELD:
        return prime_field(data.get("p"))
    if kind == EXTENSION_FIELD:
        return extension_field(data.get("p"), data.get("degree"), data.get("modulus"))
    raise InvalidFieldSpec(f"Unknown field kind '{kind}'", location="field/kind")
