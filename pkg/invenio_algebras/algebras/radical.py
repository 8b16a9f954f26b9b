# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Jacobson radical of a finite-dimensional algebra.

Three methods are available:

* ``dickson``: in characteristic zero the radical is the kernel of the trace
  form ``(x, y) -> Tr(L_{xy})`` of the left-regular representation.
* ``trace``: over ``GF(p)`` an iterated trace criterion refines the kernel of
  the trace form through ``floor(log_p n)`` steps using traces of ``p^i``-th
  powers of integer lifts. Extension fields are first viewed as algebras over
  their prime field.
* ``enumeration``: over small finite algebras, ``x`` lies in the radical iff
  ``1 + a x`` is a unit for every ``a``. This is the reference oracle.
"""

from ..arith.fields import prime_field
from ..errors import EnumerationTooLarge, UnsupportedCharacteristic
from . import linalg
from .api import AlgebraSpec, AlgElement
from .operations import is_unit
from .subspaces import Subspace

DEFAULT_ENUMERATION_CAP = 4096
DEFAULT_TRACE_DIMENSION_CAP = 512

METHODS = ("auto", "dickson", "trace", "enumeration")


def jacobson_radical(
    algebra,
    method="auto",
    enumeration_cap=DEFAULT_ENUMERATION_CAP,
    trace_dimension_cap=DEFAULT_TRACE_DIMENSION_CAP,
):
    """The Jacobson radical as a :class:`Subspace`.

    :param method: One of ``auto``, ``dickson``, ``trace``, ``enumeration``.
    :param enumeration_cap: Largest ``|A|`` for the enumeration oracle.
    :param trace_dimension_cap: Largest prime-field dimension for ``trace``.
    :raises UnsupportedCharacteristic: if no method applies within the caps.
    """
    F = algebra.field
    if method not in METHODS:
        raise ValueError(f"Unknown radical method '{method}'")
    if not F.is_finite:
        if method in ("auto", "dickson"):
            return dickson_radical(algebra)
        raise UnsupportedCharacteristic(
            f"Method '{method}' needs a finite field, got {F!r}"
        )
    if method == "dickson":
        raise UnsupportedCharacteristic(
            "The trace form criterion needs characteristic 0"
        )

    prime_dim = algebra.dim * F.k
    if method in ("auto", "trace") and prime_dim <= trace_dimension_cap:
        return iterated_trace_radical(algebra)
    if method in ("auto", "enumeration") and algebra.size <= enumeration_cap:
        return quasi_regular_radical(algebra, cap=enumeration_cap)
    raise UnsupportedCharacteristic(
        f"No radical method for dimension {algebra.dim} over {F!r} within the caps "
        f"(trace dimension {trace_dimension_cap}, enumeration {enumeration_cap})"
    )


def _left_traces(algebra):
    """``Tr(L_{b_k})`` for every basis element."""
    F = algebra.field
    out = []
    for k in range(algebra.dim):
        acc = F.zero
        for m in range(algebra.dim):
            acc = F.add(acc, algebra.constant(k, m, m))
        out.append(acc)
    return out


def trace_form(algebra):
    """Gram matrix ``T[i][j] = Tr(L_{b_i b_j})``."""
    F = algebra.field
    traces = _left_traces(algebra)
    n = algebra.dim
    return [
        [linalg.dot(F, algebra.product_vector(i, j), traces) for j in range(n)]
        for i in range(n)
    ]


def dickson_radical(algebra):
    """Kernel of the trace form (characteristic zero)."""
    if algebra.field.is_finite:
        raise UnsupportedCharacteristic(
            "The trace form criterion needs characteristic 0"
        )
    return Subspace(algebra, linalg.nullspace(algebra.field, trace_form(algebra)))


#
# Finite fields
#
def restrict_to_prime_field(algebra):
    """View an algebra over ``GF(p^k)`` as an algebra over ``GF(p)``.

    The new basis element with index ``i * k + s`` is ``t^s b_i`` where ``t`` is
    the generator of the extension.

    :returns: ``(prime_algebra, lift)`` where ``lift`` maps a prime-field
        coordinate vector back to coordinates over the extension.
    """
    F = algebra.field
    if F.k == 1:
        return algebra, list
    P = prime_field(F.p)
    n, k = algebra.dim, F.k
    powers = [F.from_digits([1 if r == s else 0 for r in range(k)]) for s in range(k)]
    constants = []
    for i in range(n):
        for s in range(k):
            row = []
            for j in range(n):
                for t in range(k):
                    theta = F.mul(powers[s], powers[t])
                    vec = [0] * (n * k)
                    for m, c in enumerate(algebra.product_vector(i, j)):
                        if F.is_zero(c):
                            continue
                        for r, d in enumerate(F.digits(F.mul(theta, c))):
                            vec[m * k + r] = d
                    row.append(vec)
            constants.append(row)
    one = []
    for c in algebra.one:
        one.extend(F.digits(c))
    prime_algebra = AlgebraSpec(P, constants, one, validate=False, raw=True)

    def lift(vector):
        return [F.from_digits(vector[m * k : (m + 1) * k]) for m in range(n)]

    return prime_algebra, lift


def iterated_trace_radical(algebra):
    """Radical over a finite field by the iterated trace criterion."""
    F = algebra.field
    if not F.is_finite:
        raise UnsupportedCharacteristic(
            "The iterated trace criterion needs a finite field"
        )
    prime_algebra, lift = restrict_to_prime_field(algebra)
    vectors = _prime_field_radical(prime_algebra)
    return Subspace(algebra, [lift(v) for v in vectors])


def _prime_field_radical(algebra):
    P = algebra.field
    p = P.p
    n = algebra.dim
    level = 0
    while p ** (level + 1) <= n:
        level += 1
    basis = [algebra.basis_vector(i) for i in range(n)]
    current = [list(v) for v in basis]
    traces = _left_traces(algebra)
    for i in range(level + 1):
        if not current:
            break
        modulus = p ** (i + 1)
        rows = []
        for v in current:
            if i == 0:
                rows.append(
                    [linalg.dot(P, algebra.mul_vectors(v, b), traces) for b in basis]
                )
                continue
            rows.append(
                [
                    _lifted_trace_coefficient(
                        algebra.left_matrix(algebra.mul_vectors(v, b)), p, i, modulus
                    )
                    for b in basis
                ]
            )
        kernel = linalg.left_nullspace(P, rows)
        reduced, _ = linalg.rref(
            P, [linalg.vec_mat(P, coeffs, current) for coeffs in kernel]
        )
        current = reduced
    return current


def _lifted_trace_coefficient(matrix, p, i, modulus):
    """``(Tr(M~^{p^i}) mod p^{i+1}) / p^i`` for the integer lift ``M~``."""
    size = len(matrix)
    result = [[int(r == c) for c in range(size)] for r in range(size)]
    base = [[int(x) for x in row] for row in matrix]
    e = p**i
    while e:
        if e & 1:
            result = _int_mat_mul(result, base, modulus)
        e >>= 1
        if e:
            base = _int_mat_mul(base, base, modulus)
    t = sum(result[r][r] for r in range(size)) % modulus
    return (t // p**i) % p


def _int_mat_mul(a, b, modulus):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % modulus for col in bt] for row in a]


def is_nilpotent_vector(algebra, v):
    """Whether the element with coordinates ``v`` is nilpotent."""
    F = algebra.field
    power = list(v)
    for _ in range(algebra.dim + 1):
        if linalg.is_zero_vector(F, power):
            return True
        power = algebra.mul_vectors(power, v)
    return linalg.is_zero_vector(F, power)


def quasi_regular_radical(algebra, cap=DEFAULT_ENUMERATION_CAP):
    """Radical by brute force: ``x`` with ``1 + a x`` a unit for all ``a``.

    Only nilpotent candidates are tested, and for each one the left ideal
    ``A x`` is scanned.

    :raises EnumerationTooLarge: if ``|A|`` exceeds ``cap``.
    """
    F = algebra.field
    if not F.is_finite:
        raise UnsupportedCharacteristic("Enumeration needs a finite field")
    if algebra.size > cap:
        raise EnumerationTooLarge(required=algebra.size, cap=cap)
    quasi_regular = {}

    def one_plus_is_unit(y):
        key = tuple(y)
        if key not in quasi_regular:
            u = AlgElement(algebra, linalg.add_vectors(F, algebra.one, y))
            quasi_regular[key] = is_unit(u)
        return quasi_regular[key]

    members = []
    span = Subspace.zero(algebra)
    for coords in algebra.iter_vectors():
        if span.contains_vector(coords):
            continue
        if not is_nilpotent_vector(algebra, coords):
            continue
        products = [
            algebra.mul_vectors(algebra.basis_vector(i), coords)
            for i in range(algebra.dim)
        ]
        left_ideal = Subspace(algebra, products)
        if all(one_plus_is_unit(y.coords) for y in left_ideal.iter_elements()):
            members.append(list(coords))
            span = Subspace(algebra, members)
    return span
