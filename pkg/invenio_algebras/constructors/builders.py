# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Builders for the standard families of algebras."""

from ..algebras.api import AlgebraSpec, AlgElement
from ..arith.fields import FieldScalar
from ..errors import FieldMismatch, InvalidAlgebra
from .cocycles import Cocycle


def _sparse_table(n):
    return [[{} for _ in range(n)] for _ in range(n)]


def _unit_vector(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def structure_constants_algebra(field, constants, one, labels=None):
    """An algebra given directly by its structure constants."""
    return AlgebraSpec(field, constants, one, labels=labels)


def group_algebra(field, group):
    """The group algebra ``F G`` with basis ``u_g`` and ``u_g u_h = u_{gh}``."""
    return twisted_group_algebra(field, group, Cocycle.trivial(field, group))


def twisted_group_algebra(field, group, cocycle):
    """The twisted group algebra ``F_lambda G``.

    The cocycle is normalized first, so ``u_1`` is the unity. The returned
    algebra remembers its group and normalized cocycle, which is what
    :func:`gbar_subset` enumerates.
    """
    if cocycle.field != field:
        raise FieldMismatch(f"Cocycle over {cocycle.field} for an algebra over {field}")
    if cocycle.group != group:
        raise InvalidAlgebra("The cocycle belongs to another group", location="cocycle")
    cocycle = cocycle.normalized()
    n = group.order
    products = _sparse_table(n)
    for g in range(n):
        for h in range(n):
            products[g][h] = {group.mul(g, h): cocycle(g, h)}
    trivial = cocycle.is_trivial_table()
    if trivial:
        labels = list(group.labels)
    else:
        labels = [f"u[{label}]" for label in group.labels]
    algebra = AlgebraSpec.from_products(
        field,
        products,
        _unit_vector(field, n, group.identity),
        labels=labels,
        validate=False,
    )
    algebra.group = group
    algebra.cocycle = None if trivial else cocycle
    return algebra


def matrix_algebra(field, n):
    """The full matrix algebra ``M_n(F)`` with basis ``E_ij`` in row-major order."""
    if n < 1:
        raise InvalidAlgebra("Matrix size must be positive", location="n")
    index = {(i, j): i * n + j for i in range(n) for j in range(n)}
    return _matrix_units_algebra(field, n, index)


def triangular_algebra(field, n):
    """The upper triangular matrices ``T_n(F)``, basis ``E_ij`` with ``i <= j``."""
    if n < 1:
        raise InvalidAlgebra("Matrix size must be positive", location="n")
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {pair: k for k, pair in enumerate(pairs)}
    return _matrix_units_algebra(field, n, index)


def _matrix_units_algebra(field, n, index):
    dim = len(index)
    pairs = sorted(index, key=index.get)
    products = _sparse_table(dim)
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if j == k:
                products[a][b] = {index[(i, l)]: field.one}
    one = [field.zero] * dim
    for i in range(n):
        one[index[(i, i)]] = field.one
    labels = [f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1},{j + 1}" for i, j in pairs]
    algebra = AlgebraSpec.from_products(
        field, products, one, labels=labels, validate=False
    )
    algebra.matrix_size = n
    algebra.matrix_index = dict(index)
    return algebra


def direct_sum(first, second):
    """The direct sum with componentwise product and unity ``(1, 1)``."""
    if first is None or second is None or not isinstance(second, AlgebraSpec):
        raise InvalidAlgebra(
            "Direct sum summands must be nonzero algebras", location="summands"
        )
    if first.field != second.field:
        raise FieldMismatch(
            f"Cannot sum algebras over {first.field} and {second.field}"
        )
    F = first.field
    m, n = first.dim, second.dim
    products = _sparse_table(m + n)
    for i in range(m):
        for j in range(m):
            products[i][j] = dict(first._products[i][j])
    for i in range(n):
        for j in range(n):
            products[m + i][m + j] = {m + k: c for k, c in second._products[i][j]}
    one = list(first.one) + list(second.one)
    labels = [f"{label}+0" for label in first.labels]
    labels += [f"0+{label}" for label in second.labels]
    return AlgebraSpec.from_products(F, products, one, labels=labels, validate=False)


def matrix_element(algebra, entries):
    """Element of a matrix or triangular algebra from a square array of scalars."""
    index = getattr(algebra, "matrix_index", None)
    if index is None:
        raise InvalidAlgebra("Not a matrix algebra")
    F = algebra.field
    coords = [F.zero] * algebra.dim
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            raw = F.coerce(value)
            if F.is_zero(raw):
                continue
            if (i, j) not in index:
                raise InvalidAlgebra(f"Entry ({i}, {j}) is outside the algebra")
            coords[index[(i, j)]] = raw
    return AlgElement(algebra, tuple(coords))


#
# Distinguished unit subsets
#
def _require_group(algebra):
    if algebra.group is None:
        raise InvalidAlgebra("The algebra was not built from a group")
    return algebra.group


def group_subset(algebra):
    """The basis elements ``u_g`` of a (twisted) group algebra."""
    group = _require_group(algebra)
    return [algebra.basis_element(g) for g in range(group.order)]


def scalar_subset(algebra):
    """The scalar units ``lambda * 1`` for ``lambda`` in ``U(F)`` (finite fields)."""
    F = algebra.field
    return [algebra.scalar(FieldScalar(F, c)) for c in F.nonzero_elements()]


def gbar_subset(algebra):
    """The set ``{lambda u_g : lambda in U(F), g in G}``, sorted by coordinates."""
    group = _require_group(algebra)
    F = algebra.field
    out = []
    for g in range(group.order):
        base = algebra.basis_element(g)
        out.extend(base.scale(FieldScalar(F, c)) for c in F.nonzero_elements())
    return sorted(out, key=lambda e: e.sort_key())
