# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact dense linear algebra over a :class:`FieldSpec`.

Matrices are lists of rows of raw field values. Nothing here mutates its
arguments.
"""


def zeros(F, rows, cols):
    """A zero matrix."""
    return [[F.zero] * cols for _ in range(rows)]


def identity(F, n):
    """The ``n x n`` identity matrix."""
    m = zeros(F, n, n)
    for i in range(n):
        m[i][i] = F.one
    return m


def transpose(m, cols=None):
    """Transpose; ``cols`` is needed for matrices without rows."""
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def is_zero_vector(F, v):
    """Whether every entry is zero."""
    return all(F.is_zero(c) for c in v)


def add_vectors(F, u, v):
    """Entrywise sum."""
    return [F.add(a, b) for a, b in zip(u, v)]


def sub_vectors(F, u, v):
    """Entrywise difference."""
    return [F.sub(a, b) for a, b in zip(u, v)]


def scale_vector(F, c, v):
    """Scalar multiple."""
    return [F.mul(c, a) for a in v]


def dot(F, u, v):
    """Inner product."""
    acc = F.zero
    for a, b in zip(u, v):
        if not F.is_zero(a) and not F.is_zero(b):
            acc = F.add(acc, F.mul(a, b))
    return acc


def mat_vec(F, m, v):
    """Matrix times column vector."""
    return [dot(F, row, v) for row in m]


def vec_mat(F, v, m):
    """Row vector times matrix."""
    cols = len(m[0]) if m else 0
    out = [F.zero] * cols
    for a, row in zip(v, m):
        if F.is_zero(a):
            continue
        for j, b in enumerate(row):
            if not F.is_zero(b):
                out[j] = F.add(out[j], F.mul(a, b))
    return out


def mat_mul(F, a, b):
    """Matrix product."""
    return [vec_mat(F, row, b) for row in a]


def mat_pow(F, m, n):
    """Nonnegative matrix power."""
    result, base = identity(F, len(m)), m
    while n:
        if n & 1:
            result = mat_mul(F, result, base)
        base = mat_mul(F, base, base)
        n >>= 1
    return result


def trace(F, m):
    """Sum of the diagonal."""
    acc = F.zero
    for i, row in enumerate(m):
        acc = F.add(acc, row[i])
    return acc


def rref(F, rows):
    """Reduced row echelon form.

    :returns: ``(basis, pivots)`` where ``basis`` holds the nonzero rows of the
        reduced form and ``pivots`` their pivot columns.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if not F.is_zero(m[i_row][piv_c]):
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        inv = F.inv(m[piv_r][piv_c])
        m[piv_r] = [F.mul(inv, c) for c in m[piv_r]]
        pivot_row = m[piv_r]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if F.is_zero(fr):
                continue
            m[r] = [F.sub(a, F.mul(fr, b)) for a, b in zip(m[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return m[:piv_r], pivots


def rank(F, rows):
    """Rank of a matrix."""
    return len(rref(F, rows)[1])


def nullspace(F, m, cols=None):
    """Basis of ``{x : m x = 0}``, one vector per free column.

    The basis vector for free column ``f`` has a one in position ``f`` and
    zeros in every other free position, so the result is canonical.
    """
    n_cols = len(m[0]) if m else cols
    basis, pivots = rref(F, m)
    pivot_set = set(pivots)
    out = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = [F.zero] * n_cols
        v[free] = F.one
        for row, p in zip(basis, pivots):
            v[p] = F.neg(row[free])
        out.append(v)
    return out


def left_nullspace(F, m, rows=None):
    """Basis of ``{y : y m = 0}``."""
    n_rows = len(m) if m else rows
    return nullspace(F, transpose(m), cols=n_rows)


def solve(F, m, b):
    """One solution of ``m x = b`` or ``None`` if the system is inconsistent."""
    n_cols = len(m[0])
    augmented = [list(row) + [c] for row, c in zip(m, b)]
    basis, pivots = rref(F, augmented)
    if pivots and pivots[-1] == n_cols:
        return None
    x = [F.zero] * n_cols
    for row, p in zip(basis, pivots):
        x[p] = row[n_cols]
    return x


def inverse(F, m):
    """Inverse of a square matrix or ``None`` when singular."""
    n = len(m)
    augmented = [list(row) + e for row, e in zip(m, identity(F, n))]
    basis, pivots = rref(F, augmented)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return [row[n:] for row in basis]


def is_invertible(F, m):
    """Whether a square matrix is nonsingular."""
    return rank(F, m) == len(m)
