# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Closed-form inverses of shifted torsion units and unipotent elements."""

import itertools

from ..algebras.operations import invert, lie_commutator
from ..arith.fields import FieldScalar
from ..errors import (
    ExhaustedField,
    NotCommuting,
    NotNilpotent,
    NotTorsion,
    ShiftNotUnit,
    VerificationFailed,
)
from .profile import DEFAULT_TORSION_CAP, minimal_polynomial, torsion_data


def torsion_shift_inverse(g, alpha, cap=DEFAULT_TORSION_CAP):
    """Inverse of ``g - alpha`` for a unit ``g`` of finite order ``m``.

    Uses ``(g - alpha)^-1 = (1 - alpha^m)^-1 sum_{i<m} alpha^(m-1-i) g^i``
    and checks the product on both sides before returning.

    :raises NotTorsion: if ``g`` has no finite order below ``cap``.
    :raises ShiftNotUnit: if ``alpha^m = 1``.
    """
    F = g.field
    a = F.coerce(alpha)
    m, _ = torsion_data(g, cap=cap)
    if m is None:
        raise NotTorsion(f"{g.to_json()} has no finite order up to {cap}")
    denominator = F.sub(F.one, F.pow(a, m))
    if F.is_zero(denominator):
        raise ShiftNotUnit(f"alpha^{m} = 1 for alpha = {F.to_json(a)}")
    A = g.algebra
    total = A.zero
    power = A.unity
    for i in range(m):
        total = total + power.scale(FieldScalar(F, F.pow(a, m - 1 - i)))
        power = power * g
    inverse = total.scale(FieldScalar(F, F.inv(denominator)))
    shifted = g - A.scalar(FieldScalar(F, a))
    if shifted * inverse != A.unity or inverse * shifted != A.unity:
        raise VerificationFailed("(g - alpha) * inverse != 1")
    return inverse


def _candidate_shifts(F):
    if F.is_finite:
        yield from F.elements()
        return
    yield F.zero
    for n in itertools.count(1):
        yield F.from_int(n)
        yield F.from_int(-n)


def unit_shifts(g, count=3):
    """The first ``count`` scalars ``alpha`` with ``g - alpha`` a unit.

    ``g - alpha`` is a unit iff ``alpha`` is not a root of the minimal
    polynomial of ``g``. Rationals are tried in the order ``0, 1, -1, 2, -2,
    ...``, finite fields in their canonical element order.

    :raises ExhaustedField: if the field has fewer than ``count`` such scalars.
    """
    F = g.field
    mu = minimal_polynomial(g)
    shifts = []
    if count <= 0:
        return shifts
    for a in _candidate_shifts(F):
        if not F.is_zero(mu(a)):
            shifts.append(FieldScalar(F, a))
            if len(shifts) == count:
                return shifts
    raise ExhaustedField(
        f"Only {len(shifts)} of the requested {count} shifts exist over {F}"
    )


def _nilpotency_index(x):
    mu = minimal_polynomial(x)
    if all(x.field.is_zero(c) for c in mu.coeffs[:-1]):
        return mu.degree
    raise NotNilpotent(f"{x.to_json()} is not nilpotent")


def _require_commuting(x, f):
    if not lie_commutator(x, f).is_zero():
        raise NotCommuting(f"{x.to_json()} and {f.to_json()} do not commute")


def unipotent_inverse(x, f):
    """Inverse of ``1 + x f`` as the finite series ``sum (-1)^i (x f)^i``.

    :raises NotNilpotent: if ``x`` is not nilpotent.
    :raises NotCommuting: if ``x f != f x``.
    """
    k = _nilpotency_index(x)
    _require_commuting(x, f)
    A = x.algebra
    xf = x * f
    total = A.zero
    term = A.unity
    for i in range(k):
        total = total - term if i % 2 else total + term
        term = term * xf
    if (A.unity + xf) * total != A.unity:
        raise VerificationFailed("(1 + x f) * inverse != 1")
    return total


def conjugation_identity(v, x, f, q):
    """Evaluate the rearranged conjugation identity for ``1 + x f`` and ``1 + x q``.

    When ``(1+xf)^-1 v (1+xf) = (1+xq)^-1 v (1+xq)`` the element
    ``w = x (f - q) (1 + x q)^-1`` commutes with ``v``.

    :returns: dict with ``premise`` (the conjugates agree), ``left`` (``v w``),
        ``right`` (``w v``) and ``holds``.
    """
    _nilpotency_index(x)
    _require_commuting(x, f)
    _require_commuting(x, q)
    A = x.algebra
    one_xf = A.unity + x * f
    one_xq = A.unity + x * q
    inv_xq = invert(one_xq)
    premise = invert(one_xf) * v * one_xf == inv_xq * v * one_xq
    w = x * (f - q) * inv_xq
    left, right = v * w, w * v
    return {
        "premise": premise,
        "left": left,
        "right": right,
        "holds": left == right,
    }
