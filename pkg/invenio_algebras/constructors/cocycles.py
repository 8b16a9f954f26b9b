# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Scalar 2-cocycles of finite groups."""

from ..errors import InvalidCocycle


class Cocycle:
    """A table ``lambda(g, h)`` of nonzero scalars on a finite group.

    The 2-cocycle identity ``l(g,h) l(gh,k) = l(h,k) l(g,hk)`` is checked on
    every triple at construction.
    """

    def __init__(self, field, group, values, validate=True, raw=False):
        """Constructor.

        :param field: The :class:`FieldSpec` of the values.
        :param group: The :class:`FiniteGroupTable`.
        :param values: ``n x n`` table of coercible scalars.
        :param raw: The values are already raw field values.
        """
        n = group.order
        if len(values) != n or any(len(row) != n for row in values):
            raise InvalidCocycle(
                reason=f"A cocycle on a group of order {n} needs an {n}x{n} table",
                location="cocycle",
            )
        self.field = field
        self.group = group
        self.values = tuple(
            tuple(row) if raw else tuple(field.coerce(c) for c in row) for row in values
        )
        if validate:
            self.validate()

    def __call__(self, g, h):
        """Raw value ``lambda(g, h)``."""
        return self.values[g][h]

    def validate(self):
        """Check that entries are units and the cocycle identity holds."""
        F, G = self.field, self.group
        n = G.order
        for g in range(n):
            for h in range(n):
                if F.is_zero(self.values[g][h]):
                    raise InvalidCocycle(
                        reason=f"Cocycle value at ({g}, {h}) is zero",
                        location=f"cocycle/{g}/{h}",
                    )
        for g in range(n):
            for h in range(n):
                gh = G.mul(g, h)
                for k in range(n):
                    left = F.mul(self.values[g][h], self.values[gh][k])
                    right = F.mul(self.values[h][k], self.values[g][G.mul(h, k)])
                    if left != right:
                        raise InvalidCocycle(triple=(g, h, k), location="cocycle")

    def is_normalized(self):
        """Whether ``lambda(1, g) = lambda(g, 1) = 1`` for all ``g``."""
        e, one = self.group.identity, self.field.one
        return all(
            self.values[e][g] == one and self.values[g][e] == one
            for g in range(self.group.order)
        )

    def normalized(self):
        """The cohomologous cocycle with ``lambda(1, 1) = 1``.

        For any 2-cocycle ``lambda(1, g) = lambda(g, 1) = lambda(1, 1)``, so
        dividing by ``lambda(1, 1)`` (rescaling every ``u_g``) normalizes it.
        """
        F = self.field
        e = self.group.identity
        inv = F.inv(self.values[e][e])
        return Cocycle(
            F,
            self.group,
            [[F.mul(inv, c) for c in row] for row in self.values],
            validate=False,
            raw=True,
        )

    def is_trivial_table(self):
        """Whether every value is one."""
        one = self.field.one
        return all(c == one for row in self.values for c in row)

    def to_json(self):
        """Serialize the table."""
        F = self.field
        return [[F.to_json(c) for c in row] for row in self.values]

    @classmethod
    def trivial(cls, field, group):
        """The constant cocycle one."""
        n = group.order
        return cls(
            field, group, [[field.one] * n for _ in range(n)], validate=False, raw=True
        )

    @classmethod
    def coboundary(cls, field, group, values):
        """The coboundary ``lambda(g, h) = f(g) f(h) / f(gh)`` of nonzero ``f``."""
        F = field
        f = [F.coerce(v) for v in values]
        if len(f) != group.order or any(F.is_zero(v) for v in f):
            raise InvalidCocycle(
                reason="A coboundary needs one nonzero scalar per group element",
                location="coboundary",
            )
        table = [
            [F.div(F.mul(f[g], f[h]), f[group.mul(g, h)]) for h in range(group.order)]
            for g in range(group.order)
        ]
        return cls(F, group, table, raw=True)
