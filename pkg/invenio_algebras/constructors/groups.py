# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Finite groups given by explicit Cayley tables.

Elements are the indices ``0 .. n-1``; ``cayley[i][j]`` is the index of the
product ``g_i g_j``. Bundled groups are registered by their ``type_id`` in
the group registry of the extension.
"""

import random

from sympy.combinatorics import Permutation, PermutationGroup

from ..errors import InvalidGroupTable

FULL_ASSOCIATIVITY_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 20000


class FiniteGroupTable:
    """A finite group with a validated Cayley table."""

    def __init__(self, cayley, name=None, labels=None, validate=True, seed=0):
        """Constructor.

        :param cayley: ``n x n`` table of element indices.
        :param name: Registry id of the group (e.g. ``S3``).
        :param labels: Optional element names.
        :param seed: Seed for sampled associativity checks on large tables.
        """
        self.cayley = tuple(tuple(row) for row in cayley)
        self.order = len(self.cayley)
        self.name = name or f"G{self.order}"
        if labels:
            self.labels = tuple(labels)
        else:
            self.labels = tuple(f"g{i}" for i in range(self.order))
        self.identity = None
        self.inverses = None
        if validate:
            self.validate(seed=seed)
        else:
            self._find_identity()

    @property
    def type_id(self):
        """Registry id."""
        return self.name

    #
    # Validation
    #
    def validate(self, seed=0):
        """Check the Latin square property, identity, inverses and associativity."""
        n = self.order
        if n == 0:
            raise InvalidGroupTable("A group table cannot be empty", location="cayley")
        full = set(range(n))
        for i, row in enumerate(self.cayley):
            if len(row) != n:
                raise InvalidGroupTable(
                    f"Row {i} has {len(row)} entries, expected {n}",
                    location=f"cayley/{i}",
                )
            if not all(isinstance(x, int) and 0 <= x < n for x in row):
                raise InvalidGroupTable(
                    f"Row {i} has entries outside 0..{n - 1}", location=f"cayley/{i}"
                )
            if set(row) != full:
                raise InvalidGroupTable(
                    f"Row {i} repeats an entry", location=f"cayley/{i}"
                )
        for j in range(n):
            if {self.cayley[i][j] for i in range(n)} != full:
                raise InvalidGroupTable(
                    f"Column {j} repeats an entry", location=f"cayley/*/{j}"
                )
        self._find_identity()
        if self.identity is None:
            raise InvalidGroupTable(
                "The table has no identity element", location="cayley"
            )
        for i, j in enumerate(self.inverses):
            if self.cayley[j][i] != self.identity:
                raise InvalidGroupTable(
                    f"Element {i} has no two-sided inverse", location=f"cayley/{i}"
                )
        if n <= FULL_ASSOCIATIVITY_LIMIT:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = random.Random(seed)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(ASSOCIATIVITY_SAMPLES)
            )
        t = self.cayley
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InvalidGroupTable(
                    f"Associativity fails on ({a}, {b}, {c})", location="cayley"
                )

    def _find_identity(self):
        n = self.order
        for e in range(n):
            if all(self.cayley[e][x] == x and self.cayley[x][e] == x for x in range(n)):
                self.identity = e
                break
        if self.identity is not None:
            self.inverses = tuple(self.cayley[i].index(self.identity) for i in range(n))

    #
    # Group operations
    #
    def mul(self, a, b):
        """Index of ``g_a g_b``."""
        return self.cayley[a][b]

    def inverse(self, a):
        """Index of ``g_a^{-1}``."""
        return self.inverses[a]

    def conjugate(self, a, b):
        """Index of ``g_b^{-1} g_a g_b``."""
        return self.mul(self.mul(self.inverse(b), a), b)

    def commutator(self, a, b):
        """Index of ``(g_a, g_b) = g_a^{-1} g_b^{-1} g_a g_b``."""
        return self.mul(self.mul(self.inverse(a), self.inverse(b)), self.mul(a, b))

    def power(self, a, k):
        """Index of ``g_a^k`` for ``k >= 0``."""
        result = self.identity
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def element_order(self, a):
        """Multiplicative order of ``g_a``."""
        x, k = a, 1
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def is_abelian(self):
        """Whether the table is symmetric."""
        n = self.order
        table = self.cayley
        return all(table[a][b] == table[b][a] for a in range(n) for b in range(n))

    def conjugacy_classes(self):
        """Conjugacy classes as sorted index lists, ordered by least member."""
        seen = set()
        classes = []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({self.conjugate(a, b) for b in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def __eq__(self, other):
        """Tables are equal when their Cayley tables agree."""
        return isinstance(other, FiniteGroupTable) and self.cayley == other.cayley

    def __hash__(self):
        """Hash over the table."""
        return hash(self.cayley)

    def __repr__(self):
        """Return repr(self)."""
        return f"<FiniteGroupTable {self.name} order={self.order}>"

    def to_dict(self):
        """Serialize the table."""
        return {"name": self.name, "cayley": [list(row) for row in self.cayley]}

    #
    # Factories
    #
    @classmethod
    def from_function(cls, elements, op, name=None, labels=None):
        """Build from an explicit element list and a multiplication function."""
        index = {e: i for i, e in enumerate(elements)}
        try:
            cayley = [[index[op(a, b)] for b in elements] for a in elements]
        except KeyError as e:
            raise InvalidGroupTable(f"Product {e} is not in the element list") from e
        return cls(cayley, name=name, labels=labels or [str(e) for e in elements])

    @classmethod
    def from_permutations(cls, generators, name=None):
        """The permutation group generated by ``generators`` (array forms).

        Elements are ordered with the identity first, then by array form.
        """
        group = PermutationGroup([Permutation(list(g)) for g in generators])
        elements = sorted(
            group.elements, key=lambda p: (not p.is_Identity, p.array_form)
        )
        return cls.from_function(
            elements,
            lambda a, b: a * b,
            name=name,
            labels=[str(tuple(p.array_form)) for p in elements],
        )

    @classmethod
    def cyclic(cls, n, name=None):
        """The cyclic group of order ``n`` with ``g_i = g^i``."""
        cayley = [[(i + j) % n for j in range(n)] for i in range(n)]
        labels = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
        return cls(cayley, name=name or f"C{n}", labels=labels)


_QUATERNION_UNITS = {
    ("1", "1"): (1, "1"),
    ("1", "i"): (1, "i"),
    ("1", "j"): (1, "j"),
    ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"),
    ("i", "i"): (-1, "1"),
    ("i", "j"): (1, "k"),
    ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"),
    ("j", "i"): (-1, "k"),
    ("j", "j"): (-1, "1"),
    ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"),
    ("k", "i"): (1, "j"),
    ("k", "j"): (-1, "i"),
    ("k", "k"): (-1, "1"),
}


def _quaternion_product(a, b):
    sign, unit = _QUATERNION_UNITS[(a[1], b[1])]
    return (a[0] * b[0] * sign, unit)


def quaternion_group():
    """The quaternion group of order 8."""
    elements = [(s, u) for s in (1, -1) for u in ("1", "i", "j", "k")]
    labels = [("" if s == 1 else "-") + u for s, u in elements]
    return FiniteGroupTable.from_function(
        elements, _quaternion_product, name="Q8", labels=labels
    )


def bundled_groups():
    """The groups shipped with the module."""
    groups = [FiniteGroupTable.cyclic(n) for n in range(2, 9)]
    groups.append(FiniteGroupTable.from_permutations([(1, 0, 2), (1, 2, 0)], name="S3"))
    groups.append(
        FiniteGroupTable.from_permutations([(1, 2, 3, 0), (3, 2, 1, 0)], name="D4")
    )
    groups.append(quaternion_group())
    groups.append(
        FiniteGroupTable.from_permutations([(1, 2, 0, 3), (1, 0, 3, 2)], name="A4")
    )
    return groups
