# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Primary decomposition of the commutative subalgebra ``F[g]``."""

from ..algebras import linalg
from ..algebras.subspaces import Subspace
from ..arith.factor import DEFAULT_DEGREE_CAP, factor_poly, is_irreducible
from ..arith.fields import FieldScalar
from ..arith.polys import Poly, poly_gcdex
from .profile import minimal_polynomial, poly_at_element


class LocalComponent:
    """The summand ``F[g] e`` attached to one primary factor ``p^k`` of ``mu_g``."""

    def __init__(self, idempotent, factor, multiplicity, span, radical):
        """Constructor."""
        self.idempotent = idempotent
        self.factor = factor
        self.multiplicity = multiplicity
        self.span = span
        self.radical = radical

    @property
    def residue_degree(self):
        """Degree of the residue field ``F[g] e / T e`` over ``F``."""
        return self.factor.degree

    def to_dict(self):
        """Serialize the component."""
        return {
            "idempotent": self.idempotent.to_json(),
            "factor": self.factor.to_json(),
            "multiplicity": self.multiplicity,
            "dim": self.span.dim,
            "radical": self.radical.to_json(),
            "radical_nilpotency_index": self.radical.nilpotency_index(),
            "residue_degree": self.residue_degree,
        }


class LocalDecomposition:
    """``F[g] = F[g] e_1 + ... + F[g] e_s`` with local summands.

    Each ``e_i`` is obtained from the Chinese remainder theorem applied to
    the primary factors of the minimal polynomial of ``g``.
    """

    def __init__(self, element, minimal_polynomial, components):
        """Constructor."""
        self.element = element
        self.minimal_polynomial = minimal_polynomial
        self.components = components

    @property
    def idempotents(self):
        """The orthogonal idempotents in factor order."""
        return [c.idempotent for c in self.components]

    def __len__(self):
        """Number of local summands."""
        return len(self.components)

    def is_orthogonal(self):
        """Whether ``e_i e_j = delta_ij e_i``."""
        es = self.idempotents
        for i, a in enumerate(es):
            for j, b in enumerate(es):
                expected = a if i == j else a.algebra.zero
                if a * b != expected:
                    return False
        return True

    def is_complete(self):
        """Whether the idempotents sum to one."""
        A = self.element.algebra
        total = A.zero
        for e in self.idempotents:
            total = total + e
        return total == A.unity

    def radicals_nilpotent(self):
        """Whether every ``T e_i`` is a nilpotent subspace."""
        return all(c.radical.nilpotency_index() is not None for c in self.components)

    def residue_polynomial(self, i):
        """Least monic ``h`` with ``h(g) e_i`` inside ``T e_i``."""
        component = self.components[i]
        F = self.element.field
        radical = component.radical
        e = component.idempotent
        ge = self.element * e
        reduced = [radical.reduce(e.coords)]
        current = e
        while True:
            current = current * ge
            target = radical.reduce(current.coords)
            solution = linalg.solve(F, linalg.transpose(reduced), target)
            if solution is not None:
                return Poly.from_raw(F, [F.neg(c) for c in solution] + [F.one])
            reduced.append(target)

    def residues_are_fields(self, degree_cap=DEFAULT_DEGREE_CAP):
        """Whether every ``F[g] e_i / T e_i`` is a field.

        The residue ring is ``F[x] / (h)`` for the residue polynomial ``h``,
        a field exactly when ``h`` is irreducible.
        """
        for i, component in enumerate(self.components):
            h = self.residue_polynomial(i)
            if h.degree != component.residue_degree:
                return False
            if not is_irreducible(h, degree_cap=degree_cap):
                return False
        return True

    def radical_shift(self, i):
        """The scalar ``alpha`` with ``g e_i - alpha e_i`` in ``T e_i``, if any.

        Such an ``alpha`` exists only for a linear factor ``x - alpha`` and is
        then unique.
        """
        component = self.components[i]
        if component.factor.degree != 1:
            return None
        F = self.element.field
        alpha = F.neg(component.factor.coeff(0))
        e = component.idempotent
        shifted = self.element * e - e.scale(FieldScalar(F, alpha))
        if shifted not in component.radical:
            return None
        return FieldScalar(F, alpha)

    def shift_in_radical(self, i, alpha):
        """Whether ``g e_i - alpha e_i`` lies in ``T e_i``."""
        component = self.components[i]
        e = component.idempotent
        return (self.element * e - e.scale(alpha)) in component.radical

    def check(self, degree_cap=DEFAULT_DEGREE_CAP):
        """All structural checks by name."""
        return {
            "orthogonal": self.is_orthogonal(),
            "complete": self.is_complete(),
            "radicals_nilpotent": self.radicals_nilpotent(),
            "residues_are_fields": self.residues_are_fields(degree_cap=degree_cap),
        }

    def to_dict(self):
        """Serialize the decomposition."""
        return {
            "element": self.element.to_json(),
            "minimal_polynomial": self.minimal_polynomial.to_json(),
            "components": [c.to_dict() for c in self.components],
        }


def _power_span(g, e, n):
    """``span{e, g e, ..., g^(n-1) e}``."""
    A = g.algebra
    vectors = []
    current = e
    for _ in range(n):
        vectors.append(list(current.coords))
        current = g * current
    return Subspace(A, vectors)


def local_decomposition(g, degree_cap=DEFAULT_DEGREE_CAP, seed=0):
    """Decompose ``F[g]`` along the primary factors of the minimal polynomial.

    :raises UnsupportedFactorization: from factoring over the rationals.
    """
    mu = minimal_polynomial(g)
    factors = factor_poly(mu, degree_cap=degree_cap, seed=seed)
    components = []
    n = mu.degree
    for factor, mult in factors:
        primary = factor**mult
        cofactor = mu // primary
        s, _, _ = poly_gcdex(cofactor, primary)
        selector = (s * cofactor) % mu
        e = poly_at_element(selector, g)
        span = _power_span(g, e, n)
        root_part = poly_at_element(factor, g) * e
        radical = _power_span(g, root_part, n)
        components.append(LocalComponent(e, factor, mult, span, radical))
    return LocalDecomposition(g, mu, components)
