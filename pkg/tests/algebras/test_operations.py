# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Centers, centralizers, inverses and annihilators."""

import pytest

from invenio_algebras.algebras import (
    center,
    centralizer,
    generated_subalgebra,
    invert,
    is_commutative,
    is_unit,
    left_annihilator,
    lie_commutator,
    right_annihilator,
    try_invert,
)
from invenio_algebras.errors import NotAUnit


def test_center(m2_q, q_c2, t2_q):
    """Matrix algebras have scalar centers; abelian group algebras are commutative."""
    Z = center(m2_q)
    assert Z.dim == 1
    assert m2_q.unity in Z
    assert center(q_c2).is_whole()
    assert center(t2_q).dim == 1


def test_centralizer(m2_q):
    """The centralizer of E11 is the diagonal."""
    E11, E12, E21, E22 = m2_q.basis()
    C = centralizer(m2_q, [E11])
    assert C.dim == 2
    assert E22 in C and E12 not in C


def test_inverses(m2_q, matrix):
    """Units invert, non-units do not."""
    g = matrix(m2_q, [1, 1], [0, 1])
    assert is_unit(g)
    assert invert(g) == matrix(m2_q, [1, -1], [0, 1])
    E11 = m2_q.basis_element(0)
    assert try_invert(E11) is None
    with pytest.raises(NotAUnit):
        invert(E11)


def test_annihilators(m2_q):
    """x E12 = 0 iff the first column of x vanishes."""
    E11, E12, E21, E22 = m2_q.basis()
    left = left_annihilator(E12)
    assert left.dim == 2
    assert E12 in left and E22 in left
    right = right_annihilator(E12)
    assert right.dim == 2
    assert E12 in right and E11 in right


def test_commutators(m2_q):
    """[E11, E12] = E12 and M2 is not commutative."""
    E11, E12, E21, E22 = m2_q.basis()
    assert lie_commutator(E11, E12) == E12
    commutative, pair = is_commutative(m2_q)
    assert not commutative
    assert not lie_commutator(*pair).is_zero()


def test_generated_subalgebra(m2_q):
    """F[E12] = span(1, E12)."""
    E12 = m2_q.basis_element(1)
    S = generated_subalgebra(m2_q, [E12])
    assert S.dim == 2
    assert S.is_subalgebra()
