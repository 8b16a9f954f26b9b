# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Structure-constant algebras, subspaces, radicals and quotients."""

from .api import AlgebraSpec, AlgElement
from .operations import (
    center,
    centralizer,
    generated_subalgebra,
    invert,
    is_commutative,
    is_unit,
    left_annihilator,
    lie_commutator,
    multiply,
    right_annihilator,
    try_invert,
)
from .quotient import Projection, quotient
from .radical import (
    dickson_radical,
    iterated_trace_radical,
    jacobson_radical,
    quasi_regular_radical,
)
from .subspaces import Subspace

__all__ = (
    "AlgElement",
    "AlgebraSpec",
    "Projection",
    "Subspace",
    "center",
    "centralizer",
    "dickson_radical",
    "generated_subalgebra",
    "invert",
    "is_commutative",
    "is_unit",
    "iterated_trace_radical",
    "jacobson_radical",
    "left_annihilator",
    "lie_commutator",
    "multiply",
    "quasi_regular_radical",
    "quotient",
    "right_annihilator",
    "try_invert",
)
