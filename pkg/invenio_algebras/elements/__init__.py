# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Per-element analysis: minimal polynomials, inverses, local decompositions."""

from .decomposition import LocalComponent, LocalDecomposition, local_decomposition
from .inverses import (
    conjugation_identity,
    torsion_shift_inverse,
    unipotent_inverse,
    unit_shifts,
)
from .profile import (
    ElementProfile,
    classify,
    is_nilpotent,
    minimal_polynomial,
    poly_at_element,
    torsion_data,
)

__all__ = (
    "ElementProfile",
    "LocalComponent",
    "LocalDecomposition",
    "classify",
    "conjugation_identity",
    "is_nilpotent",
    "local_decomposition",
    "minimal_polynomial",
    "poly_at_element",
    "torsion_data",
    "torsion_shift_inverse",
    "unipotent_inverse",
    "unit_shifts",
)
