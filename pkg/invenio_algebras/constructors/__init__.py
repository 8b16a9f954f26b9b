# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Constructors for group algebras, matrix algebras and their relatives."""

from .builders import (
    direct_sum,
    gbar_subset,
    group_algebra,
    group_subset,
    matrix_algebra,
    matrix_element,
    scalar_subset,
    structure_constants_algebra,
    triangular_algebra,
    twisted_group_algebra,
)
from .cocycles import Cocycle
from .groups import FiniteGroupTable, bundled_groups, quaternion_group
from .hypotheses import example4_applies, omega_examples

__all__ = (
    "Cocycle",
    "FiniteGroupTable",
    "bundled_groups",
    "direct_sum",
    "example4_applies",
    "gbar_subset",
    "group_algebra",
    "group_subset",
    "matrix_algebra",
    "matrix_element",
    "omega_examples",
    "quaternion_group",
    "scalar_subset",
    "structure_constants_algebra",
    "triangular_algebra",
    "twisted_group_algebra",
)
