# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact engine for finite-dimensional associative algebras."""

from .algebras.radical import DEFAULT_ENUMERATION_CAP, DEFAULT_TRACE_DIMENSION_CAP
from .arith.factor import DEFAULT_DEGREE_CAP
from .constructors.groups import bundled_groups
from .elements.profile import DEFAULT_TORSION_CAP
from .units.table import DEFAULT_ENUMERATION_CAP as DEFAULT_UNIT_ENUMERATION_CAP

ALGEBRAS_ENUMERATION_CAP = DEFAULT_UNIT_ENUMERATION_CAP
"""Largest algebra (number of elements) whose unit group is enumerated."""

ALGEBRAS_RADICAL_ENUMERATION_CAP = DEFAULT_ENUMERATION_CAP
"""Largest algebra for the brute-force quasi-regularity radical."""

ALGEBRAS_TRACE_DIMENSION_CAP = DEFAULT_TRACE_DIMENSION_CAP
"""Largest prime-field dimension for the iterated-trace radical."""

ALGEBRAS_FACTOR_DEGREE_CAP = DEFAULT_DEGREE_CAP
"""Largest degree factored over the rationals."""

ALGEBRAS_TORSION_ORDER_CAP = DEFAULT_TORSION_CAP
"""Multiplicative orders above this are reported as absent."""

ALGEBRAS_FACTOR_SEED = 0
"""Seed of the equal-degree splitting over finite fields."""

ALGEBRAS_THREADS = 1
"""Worker threads for unit enumeration."""

ALGEBRAS_DEFAULT_SHIFT_COUNT = 3
"""Number of shifts (and conjugate witnesses) when none is given."""

ALGEBRAS_ATLAS_DIR = "atlas"
"""Directory of the report atlas."""

ALGEBRAS_REGISTERED_GROUPS = bundled_groups()
"""Groups available by name in algebra descriptions."""

ALGEBRAS_REGISTERED_EXAMPLES = []
"""Additional example descriptions (the bundled ones are always registered)."""
