# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact scalar and polynomial arithmetic."""

from .factor import expand_factors, factor_poly, is_irreducible
from .fields import (
    EXTENSION_FIELD,
    PRIME_FIELD,
    RATIONALS,
    FieldScalar,
    FieldSpec,
    extension_field,
    field_from_dict,
    least_irreducible,
    prime_field,
    rationals,
)
from .polys import Poly, eval_poly, poly_gcd, poly_gcdex

__all__ = (
    "EXTENSION_FIELD",
    "PRIME_FIELD",
    "RATIONALS",
    "FieldScalar",
    "FieldSpec",
    "Poly",
    "eval_poly",
    "expand_factors",
    "extension_field",
    "factor_poly",
    "field_from_dict",
    "is_irreducible",
    "least_irreducible",
    "poly_gcd",
    "poly_gcdex",
    "prime_field",
    "rationals",
)
