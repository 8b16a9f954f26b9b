# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Which families of omega-subgroups can exist for a given algebra.

An omega-subgroup is infinite by definition, so over a finite field none of
the families is realizable; the helpers below report the status of each
family without constructing anything infinite.
"""

from ..arith.factor import is_irreducible

SATISFIED = "satisfied"
UNSATISFIABLE = "unsatisfiable at finite scale"
NOT_APPLICABLE = "not applicable"
DOCUMENTED = "documented only"


def example4_applies(g, degree_cap=12):
    """Whether ``F[g]`` is an infinite field containing the unity.

    ``F[g]`` is a field iff the minimal polynomial of ``g`` is irreducible,
    and it is infinite iff the base field is.
    """
    from ..elements.profile import minimal_polynomial

    if g.field.is_finite:
        return False
    return is_irreducible(minimal_polynomial(g), degree_cap=degree_cap)


def omega_examples(algebra):
    """Status of the four standard omega-subgroup families for ``algebra``.

    :returns: A dict keyed by family with ``status`` and ``subset`` entries.
    """
    infinite = not algebra.field.is_finite
    has_group = algebra.group is not None
    if not has_group:
        gbar = NOT_APPLICABLE
    else:
        gbar = SATISFIED if infinite else UNSATISFIABLE
    return {
        "scalars": {
            "subset": "U(F)",
            "status": SATISFIED if infinite else UNSATISFIABLE,
            "note": "U(F) is an omega-subgroup exactly when F is infinite",
        },
        "group": {
            "subset": "G",
            "status": UNSATISFIABLE if has_group else NOT_APPLICABLE,
            "note": "group rings need an infinite group",
        },
        "gbar": {
            "subset": "{lambda u_g}",
            "status": gbar,
            "note": "twisted group algebras carry U(F) u_g; infinite iff F is",
        },
        "subfield": {
            "subset": "U(D)",
            "status": DOCUMENTED,
            "note": "an infinite subfield or skewfield D containing 1 "
            "is not constructed",
        },
    }
