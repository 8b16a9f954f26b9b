# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""FC-radical reports and hypothesis-gated conclusions for finite algebras.

Every omega-subgroup is infinite, so over a finite field the hypotheses of
the structure theorems never hold. The reports below still evaluate each
conclusion on the enumerated data and label it, without claiming anything
about the theorems themselves.
"""

from ..algebras.operations import center, is_commutative, left_annihilator
from ..algebras.quotient import quotient
from ..algebras.radical import DEFAULT_ENUMERATION_CAP as RADICAL_ENUMERATION_CAP
from ..algebras.radical import jacobson_radical
from ..algebras.subspaces import Subspace
from ..constructors.builders import gbar_subset, group_subset, scalar_subset
from ..elements.profile import is_nilpotent
from ..errors import InvalidAlgebra, ZeroCommutator
from .series import generated_subgroup, is_normal, series_report
from .table import DEFAULT_ENUMERATION_CAP, enumerate_units

FINITE_SCALE = (
    "unsatisfiable at finite scale: omega-subgroups are infinite by definition"
)
OMEGA_MODES = ("units", "group", "scalars", "gbar")
OMEGA_METHODS = ("subspace", "product")


def _gate(hypothesis, status=FINITE_SCALE):
    return {"hypothesis": hypothesis, "status": status, "gated": True}


def _conclusion(statement, holds, **data):
    result = {"statement": statement, "holds": bool(holds)}
    result.update(data)
    return result


#
# FC-radical and FC-subring
#
def _conjugate_count(table, element):
    """Number of distinct conjugates ``u^-1 r u`` of an algebra element."""
    seen = set()
    for a, u in enumerate(table.elements):
        u_inv = table.elements[table.inverse(a)]
        seen.add((u_inv * element * u).coords)
    return len(seen)


def fc_report(algebra, table):
    """``Delta U``, ``nabla(R)`` and ``t(Delta U)`` read off the definitions.

    Every centralizer in a finite group has finite index, so both sets are
    everything; the per-element index table carries the information.
    """
    n = table.order
    rows = []
    class_equation = True
    histogram = {}
    for a in range(n):
        class_size = len(table.class_of(a))
        centralizer = len(table.centralizer(a))
        class_equation = class_equation and class_size * centralizer == n
        histogram[class_size] = histogram.get(class_size, 0) + 1
        rows.append(
            {
                "element": table.elements[a].to_json(),
                "order": table.element_order(a),
                "class_size": class_size,
                "centralizer_order": centralizer,
                "index": n // centralizer,
            }
        )
    # [U : C(u)] = |u^U|, finite for every u of a finite group
    delta = [a for a, row in enumerate(rows) if row["index"] == row["class_size"]]
    torsion = [a for a in delta if n % rows[a]["order"] == 0]
    torsion_subgroup = generated_subgroup(table, torsion) == sorted(torsion)
    # Delta U / t(Delta U) abelian iff every commutator lies in t(Delta U)
    torsion_set = set(torsion)
    quotient_abelian = all(
        table.commutator(a, b) in torsion_set for a in delta for b in delta
    )
    basis_conjugates = [_conjugate_count(table, b) for b in algebra.basis()]
    # nabla is a subspace, so it is everything once it holds the basis
    nabla_whole = all(count <= n for count in basis_conjugates)
    return {
        "unit_order": n,
        "delta": {"order": len(delta), "equals_units": len(delta) == n},
        "nabla": {
            "dim": algebra.dim,
            "equals_algebra": nabla_whole,
            "basis_conjugate_counts": basis_conjugates,
        },
        "torsion": {
            "order": len(torsion),
            "equals_delta": len(torsion) == len(delta),
            "is_subgroup": torsion_subgroup,
            "quotient_abelian": quotient_abelian,
        },
        "class_sizes": sorted(len(c) for c in table.conjugacy_classes()),
        "class_equation": class_equation
        and sum(len(c) for c in table.conjugacy_classes()) == n,
        "index_histogram": [[k, histogram[k]] for k in sorted(histogram)],
        "index_table": rows,
    }


#
# Omega annihilator counts
#
def omega_subset(algebra, mode, table=None):
    """The subset ``H`` of units used by :func:`omega_annihilator_count`.

    :param mode: ``units`` (the whole enumerated group), ``group`` (the
        ``u_g``), ``scalars`` (``U(F) 1``) or ``gbar`` (``lambda u_g``).
    """
    if mode == "units":
        return list((table or enumerate_units(algebra)).elements)
    if mode == "group":
        return group_subset(algebra)
    if mode == "scalars":
        return scalar_subset(algebra)
    if mode == "gbar":
        return gbar_subset(algebra)
    raise InvalidAlgebra(f"Unknown omega subset '{mode}'", location="mode")


def omega_annihilator_count(subset, z, method="subspace", form="1-h"):
    """Count the ``h`` in ``subset`` with ``(1 - h) z = 0``.

    :param method: ``subspace`` tests membership of ``1 - h`` in the left
        annihilator of ``z``; ``product`` multiplies directly.
    :param form: ``1-h`` or ``g-1`` (the same count, reported either way).
    :raises ZeroCommutator: if ``z = 0``.
    """
    if z.is_zero():
        raise ZeroCommutator("The annihilator condition needs a nonzero commutator")
    if method not in OMEGA_METHODS:
        raise ValueError(f"Unknown counting method '{method}'")
    A = z.algebra
    one = A.unity
    if method == "subspace":
        annihilator = left_annihilator(z)
        hits = [h for h in subset if (one - h) in annihilator]
    else:
        hits = [h for h in subset if ((one - h) * z).is_zero()]
    return {
        "form": form,
        "method": method,
        "subset_size": len(subset),
        "count": len(hits),
        "includes_identity": any(h == one for h in hits),
        "witnesses": [h.to_json() for h in hits],
    }


#
# Radical and unit groups
#
def radical_unit_check(algebra, table, radical=None, cap=DEFAULT_ENUMERATION_CAP):
    """Check ``|U(A)| = |J| |U(A/J)|`` and that ``1 + J`` is normal in ``U(A)``."""
    J = radical if radical is not None else jacobson_radical(algebra)
    if J.is_whole():
        raise InvalidAlgebra("The radical of a unital algebra is proper")
    if J.is_zero():
        residue_order = table.order
    else:
        residue, _ = quotient(algebra, J)
        residue_order = enumerate_units(residue, cap=cap).order
    one_plus = sorted(table.index(algebra.unity + j) for j in J.iter_elements())
    is_subgroup = generated_subgroup(table, one_plus) == one_plus
    return {
        "unit_order": table.order,
        "radical_size": J.size,
        "residue_unit_order": residue_order,
        "orders_match": table.order == J.size * residue_order,
        "one_plus_radical_subgroup": is_subgroup,
        "one_plus_radical_normal": is_subgroup and is_normal(table, one_plus),
    }


def radical_structure_report(
    algebra, radical=None, enumeration_cap=RADICAL_ENUMERATION_CAP
):
    """Radical and quotient conclusions evaluated on a finite algebra.

    For a finite algebra the FC-subalgebra is the whole algebra and every
    element is algebraic.
    """
    if not algebra.is_finite:
        return {
            "gate": _gate(
                "U(R) contains an omega-subgroup",
                status="satisfied by U(F); conclusions concern nabla(R), "
                "see the sandwich report",
            ),
            "conclusions": [],
        }
    J = radical if radical is not None else jacobson_radical(algebra)
    Z = center(algebra)
    conclusions = [
        _conclusion("J(A) is central in nabla(R) = R", J <= Z, radical_dim=J.dim),
        _conclusion(
            "J(A) is nilpotent",
            J.nilpotency_index() is not None,
            nilpotency_index=J.nilpotency_index(),
        ),
    ]
    if J.is_zero():
        commutative = is_commutative(algebra)[0]
    else:
        commutative = is_commutative(quotient(algebra, J)[0])[0]
    conclusions.append(_conclusion("A/J(A) is commutative", commutative))
    if algebra.size <= enumeration_cap:
        nilpotents = [x for x in algebra.iter_elements() if is_nilpotent(x)]
        span = Subspace.from_elements(algebra, nilpotents)
        forms_ideal = span.size == len(nilpotents) and span.is_ideal()
        conclusions.append(
            _conclusion(
                "the nilpotent elements form an ideal",
                forms_ideal,
                nilpotent_count=len(nilpotents),
            )
        )
    return {
        "gate": _gate("U(R) contains an omega-subgroup"),
        "conclusions": conclusions,
    }


def unit_structure_report(algebra, table, radical=None, cap=DEFAULT_ENUMERATION_CAP):
    """Group-theoretic conclusions evaluated on an enumerated unit group.

    At finite scale ``t(Delta U) = Delta U = U``. The report says "at most 2"
    for the nilpotency class throughout; one conclusion states class exactly
    2 while the corollary states at most 2.
    """
    series = series_report(table)
    conclusions = [
        _conclusion(
            "the commutator subgroup of t(Delta U) consists of unipotent elements",
            series.commutators_unipotent,
            commutator_order=len(series.commutator_subgroup),
        ),
        _conclusion(
            "the commutator subgroup of t(Delta U) is central in Delta U",
            series.commutators_central,
        ),
        _conclusion(
            "Delta U is nilpotent of class at most 2",
            series.nilpotency_class is not None and series.nilpotency_class <= 2,
            nilpotency_class=series.nilpotency_class,
            note="one statement says class 2, the corollary says at most 2",
        ),
        _conclusion(
            "Delta U is solvable of length at most 3",
            series.derived_length is not None and series.derived_length <= 3,
            derived_length=series.derived_length,
        ),
        _conclusion(
            "t(Delta U) is nilpotent of class at most 2",
            series.nilpotency_class is not None and series.nilpotency_class <= 2,
            nilpotency_class=series.nilpotency_class,
        ),
    ]
    return {
        "gate": _gate("U(R) contains an omega-subgroup"),
        "conclusions": conclusions,
        "series": series.to_dict(),
        "radical_units": radical_unit_check(algebra, table, radical=radical, cap=cap),
    }
