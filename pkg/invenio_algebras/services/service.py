# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Algebras service."""

import os
import time

from flask import current_app

from .. import __version__
from ..algebras.operations import center, is_commutative, lie_commutator
from ..algebras.quotient import quotient
from ..algebras.radical import METHODS, jacobson_radical
from ..constructors.hypotheses import example4_applies, omega_examples
from ..elements.decomposition import local_decomposition
from ..elements.profile import classify
from ..errors import (
    DomainError,
    EnumerationTooLarge,
    InvalidArgument,
    UnsupportedFactorization,
)
from ..proxies import current_example_registry, current_group_registry
from ..records.api import AtlasStore
from ..sandwich.nabla import corollary_report, nabla_sandwich
from ..sandwich.witnesses import conjugate_witnesses, verify_witnesses
from ..units.reports import (
    OMEGA_METHODS,
    OMEGA_MODES,
    fc_report,
    omega_annihilator_count,
    omega_subset,
    radical_structure_report,
    unit_structure_report,
)
from ..units.table import conjugacy_data, enumerate_units
from .descriptions import load_description
from .results import AtlasEntry, ReportItem

REPORT_SCHEMA = "local://reports/report-v1.0.0.json"

# command name -> (required arguments, optional arguments)
COMMANDS = {
    "validate": (0, 0),
    "radical": (0, 1),
    "center": (0, 0),
    "decompose": (1, 0),
    "classify": (1, 0),
    "units": (0, 0),
    "fc": (0, 0),
    "series": (0, 0),
    "omega": (3, 0),
    "witnesses": (2, 1),
    "sandwich": (0, 0),
    "atlas": (0, 0),
}


class AlgebrasService:
    """Runs the report commands on algebra descriptions."""

    def __init__(self, config):
        """Constructor."""
        self.config = config

    @property
    def logger(self):
        """Application logger."""
        return current_app.logger

    #
    # Inputs
    #
    def groups(self):
        """Named groups available to descriptions."""
        return {group.type_id: group for group in current_group_registry}

    def load(self, source):
        """Load a description from a file path or a registered example id."""
        if not os.path.exists(source):
            example = current_example_registry.lookup(source, quiet=True)
            if example is not None:
                self.logger.debug("Loading bundled example %s", source)
                return example.load(groups=self.groups())
        return load_description(source, groups=self.groups())

    #
    # Dispatch
    #
    def run_command(self, command, description, args=(), timing=None):
        """Run ``command`` on a loaded description.

        :returns: A :class:`ReportItem`.
        :raises InvalidArgument: for unknown commands or wrong arity.
        """
        if command not in COMMANDS:
            raise InvalidArgument(f"Unknown command '{command}'", location="command")
        required, optional = COMMANDS[command]
        args = [str(a) for a in args]
        if not required <= len(args) <= required + optional:
            raise InvalidArgument(
                f"'{command}' takes {required} to {required + optional} arguments, "
                f"got {len(args)}",
                location="arguments",
            )
        timing = self.config.timing if timing is None else timing
        self.logger.debug("Running %s on %s", command, description.digest[:12])
        start = time.perf_counter()
        results, gates = getattr(self, f"_cmd_{command}")(description, *args)
        report = {
            "schema": REPORT_SCHEMA,
            "tool": {"name": "invenio-algebras", "version": __version__},
            "input_digest": description.digest,
            "command": command,
            "arguments": args,
            "algebra": description.summary(),
            "gates": gates,
            "results": results,
        }
        if timing:
            report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        return ReportItem(report)

    #
    # Helpers
    #
    def _radical(self, algebra, method="auto"):
        return jacobson_radical(
            algebra,
            method=method,
            enumeration_cap=self.config.radical_enumeration_cap,
            trace_dimension_cap=self.config.trace_dimension_cap,
        )

    def _units(self, algebra):
        return enumerate_units(
            algebra, cap=self.config.enumeration_cap, threads=self.config.threads
        )

    @staticmethod
    def _count(value, name):
        try:
            count = int(value)
        except ValueError as e:
            raise InvalidArgument(f"'{value}' is not a count", location=name) from e
        if count < 1:
            raise InvalidArgument("The count must be positive", location=name)
        return count

    #
    # Commands
    #
    def _cmd_validate(self, description):
        A = description.algebra
        results = {
            "kind": description.document["algebra"]["kind"],
            "dim": A.dim,
            "field": A.field.to_dict(),
            "labels": list(A.labels),
            "unity": A.unity.to_json(),
            "associative": True,
            "unital": True,
            "is_commutative": is_commutative(A)[0],
            "is_finite": A.is_finite,
            "size": A.size,
            "group": A.group.name if A.group is not None else None,
            "twisted": A.cocycle is not None,
            "elements": {
                k: v.to_json() for k, v in sorted(description.elements.items())
            },
            "omega_families": omega_examples(A),
        }
        return results, []

    def _cmd_radical(self, description, method="auto"):
        if method not in METHODS:
            raise InvalidArgument(
                f"Unknown radical method '{method}'", location="method"
            )
        A = description.algebra
        J = self._radical(A, method)
        results = {
            "method": method,
            "dim": J.dim,
            "basis": J.to_json(),
            "nilpotency_index": J.nilpotency_index(),
            "semisimple": J.is_zero(),
        }
        if not J.is_zero():
            residue, _ = quotient(A, J)
            results["quotient"] = {
                "dim": residue.dim,
                "radical_dim": self._radical(residue, method).dim,
                "is_commutative": is_commutative(residue)[0],
            }
        return results, []

    def _cmd_center(self, description):
        Z = center(description.algebra)
        return {"dim": Z.dim, "basis": Z.to_json(), "is_whole": Z.is_whole()}, []

    def _cmd_decompose(self, description, reference):
        cfg = self.config
        g = description.element(reference)
        decomposition = local_decomposition(
            g, degree_cap=cfg.factor_degree_cap, seed=cfg.factor_seed
        )
        results = decomposition.to_dict()
        results["checks"] = decomposition.check(degree_cap=cfg.factor_degree_cap)
        results["radical_shifts"] = [
            None if alpha is None else alpha.to_json()
            for alpha in (
                decomposition.radical_shift(i) for i in range(len(decomposition))
            )
        ]
        return results, []

    def _cmd_classify(self, description, reference):
        cfg = self.config
        g = description.element(reference)
        profile = classify(
            g,
            torsion_cap=cfg.torsion_order_cap,
            degree_cap=cfg.factor_degree_cap,
            seed=cfg.factor_seed,
        )
        if profile.torsion_capped:
            self.logger.warning(
                "Order of %s exceeds the torsion cap %s",
                reference,
                cfg.torsion_order_cap,
            )
        if not profile.torsion_known:
            self.logger.warning(
                "Torsion of %s not decided within the degree cap", reference
            )
        results = profile.to_dict()
        try:
            results["generates_infinite_field"] = example4_applies(
                g, degree_cap=cfg.factor_degree_cap
            )
        except UnsupportedFactorization:
            results["generates_infinite_field"] = None
        return results, []

    def _cmd_units(self, description):
        table = self._units(description.algebra)
        results = {
            "order": table.order,
            "elements": table.to_json(),
            "element_orders": [table.element_order(a) for a in range(table.order)],
            "is_abelian": table.is_abelian(),
            "center": table.to_json(table.center()),
            "conjugacy": conjugacy_data(table),
        }
        return results, []

    def _cmd_fc(self, description):
        A = description.algebra
        table = self._units(A)
        J = self._radical(A)
        structure = radical_structure_report(
            A, radical=J, enumeration_cap=self.config.radical_enumeration_cap
        )
        results = {"fc": fc_report(A, table), "radical_structure": structure}
        return results, [structure["gate"]]

    def _cmd_series(self, description):
        A = description.algebra
        table = self._units(A)
        report = unit_structure_report(
            A, table, radical=self._radical(A), cap=self.config.enumeration_cap
        )
        return report, [report["gate"]]

    def _cmd_omega(self, description, mode, x, y):
        if mode not in OMEGA_MODES:
            raise InvalidArgument(f"Unknown subset '{mode}'", location="subset")
        A = description.algebra
        if not A.is_finite and mode != "group":
            raise EnumerationTooLarge(
                reason=f"The subset '{mode}' is infinite over {A.field!r}"
            )
        z = lie_commutator(description.element(x), description.element(y))
        if z.is_zero():
            self.logger.warning("[%s, %s] = 0, no annihilator count", x, y)
        table = self._units(A) if mode == "units" else None
        subset = omega_subset(A, mode, table=table)
        counts = {
            method: omega_annihilator_count(subset, z, method=method)
            for method in OMEGA_METHODS
        }
        results = {
            "subset": mode,
            "commutator": z.to_json(),
            "counts": counts,
            "methods_agree": len({c["count"] for c in counts.values()}) == 1,
            "families": omega_examples(A),
        }
        gate = {
            "hypothesis": f"H = {mode} is an omega-subgroup",
            "status": results["families"]
            .get(mode, {})
            .get("status", "unsatisfiable at finite scale"),
            "gated": True,
        }
        return results, [gate]

    def _cmd_witnesses(self, description, a, g, k=None):
        count = self.config.default_shift_count if k is None else self._count(k, "k")
        witnesses = conjugate_witnesses(
            description.element(a), description.element(g), k=count
        )
        results = witnesses.to_dict()
        results["verified"] = verify_witnesses(witnesses)
        gates = []
        if description.algebra.is_finite:
            gates.append(
                {
                    "hypothesis": "infinitely many shifts alpha",
                    "status": "unsatisfiable at finite scale: distinct conjugates "
                    "do not certify an infinite class",
                    "gated": True,
                }
            )
        return results, gates

    def _cmd_sandwich(self, description):
        estimate = nabla_sandwich(
            description.algebra, sample=description.sample_units()
        )
        results = {"estimate": estimate.to_dict(), "corollary": None}
        if estimate.is_exact:
            results["corollary"] = corollary_report(
                estimate,
                torsion_units=list(description.elements.values()),
                torsion_cap=self.config.torsion_order_cap,
            )
        else:
            self.logger.warning(
                "Sandwich is an interval: dim %s <= nabla <= dim %s",
                estimate.lower.dim,
                estimate.upper.dim,
            )
        gate = {
            "hypothesis": "U(R) contains an omega-subgroup",
            "status": "satisfied by U(F) over an infinite field",
            "gated": False,
        }
        return results, [gate]

    #
    # Atlas
    #
    def atlas_commands(self, description):
        """Commands an atlas run computes for a description, in order."""
        A = description.algebra
        commands = [("validate", ()), ("radical", ()), ("center", ())]
        for name in sorted(description.elements):
            commands.append(("classify", (name,)))
            commands.append(("decompose", (name,)))
        if A.is_finite and A.size <= self.config.enumeration_cap:
            commands.extend([("units", ()), ("fc", ()), ("series", ())])
        if not A.is_finite:
            commands.append(("sandwich", ()))
        return commands

    def atlas_store(self, description, command, args=()):
        """Compute and store one report unless the atlas already has it.

        :returns: An :class:`AtlasEntry`.
        """
        store = AtlasStore(self.config.atlas_dir)
        key = " ".join([command, *args])
        if not self.config.force:
            name = store.lookup(description.digest, key)
            if name is not None:
                self.logger.debug("Atlas hit for %s", key)
                return AtlasEntry(key, "cached", filename=name)
        item = self.run_command(command, description, args, timing=False)
        name = store.store(description.digest, key, item.data)
        return AtlasEntry(key, "stored", filename=name)

    def _cmd_atlas(self, description):
        entries = []
        for command, args in self.atlas_commands(description):
            try:
                entries.append(self.atlas_store(description, command, args))
            except DomainError as e:
                key = " ".join([command, *args])
                self.logger.warning("Skipping %s in the atlas: %s", key, e)
                entries.append(AtlasEntry(key, "skipped", error=e))
        results = {
            "atlas_dir": str(self.config.atlas_dir),
            "entries": [entry.to_dict() for entry in entries],
        }
        return results, []
