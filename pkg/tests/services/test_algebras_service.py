# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Algebras service tests."""

import json

import pytest

from invenio_algebras import __version__
from invenio_algebras.errors import (
    EnumerationTooLarge,
    InvalidArgument,
    UnsupportedCharacteristic,
    ZeroCommutator,
)
from invenio_algebras.records.api import AtlasStore
from invenio_algebras.services import AlgebrasServiceConfig


def test_service_config(app, algebras_service):
    """The service reads the application config."""
    config = AlgebrasServiceConfig.build(app)
    assert config.atlas_dir == app.config["ALGEBRAS_ATLAS_DIR"]
    assert algebras_service.config.atlas_dir == app.config["ALGEBRAS_ATLAS_DIR"]
    overridden = config.override(threads=4, timing=None)
    assert overridden.threads == 4
    assert overridden.timing is False
    assert config.threads == 1
    with pytest.raises(AttributeError):
        config.override(colour="blue")


def test_report_envelope(algebras_service, load):
    """Every report carries the tool, digest, arguments and algebra."""
    description = load("m2_q")
    item = algebras_service.run_command("validate", description)
    report = item.to_dict()
    assert report["$schema"] == "local://reports/report-v1.0.0.json"
    assert report["tool"] == {"name": "invenio-algebras", "version": __version__}
    assert report["input_digest"] == description.digest
    assert report["command"] == "validate"
    assert report["arguments"] == []
    assert report["algebra"]["labels"] == ["E11", "E12", "E21", "E22"]
    assert "timing" not in report
    assert json.loads(item.to_json()) == report


def test_determinism(algebras_service, load):
    """Identical inputs give identical bytes."""
    description = load("t2_f2")
    first = algebras_service.run_command("units", description).data
    second = algebras_service.run_command("units", load("t2_f2")).data
    assert first == second
    assert first.endswith(b"\n")


def test_report_item_serializes_once(algebras_service, load):
    """The report bytes are built on first access and reused."""
    item = algebras_service.run_command("center", load("t2_f2"))
    assert item.data is item.data
    assert item.to_json() == item.data.decode("utf-8")
    assert item.command == "center"
    assert item.results == item.to_dict()["results"]


def test_timing(algebras_service, load):
    """Timing is opt-in."""
    item = algebras_service.run_command("center", load("q_c2"), timing=True)
    assert item.to_dict()["timing"]["seconds"] >= 0


def test_validate(algebras_service, load):
    """Summary of a matrix algebra."""
    results = algebras_service.run_command("validate", load("m2_q")).results
    assert results["dim"] == 4
    assert results["kind"] == "matrix"
    assert not results["is_commutative"]
    assert not results["is_finite"]
    assert results["elements"]["d"] == ["1", "0", "0", "2"]


def test_radical(algebras_service, load):
    """Radical with the residue algebra."""
    results = algebras_service.run_command("radical", load("t2_f2")).results
    assert results["method"] == "auto"
    assert results["dim"] == 1
    assert results["nilpotency_index"] == 2
    assert not results["semisimple"]
    assert results["quotient"] == {"dim": 2, "radical_dim": 0, "is_commutative": True}
    item = algebras_service.run_command("radical", load("t2_f2"), ["enumeration"])
    assert item.results["dim"] == 1
    with pytest.raises(UnsupportedCharacteristic):
        algebras_service.run_command("radical", load("m2_q"), ["trace"])
    with pytest.raises(InvalidArgument):
        algebras_service.run_command("radical", load("m2_q"), ["magic"])


def test_center(algebras_service, load):
    """Commutative algebras are their own center."""
    results = algebras_service.run_command("center", load("q_c2")).results
    assert results["dim"] == 2
    assert results["is_whole"]


def test_classify_and_decompose(algebras_service, load):
    """Element reports."""
    description = load("m2_q")
    results = algebras_service.run_command("classify", description, ["u"]).results
    assert results["is_unipotent"]
    assert results["torsion_order"] is None
    results = algebras_service.run_command("classify", description, ["t"]).results
    assert results["torsion_order"] == 2
    results = algebras_service.run_command("decompose", description, ["d"]).results
    assert len(results["components"]) == 2
    assert all(results["checks"].values())
    assert sorted(results["radical_shifts"]) == ["1", "2"]


def test_units_fc_and_series(algebras_service, load):
    """Finite unit group reports are gated."""
    description = load("m2_f2")
    results = algebras_service.run_command("units", description).results
    assert results["order"] == 6
    assert sorted(results["element_orders"]) == [1, 2, 2, 2, 3, 3]
    assert sorted(results["conjugacy"]["class_sizes"]) == [1, 2, 3]
    item = algebras_service.run_command("fc", description)
    assert item.results["fc"]["class_sizes"] == [1, 2, 3]
    assert all(gate["gated"] for gate in item.to_dict()["gates"])
    item = algebras_service.run_command("series", description)
    assert item.results["series"]["derived_series"] == [6, 3, 1]
    assert item.to_dict()["gates"][0]["gated"]
    with pytest.raises(EnumerationTooLarge):
        algebras_service.run_command("units", load("m2_q"))


def test_omega(algebras_service, load):
    """Annihilator counts agree between methods."""
    description = load("t2_f2")
    item = algebras_service.run_command("omega", description, ["units", "E11", "E12"])
    assert item.results["counts"]["subspace"]["count"] == 2
    assert item.results["methods_agree"]
    with pytest.raises(ZeroCommutator):
        algebras_service.run_command("omega", description, ["units", "E11", "E11"])
    with pytest.raises(EnumerationTooLarge):
        algebras_service.run_command("omega", load("m2_q"), ["units", "E11", "E12"])
    with pytest.raises(InvalidArgument):
        algebras_service.run_command("omega", description, ["all", "E11", "E12"])


def test_witnesses(algebras_service, load):
    """Default shifts and explicit counts."""
    description = load("m2_q")
    item = algebras_service.run_command("witnesses", description, ["x", "d"])
    assert item.results["shifts"] == ["0", "-1", "-2"]
    assert item.results["all_distinct"]
    assert item.results["verified"]
    assert item.to_dict()["gates"] == []
    item = algebras_service.run_command("witnesses", description, ["x", "d", 2])
    assert len(item.results["conjugates"]) == 2
    with pytest.raises(InvalidArgument) as e:
        algebras_service.run_command("witnesses", description, ["x", "d", "zero"])
    assert e.value.location == "k"


def test_sandwich(algebras_service, load):
    """The sample closes the sandwich and the torsion unit t commutes."""
    results = algebras_service.run_command("sandwich", load("m2_q")).results
    assert results["estimate"]["status"] == "exact"
    assert results["estimate"]["upper"]["dim"] == 1
    expected = {"unit": ["1", "0", "0", "-1"], "order": 2, "commutes_with_nabla": True}
    assert expected in results["corollary"]["torsion_units"]


@pytest.mark.parametrize(
    "command,args,location",
    [
        ("nothing", [], "command"),
        ("classify", [], "arguments"),
        ("center", ["x"], "arguments"),
    ],
)
def test_invalid_arguments(algebras_service, load, command, args, location):
    """Unknown commands and wrong arity."""
    with pytest.raises(InvalidArgument) as e:
        algebras_service.run_command(command, load("q_c2"), args)
    assert e.value.location == location
    assert e.value.exit_code == 2


def test_atlas(atlas_service, load):
    """Entries are stored once and reused until forced."""
    description = load("t2_f2")
    commands = atlas_service.atlas_commands(description)
    assert [c for c, _ in commands] == [
        "validate",
        "radical",
        "center",
        "classify",
        "decompose",
        "units",
        "fc",
        "series",
    ]
    first = atlas_service.run_command("atlas", description).results["entries"]
    assert {e["status"] for e in first} == {"stored"}
    store = AtlasStore(atlas_service.config.atlas_dir)
    assert len(store) == len(commands)

    second = atlas_service.run_command("atlas", description).results["entries"]
    assert {e["status"] for e in second} == {"cached"}
    assert [e["filename"] for e in second] == [e["filename"] for e in first]

    atlas_service.config = atlas_service.config.override(force=True)
    forced = atlas_service.run_command("atlas", description).results["entries"]
    assert {e["status"] for e in forced} == {"stored"}
    assert [e["filename"] for e in forced] == [e["filename"] for e in first]
    assert len(store) == len(commands)


def test_atlas_entries_are_reports(atlas_service, load):
    """Stored bytes are the report of the command."""
    description = load("q_c2")
    entry = atlas_service.atlas_store(description, "center")
    data = AtlasStore(atlas_service.config.atlas_dir).read(entry.filename)
    assert data == atlas_service.run_command("center", description).data
