# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Command line tests."""

import json

import pytest

from invenio_algebras.bundled import bundled_examples
from invenio_algebras.cli import algebras
from invenio_algebras.proxies import current_algebras, current_algebras_service


@pytest.fixture()
def cli(app):
    """Invoke the ``algebras`` command group."""
    runner = app.test_cli_runner()

    def _invoke(*args):
        return runner.invoke(algebras, list(args))

    return _invoke


def test_validate(cli):
    """Reports go to standard output."""
    result = cli("validate", "q_c2")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["command"] == "validate"
    assert report["results"]["is_commutative"]


def test_out(cli, tmp_path):
    """``--out`` writes the report bytes to a file."""
    path = tmp_path / "report.json"
    result = cli("--out", str(path), "radical", "t2_f2", "--method", "enumeration")
    assert result.exit_code == 0
    assert result.output == ""
    report = json.loads(path.read_text())
    assert report["arguments"] == ["enumeration"]
    assert report["results"]["dim"] == 1


def test_input_errors(cli, tmp_path):
    """Unusable input exits with 2."""
    result = cli("validate", str(tmp_path / "missing.json"))
    assert result.exit_code == 2
    assert "ParseError" in result.output
    result = cli("classify", "m2_q", "nothing")
    assert result.exit_code == 2
    assert "UnknownElement" in result.output


def test_domain_errors(cli):
    """Negative mathematical answers exit with 1."""
    result = cli("units", "m2_q")
    assert result.exit_code == 1
    assert "EnumerationTooLarge" in result.output
    result = cli("--cap-enumeration", "4", "units", "m2_f2")
    assert result.exit_code == 1
    result = cli("witnesses", "m2_q", "d", "t")
    assert result.exit_code == 1
    assert "CommutingPair" in result.output


def test_options_are_restored(cli, app):
    """Per-invocation options do not leak into the service."""
    service = current_algebras.algebras_service
    before = service.config
    assert cli("--threads", "2", "units", "t2_f3").exit_code == 0
    assert service.config is before


def test_examples(cli):
    """Bundled examples are listed by id."""
    result = cli("examples")
    assert result.exit_code == 0
    ids = result.output.split()
    assert "m2_q" in ids
    assert ids == sorted(ids)


def example_invocations(description):
    """Command lines covering every command that applies to ``description``."""
    service = current_algebras_service
    invocations = [
        [command, *args] for command, args in service.atlas_commands(description)
    ]
    names = sorted(description.elements)
    if len(names) >= 2:
        a, g = names[:2]
        subset = "group" if description.algebra.group is not None else "units"
        invocations.append(["witnesses", a, g])
        invocations.append(["omega", subset, a, g])
    return invocations


@pytest.mark.parametrize("example", [e.type_id for e in bundled_examples()])
def test_output_is_deterministic(cli, example):
    """Every command prints the same bytes on reruns and for any thread count."""
    description = current_algebras_service.load(example)
    for command, *args in example_invocations(description):
        runs = [
            cli("--threads", threads, command, example, *args)
            for threads in ("1", "1", "8")
        ]
        assert len({run.exit_code for run in runs}) == 1
        assert len({run.output for run in runs}) == 1
