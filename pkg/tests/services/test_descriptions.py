# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Description document tests."""

import json
from copy import deepcopy

import pytest

from invenio_algebras.bundled import bundled_examples
from invenio_algebras.errors import (
    InvalidGroupTable,
    ParseError,
    SchemaError,
    UnknownElement,
)
from invenio_algebras.services.descriptions import (
    description_from_dict,
    load_description,
    serialize_description,
)

MATRICES = {
    "name": "m2",
    "field": {"kind": "rationals"},
    "algebra": {"kind": "matrix", "n": 2},
    "elements": {"d": [1, 0, 0, 2]},
    "sample": ["d"],
}


def changed(**values):
    """A copy of the matrix document with top-level keys replaced."""
    document = deepcopy(MATRICES)
    document.update(values)
    return document


def test_every_bundled_example_loads():
    """Shipped descriptions are valid."""
    examples = bundled_examples()
    assert "m2_q" in [e.type_id for e in examples]
    for example in examples:
        description = example.load()
        assert description.algebra.dim >= 1
        assert description.name == example.type_id


def test_description(QQ):
    """Named elements, labels and JSON coordinates resolve to elements."""
    description = description_from_dict(MATRICES)
    assert description.field == QQ
    assert description.element("d").to_json() == ["1", "0", "0", "2"]
    assert description.element("E12") == description.algebra.basis_element(1)
    assert description.element('["0", "1/2", 0, 0]').to_json() == [
        "0",
        "1/2",
        "0",
        "0",
    ]
    assert description.sample_units() == [description.element("d")]
    assert description.summary()["labels"] == ["E11", "E12", "E21", "E22"]
    with pytest.raises(UnknownElement) as e:
        description.element("nothing")
    assert e.value.exit_code == 2


def test_digest():
    """The digest depends on content, not on key order."""
    digest = description_from_dict(MATRICES).digest
    reordered = dict(reversed(list(MATRICES.items())))
    assert description_from_dict(reordered).digest == digest
    assert description_from_dict(changed(name="other")).digest != digest


@pytest.mark.parametrize(
    "document,location",
    [
        ({"field": {"kind": "rationals"}}, "/"),
        (changed(field={"kind": "reals"}), "field/kind"),
        (changed(algebra={"kind": "matrix"}), "algebra/n"),
        (changed(sample=["nothing"]), "sample"),
        (changed(elements={"d": [1, 0]}), "elements/d"),
        (changed(field={"kind": "prime-field"}), "field/p"),
        (changed(extra=1), "/"),
    ],
)
def test_schema_errors(document, location):
    """Schema errors point into the document."""
    with pytest.raises(SchemaError) as e:
        description_from_dict(document)
    assert e.value.location == location
    assert e.value.exit_code == 2
    assert e.value.to_dict()["type"] == "SchemaError"


def test_group_errors():
    """Unknown groups and broken inline tables are located."""
    document = changed(algebra={"kind": "group_algebra", "group": "Z7"})
    with pytest.raises(InvalidGroupTable) as e:
        description_from_dict(document)
    assert e.value.location == "algebra/group"
    document = changed(
        algebra={"kind": "group_algebra", "group": {"cayley": [[0, 1], [0, 1]]}}
    )
    with pytest.raises(InvalidGroupTable) as e:
        description_from_dict(document)
    assert e.value.location == "algebra/group/cayley/*/0"


def test_parse_errors(tmp_path):
    """Unreadable files and bad JSON."""
    with pytest.raises(ParseError):
        load_description(tmp_path / "missing.json")
    path = tmp_path / "broken.json"
    path.write_text('{\n  "field": ,\n}\n')
    with pytest.raises(ParseError) as e:
        load_description(path)
    assert e.value.location == "line 2, column 12"
    assert e.value.exit_code == 2


def test_load_file(tmp_path):
    """Descriptions are read from files."""
    path = tmp_path / "m2.json"
    path.write_text(json.dumps(MATRICES))
    assert load_description(path).digest == description_from_dict(MATRICES).digest


def test_serialize_description(t2_f3, matrix):
    """Any algebra can be written back as structure constants."""
    u = matrix(t2_f3, [1, 1], [0, 1])
    document = serialize_description(t2_f3, name="t2", elements={"u": u})
    assert document["algebra"]["kind"] == "structure_constants"
    description = description_from_dict(json.loads(json.dumps(document)))
    assert description.algebra == t2_f3
    assert description.element("u") == u
    assert description.algebra.labels == t2_f3.labels
