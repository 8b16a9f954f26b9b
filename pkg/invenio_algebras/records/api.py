# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Loaded algebra descriptions and the on-disk atlas of reports."""

import hashlib
import json
import os
import tempfile
from pathlib import Path

from ..errors import StorageError, UnknownElement


def canonical_json(data):
    """Compact, key-sorted JSON used for digests."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def content_digest(data):
    """SHA-256 of the canonical JSON of ``data``."""
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


class AlgebraDescription:
    """A validated description document together with the algebra it builds."""

    def __init__(self, document, algebra, elements=None, sample=None):
        """Constructor.

        :param document: The document as read (after schema validation).
        :param algebra: The built :class:`AlgebraSpec`.
        :param elements: Named elements, ``{name: AlgElement}``.
        :param sample: Names of the elements forming the unit sample.
        """
        self.document = document
        self.algebra = algebra
        self.elements = dict(elements or {})
        self.sample = list(sample or [])
        self.digest = content_digest(document)

    @property
    def name(self):
        """Name of the description, if it has one."""
        return self.document.get("name")

    @property
    def field(self):
        """Base field of the algebra."""
        return self.algebra.field

    def element(self, reference):
        """Resolve an element reference.

        A reference is a named element, a basis label or a JSON coordinate
        list such as ``["1", "0"]``.

        :raises UnknownElement: if the reference resolves to nothing.
        """
        if reference in self.elements:
            return self.elements[reference]
        A = self.algebra
        index = A.label_index(reference)
        if index is not None:
            return A.basis_element(index)
        try:
            coords = json.loads(reference)
        except (TypeError, ValueError):
            coords = None
        if isinstance(coords, list):
            return A.element(coords)
        raise UnknownElement(
            f"'{reference}' is neither a named element nor a basis label"
        )

    def sample_units(self):
        """Elements named in the unit sample."""
        return [self.element(name) for name in self.sample]

    def summary(self):
        """Short identification of the algebra for reports."""
        A = self.algebra
        return {
            "name": self.name,
            "dim": A.dim,
            "field": A.field.to_dict(),
            "labels": list(A.labels),
        }


class AtlasStore:
    """Directory of reports keyed by ``(input digest, command)``.

    Reports are stored under content-hash filenames; ``index.json`` maps
    ``<digest>:<command>`` to the file name. Every write goes to a temporary
    file in the same directory and is renamed into place.
    """

    index_name = "index.json"

    def __init__(self, root):
        """Constructor."""
        self.root = Path(root)

    @staticmethod
    def key(digest, command):
        """Index key of an entry."""
        return f"{digest}:{command}"

    def _ensure_root(self):
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise StorageError(f"Cannot create atlas directory {self.root}: {e}") from e
        if not os.access(self.root, os.W_OK):
            raise StorageError(f"Atlas directory {self.root} is not writable")

    def _write_atomic(self, name, data):
        target = self.root / name
        try:
            fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "wb") as f:
                    f.write(data)
                os.replace(tmp, target)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as e:
            raise StorageError(f"Cannot write {target}: {e}") from e
        return target

    def load_index(self):
        """The index mapping, empty for a fresh atlas."""
        path = self.root / self.index_name
        if not path.exists():
            return {}
        try:
            with open(path, encoding="utf-8") as f:
                return json.load(f).get("entries", {})
        except (OSError, ValueError) as e:
            raise StorageError(f"Cannot read atlas index {path}: {e}") from e

    def _save_index(self, index):
        data = json.dumps({"entries": index}, sort_keys=True, indent=2) + "\n"
        self._write_atomic(self.index_name, data.encode("utf-8"))

    def lookup(self, digest, command):
        """File name of a stored entry, or ``None``."""
        name = self.load_index().get(self.key(digest, command))
        if name is not None and (self.root / name).exists():
            return name
        return None

    def read(self, name):
        """Bytes of a stored report."""
        try:
            return (self.root / name).read_bytes()
        except OSError as e:
            raise StorageError(f"Cannot read {self.root / name}: {e}") from e

    def store(self, digest, command, data):
        """Store serialized report bytes and index them.

        :returns: The content-hash file name.
        :raises StorageError: if the atlas directory cannot be written.
        """
        self._ensure_root()
        slug = command.replace(" ", "_").replace("/", "_")
        name = f"{slug}-{hashlib.sha256(data).hexdigest()[:16]}.json"
        self._write_atomic(name, data)
        index = self.load_index()
        index[self.key(digest, command)] = name
        self._save_index(index)
        return name

    def __len__(self):
        """Number of indexed entries."""
        return len(self.load_index())
