# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 CERN.
#
# Invenio-Algebras is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration."""

from invenio_algebras import __version__

# -- General configuration ------------------------------------------------

# Do not warn on external images.
suppress_warnings = ["image.nonlocal_uri"]

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "Invenio-Algebras"
copyright = "2024, CERN"
author = "CERN"

version = __version__
release = __version__

exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"
html_theme_options = {
    "description": "Exact engine for finite-dimensional associative algebras.",
    "github_button": False,
    "github_banner": False,
    "show_powered_by": False,
}
html_static_path = []
htmlhelp_basename = "invenio-algebras_namedoc"

# -- Options for LaTeX, manual page and Texinfo output ---------------------

latex_documents = [
    (
        master_doc,
        "invenio-algebras.tex",
        "invenio-algebras Documentation",
        author,
        "manual",
    ),
]
man_pages = [
    (master_doc, "invenio-algebras", "invenio-algebras Documentation", [author], 1),
]
texinfo_documents = [
    (
        master_doc,
        "invenio-algebras",
        "Invenio-Algebras Documentation",
        author,
        "invenio-algebras",
        "Exact engine for finite-dimensional associative algebras.",
        "Miscellaneous",
    ),
]

# -- Extensions -------------------------------------------------------------

intersphinx_mapping = {
    "click": ("https://click.palletsprojects.com/en/stable/", None),
    "flask": ("https://flask.palletsprojects.com/", None),
    "marshmallow": ("https://marshmallow.readthedocs.io/en/stable/", None),
    "python": ("https://docs.python.org/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
}

autoclass_content = "both"
