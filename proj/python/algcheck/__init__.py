# Copyright 2026 The algcheck Authors.
# SPDX-License-Identifier: Apache-2.0
"""Python access to the algcheck checker.

Documents are passed as JSON text in the same format the command-line tool
reads and writes; reports come back as dictionaries.
"""

import json

from ._algcheck import Error, fixture_names, fixture_text, normalize, run_cli
from . import _algcheck

__all__ = [
    "Error",
    "check_operator",
    "fixture",
    "fixture_names",
    "fixture_text",
    "normalize",
    "run_cli",
    "validate",
]


def fixture(name):
    """The named built-in fixture as a parsed JSON document."""
    return json.loads(fixture_text(name))


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def validate(doc, commutative=False):
    """Report of the `validate` sections for a document (dict or JSON text)."""
    return json.loads(_algcheck.validate_json(_text(doc), commutative))


def check_operator(doc, name, kind, power=0, weight="0", product="present"):
    """Report for the document's operator `name` claimed to be of `kind`."""
    return json.loads(_algcheck.check_operator_json(_text(doc), name, kind, power, str(weight), product))
