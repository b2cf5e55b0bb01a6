"""Polygon models of repetitive higher cluster categories of type A."""

import json as _json

from ._repclust import *  # noqa: F401,F403
from ._repclust import check_json as _check_json


def check(suite, params):
    """Run an invariant suite and return the parsed JSON report."""
    return _json.loads(_check_json(suite, params))
