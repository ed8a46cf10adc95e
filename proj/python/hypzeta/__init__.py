"""Zeta functions attached to compact hyperbolic manifolds."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import verify_json as _verify_json


def verify(suite="all", seed=1):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(_verify_json(suite, seed))


__all__ = [name for name in dir() if not name.startswith("_")]
