"""Exact bicomplex polynomial function algebra.

Every function returns plain Python data decoded from the JSON documents the
``bcx`` command-line tool prints. Failures raise :class:`BcxError`.
"""

import json

from . import _core

__all__ = [
    "BcxError",
    "evaluate",
    "apply",
    "classify",
    "decompose",
    "canonical",
    "function_json",
    "verify",
    "suite_names",
    "worked_examples",
]


class BcxError(Exception):
    """A library error. ``kind`` is the stable error name, ``details`` the full
    structured record (``condition``, ``position`` or ``path`` when known)."""

    def __init__(self, details):
        super().__init__(details.get("message", ""))
        self.details = details
        self.kind = details.get("error")
        self.exit_code = details.get("exit_code")


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.Error as e:
        raise BcxError(json.loads(str(e))) from None


def _function_arg(f):
    # Accept decoded function JSON as well as expression text.
    return f if isinstance(f, str) else json.dumps(f)


def evaluate(expr, at, raw=False, exact=False):
    return json.loads(_call(_core.evaluate, _function_arg(expr), at, raw, exact))


def apply(op, expr, raw=False, exact=False):
    return json.loads(_call(_core.apply, op, _function_arg(expr), raw, exact))


def classify(expr, raw=False):
    return json.loads(_call(_core.classify, _function_arg(expr), raw))


def decompose(kind, expr, n=None, k=None, pair=None, raw=False, exact=False):
    return json.loads(_call(_core.decompose, kind, _function_arg(expr), n, k, pair, raw, exact))


def canonical(expr, raw=False):
    return _call(_core.canonical, _function_arg(expr), raw)


def function_json(expr, raw=False):
    return json.loads(_call(_core.function_json, _function_arg(expr), raw))


def verify(suite="all", trials=100, seed=0, max_degree=4, coeff_bound=9):
    return json.loads(_call(_core.verify, suite, trials, seed, max_degree, coeff_bound))


def suite_names():
    return list(_core.suite_names())


def worked_examples(exact=False):
    return json.loads(_core.worked_examples(exact))
