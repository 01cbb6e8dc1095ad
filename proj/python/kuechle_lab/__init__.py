"""Python access to the kuechle exact-computation core.

Structured results come back as plain dicts and lists.
"""

import json

from . import _core
from ._core import KuechleError

__all__ = [
    "KuechleError",
    "analyze_pencil",
    "classify",
    "d3_counts",
    "degeneracy_classes",
    "enumerate_split",
    "ledger",
    "phi",
    "stabilizer_dim",
    "standard_form",
    "verify_all",
    "y_point_count",
]


def _arg(value):
    return value if isinstance(value, str) else json.dumps(value)


def analyze_pencil(pencil):
    return json.loads(_core.analyze_pencil(_arg(pencil)))


def standard_form(pencil):
    return json.loads(_core.standard_form(_arg(pencil)))


def enumerate_split(q, n):
    return json.loads(_core.enumerate_split(q, n))


def d3_counts(q, n=4, seed=0):
    return json.loads(_core.d3_counts(q, n, seed))


def stabilizer_dim(form="trace", p=0):
    return _core.stabilizer_dim(form if form in ("trace", "kuchle", "decomposable") else _arg(form), p)


def classify(point):
    return _core.classify(_arg(point))


def phi(point):
    return json.loads(_core.phi(_arg(point)))


def y_point_count(q):
    return json.loads(_core.y_point_count(q))


def degeneracy_classes(ring, c1, c2, c3):
    return _core.degeneracy_classes(ring, c1, c2, c3)


def ledger(name):
    return json.loads(_core.ledger(name))


def verify_all(seed=0, budget=100):
    return json.loads(_core.verify_all(seed, budget))
