"""Python bindings for the parlearn exact learner.

Graphs and weighted graphs are plain dicts in the JSON formats used by the
command-line tool; rationals are strings such as "5/9".
"""

import csv
import io
import json
from fractions import Fraction

from . import _core
from ._core import ParlearnError

__all__ = [
    "ParlearnError",
    "hom",
    "canonical_code",
    "is_rigid",
    "is_twin_free",
    "make_twin_free",
    "weighted_iso",
    "generate_target",
    "learn",
    "rank_experiment",
    "rigidity_stats",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def hom(graph, target):
    return Fraction(_core.hom(_dump(graph), _dump(target)))


def canonical_code(graph):
    return _core.canonical_code(_dump(graph))


def is_rigid(target):
    return _core.is_rigid(_dump(target))


def is_twin_free(target):
    return _core.is_twin_free(_dump(target))


def make_twin_free(target):
    return json.loads(_core.make_twin_free(_dump(target)))


def weighted_iso(h1, h2):
    return _core.weighted_iso(_dump(h1), _dump(h2))


def generate_target(q, denominator_bound=3, seed=0):
    return json.loads(_core.generate_target(q, denominator_bound, seed))


def learn(target, max_vertices=6, max_edges=8, iteration_cap=16):
    """Runs a full session; returns the hypothesis, transcript events and counts."""
    out = _core.learn(_dump(target), max_vertices, max_edges, iteration_cap)
    return {
        "hypothesis": json.loads(out["hypothesis"]),
        "transcript": [json.loads(line) for line in out["transcript"].splitlines()],
        "rounds": out["rounds"],
        "value_queries": out["value_queries"],
        "equivalence_queries": out["equivalence_queries"],
    }


def rank_experiment(target, k=1, samples=25, seed=0):
    return _rows(_core.rank_experiment(_dump(target), k, samples, seed))[0]


def rigidity_stats(n_min=4, n_max=8, samples=200, seed=0):
    return _rows(_core.rigidity_stats(n_min, n_max, samples, seed))
