"""Tree modules of the m-Kronecker quiver.

Representations cross the boundary as JSON text in the same schema the
command line tool writes; the helpers below parse them into dicts.
"""

import json

from ._ktree import (
    PropertyViolation,
    brute_simple_tuples,
    classify_root,
    default_n,
    hom_dim,
    is_indecomposable,
    reflect_dim,
    simple_stable,
    simple_tuple,
)
from . import _ktree

ALL_CHECKS = ("dims", "tree", "stable", "indecomposable", "exceptional")


def _text(rep):
    return rep if isinstance(rep, str) else json.dumps(rep)


def tree_module(d, e, m=3, stable=False):
    """Build the tree module of type (d, e); representation and cover are dicts."""
    return json.loads(_ktree.tree_module_json(d, e, m, stable))


def verify(rep, checks=ALL_CHECKS):
    """Run named checks; returns {name: (pass, witness)}."""
    out = json.loads(_ktree.verify_json(_text(rep), list(checks)))
    return {c["name"]: (c["pass"], c["witness"]) for c in out["checks"]}


def reflect(rep, inverse=False):
    """R^- at vertex 1 of K(m) (R^+ with inverse=True), relabelled over K(m)."""
    return json.loads(_ktree.reflect_json(_text(rep), inverse))


def dims(rep):
    return {v["id"]: v["dim"] for v in rep["quiver"]["vertices"]}
