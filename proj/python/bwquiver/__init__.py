"""Exact module calculus over finite-dimensional quiver algebras.

Thin wrapper over the compiled core; report-shaped results come back as
plain dicts.
"""

import json as _json

from ._core import (
    Algebra,
    CalculusError,
    Module,
    builtin_names,
    decompose_names,
    direct_sum,
    enumerate_strings,
    hom_dim,
    is_isomorphic,
    load_algebra,
    module_dot,
    one_point_extend,
    projective,
    restrict_to_base,
    simple,
    string_module,
    syzygy,
)
from . import _core


def graph_module(algebra, spec, name="module"):
    if not isinstance(spec, str):
        spec = _json.dumps(spec)
    return _core.graph_module(algebra, spec, name)


def module_to_json(module):
    return _json.loads(_core.module_to_json(module))


def module_from_json(algebra, data):
    if not isinstance(data, str):
        data = _json.dumps(data)
    return _core.module_from_json(algebra, data)


def pdim(module, cutoff=24):
    return _json.loads(_core.pdim(module, cutoff))


def findim_probe(algebra, max_len=8, cutoff=24):
    return _json.loads(_core.findim_probe(algebra, max_len, cutoff))


def criterion3_scan(algebra, p, q, **bounds):
    return _json.loads(_core.criterion3_scan(algebra, p, q, **bounds))


def criterion3_refute(algebra, p, q, **bounds):
    return _json.loads(_core.criterion3_refute(algebra, p, q, **bounds))


__all__ = [
    "Algebra",
    "CalculusError",
    "Module",
    "builtin_names",
    "criterion3_refute",
    "criterion3_scan",
    "decompose_names",
    "direct_sum",
    "enumerate_strings",
    "findim_probe",
    "graph_module",
    "hom_dim",
    "is_isomorphic",
    "load_algebra",
    "module_dot",
    "module_from_json",
    "module_to_json",
    "one_point_extend",
    "pdim",
    "projective",
    "restrict_to_base",
    "simple",
    "string_module",
    "syzygy",
]
