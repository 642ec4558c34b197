"""Manufacturability indexes for machining and additive processes."""

import json

from ._octodfm import (
    Error,
    Mesh,
    load_mesh,
    local_mean,
    module_weights,
    octree_summary,
    parse_mesh,
    total_index,
    validate_profile,
)
from . import _octodfm

__all__ = [
    "Error",
    "Mesh",
    "analyze",
    "compare",
    "load_mesh",
    "local_mean",
    "module_weights",
    "octree_summary",
    "parse_mesh",
    "total_assembly",
    "total_index",
    "validate_profile",
]


def analyze(mesh, profile, process="machining", design="part", depth=5, samples=4,
            margin=0.01, workers=0, material=None, roughness=None):
    """Index reports (dicts) for one mesh, one per selected process.

    `profile` is the text of a machine profile; `process` is "machining",
    "additive" or "both".
    """
    texts = _octodfm.analyze_json(mesh, design, process, profile, depth, samples,
                                  margin, workers, material, roughness)
    return [json.loads(t) for t in texts]


def compare(baseline, candidate):
    """Comparison of two index reports given as dicts."""
    return json.loads(_octodfm.compare_json(json.dumps(baseline), json.dumps(candidate)))


def total_assembly(design, reports, volumes):
    """Module reports gathered into volume-weighted totals."""
    return json.loads(_octodfm.total_assembly_json(design, [json.dumps(r) for r in reports],
                                                   list(volumes)))
