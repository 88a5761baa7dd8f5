"""Maximum Sombor index trees for a given degree sequence."""

import json

from ._core import (
    SomborError,
    Tree,
    canonical_form,
    construct_max_tree,
    decompose,
    edge_weight,
    sombor_index,
)
from . import _core

__all__ = [
    "SomborError",
    "Tree",
    "anneal_search",
    "canonical_form",
    "check_theorem1",
    "construct_max_tree",
    "decompose",
    "edge_weight",
    "is_local_max",
    "oracle_max",
    "sombor_index",
]

DEFAULT_CAP = 10_000_000


def oracle_max(degrees, cap=DEFAULT_CAP, workers=1):
    """Exhaustive maximum over every tree realizing `degrees` (dict)."""
    return json.loads(_core._oracle_max(list(degrees), cap, workers))


def is_local_max(tree):
    return json.loads(_core._is_local_max(tree))


def check_theorem1(tree, all_records=False):
    return json.loads(_core._check_theorem1(tree, all_records))


def anneal_search(degrees, budget=100_000, seed=42):
    return json.loads(_core._anneal_search(list(degrees), budget, seed))
