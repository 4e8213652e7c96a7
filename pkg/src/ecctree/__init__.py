"""Eccentric connectivity index of trees: linear evaluation, extremal families,
xi^c-monotone transformations and exhaustive verification by enumeration."""

from .descriptor import eccentricities_linear, find_center, xi_linear, xi_oracle
from .enumeration import ClassFilter, filtered_trees, free_trees
from .errors import (
    EccTreeError,
    EmptyClassError,
    EnumerationLimitError,
    ParameterError,
    TransformError,
    TreeParseError,
)
from .extremal import extremal_search, verify_claim, verify_table1
from .tree_core import EccProfile, Tree, parse_tree, serialize_tree

__all__ = [
    "Tree",
    "EccProfile",
    "parse_tree",
    "serialize_tree",
    "xi_linear",
    "xi_oracle",
    "eccentricities_linear",
    "find_center",
    "ClassFilter",
    "free_trees",
    "filtered_trees",
    "extremal_search",
    "verify_claim",
    "verify_table1",
    "EccTreeError",
    "TreeParseError",
    "ParameterError",
    "TransformError",
    "EnumerationLimitError",
    "EmptyClassError",
]
