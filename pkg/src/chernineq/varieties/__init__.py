"""Cohomology models of polarized varieties and formal-bundle calculus."""

from .catalog import CATALOG, SelectorError, catalog_names, get_space, resolve_space
from .expr import ExpressionError
from .ring import CohomologyClass, CohomologyModel, integrate
from .spacefile import SpaceFileError, load_space_file, parse_space_text, space_to_toml
from .spaces import (
    FormalBundle,
    PolarizedSpace,
    bundle_direct_sum,
    bundle_dual,
    bundle_tensor_line,
    chern_numbers,
    complete_intersection,
    hypersurface,
    line_bundle,
    product,
    projective_space,
    segre_classes,
    tangent_bundle,
    trivial_bundle,
)

__all__ = [
    "CATALOG",
    "CohomologyClass",
    "CohomologyModel",
    "ExpressionError",
    "FormalBundle",
    "PolarizedSpace",
    "SelectorError",
    "SpaceFileError",
    "bundle_direct_sum",
    "bundle_dual",
    "bundle_tensor_line",
    "catalog_names",
    "chern_numbers",
    "complete_intersection",
    "get_space",
    "hypersurface",
    "integrate",
    "line_bundle",
    "load_space_file",
    "parse_space_text",
    "product",
    "projective_space",
    "resolve_space",
    "segre_classes",
    "space_to_toml",
    "tangent_bundle",
    "trivial_bundle",
]
