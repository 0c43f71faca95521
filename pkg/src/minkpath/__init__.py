"""Minimum-weight k-paths and k-trees via group-algebra polynomial evaluation."""

from .approx import ApproxConfig, approx_min_kpath
from .estimators import ApproxMinWeightKPath, ApproxMinWeightKTree, MinWeightKPath, MinWeightKTree
from .exact import ExactConfig, bounded_min_kpath_weight, min_kpath_weight, min_kpath_weight_once
from .exceptions import (
    ExtractionFailed,
    LimitExceeded,
    MalformedTree,
    MinKPathError,
    OracleFailure,
    ParseError,
    RangeError,
    RecoveryFailed,
)
from .graph import TreePattern, WeightedGraph
from .io import format_graph, format_tree, parse_graph, parse_tree
from .ktree import approx_min_ktree, min_ktree_weight, recover_tree_vertices
from .oracle import oracle_min_kpath, oracle_min_ktree
from .recover import RecoverConfig, recover_path
from .report import SolveReport

__version__ = "0.1.0"

__all__ = [
    "ApproxConfig",
    "ApproxMinWeightKPath",
    "ApproxMinWeightKTree",
    "ExactConfig",
    "ExtractionFailed",
    "LimitExceeded",
    "MalformedTree",
    "MinKPathError",
    "MinWeightKPath",
    "MinWeightKTree",
    "OracleFailure",
    "ParseError",
    "RangeError",
    "RecoverConfig",
    "RecoveryFailed",
    "SolveReport",
    "TreePattern",
    "WeightedGraph",
    "approx_min_kpath",
    "approx_min_ktree",
    "bounded_min_kpath_weight",
    "format_graph",
    "format_tree",
    "min_kpath_weight",
    "min_kpath_weight_once",
    "min_ktree_weight",
    "oracle_min_kpath",
    "oracle_min_ktree",
    "parse_graph",
    "parse_tree",
    "recover_path",
    "recover_tree_vertices",
]
