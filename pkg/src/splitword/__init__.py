"""Split comparability graphs: recognition, clique labellings, three-permutation words and prn."""

from .errors import (
    CapExceeded,
    InvalidPartition,
    MissingVertex,
    NotComparability,
    NotLabellable,
    NotSplit,
    NotTransitive,
    ParseError,
    PropertiesViolated,
    SplitWordError,
    TooLarge,
)
from .graph import Graph, complement, encode_graph6, find_induced, parse_edge_list, parse_graph, parse_graph6
from .labelling import CliqueLabelling, IClassification, classify, find_labelling, orientation_from_labelling, verify_properties
from .orientation import Orientation, find_transitive_orientation, verify_semi_transitive, verify_transitive
from .pipeline import run_pipeline, verify_report
from .poset import Poset, PrnResult, dimension, poset_from_orientation, prn, prn_oracle, realizer
from .split import FAMILY, SplitGraph, find_forbidden, normalize_maximal, split_partition
from .words import WordBlocks, alternates, build_and_verify, build_word, represents, restrict, uniformity

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CliqueLabelling",
    "FAMILY",
    "Graph",
    "IClassification",
    "InvalidPartition",
    "MissingVertex",
    "NotComparability",
    "NotLabellable",
    "NotSplit",
    "NotTransitive",
    "Orientation",
    "ParseError",
    "Poset",
    "PrnResult",
    "PropertiesViolated",
    "SplitGraph",
    "SplitWordError",
    "TooLarge",
    "WordBlocks",
    "alternates",
    "build_and_verify",
    "build_word",
    "classify",
    "complement",
    "dimension",
    "encode_graph6",
    "find_forbidden",
    "find_induced",
    "find_labelling",
    "find_transitive_orientation",
    "normalize_maximal",
    "orientation_from_labelling",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "poset_from_orientation",
    "prn",
    "prn_oracle",
    "realizer",
    "represents",
    "restrict",
    "run_pipeline",
    "split_partition",
    "uniformity",
    "verify_properties",
    "verify_report",
    "verify_semi_transitive",
    "verify_transitive",
]
