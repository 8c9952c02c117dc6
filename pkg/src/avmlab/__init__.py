"""Maximal matchings, avm(G) and bicyclic graph structure."""

from .canon import CanonicalForm, canonical_form, canonical_labeling, is_isomorphic
from .errors import (AvmlabError, CounterOverflow, FormatError, GraphError, InfeasibleSpec,
                     NotBicyclic, NotConnected, OutOfRange, TooManyEdges)
from .formats import from_graph6, parse_edgelist, read_graphs, to_graph6
from .generators import FamilySpec, all_bicyclic, build, free_trees
from .graph import Graph, cyclomatic_number, is_connected
from .matching import (MatchingDistribution, distribution, distribution_oracle,
                       enumerate_maximal, is_maximal, pure_core_maximal)
from .structure import CoreDescriptor, attachment_profile, classify, core_names, two_core

__version__ = "0.1.0"

__all__ = [
    "AvmlabError", "CanonicalForm", "CoreDescriptor", "CounterOverflow", "FamilySpec",
    "FormatError", "Graph", "GraphError", "InfeasibleSpec", "MatchingDistribution",
    "NotBicyclic", "NotConnected", "OutOfRange", "TooManyEdges", "all_bicyclic",
    "attachment_profile", "build", "canonical_form", "canonical_labeling", "classify",
    "core_names", "cyclomatic_number", "distribution", "distribution_oracle",
    "enumerate_maximal", "free_trees", "from_graph6", "is_connected", "is_isomorphic",
    "is_maximal", "parse_edgelist", "pure_core_maximal", "read_graphs", "to_graph6",
    "two_core",
]
