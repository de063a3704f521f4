"""Listing k-subtrees, connected induced k-subgraphs, st-paths and cycles."""
from .blocktree import bead_string, biconnected_components
from .graph import (Graph, GraphError, Journal, OpCounter, graph_from_edges,
                    load_graph, parse_edge_list, read_graph)
from .instrument import Tally
from .paths import list_cycles, list_st_paths
from .subgraphs import list_k_subgraphs
from .subtrees import list_k_subtrees

__all__ = [
    "Graph", "GraphError", "Journal", "OpCounter", "Tally", "graph_from_edges",
    "load_graph", "parse_edge_list", "read_graph", "bead_string",
    "biconnected_components", "list_k_subtrees", "list_k_subgraphs",
    "list_st_paths", "list_cycles",
]
