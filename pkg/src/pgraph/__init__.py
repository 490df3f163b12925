"""Partial graphs as a separation-style algebra, with runtime-checked pointer algorithms."""
from .partial_graph import (
    BINARY,
    GENERAL,
    NULL,
    UNARY,
    UNDEFINED,
    UNIT,
    Mark,
    PartialGraph,
    closed,
    empty,
    erase,
    filter_marks,
    filter_nodes,
    join,
    map_graph,
    nodes,
    nodes0,
    reach,
    remove,
    singleton,
    sinks,
)

__all__ = [
    "BINARY", "GENERAL", "NULL", "UNARY", "UNDEFINED", "UNIT", "Mark", "PartialGraph",
    "closed", "empty", "erase", "filter_marks", "filter_nodes", "join", "map_graph",
    "nodes", "nodes0", "reach", "remove", "singleton", "sinks",
]
