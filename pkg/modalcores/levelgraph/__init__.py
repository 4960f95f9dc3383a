"""Dynamic mutual k-NN graph used during the level descent.

Points are only added, never removed, and edges only appear. Components are tracked with disjoint-set
forest, every component knows its members and whether it was already seen (intersects an estimate).

Examples:
=========

    >>> from modalcores.dataset import Dataset
    >>> from modalcores.knn_index import build_index
    >>> index = build_index(Dataset([[0.0], [1.0], [2.0], [10.0]]), k=2)
    >>> graph = new_graph(4)
    >>> for i in (0, 2):
    ...     graph.add_node(i)
    ...     graph.add_mutual_edges(i, index)
    >>> graph.n_components
    2
    >>> graph.add_node(1)
    >>> graph.add_mutual_edges(1, index)
    >>> graph.component_members(2)
    [0, 1, 2]

Using inactive point is an error.

    >>> graph.component_of(3)
    Traceback (most recent call last):
    modalcores.errors.errors_internal.InactiveNodeError: ...
"""
from modalcores.levelgraph.levelgraph_internal import LevelGraph, new_graph

__all__ = ["LevelGraph", "new_graph"]
