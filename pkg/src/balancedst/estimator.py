"""Estimator-style front end.

``BalancedConnectivity`` is fitted on an edge list and answers many s-t
queries afterwards: ``fit`` roots one spanning tree per component of the
undirected view and records potentials and the cycle gcd, so each ``predict``
row is a constant-time coset test.

    >>> est = BalancedConnectivity().fit([[0, 1], [1, 2], [2, 0]])
    >>> est.predict([[0, 0], [0, 1]]).tolist()
    [True, False]
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .graph import DirectedGraph, Instance
from .solver import coset_contains_zero, compute_potentials, cycle_gcd
from .witness import build_witness


def check_edges(X, n_vertices=None) -> DirectedGraph:
    X = check_array(X, dtype=np.int64, ensure_min_samples=0, ensure_2d=True)
    if X.shape[0] and X.shape[1] != 2:
        raise ValueError(f"edge array must have 2 columns, got {X.shape[1]}")
    if X.size and X.min() < 0:
        raise ValueError("vertex ids must be non-negative")
    inferred = int(X.max()) + 1 if X.size else 0
    n = inferred if n_vertices is None else int(n_vertices)
    if n < inferred:
        raise ValueError(f"n_vertices={n} but edges mention vertex {inferred - 1}")
    return DirectedGraph(n, map(tuple, X.tolist()))


class BalancedConnectivity(BaseEstimator):
    """Answer balanced-connectivity queries on a fixed digraph.

    Parameters
    ----------
    n_vertices : int or None
        Vertex count; inferred from the largest edge endpoint when None.
    reverse_order : bool
        Visit neighbors in descending id order while building spanning trees.
        Answers never depend on this; it exists for invariance testing.
    """

    def __init__(self, n_vertices=None, reverse_order=False):
        self.n_vertices = n_vertices
        self.reverse_order = reverse_order

    def fit(self, X, y=None):
        graph = check_edges(X, self.n_vertices)
        view = graph.view
        component = np.full(graph.n, -1, dtype=np.int64)
        potential = np.zeros(graph.n, dtype=np.int64)
        gcds = []
        for root in range(graph.n):
            if component[root] >= 0:
                continue
            pot = compute_potentials(view, root, reverse=self.reverse_order)
            idx = len(gcds)
            for v, p in pot.p.items():
                component[v] = idx
                potential[v] = p
            gcds.append(cycle_gcd(view, pot).g)
        self.graph_ = graph
        self.component_ = component
        self.potential_ = potential
        self.component_gcd_ = np.asarray(gcds, dtype=np.int64)
        self.n_vertices_ = graph.n
        return self

    def _check_pairs(self, X):
        check_is_fitted(self, "graph_")
        X = check_array(X, dtype=np.int64, ensure_min_samples=0)
        if X.shape[0] and X.shape[1] != 2:
            raise ValueError(f"query array must have 2 columns (s, t), got {X.shape[1]}")
        if X.size and (X.min() < 0 or X.max() >= self.n_vertices_):
            raise ValueError("query vertex out of range")
        return X

    def predict(self, X):
        """Boolean array: is there a balanced walk between each row's ``s`` and ``t``."""
        X = self._check_pairs(X)
        out = np.zeros(X.shape[0], dtype=bool)
        for i, (s, t) in enumerate(X.tolist()):
            comp = self.component_[s]
            if comp != self.component_[t]:
                continue
            k0 = int(self.potential_[t] - self.potential_[s])
            out[i] = coset_contains_zero(k0, int(self.component_gcd_[comp]))
        return out

    def transform(self, X):
        """Witness walk (list of vertex ids) per query row, or None where none exists."""
        X = self._check_pairs(X)
        return [build_witness(Instance(self.graph_, s, t)) for s, t in X.tolist()]
