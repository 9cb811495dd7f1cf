"""scikit-learn style estimators over collections of graphs.

``X`` is always a sequence of graphs. Each item may be a :class:`Graph`, a
graph6 or edge-list string, or a square 0/1 adjacency matrix.
"""

from __future__ import annotations

import random

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import NotComparability, NotSplit
from .graph import Graph, parse_graph
from .labelling import find_labelling
from .poset import prn
from .split import NON_COMPARABILITY, find_forbidden, split_partition
from .words import build_word


def check_graph(obj) -> Graph:
    """Coerce one input item to a :class:`Graph`, raising ``ValueError`` on anything else."""
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, bytes):
        obj = obj.decode("ascii")
    if isinstance(obj, str):
        return parse_graph(obj)
    arr = np.asarray(obj)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a Graph, a graph string or a square adjacency matrix, got shape {arr.shape}")
    if np.any(np.diag(arr)):
        raise ValueError("adjacency matrix has self-loops")
    return Graph.from_adjacency(arr.astype(bool).tolist())


def check_graphs(X) -> list:
    if isinstance(X, (Graph, str, bytes)):
        raise ValueError("expected a sequence of graphs; wrap a single graph in a list")
    graphs = [check_graph(x) for x in X]
    if not graphs:
        raise ValueError("empty input: need at least one graph")
    return graphs


class SplitWordTransformer(TransformerMixin, BaseEstimator):
    """Map each split comparability graph to a word made of three permutations of its vertices.

    Parameters
    ----------
    processing_order : {"ascending", "random"}
        Order in which independent vertices are inserted. ``"random"`` shuffles
        it with ``random_state``; the word still represents the graph.
    random_state : int or None
    """

    def __init__(self, processing_order="ascending", random_state=None):
        self.processing_order = processing_order
        self.random_state = random_state

    def fit(self, X, y=None):
        if self.processing_order not in ("ascending", "random"):
            raise ValueError(f"processing_order must be 'ascending' or 'random', got {self.processing_order!r}")
        self.n_graphs_in_ = len(check_graphs(X))
        return self

    def transform(self, X):
        check_is_fitted(self, "n_graphs_in_")
        rng = random.Random(self.random_state)
        words = []
        for g in check_graphs(X):
            sg = split_partition(g)
            found = find_labelling(sg)
            if found is None:
                raise NotComparability(*find_forbidden(g, NON_COMPARABILITY))
            lab, cls = found
            order = None
            if self.processing_order == "random":
                order = [e.vertex for e in cls.entries]
                rng.shuffle(order)
            words.append(build_word(sg, lab, cls, order=order).z)
        return words


class PrnClassifier(ClassifierMixin, BaseEstimator):
    """Predict the permutation-representation number (1, 2 or 3) of split comparability graphs.

    Nothing is learned; ``fit`` only validates. Graphs outside the class raise
    unless ``invalid="zero"``, in which case they are predicted as 0.
    """

    def __init__(self, invalid="raise"):
        self.invalid = invalid

    def fit(self, X, y=None):
        if self.invalid not in ("raise", "zero"):
            raise ValueError(f"invalid must be 'raise' or 'zero', got {self.invalid!r}")
        check_graphs(X)
        self.classes_ = np.array([1, 2, 3])
        return self

    def predict_certificates(self, X) -> list:
        check_is_fitted(self, "classes_")
        out = []
        for g in check_graphs(X):
            try:
                out.append(prn(g))
            except (NotSplit, NotComparability):
                if self.invalid == "raise":
                    raise
                out.append(None)
        return out

    def predict(self, X):
        return np.array([0 if r is None else r.value for r in self.predict_certificates(X)], dtype=int)


class SplitComparabilityRecognizer(BaseEstimator):
    """``predict`` returns True for split graphs that admit a transitive orientation."""

    def fit(self, X, y=None):
        self.n_graphs_in_ = len(check_graphs(X))
        return self

    def predict(self, X):
        check_is_fitted(self, "n_graphs_in_")
        out = []
        for g in check_graphs(X):
            try:
                out.append(find_labelling(split_partition(g)) is not None)
            except NotSplit:
                out.append(False)
        return np.array(out, dtype=bool)
