"""
PyPhishKey
"""
from typing import Optional

import numpy as np

from pyphishkey.classifier.DecisionTree import DecisionTree


class ClassificationTree(DecisionTree):
    """
    CART classification tree with Gini impurity. Leaves hold the fraction of phishing rows.

    At each node a random subset of max_features features is searched for the best split. When none of them has a
    valid split (all values equal) the search continues with the remaining features, in random order, until a valid
    split is found.

    The gain of a split is its weighted impurity decrease: n_node / n_total x (gini(node) - n_left / n_node x
    gini(left) - n_right / n_node x gini(right)).
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self,
                 max_depth: Optional[int] = None,
                 min_samples_split: int = 2,
                 max_features: Optional[int] = None,
                 rng: Optional[np.random.Generator] = None):
        """
        Object constructor.

        :param int|None max_depth: The maximum depth of the tree, None for unlimited.
        :param int min_samples_split: The minimum number of rows in a node to split it.
        :param int|None max_features: The number of features searched per split, None for all.
        :param numpy.random.Generator|None rng: The random generator for sampling features.
        """
        DecisionTree.__init__(self, max_depth, min_samples_split)

        self._max_features: Optional[int] = max_features
        """
        The number of features searched per split.
        """

        self._rng: np.random.Generator = rng if rng is not None else np.random.default_rng(0)
        """
        The random generator for sampling features.
        """

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, y: np.ndarray, n_total: Optional[int] = None) -> None:
        """
        Grows this tree.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels (0 or 1).
        :param int|None n_total: The number of rows used for weighting gains. Defaults to the number of rows in x.
        """
        y = np.asarray(y, dtype=np.int64)
        n_total = n_total or x.shape[0]
        n_features = x.shape[1]
        max_features = min(self._max_features or n_features, n_features)

        root = self._add_node(float(y.mean()) if y.size else 0.0)
        stack = [(root, np.arange(x.shape[0]), 0)]
        while stack:
            node, rows, depth = stack.pop()
            positives = int(y[rows].sum())
            if positives == 0 or positives == rows.size or not self._can_split(rows.size, depth):
                continue

            best = None
            for count, feature in enumerate(self._rng.permutation(n_features)):
                if count >= max_features and best is not None:
                    break
                candidate = self.__best_split(x, y, rows, int(feature), positives)
                if candidate is not None and (best is None or candidate[0] > best[0]):
                    best = candidate

            if best is None:
                continue

            decrease, feature, threshold, left_rows, right_rows = best
            left = self._add_node(float(y[left_rows].mean()))
            right = self._add_node(float(y[right_rows].mean()))
            self._set_split(node, feature, threshold, left, right, rows.size / n_total * decrease)
            stack.append((right, right_rows, depth + 1))
            stack.append((left, left_rows, depth + 1))

    # ------------------------------------------------------------------------------------------------------------------
    def __best_split(self, x: np.ndarray, y: np.ndarray, rows: np.ndarray, feature: int, positives: int):
        """
        Returns the best split of a node on a feature as (impurity decrease, feature, threshold, left rows, right
        rows), or None when the feature is constant in the node.

        :param numpy.ndarray x: The features.
        :param numpy.ndarray y: The labels.
        :param numpy.ndarray rows: The rows in the node.
        :param int feature: The feature.
        :param int positives: The number of phishing rows in the node.
        """
        sorted_rows, values, valid = self._sorted_column(x, rows, feature)
        if not valid.any():
            return None

        n = rows.size
        left_n = np.arange(1, n, dtype=np.float64)
        right_n = n - left_n
        left_pos = np.cumsum(y[sorted_rows])[:-1].astype(np.float64)
        right_pos = positives - left_pos

        # Weighted child Gini: 2 / n x (l+ l- / l + r+ r- / r).
        child = 2.0 * (left_pos * (left_n - left_pos) / left_n + right_pos * (right_n - right_pos) / right_n) / n
        parent = 2.0 * positives * (n - positives) / (n * n)
        decrease = np.where(valid, parent - child, -np.inf)

        position = int(np.argmax(decrease))
        threshold = self._threshold_between(values[position], values[position + 1])

        return float(decrease[position]), feature, threshold, sorted_rows[:position + 1], sorted_rows[position + 1:]

# ----------------------------------------------------------------------------------------------------------------------
