"""
PyPhishKey
"""
from typing import Optional

import numpy as np

from pyphishkey.classifier.DecisionTree import DecisionTree


class RegressionTree(DecisionTree):
    """
    Second order regression tree for gradient boosting.

    Fitted on per row gradients g and hessians h of the loss. A leaf holding rows with sums G and H gets weight
    -G / (H + lambda); a split is scored by its gain 1/2 x (G_l^2 / (H_l + lambda) + G_r^2 / (H_r + lambda) - G^2 / (H +
    lambda)) and only splits with positive gain are made.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, max_depth: Optional[int] = 4, min_samples_split: int = 2, reg_lambda: float = 1.0):
        """
        Object constructor.

        :param int|None max_depth: The maximum depth of the tree.
        :param int min_samples_split: The minimum number of rows in a node to split it.
        :param float reg_lambda: The L2 regularization of leaf weights.
        """
        DecisionTree.__init__(self, max_depth, min_samples_split)

        self._reg_lambda: float = reg_lambda
        """
        The L2 regularization of leaf weights.
        """

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, g: np.ndarray, h: np.ndarray) -> None:
        """
        Grows this tree.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray g: The gradients of the loss per row.
        :param numpy.ndarray h: The hessians of the loss per row.
        """
        root = self._add_node(self.__weight(g.sum(), h.sum()))
        stack = [(root, np.arange(x.shape[0]), 0)]
        while stack:
            node, rows, depth = stack.pop()
            if not self._can_split(rows.size, depth):
                continue

            best = None
            for feature in range(x.shape[1]):
                candidate = self.__best_split(x, g, h, rows, feature)
                if candidate is not None and (best is None or candidate[0] > best[0]):
                    best = candidate

            if best is None or best[0] <= 0.0:
                continue

            gain, feature, threshold, left_rows, right_rows = best
            left = self._add_node(self.__weight(g[left_rows].sum(), h[left_rows].sum()))
            right = self._add_node(self.__weight(g[right_rows].sum(), h[right_rows].sum()))
            self._set_split(node, feature, threshold, left, right, gain)
            stack.append((right, right_rows, depth + 1))
            stack.append((left, left_rows, depth + 1))

    # ------------------------------------------------------------------------------------------------------------------
    def __weight(self, g_sum: float, h_sum: float) -> float:
        """
        Returns the optimal weight of a leaf.

        :param float g_sum: The sum of the gradients in the leaf.
        :param float h_sum: The sum of the hessians in the leaf.

        :rtype: float
        """
        return float(-g_sum / max(h_sum + self._reg_lambda, 1e-12))

    # ------------------------------------------------------------------------------------------------------------------
    def __best_split(self, x: np.ndarray, g: np.ndarray, h: np.ndarray, rows: np.ndarray, feature: int):
        """
        Returns the best split of a node on a feature as (gain, feature, threshold, left rows, right rows), or None when
        the feature is constant in the node.

        :param numpy.ndarray x: The features.
        :param numpy.ndarray g: The gradients.
        :param numpy.ndarray h: The hessians.
        :param numpy.ndarray rows: The rows in the node.
        :param int feature: The feature.
        """
        sorted_rows, values, valid = self._sorted_column(x, rows, feature)
        if not valid.any():
            return None

        g_left = np.cumsum(g[sorted_rows])[:-1]
        h_left = np.cumsum(h[sorted_rows])[:-1]
        g_total = g[rows].sum()
        h_total = h[rows].sum()
        g_right = g_total - g_left
        h_right = h_total - h_left

        lam = self._reg_lambda
        score = g_left ** 2 / np.maximum(h_left + lam, 1e-12) + g_right ** 2 / np.maximum(h_right + lam, 1e-12)
        gain = np.where(valid, 0.5 * (score - g_total ** 2 / max(h_total + lam, 1e-12)), -np.inf)

        position = int(np.argmax(gain))
        threshold = self._threshold_between(values[position], values[position + 1])

        return float(gain[position]), feature, threshold, sorted_rows[:position + 1], sorted_rows[position + 1:]

# ----------------------------------------------------------------------------------------------------------------------
