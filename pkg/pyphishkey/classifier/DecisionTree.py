"""
PyPhishKey
"""
import abc
from typing import Any, Dict, List, Optional, Tuple

import numpy as np


class DecisionTree(metaclass=abc.ABCMeta):
    """
    Parent class for binary decision trees stored as flat node arrays.

    Node k is a leaf when feature[k] == -1, otherwise rows with x[feature[k]] <= threshold[k] go to left[k] and all
    other rows go to right[k]. Each split records its gain, i.e. the improvement of the split criterion.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, max_depth: Optional[int] = None, min_samples_split: int = 2):
        """
        Object constructor.

        :param int|None max_depth: The maximum depth of the tree, None for unlimited.
        :param int min_samples_split: The minimum number of rows in a node to split it.
        """
        self._max_depth: Optional[int] = max_depth
        """
        The maximum depth of the tree.
        """

        self._min_samples_split: int = min_samples_split
        """
        The minimum number of rows in a node to split it.
        """

        self._feature: List[int] = []
        self._threshold: List[float] = []
        self._left: List[int] = []
        self._right: List[int] = []
        self._value: List[float] = []
        self._gain: List[float] = []

        self.__arrays: Optional[Tuple[np.ndarray, ...]] = None
        """
        The node lists as arrays, built on first prediction.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def node_count(self) -> int:
        """
        The number of nodes.

        :rtype: int
        """
        return len(self._feature)

    # ------------------------------------------------------------------------------------------------------------------
    def _add_node(self, value: float) -> int:
        """
        Appends a leaf and returns its id.

        :param float value: The value of the leaf.

        :rtype: int
        """
        self._feature.append(-1)
        self._threshold.append(0.0)
        self._left.append(-1)
        self._right.append(-1)
        self._value.append(float(value))
        self._gain.append(0.0)
        self.__arrays = None

        return len(self._feature) - 1

    # ------------------------------------------------------------------------------------------------------------------
    def _set_split(self, node: int, feature: int, threshold: float, left: int, right: int, gain: float) -> None:
        """
        Turns a leaf into a split node.

        :param int node: The id of the node.
        :param int feature: The index of the split feature.
        :param float threshold: The split threshold.
        :param int left: The id of the left child.
        :param int right: The id of the right child.
        :param float gain: The gain of the split.
        """
        self._feature[node] = int(feature)
        self._threshold[node] = float(threshold)
        self._left[node] = left
        self._right[node] = right
        self._gain[node] = float(gain)
        self.__arrays = None

    # ------------------------------------------------------------------------------------------------------------------
    def _can_split(self, n_rows: int, depth: int) -> bool:
        """
        Returns True if a node with some number of rows at some depth may be split.

        :param int n_rows: The number of rows in the node.
        :param int depth: The depth of the node.

        :rtype: bool
        """
        return n_rows >= self._min_samples_split and (self._max_depth is None or depth < self._max_depth)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def _sorted_column(x: np.ndarray, rows: np.ndarray, feature: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Returns the rows sorted by a feature, the sorted values, and a mask of the valid split positions (position i
        splits between sorted value i and i+1, valid when these values differ).

        :param numpy.ndarray x: The features.
        :param numpy.ndarray rows: The rows in the node.
        :param int feature: The feature.

        :rtype: (numpy.ndarray,numpy.ndarray,numpy.ndarray)
        """
        values = x[rows, feature]
        order = np.argsort(values, kind='stable')
        values = values[order]

        return rows[order], values, values[1:] > values[:-1]

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def _threshold_between(low: float, high: float) -> float:
        """
        Returns the midpoint between two distinct feature values, guaranteed to be below the higher value.

        :param float low: The lower value.
        :param float high: The higher value.

        :rtype: float
        """
        threshold = (float(low) + float(high)) / 2.0
        if threshold >= high:
            threshold = float(low)

        return threshold

    # ------------------------------------------------------------------------------------------------------------------
    def predict_value(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the value of the leaf each row falls in.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        if self.__arrays is None:
            self.__arrays = (np.asarray(self._feature, dtype=np.int64),
                             np.asarray(self._threshold, dtype=np.float64),
                             np.asarray(self._left, dtype=np.int64),
                             np.asarray(self._right, dtype=np.int64),
                             np.asarray(self._value, dtype=np.float64))
        feature, threshold, left, right, value = self.__arrays

        nodes = np.zeros(x.shape[0], dtype=np.int64)
        active = np.flatnonzero(feature[nodes] >= 0)
        while active.size:
            current = nodes[active]
            go_left = x[active, feature[current]] <= threshold[current]
            nodes[active] = np.where(go_left, left[current], right[current])
            active = active[feature[nodes[active]] >= 0]

        return value[nodes]

    # ------------------------------------------------------------------------------------------------------------------
    def feature_gains(self, n_features: int) -> np.ndarray:
        """
        Returns the total gain of the splits on each feature.

        :param int n_features: The number of features.

        :rtype: numpy.ndarray
        """
        gains = np.zeros(n_features, dtype=np.float64)
        for feature, gain in zip(self._feature, self._gain):
            if feature >= 0:
                gains[feature] += gain

        return gains

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        """
        Returns the nodes of this tree as a JSON serializable dictionary.

        :rtype: dict
        """
        return {'feature':   list(self._feature),
                'threshold': list(self._threshold),
                'left':      list(self._left),
                'right':     list(self._right),
                'value':     list(self._value),
                'gain':      list(self._gain)}

    # ------------------------------------------------------------------------------------------------------------------
    def load_dict(self, data: Dict[str, Any]) -> None:
        """
        Restores the nodes of this tree from a dictionary returned by to_dict.

        :param dict data: The dictionary.
        """
        self._feature = [int(value) for value in data['feature']]
        self._threshold = [float(value) for value in data['threshold']]
        self._left = [int(value) for value in data['left']]
        self._right = [int(value) for value in data['right']]
        self._value = [float(value) for value in data['value']]
        self._gain = [float(value) for value in data['gain']]
        self.__arrays = None

# ----------------------------------------------------------------------------------------------------------------------
