"""
PyPhishKey
"""
from typing import Any, Dict

import numpy as np

from pyphishkey.classifier.Classifier import Classifier


class KnnClassifier(Classifier):
    """
    k nearest neighbours with Euclidean distance and majority vote. The score of a row is the fraction of its
    neighbours that are phishing. Ties in distance are broken by the order of the training rows.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, hyperparameters: Dict[str, Any], seed: int):
        """
        Object constructor.

        :param dict hyperparameters: The validated hyperparameters.
        :param int seed: Unused.
        """
        Classifier.__init__(self, hyperparameters, seed)

        self._x: np.ndarray = np.zeros((0, 0), dtype=np.float64)
        self._y: np.ndarray = np.zeros(0, dtype=np.int64)

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Stores the training rows.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        """
        self._x = np.array(x, dtype=np.float64)
        self._y = np.array(y, dtype=np.int64)

    # ------------------------------------------------------------------------------------------------------------------
    def neighbours(self, x: np.ndarray) -> np.ndarray:
        """
        Returns per row the indices of the k nearest training rows, nearest first.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        x = np.asarray(x, dtype=np.float64)
        k = min(self._hyperparameters['k'], self._y.size)
        batch_size = self._hyperparameters['batch_size']
        train_norms = np.einsum('ij,ij->i', self._x, self._x)

        result = np.empty((x.shape[0], k), dtype=np.int64)
        for start in range(0, x.shape[0], batch_size):
            batch = x[start:start + batch_size]
            distances = np.einsum('ij,ij->i', batch, batch)[:, np.newaxis] + train_norms - 2.0 * (batch @ self._x.T)
            distances = np.maximum(distances, 0.0)
            result[start:start + batch_size] = np.argsort(distances, axis=1, kind='stable')[:, :k]

        return result

    # ------------------------------------------------------------------------------------------------------------------
    def predict_proba(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the fraction of phishing neighbours per row.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        return self._y[self.neighbours(x)].mean(axis=1)

    # ------------------------------------------------------------------------------------------------------------------
    def get_state(self) -> Dict[str, Any]:
        """
        Returns the learned state (the training rows) as a JSON serializable dictionary.

        :rtype: dict
        """
        return {'x': self._x.tolist(), 'y': self._y.tolist()}

    # ------------------------------------------------------------------------------------------------------------------
    def set_state(self, state: Dict[str, Any]) -> None:
        """
        Restores the learned state.

        :param dict state: The learned state.
        """
        self._y = np.asarray(state['y'], dtype=np.int64)
        self._x = np.asarray(state['x'], dtype=np.float64).reshape(self._y.size, -1)

# ----------------------------------------------------------------------------------------------------------------------
