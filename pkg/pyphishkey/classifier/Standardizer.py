"""
PyPhishKey
"""
from typing import Any, Dict

import numpy as np


class Standardizer:
    """
    Per feature (x - mean) / stddev transform fitted on training data only. Features with zero variance map to 0.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, mean: np.ndarray, std: np.ndarray):
        """
        Object constructor.

        :param numpy.ndarray mean: The per feature mean.
        :param numpy.ndarray std: The per feature (population) standard deviation.
        """
        self.__mean: np.ndarray = np.asarray(mean, dtype=np.float64)
        self.__std: np.ndarray = np.asarray(std, dtype=np.float64)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def fit(x: np.ndarray) -> 'Standardizer':
        """
        Returns the standardizer fitted on a matrix.

        :param numpy.ndarray x: The training features.

        :rtype: Standardizer
        """
        x = np.asarray(x, dtype=np.float64)

        return Standardizer(x.mean(axis=0), x.std(axis=0))

    # ------------------------------------------------------------------------------------------------------------------
    def transform(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the standardized features.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        x = np.asarray(x, dtype=np.float64)
        scale = np.where(self.__std > 0.0, self.__std, 1.0)

        return np.where(self.__std > 0.0, (x - self.__mean) / scale, 0.0)

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        """
        Returns this standardizer as a JSON serializable dictionary.

        :rtype: dict
        """
        return {'mean': self.__mean.tolist(), 'std': self.__std.tolist()}

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'Standardizer':
        """
        Returns a standardizer from a dictionary returned by to_dict.

        :param dict data: The dictionary.

        :rtype: Standardizer
        """
        return Standardizer(np.asarray(data['mean'], dtype=np.float64), np.asarray(data['std'], dtype=np.float64))

# ----------------------------------------------------------------------------------------------------------------------
