"""
PyPhishKey
"""
from collections import OrderedDict

import numpy as np


class RbfKernel:
    """
    Gaussian kernel K(a, b) = exp(-gamma x |a - b|^2) over a fixed set of rows, with an LRU cache of kernel rows.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, x: np.ndarray, gamma: float, cache_rows: int = 1024):
        """
        Object constructor.

        :param numpy.ndarray x: The rows.
        :param float gamma: The kernel width.
        :param int cache_rows: The maximum number of cached kernel rows.
        """
        self.__x: np.ndarray = np.asarray(x, dtype=np.float64)
        self.__gamma: float = float(gamma)
        self.__squared_norms: np.ndarray = np.einsum('ij,ij->i', self.__x, self.__x)
        self.__cache_rows: int = cache_rows
        self.__cache: OrderedDict = OrderedDict()

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def matrix(a: np.ndarray, b: np.ndarray, gamma: float) -> np.ndarray:
        """
        Returns the kernel matrix between the rows of a and the rows of b.

        :param numpy.ndarray a: The first rows.
        :param numpy.ndarray b: The second rows.
        :param float gamma: The kernel width.

        :rtype: numpy.ndarray
        """
        a = np.asarray(a, dtype=np.float64)
        b = np.asarray(b, dtype=np.float64)
        distances = np.einsum('ij,ij->i', a, a)[:, np.newaxis] + np.einsum('ij,ij->i', b, b)[np.newaxis, :] - \
            2.0 * (a @ b.T)

        return np.exp(-gamma * np.maximum(distances, 0.0))

    # ------------------------------------------------------------------------------------------------------------------
    def row(self, i: int) -> np.ndarray:
        """
        Returns the kernel values between row i and all rows.

        :param int i: The row.

        :rtype: numpy.ndarray
        """
        cached = self.__cache.get(i)
        if cached is not None:
            self.__cache.move_to_end(i)
            return cached

        distances = self.__squared_norms + self.__squared_norms[i] - 2.0 * (self.__x @ self.__x[i])
        values = np.exp(-self.__gamma * np.maximum(distances, 0.0))
        values[i] = 1.0

        self.__cache[i] = values
        if len(self.__cache) > self.__cache_rows:
            self.__cache.popitem(last=False)

        return values

# ----------------------------------------------------------------------------------------------------------------------
