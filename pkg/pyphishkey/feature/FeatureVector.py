"""
PyPhishKey
"""
from typing import Iterator, Sequence, Tuple

import numpy as np


class FeatureVector:
    """
    The 26 integer features of a single URL.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, values: Sequence[int], schema_version: str):
        """
        Object constructor.

        :param list[int] values: The feature values in schema order.
        :param str schema_version: The version of the feature schema.
        """
        self.__values: Tuple[int, ...] = tuple(int(value) for value in values)
        """
        The feature values in schema order.
        """

        self.__schema_version: str = schema_version
        """
        The version of the feature schema.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def values(self) -> Tuple[int, ...]:
        """
        The feature values in schema order.

        :rtype: tuple[int]
        """
        return self.__values

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def schema_version(self) -> str:
        """
        The version of the feature schema.

        :rtype: str
        """
        return self.__schema_version

    # ------------------------------------------------------------------------------------------------------------------
    def as_array(self) -> np.ndarray:
        """
        Returns the values as a 1-D integer array.

        :rtype: numpy.ndarray
        """
        return np.asarray(self.__values, dtype=np.int64)

    # ------------------------------------------------------------------------------------------------------------------
    def __getitem__(self, index: int) -> int:
        return self.__values[index]

    # ------------------------------------------------------------------------------------------------------------------
    def __iter__(self) -> Iterator[int]:
        return iter(self.__values)

    # ------------------------------------------------------------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.__values)

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, FeatureVector):
            return NotImplemented

        return self.__values == other.values and self.__schema_version == other.schema_version

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash((self.__values, self.__schema_version))

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return 'FeatureVector({0!r}, {1!r})'.format(list(self.__values), self.__schema_version)

# ----------------------------------------------------------------------------------------------------------------------
