"""
PyPhishKey
"""
from pyphishkey.exception.ConfigException import ConfigException


class SplitSpec:
    """
    How to split a dataset into a training and a test set.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, train_fraction: float = 0.8, seed: int = 42, stratified: bool = True):
        """
        Object constructor.

        :param float train_fraction: The fraction of the rows used for training, strictly between 0 and 1.
        :param int seed: The seed of the random generator.
        :param bool stratified: If True the class ratio is preserved in both parts.
        """
        if not 0.0 < train_fraction < 1.0:
            raise ConfigException('Train fraction must be between 0 and 1 (exclusive), got {0}'.format(train_fraction))

        self.__train_fraction: float = float(train_fraction)
        self.__seed: int = int(seed)
        self.__stratified: bool = bool(stratified)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def train_fraction(self) -> float:
        """
        The fraction of the rows used for training.

        :rtype: float
        """
        return self.__train_fraction

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def seed(self) -> int:
        """
        The seed of the random generator.

        :rtype: int
        """
        return self.__seed

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def stratified(self) -> bool:
        """
        Whether the class ratio is preserved in both parts.

        :rtype: bool
        """
        return self.__stratified

# ----------------------------------------------------------------------------------------------------------------------
