"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class InsufficientMajorityException(PyPhishKeyException):
    """
    Exception for balancing requests asking more majority class rows than available.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, available: int, required: int):
        """
        Object constructor.

        :param int available: The size of the majority class.
        :param int required: The requested number of majority class rows.
        """
        PyPhishKeyException.__init__(self, 'Majority class has {0} rows, {1} required'.format(available, required))

        self._available: int = available
        """
        The size of the majority class.
        """

        self._required: int = required
        """
        The requested number of majority class rows.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def available(self) -> int:
        """
        The size of the majority class.

        :rtype: int
        """
        return self._available

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def required(self) -> int:
        """
        The requested number of majority class rows.

        :rtype: int
        """
        return self._required

# ----------------------------------------------------------------------------------------------------------------------
