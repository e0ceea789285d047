"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class EmptyDatasetException(PyPhishKeyException):
    """
    Exception for inputs without a single valid row.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, source: str, skipped: int):
        """
        Object constructor.

        :param str source: Descriptor of the input.
        :param int skipped: The number of rows that were skipped.
        """
        PyPhishKeyException.__init__(self, "No valid rows in '{0}' ({1} skipped)".format(source, skipped))

        self._skipped: int = skipped
        """
        The number of rows that were skipped.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def skipped(self) -> int:
        """
        The number of rows that were skipped.

        :rtype: int
        """
        return self._skipped

# ----------------------------------------------------------------------------------------------------------------------
