"""
PyPhishKey
"""
from typing import List

from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class MissingColumnException(PyPhishKeyException):
    """
    Exception for CSV files without a required column in their header.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, path: str, column: str, header: List[str]):
        """
        Object constructor.

        :param str path: The path of the CSV file.
        :param str column: The name of the missing column.
        :param list[str] header: The columns actually found.
        """
        PyPhishKeyException.__init__(self, "Column '{0}' not found in '{1}' (columns: {2})".
                                     format(column, path, ', '.join(header)))

        self._path: str = path
        """
        The path of the CSV file.
        """

        self._column: str = column
        """
        The name of the missing column.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def path(self) -> str:
        """
        The path of the CSV file.

        :rtype: str
        """
        return self._path

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def column(self) -> str:
        """
        The name of the missing column.

        :rtype: str
        """
        return self._column

# ----------------------------------------------------------------------------------------------------------------------
