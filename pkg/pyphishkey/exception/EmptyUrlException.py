"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class EmptyUrlException(PyPhishKeyException):
    """
    Exception for URLs that are empty after trimming surrounding whitespace.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, raw: str = ''):
        """
        Object constructor.

        :param str raw: The raw (untrimmed) input.
        """
        PyPhishKeyException.__init__(self, 'URL is empty after trimming: {0!r}'.format(raw))

        self._raw: str = raw
        """
        The raw input.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def raw(self) -> str:
        """
        The raw input.

        :rtype: str
        """
        return self._raw

# ----------------------------------------------------------------------------------------------------------------------
