"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class TooFewRowsException(PyPhishKeyException):
    """
    Exception for datasets too small to be split as requested.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
