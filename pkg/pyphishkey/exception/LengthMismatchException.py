"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class LengthMismatchException(PyPhishKeyException):
    """
    Exception for prediction and truth label lists of different lengths.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
