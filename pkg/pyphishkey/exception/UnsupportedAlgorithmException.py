"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class UnsupportedAlgorithmException(PyPhishKeyException):
    """
    Exception for operations not available for an algorithm (or unknown algorithm names).
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
