"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class NonFiniteFeatureException(PyPhishKeyException):
    """
    Exception for feature matrices with NaN or infinite values.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
