"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class MissingPairException(PyPhishKeyException):
    """
    Exception for error summaries where one mode of a paired run is absent.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
