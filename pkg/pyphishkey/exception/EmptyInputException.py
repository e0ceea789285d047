"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class EmptyInputException(PyPhishKeyException):
    """
    Exception for evaluations without a single row.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
