"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class HyperparameterException(PyPhishKeyException):
    """
    Exception for invalid hyperparameters of a classifier.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
