"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class SingleClassTrainingException(PyPhishKeyException):
    """
    Exception for training sets that do not contain both classes.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
