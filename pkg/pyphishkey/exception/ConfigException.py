"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class ConfigException(PyPhishKeyException):
    """
    Exception for invalid experiment configurations.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
