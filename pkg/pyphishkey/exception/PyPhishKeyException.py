"""
PyPhishKey
"""


class PyPhishKeyException(RuntimeError):
    """
    Parent class for all exceptions raised by PyPhishKey.
    """
    pass

# ----------------------------------------------------------------------------------------------------------------------
