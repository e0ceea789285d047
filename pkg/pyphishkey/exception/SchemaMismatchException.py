"""
PyPhishKey
"""
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException


class SchemaMismatchException(PyPhishKeyException):
    """
    Exception for feature vectors or matrices that do not match the feature schema of a trained model.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, expected: str, actual: str):
        """
        Object constructor.

        :param str expected: The schema expected by the model.
        :param str actual: The schema of the offered features.
        """
        PyPhishKeyException.__init__(self, "Feature schema mismatch: model expects '{0}', got '{1}'".
                                     format(expected, actual))

        self._expected: str = expected
        """
        The schema expected by the model.
        """

        self._actual: str = actual
        """
        The schema of the offered features.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def expected(self) -> str:
        """
        The schema expected by the model.

        :rtype: str
        """
        return self._expected

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def actual(self) -> str:
        """
        The schema of the offered features.

        :rtype: str
        """
        return self._actual

# ----------------------------------------------------------------------------------------------------------------------
