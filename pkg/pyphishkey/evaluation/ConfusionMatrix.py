"""
PyPhishKey
"""
from typing import Dict


class ConfusionMatrix:
    """
    The counts of a binary classification with phishing as the positive class.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, tp: int, fp: int, fn: int, tn: int):
        """
        Object constructor.

        :param int tp: Phishing URLs classified as phishing.
        :param int fp: Legitimate URLs classified as phishing.
        :param int fn: Phishing URLs classified as legitimate.
        :param int tn: Legitimate URLs classified as legitimate.
        """
        for name, value in (('tp', tp), ('fp', fp), ('fn', fn), ('tn', tn)):
            if int(value) < 0:
                raise ValueError('Count {0} must not be negative, got {1}'.format(name, value))

        self.__tp: int = int(tp)
        self.__fp: int = int(fp)
        self.__fn: int = int(fn)
        self.__tn: int = int(tn)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def tp(self) -> int:
        return self.__tp

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def fp(self) -> int:
        return self.__fp

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def fn(self) -> int:
        return self.__fn

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def tn(self) -> int:
        return self.__tn

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def total(self) -> int:
        """
        The number of evaluated rows.

        :rtype: int
        """
        return self.__tp + self.__fp + self.__fn + self.__tn

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, int]:
        """
        Returns the counts as a dictionary.

        :rtype: dict[str,int]
        """
        return {'tp': self.__tp, 'fp': self.__fp, 'fn': self.__fn, 'tn': self.__tn}

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, ConfusionMatrix):
            return NotImplemented

        return self.to_dict() == other.to_dict()

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash((self.__tp, self.__fp, self.__fn, self.__tn))

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return 'ConfusionMatrix(tp={0}, fp={1}, fn={2}, tn={3})'.format(self.__tp, self.__fp, self.__fn, self.__tn)

# ----------------------------------------------------------------------------------------------------------------------
