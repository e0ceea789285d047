"""
PyPhishKey
"""
from pyphishkey.dataset.Label import Label


class Prediction:
    """
    The predicted class of a URL and its score. The label is phishing if and only if the score is at least the decision
    threshold.
    """
    THRESHOLD: float = 0.5

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, score: float):
        """
        Object constructor.

        :param float score: The score in [0, 1].
        """
        self.__score: float = float(score)
        self.__label: int = Label.PHISHING if self.__score >= Prediction.THRESHOLD else Label.LEGITIMATE

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def label(self) -> int:
        """
        The predicted class.

        :rtype: int
        """
        return self.__label

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def score(self) -> float:
        """
        The score of the phishing class.

        :rtype: float
        """
        return self.__score

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Prediction):
            return NotImplemented

        return self.__score == other.__score

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash(self.__score)

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return 'Prediction({0}, {1!r})'.format(Label.name(self.__label), self.__score)

# ----------------------------------------------------------------------------------------------------------------------
