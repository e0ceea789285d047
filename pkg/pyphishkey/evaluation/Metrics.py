"""
PyPhishKey
"""
from fractions import Fraction
from typing import Dict, Optional, Sequence

import numpy as np

from pyphishkey.dataset.Label import Label
from pyphishkey.evaluation.ConfusionMatrix import ConfusionMatrix
from pyphishkey.exception.EmptyInputException import EmptyInputException
from pyphishkey.exception.LengthMismatchException import LengthMismatchException


class Metrics:
    """
    Confusion matrix and the derived rates. Rates are exact fractions; a rate with a zero denominator is None
    (undefined), never 0 or 1.
    """
    NAMES = ('tpr', 'fnr', 'tnr', 'fpr', 'precision', 'recall', 'accuracy')
    """
    The names of the rates.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def confusion(predictions: Sequence[int], truth: Sequence[int]) -> ConfusionMatrix:
        """
        Returns the confusion matrix of predicted labels against true labels.

        :param list[int] predictions: The predicted labels.
        :param list[int] truth: The true labels.

        :rtype: ConfusionMatrix
        """
        predictions = np.asarray(predictions, dtype=np.int64).ravel()
        truth = np.asarray(truth, dtype=np.int64).ravel()
        if predictions.size != truth.size:
            raise LengthMismatchException('Got {0} predictions for {1} labels'.format(predictions.size, truth.size))
        if truth.size == 0:
            raise EmptyInputException('Nothing to evaluate')

        predicted_phishing = predictions == Label.PHISHING
        phishing = truth == Label.PHISHING

        return ConfusionMatrix(int(np.sum(predicted_phishing & phishing)),
                               int(np.sum(predicted_phishing & ~phishing)),
                               int(np.sum(~predicted_phishing & phishing)),
                               int(np.sum(~predicted_phishing & ~phishing)))

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def ratio(numerator: int, denominator: int) -> Optional[Fraction]:
        """
        Returns numerator / denominator, or None when the denominator is 0.

        :param int numerator: The numerator.
        :param int denominator: The denominator.

        :rtype: Fraction|None
        """
        if denominator == 0:
            return None

        return Fraction(numerator, denominator)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def metrics(m: ConfusionMatrix) -> Dict[str, Optional[Fraction]]:
        """
        Returns the rates of a confusion matrix. Recall is the very same object as the true positive rate.

        :param ConfusionMatrix m: The confusion matrix.

        :rtype: dict[str,Fraction|None]
        """
        if m.total == 0:
            raise EmptyInputException('Nothing to evaluate')

        tpr = Metrics.ratio(m.tp, m.tp + m.fn)

        return {'tpr':       tpr,
                'fnr':       Metrics.ratio(m.fn, m.tp + m.fn),
                'tnr':       Metrics.ratio(m.tn, m.tn + m.fp),
                'fpr':       Metrics.ratio(m.fp, m.tn + m.fp),
                'precision': Metrics.ratio(m.tp, m.tp + m.fp),
                'recall':    tpr,
                'accuracy':  Metrics.ratio(m.tp + m.tn, m.total)}

# ----------------------------------------------------------------------------------------------------------------------
