"""
PyPhishKey
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pyphishkey.evaluation.ConfusionMatrix import ConfusionMatrix
from pyphishkey.evaluation.Metrics import Metrics


class EvalReport:
    """
    The evaluation of a trained model on a test set: the confusion matrix, the rates, the runtimes of training and
    testing, and the feature importances of tree models.
    """
    CSV_COLUMNS = ('Algorithm', 'TPR', 'FNR', 'TNR', 'FPR', 'Recall', 'Accuracy')
    """
    The columns of a result table row.
    """

    DECIMALS = {'tpr': 2, 'fnr': 3, 'tnr': 2, 'fpr': 3, 'precision': 2, 'recall': 2, 'accuracy': 2}
    """
    The number of decimals of each rate when rendered as a percentage.
    """

    UNDEFINED = 'undefined'

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self,
                 matrix: ConfusionMatrix,
                 train_runtime: float = 0.0,
                 test_runtime: float = 0.0,
                 importances: Optional[List[Tuple[str, float]]] = None):
        """
        Object constructor.

        :param ConfusionMatrix matrix: The confusion matrix.
        :param float train_runtime: The duration of training in seconds.
        :param float test_runtime: The duration of testing in seconds.
        :param list[(str,float)]|None importances: The feature importances of a tree model.
        """
        self.__matrix: ConfusionMatrix = matrix
        self.__rates: Dict[str, Optional[Fraction]] = Metrics.metrics(matrix)
        self.__train_runtime: float = float(train_runtime)
        self.__test_runtime: float = float(test_runtime)
        self.__importances: Optional[List[Tuple[str, float]]] = list(importances) if importances is not None else None

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def matrix(self) -> ConfusionMatrix:
        return self.__matrix

    # ------------------------------------------------------------------------------------------------------------------
    def rate(self, name: str) -> Optional[Fraction]:
        """
        Returns a rate by name (tpr, fnr, tnr, fpr, precision, recall, accuracy). None means undefined.

        :param str name: The name of the rate.

        :rtype: Fraction|None
        """
        return self.__rates[name]

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def tpr(self) -> Optional[Fraction]:
        return self.__rates['tpr']

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def fnr(self) -> Optional[Fraction]:
        return self.__rates['fnr']

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def tnr(self) -> Optional[Fraction]:
        return self.__rates['tnr']

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def fpr(self) -> Optional[Fraction]:
        return self.__rates['fpr']

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def precision(self) -> Optional[Fraction]:
        return self.__rates['precision']

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def recall(self) -> Optional[Fraction]:
        return self.__rates['recall']

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def accuracy(self) -> Optional[Fraction]:
        return self.__rates['accuracy']

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def train_runtime(self) -> float:
        return self.__train_runtime

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def test_runtime(self) -> float:
        return self.__test_runtime

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def importances(self) -> Optional[List[Tuple[str, float]]]:
        return self.__importances

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def percent(value: Optional[Fraction], decimals: int) -> str:
        """
        Renders a rate as a percentage.

        :param Fraction|None value: The rate.
        :param int decimals: The number of decimals.

        :rtype: str
        """
        if value is None:
            return EvalReport.UNDEFINED

        return '{0:.{1}f}'.format(float(value * 100), decimals)

    # ------------------------------------------------------------------------------------------------------------------
    def csv_row(self, algorithm: str) -> List[str]:
        """
        Returns the row of this report in a result table (columns CSV_COLUMNS).

        :param str algorithm: The label of the row.

        :rtype: list[str]
        """
        row = [algorithm]
        for name in ('tpr', 'fnr', 'tnr', 'fpr', 'recall', 'accuracy'):
            row.append(EvalReport.percent(self.__rates[name], EvalReport.DECIMALS[name]))

        return row

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        """
        Returns this report as a JSON serializable dictionary. Rates are given as floats and as exact fractions.

        :rtype: dict
        """
        rates = {}
        exact = {}
        for name in Metrics.NAMES:
            value = self.__rates[name]
            rates[name] = float(value) if value is not None else None
            exact[name] = '{0}/{1}'.format(value.numerator, value.denominator) if value is not None else None

        data = {'confusion_matrix': self.__matrix.to_dict(),
                'rates':            rates,
                'rates_exact':      exact,
                'train_runtime':    self.__train_runtime,
                'test_runtime':     self.__test_runtime}
        if self.__importances is not None:
            data['importances'] = [{'feature': name, 'importance': value} for name, value in self.__importances]

        return data

# ----------------------------------------------------------------------------------------------------------------------
