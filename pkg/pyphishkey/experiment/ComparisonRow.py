"""
PyPhishKey
"""
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.evaluation.EvalReport import EvalReport
from pyphishkey.feature.FeatureSchema import FeatureSchema


class ComparisonRow:
    """
    The outcome of one run of an experiment: one algorithm with one feature mode on one dataset. A failed run has no
    report but an error message.
    """
    SUFFIXES = {FeatureSchema.MODE_TRADITIONAL:  '',
                FeatureSchema.MODE_BOTH:         ' (keyword)',
                FeatureSchema.MODE_KEYWORD_ONLY: ' (keyword only)'}
    """
    The suffixes of row labels per feature mode.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self,
                 dataset: str,
                 algorithm: str,
                 feature_mode: str,
                 report: Optional[EvalReport],
                 train_rows: Tuple[int, ...] = (),
                 test_rows: Tuple[int, ...] = (),
                 converged: bool = True,
                 error: Optional[str] = None):
        """
        Object constructor.

        :param str dataset: The name of the dataset (large or small).
        :param str algorithm: The algorithm.
        :param str feature_mode: The feature mode.
        :param EvalReport|None report: The evaluation, None for a failed run.
        :param tuple[int] train_rows: The row ids of the training set.
        :param tuple[int] test_rows: The row ids of the test set.
        :param bool converged: Whether training converged.
        :param str|None error: The error message of a failed run.
        """
        self.dataset: str = dataset
        self.algorithm: str = algorithm
        self.feature_mode: str = feature_mode
        self.report: Optional[EvalReport] = report
        self.train_rows: Tuple[int, ...] = tuple(train_rows)
        self.test_rows: Tuple[int, ...] = tuple(test_rows)
        self.converged: bool = converged
        self.error: Optional[str] = error

        self.error_delta_vs_traditional: Optional[Fraction] = None
        """
        The relative change of the error rate against the traditional run of the same algorithm on the same split,
        e.g. -0.3 for 30% fewer errors. None when not applicable.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def failed(self) -> bool:
        """
        Whether this run failed.

        :rtype: bool
        """
        return self.report is None

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def label(self) -> str:
        """
        The label of this row in a results table, e.g. 'Random Forest (keyword)'.

        :rtype: str
        """
        return ClassifierSpec.DISPLAY_NAMES[self.algorithm] + ComparisonRow.SUFFIXES[self.feature_mode]

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def error_rate(self) -> Optional[Fraction]:
        """
        The error rate, i.e. 1 - accuracy.

        :rtype: Fraction|None
        """
        if self.report is None or self.report.accuracy is None:
            return None

        return 1 - self.report.accuracy

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        """
        Returns this row as a JSON serializable dictionary.

        :rtype: dict
        """
        delta = self.error_delta_vs_traditional

        return {'dataset':                    self.dataset,
                'algorithm':                  self.algorithm,
                'label':                      self.label,
                'feature_mode':               self.feature_mode,
                'status':                     'failed' if self.failed else 'ok',
                'error':                      self.error,
                'converged':                  self.converged,
                'train_rows':                 len(self.train_rows),
                'test_rows':                  len(self.test_rows),
                'error_delta_vs_traditional': float(delta) if delta is not None else None,
                'report':                     self.report.to_dict() if self.report else None}

# ----------------------------------------------------------------------------------------------------------------------
