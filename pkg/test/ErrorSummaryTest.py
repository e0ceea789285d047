"""
PyPhishKey
"""
import unittest
from fractions import Fraction

from pyphishkey.evaluation.ConfusionMatrix import ConfusionMatrix
from pyphishkey.evaluation.EvalReport import EvalReport
from pyphishkey.exception.MissingPairException import MissingPairException
from pyphishkey.experiment.ComparisonRow import ComparisonRow
from pyphishkey.experiment.ErrorSummary import ErrorSummary
from pyphishkey.experiment.ExperimentRunner import ExperimentRunner
from pyphishkey.feature.FeatureSchema import FeatureSchema


class ErrorSummaryTest(unittest.TestCase):
    """
    Unit test for class ErrorSummary.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def row(algorithm: str, mode: str, tp: int, fp: int, fn: int, tn: int) -> ComparisonRow:
        """
        Returns a successful run with a given confusion matrix.
        """
        return ComparisonRow('large', algorithm, mode, EvalReport(ConfusionMatrix(tp, fp, fn, tn)), (0, 1), (2, 3))

    # ------------------------------------------------------------------------------------------------------------------
    def test01(self):
        """
        Test relative reductions.
        """
        reduction = ErrorSummary.reduction(Fraction('1.835'), Fraction('1.346'))
        self.assertAlmostEqual(0.2665, float(reduction), places=4)

        self.assertEqual(0, ErrorSummary.reduction(Fraction(0), Fraction(0)))
        self.assertEqual(0, ErrorSummary.reduction(Fraction(1, 3), Fraction(1, 3)))
        self.assertIsNone(ErrorSummary.reduction(Fraction(0), Fraction(1, 10)))
        self.assertIsNone(ErrorSummary.reduction(None, Fraction(1, 10)))
        self.assertEqual(Fraction(-1), ErrorSummary.reduction(Fraction(1, 10), Fraction(2, 10)))

    # ------------------------------------------------------------------------------------------------------------------
    def test02(self):
        """
        Test the summary of a pair where keyword features win.
        """
        rows = [self.row('mlp', FeatureSchema.MODE_TRADITIONAL, 90, 5, 10, 95),
                self.row('mlp', FeatureSchema.MODE_BOTH, 95, 2, 5, 98),
                self.row('mlp', FeatureSchema.MODE_KEYWORD_ONLY, 50, 50, 50, 50)]
        summary = ErrorSummary.summarize_errors(rows)

        self.assertEqual(1, len(summary))
        entry = summary[0]
        self.assertEqual('mlp', entry['algorithm'])
        self.assertEqual(Fraction(15, 200), entry['error_traditional'])
        self.assertEqual(Fraction(7, 200), entry['error_keyword'])
        self.assertEqual(Fraction(8, 15), entry['error_reduction'])
        self.assertEqual(Fraction(1, 2), entry['fnr_reduction'])
        self.assertEqual(Fraction(3, 5), entry['fpr_reduction'])
        self.assertEqual('keyword', entry['winner'])

        frame = ErrorSummary.to_frame(summary)
        self.assertEqual(list(ErrorSummary.COLUMNS), list(frame.columns))
        self.assertEqual(['7.500', '3.500', '53.33'], list(frame.iloc[0, 1:4]))
        self.assertEqual('keyword', frame.iloc[0, -1])

    # ------------------------------------------------------------------------------------------------------------------
    def test03(self):
        """
        Test identical runs give zero reductions and a tie, and worse keyword runs lose.
        """
        rows = [self.row('knn', FeatureSchema.MODE_TRADITIONAL, 40, 10, 10, 40),
                self.row('knn', FeatureSchema.MODE_BOTH, 40, 10, 10, 40),
                self.row('random_forest', FeatureSchema.MODE_BOTH, 30, 20, 20, 30),
                self.row('random_forest', FeatureSchema.MODE_TRADITIONAL, 45, 5, 5, 45)]
        summary = ErrorSummary.summarize_errors(rows)

        self.assertEqual(['random_forest', 'knn'], [entry['algorithm'] for entry in summary])
        self.assertEqual('traditional', summary[0]['winner'])
        self.assertEqual('tie', summary[1]['winner'])
        for measure in ErrorSummary.MEASURES:
            self.assertEqual(0, summary[1][measure + '_reduction'])

    # ------------------------------------------------------------------------------------------------------------------
    def test04(self):
        """
        Test an algorithm without a successful traditional run.
        """
        failed = ComparisonRow('large', 'svm_rbf', FeatureSchema.MODE_TRADITIONAL, None, error='did not converge')
        rows = [failed, self.row('svm_rbf', FeatureSchema.MODE_BOTH, 40, 10, 10, 40)]

        with self.assertRaises(MissingPairException):
            ErrorSummary.summarize_errors(rows)

    # ------------------------------------------------------------------------------------------------------------------
    def test05(self):
        """
        Test the error change against the traditional run is set on paired runs only.
        """
        traditional = self.row('mlp', FeatureSchema.MODE_TRADITIONAL, 90, 5, 10, 95)
        keyword = self.row('mlp', FeatureSchema.MODE_BOTH, 95, 2, 5, 98)
        other = self.row('knn', FeatureSchema.MODE_BOTH, 95, 2, 5, 98)
        ExperimentRunner.compute_deltas([traditional, keyword, other])

        self.assertIsNone(traditional.error_delta_vs_traditional)
        self.assertEqual(Fraction(-8, 15), keyword.error_delta_vs_traditional)
        self.assertIsNone(other.error_delta_vs_traditional)
        self.assertEqual('MLP (keyword)', keyword.label)
        self.assertEqual(Fraction(7, 200), keyword.error_rate)

# ----------------------------------------------------------------------------------------------------------------------
