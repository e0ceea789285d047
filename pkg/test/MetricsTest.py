"""
PyPhishKey
"""
import time
import unittest
from fractions import Fraction

import numpy as np

from pyphishkey.evaluation.ConfusionMatrix import ConfusionMatrix
from pyphishkey.evaluation.EvalReport import EvalReport
from pyphishkey.evaluation.Metrics import Metrics
from pyphishkey.evaluation.Timer import Timer
from pyphishkey.exception.EmptyInputException import EmptyInputException
from pyphishkey.exception.LengthMismatchException import LengthMismatchException


class MetricsTest(unittest.TestCase):
    """
    Unit test for classes Metrics, EvalReport, and Timer.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def test01(self):
        """
        Test confusion counts.
        """
        self.assertEqual(ConfusionMatrix(1, 1, 1, 1), Metrics.confusion([1, 1, 0, 0], [1, 0, 1, 0]))
        self.assertEqual(ConfusionMatrix(6, 0, 0, 4), Metrics.confusion([1] * 6 + [0] * 4, [1] * 6 + [0] * 4))
        self.assertEqual(ConfusionMatrix(0, 0, 5, 0), Metrics.confusion([0] * 5, [1] * 5))

    # ------------------------------------------------------------------------------------------------------------------
    def test02(self):
        """
        Test confusion with bad input.
        """
        with self.assertRaises(LengthMismatchException):
            Metrics.confusion([1, 0], [1])
        with self.assertRaises(EmptyInputException):
            Metrics.confusion([], [])
        with self.assertRaises(EmptyInputException):
            Metrics.metrics(ConfusionMatrix(0, 0, 0, 0))
        with self.assertRaises(ValueError):
            ConfusionMatrix(-1, 0, 0, 0)

    # ------------------------------------------------------------------------------------------------------------------
    def test03(self):
        """
        Test the rates of a confusion matrix.
        """
        rates = Metrics.metrics(ConfusionMatrix(99, 1, 1, 99))

        self.assertEqual(Fraction(99, 100), rates['tpr'])
        self.assertEqual(Fraction(1, 100), rates['fnr'])
        self.assertEqual(Fraction(99, 100), rates['tnr'])
        self.assertEqual(Fraction(1, 100), rates['fpr'])
        self.assertEqual(Fraction(99, 100), rates['precision'])
        self.assertEqual(Fraction(99, 100), rates['accuracy'])
        self.assertIs(rates['tpr'], rates['recall'])

    # ------------------------------------------------------------------------------------------------------------------
    def test04(self):
        """
        Test rates with a zero denominator are undefined.
        """
        rates = Metrics.metrics(ConfusionMatrix(0, 0, 0, 10))

        self.assertIsNone(rates['tpr'])
        self.assertIsNone(rates['fnr'])
        self.assertIsNone(rates['recall'])
        self.assertIsNone(rates['precision'])
        self.assertEqual(1, rates['tnr'])
        self.assertEqual(1, rates['accuracy'])

        row = EvalReport(ConfusionMatrix(0, 0, 0, 10)).csv_row('Test')
        self.assertEqual(['Test', 'undefined', 'undefined', '100.00', '0.000', 'undefined', '100.00'], row)

    # ------------------------------------------------------------------------------------------------------------------
    def test05(self):
        """
        Test identities of the rates on random confusion matrices.
        """
        rng = np.random.default_rng(3)
        for _ in range(10000):
            tp, fp, fn, tn = (int(value) for value in rng.integers(0, 50, size=4))
            if tp + fp + fn + tn == 0:
                continue
            rates = Metrics.metrics(ConfusionMatrix(tp, fp, fn, tn))

            if tp + fn > 0:
                self.assertEqual(1, rates['tpr'] + rates['fnr'])
            if tn + fp > 0:
                self.assertEqual(1, rates['tnr'] + rates['fpr'])
            self.assertEqual(Fraction(tp + tn, tp + fp + fn + tn), rates['accuracy'])
            self.assertIs(rates['tpr'], rates['recall'])
            for value in rates.values():
                if value is not None:
                    self.assertTrue(0 <= value <= 1)

    # ------------------------------------------------------------------------------------------------------------------
    def test06(self):
        """
        Test the rates do not depend on the order of the rows.
        """
        rng = np.random.default_rng(5)
        predictions = rng.integers(0, 2, size=500)
        truth = rng.integers(0, 2, size=500)
        expected = Metrics.metrics(Metrics.confusion(predictions, truth))

        for _ in range(20):
            order = rng.permutation(500)
            self.assertEqual(expected, Metrics.metrics(Metrics.confusion(predictions[order], truth[order])))

    # ------------------------------------------------------------------------------------------------------------------
    def test07(self):
        """
        Test the result table row and the serialized report.
        """
        report = EvalReport(ConfusionMatrix(99, 1, 1, 99), 1.5, 0.25, [('login_count', 0.75), ('url_dot', 0.25)])

        self.assertEqual(['RF', '99.00', '1.000', '99.00', '1.000', '99.00', '99.00'], report.csv_row('RF'))

        data = report.to_dict()
        self.assertEqual({'tp': 99, 'fp': 1, 'fn': 1, 'tn': 99}, data['confusion_matrix'])
        self.assertEqual('99/100', data['rates_exact']['accuracy'])
        self.assertAlmostEqual(0.99, data['rates']['tpr'])
        self.assertEqual(1.5, data['train_runtime'])
        self.assertEqual('login_count', data['importances'][0]['feature'])

    # ------------------------------------------------------------------------------------------------------------------
    def test08(self):
        """
        Test Timer measures wall clock durations and returns the result of the action.
        """
        result, duration = Timer.timed(lambda: 42)
        self.assertEqual(42, result)
        self.assertGreaterEqual(duration, 0.0)
        self.assertLess(duration, 0.5)

        _, duration = Timer.timed(lambda: time.sleep(0.05))
        self.assertGreaterEqual(duration, 0.049)
        self.assertLess(duration, 0.5)

# ----------------------------------------------------------------------------------------------------------------------
