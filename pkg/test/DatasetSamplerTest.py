"""
PyPhishKey
"""
import unittest

import numpy as np

from pyphishkey.dataset.DatasetSampler import DatasetSampler
from pyphishkey.dataset.Label import Label
from pyphishkey.dataset.LabeledDataset import LabeledDataset
from pyphishkey.dataset.LabeledUrl import LabeledUrl
from pyphishkey.dataset.SplitSpec import SplitSpec
from pyphishkey.exception.InsufficientMajorityException import InsufficientMajorityException
from pyphishkey.exception.TooFewRowsException import TooFewRowsException


class DatasetSamplerTest(unittest.TestCase):
    """
    Unit test for class DatasetSampler.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def pool(phishing: int, legitimate: int):
        """
        Returns a list of distinct labeled URLs.

        :rtype: list[LabeledUrl]
        """
        items = [LabeledUrl('http://p{0}.com/login'.format(i), Label.PHISHING) for i in range(phishing)]
        items += [LabeledUrl('http://l{0}.org/'.format(i), Label.LEGITIMATE) for i in range(legitimate)]

        return items

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def dataset(phishing: int, legitimate: int) -> LabeledDataset:
        """
        Returns a dataset with dummy features.
        """
        n = phishing + legitimate
        labels = [Label.PHISHING] * phishing + [Label.LEGITIMATE] * legitimate

        return LabeledDataset(np.arange(n * 26).reshape(n, 26), labels, ['u{0}'.format(i) for i in range(n)], 'test')

    # ------------------------------------------------------------------------------------------------------------------
    def test01(self):
        """
        Test balance keeps all minority rows and exactly the target of majority rows.
        """
        pool = self.pool(300, 2000)
        balanced = DatasetSampler.balance(pool, 1000, 42)

        self.assertEqual(300, sum(1 for item in balanced if item.label == Label.PHISHING))
        self.assertEqual(1000, sum(1 for item in balanced if item.label == Label.LEGITIMATE))
        self.assertTrue(set(balanced) <= set(pool))
        self.assertEqual(balanced, DatasetSampler.balance(pool, 1000, 42))
        self.assertNotEqual(balanced, DatasetSampler.balance(pool, 1000, 43))

    # ------------------------------------------------------------------------------------------------------------------
    def test02(self):
        """
        Test balance with too few majority rows.
        """
        with self.assertRaises(InsufficientMajorityException):
            DatasetSampler.balance(self.pool(10, 20), 21, 42)

    # ------------------------------------------------------------------------------------------------------------------
    def test03(self):
        """
        Test subsample takes 10% of 19,965 rows with the class ratio preserved.
        """
        pool = self.pool(9965, 10000)
        sample = DatasetSampler.subsample(pool, 0.1, 42)

        self.assertEqual(1996, len(sample))
        phishing = sum(1 for item in sample if item.label == Label.PHISHING)
        self.assertIn(phishing, (996, 997))
        self.assertEqual(1996 - phishing, sum(1 for item in sample if item.label == Label.LEGITIMATE))
        self.assertEqual(sample, DatasetSampler.subsample(pool, 0.1, 42))

    # ------------------------------------------------------------------------------------------------------------------
    def test04(self):
        """
        Test allocate with the largest remainder method.
        """
        self.assertEqual([4, 4], DatasetSampler.allocate([5, 5], 0.8))
        self.assertEqual([29], DatasetSampler.allocate([100], 0.29))
        self.assertEqual([1, 0], DatasetSampler.allocate([1, 1], 0.5))
        self.assertEqual([1000, 996], DatasetSampler.allocate([10000, 9965], 0.1))

    # ------------------------------------------------------------------------------------------------------------------
    def test05(self):
        """
        Test split of 10 rows, 5 per class, into 8 training and 2 test rows.
        """
        data = self.dataset(5, 5)
        train, test = DatasetSampler.split(data, SplitSpec(0.8, 42))

        self.assertEqual(8, len(train))
        self.assertEqual(2, len(test))
        self.assertEqual({Label.LEGITIMATE: 4, Label.PHISHING: 4}, train.class_counts())
        self.assertEqual({Label.LEGITIMATE: 1, Label.PHISHING: 1}, test.class_counts())

    # ------------------------------------------------------------------------------------------------------------------
    def test06(self):
        """
        Test split is deterministic and its parts are disjoint and cover all rows.
        """
        data = self.dataset(137, 263)
        for stratified in (True, False):
            train, test = DatasetSampler.split(data, SplitSpec(0.7, 7, stratified))
            again, _ = DatasetSampler.split(data, SplitSpec(0.7, 7, stratified))

            self.assertEqual(list(train.row_ids), list(again.row_ids))
            self.assertEqual(set(), set(train.row_ids) & set(test.row_ids))
            self.assertEqual(set(range(400)), set(train.row_ids) | set(test.row_ids))
            self.assertEqual(280, len(train))
            for row_id, features in zip(test.row_ids, test.features):
                self.assertEqual(list(data.features[row_id]), list(features))

    # ------------------------------------------------------------------------------------------------------------------
    def test07(self):
        """
        Test a stratified split needs two rows of each class.
        """
        with self.assertRaises(TooFewRowsException):
            DatasetSampler.split(self.dataset(1, 5), SplitSpec(0.8, 42))

# ----------------------------------------------------------------------------------------------------------------------
