"""
PyPhishKey
"""
import os
import tempfile
import unittest

import numpy as np
import pandas as pd

from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.experiment.ExperimentConfig import ExperimentConfig
from pyphishkey.experiment.ExperimentRunner import ExperimentRunner
from pyphishkey.feature.FeatureSchema import FeatureSchema


class ExperimentTest(unittest.TestCase):
    """
    Unit test for classes ExperimentConfig and ExperimentRunner.
    """
    KEYWORDS = {'login': 'lagin', 'paypal': 'pzypal', 'account': 'accxunt', 'apple': 'appze'}
    """
    Keywords in phishing URLs and their look-alikes of the same length in legitimate URLs.
    """

    HYPERPARAMETERS = {'random_forest':       {'n_trees': 15},
                       'gradient_boosting':   {'n_trees': 20},
                       'mlp':                 {'hidden_layers': [16], 'epochs': 40},
                       'svm_rbf':             {},
                       'logistic_regression': {'max_iter': 1000},
                       'knn':                 {}}
    """
    Hyperparameters keeping the experiments quick.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    # ------------------------------------------------------------------------------------------------------------------
    def tearDown(self):
        self.directory.cleanup()

    # ------------------------------------------------------------------------------------------------------------------
    def write_corpus(self, n: int, seed: int) -> str:
        """
        Writes a CSV file with n URLs, half phishing, where only the keywords tell the classes apart. Each URL holds 1
        to 3 keywords (phishing) or look-alikes of the keywords (legitimate).

        :rtype: str
        """
        rng = np.random.default_rng(seed)
        words = ['home', 'a-b', 'x.y', 'docs', '%20', 'img', 'index.html', 'view-1']
        keywords = list(self.KEYWORDS)
        rows = []
        for i in range(n):
            phishing = i % 2 == 0
            parts = [words[j] for j in rng.choice(len(words), size=int(rng.integers(1, 4)))]
            for _ in range(int(rng.integers(1, 4))):
                keyword = keywords[int(rng.integers(0, len(keywords)))]
                token = keyword if phishing else self.KEYWORDS[keyword]
                parts.insert(int(rng.integers(0, len(parts) + 1)), token)
            url = 'http://www.site{0}.com/{1}'.format(int(rng.integers(0, 5000)), '/'.join(parts))
            rows.append([url, 'phishing' if phishing else 'legitimate'])

        path = os.path.join(self.directory.name, 'corpus.csv')
        pd.DataFrame(rows, columns=['url', 'label']).to_csv(path, index=False)

        return path

    # ------------------------------------------------------------------------------------------------------------------
    def config(self, data: str, output: str, **overrides) -> ExperimentConfig:
        """
        Returns a configuration for a quick experiment.

        :rtype: ExperimentConfig
        """
        values = {'data':             [data],
                  'balance_target':   0,
                  'algorithms':       ['random_forest', 'logistic_regression'],
                  'output_directory': os.path.join(self.directory.name, output),
                  'hyperparameters':  self.HYPERPARAMETERS}
        values.update(overrides)

        return ExperimentConfig.create(None, values)

    # ------------------------------------------------------------------------------------------------------------------
    def test01(self):
        """
        Test keyword features improve the accuracy of every algorithm on a corpus where only keywords carry the label.
        """
        corpus = self.write_corpus(2000, 1)
        algorithms = list(ClassifierSpec.ALGORITHMS)
        rows = ExperimentRunner(self.config(corpus, 'out', algorithms=algorithms)).run_experiment()

        self.assertEqual(12, len(rows))
        for algorithm in algorithms:
            pair = {row.feature_mode: row for row in rows if row.algorithm == algorithm}
            traditional = pair[FeatureSchema.MODE_TRADITIONAL]
            keyword = pair[FeatureSchema.MODE_BOTH]

            self.assertFalse(traditional.failed, algorithm)
            self.assertFalse(keyword.failed, algorithm)
            self.assertGreaterEqual(float(keyword.report.accuracy), float(traditional.report.accuracy) + 0.05,
                                    algorithm)
            self.assertEqual(traditional.train_rows, keyword.train_rows)
            self.assertEqual(traditional.test_rows, keyword.test_rows)
            self.assertEqual(1600, len(keyword.train_rows))
            self.assertEqual(400, len(keyword.test_rows))
            self.assertEqual(set(), set(keyword.train_rows) & set(keyword.test_rows))
            self.assertLess(keyword.error_delta_vs_traditional, 0, algorithm)

        directory = os.path.join(self.directory.name, 'out')
        results = pd.read_csv(os.path.join(directory, 'results_large.csv'), dtype=str)
        self.assertEqual(['Algorithm', 'TPR', 'FNR', 'TNR', 'FPR', 'Recall', 'Accuracy'], list(results.columns))
        expected = []
        for algorithm in algorithms:
            name = ClassifierSpec.DISPLAY_NAMES[algorithm]
            expected.extend([name, '{0} (keyword)'.format(name)])
        self.assertEqual(expected, list(results['Algorithm']))

        errors = pd.read_csv(os.path.join(directory, 'errors_large.csv'), dtype=str)
        self.assertEqual(['keyword'] * 6, list(errors['Winner']))

        self.assertTrue(os.path.isfile(os.path.join(directory, 'importance_large_random_forest_both.csv')))
        self.assertTrue(os.path.isfile(os.path.join(directory, 'importance_large_gradient_boosting_both.csv')))
        self.assertFalse(os.path.isfile(os.path.join(directory, 'importance_large_logistic_regression_both.csv')))
        self.assertTrue(os.path.isfile(os.path.join(directory, 'runs', 'large_logistic_regression_traditional.json')))

    # ------------------------------------------------------------------------------------------------------------------
    def test02(self):
        """
        Test two runs with the same configuration write byte identical result tables.
        """
        corpus = self.write_corpus(400, 2)
        for output in ('first', 'second'):
            ExperimentRunner(self.config(corpus, output, small=True, small_fraction=0.5)).run_experiment()

        for name in ('results_large.csv', 'errors_large.csv', 'results_small.csv', 'errors_small.csv',
                     'importance_large_random_forest_both.csv'):
            with open(os.path.join(self.directory.name, 'first', name), 'rb') as file:
                first = file.read()
            with open(os.path.join(self.directory.name, 'second', name), 'rb') as file:
                second = file.read()
            self.assertEqual(first, second, name)

    # ------------------------------------------------------------------------------------------------------------------
    def test03(self):
        """
        Test the datasets of an experiment: balancing and the small dataset.
        """
        corpus = self.write_corpus(400, 3)
        config = self.config(corpus, 'out', balance_target=150, small=True, small_fraction=0.1)
        datasets = ExperimentRunner(config).build_datasets()

        self.assertEqual(['large', 'small'], [name for name, _ in datasets])
        large = datasets[0][1]
        self.assertEqual(350, len(large))
        self.assertEqual(35, len(datasets[1][1]))
        self.assertTrue(set(datasets[1][1]) <= set(large))

    # ------------------------------------------------------------------------------------------------------------------
    def test04(self):
        """
        Test invalid configurations.
        """
        corpus = self.write_corpus(20, 4)

        with self.assertRaises(ConfigException):
            self.config(corpus, 'out', algorithms=[])
        with self.assertRaises(ConfigException):
            self.config(corpus, 'out', algorithms=['knn', 'knn'])
        with self.assertRaises(ConfigException):
            self.config(corpus, 'out', algorithms=['naive_bayes'])
        with self.assertRaises(ConfigException):
            self.config(corpus, 'out', features=['semantic'])
        with self.assertRaises(ConfigException):
            self.config(corpus, 'out', train_fraction=1.0)
        with self.assertRaises(ConfigException):
            self.config(corpus, 'out', hyperparameters={'knn': {'k': -1}})
        with self.assertRaises(ConfigException):
            ExperimentConfig.create(None, {})

    # ------------------------------------------------------------------------------------------------------------------
    def test05(self):
        """
        Test values from a configuration file are overridden by command line values.
        """
        filename = os.path.join(self.directory.name, 'experiment.cfg')
        with open(filename, 'w', encoding='utf-8') as file:
            file.write('[experiment]\n'
                       'data = a.csv\n'
                       '       b.txt:phishing\n'
                       'seed = 7\n'
                       'algorithms = knn, mlp\n'
                       'features = traditional, keyword\n'
                       'small = yes\n'
                       '\n'
                       '[knn]\n'
                       'k = 3\n'
                       'standardize = false\n'
                       '\n'
                       '[mlp]\n'
                       'hidden_layers = 8, 4\n')

        config = ExperimentConfig.create(filename, {'seed': 11, 'train_fraction': None})

        self.assertEqual(['a.csv', 'b.txt:phishing'], config.data)
        self.assertEqual(11, config.seed)
        self.assertEqual(0.8, config.train_fraction)
        self.assertEqual(['knn', 'mlp'], config.algorithms)
        self.assertEqual([FeatureSchema.MODE_TRADITIONAL, FeatureSchema.MODE_KEYWORD_ONLY], config.features)
        self.assertTrue(config.small)

        spec = config.classifier_spec('knn')
        self.assertEqual(3, spec.hyperparameters['k'])
        self.assertFalse(spec.standardize)
        self.assertEqual(11, spec.seed)
        self.assertEqual([8, 4], config.classifier_spec('mlp').hyperparameters['hidden_layers'])

    # ------------------------------------------------------------------------------------------------------------------
    def test06(self):
        """
        Test unknown sections and options in a configuration file.
        """
        filename = os.path.join(self.directory.name, 'bad.cfg')
        for text in ('[experiment]\ndata = a.csv\ncolour = red\n', '[experiment]\ndata = a.csv\n[naive_bayes]\nk = 1\n'):
            with open(filename, 'w', encoding='utf-8') as file:
                file.write(text)
            with self.assertRaises(ConfigException):
                ExperimentConfig.create(filename)

# ----------------------------------------------------------------------------------------------------------------------
