"""
PyPhishKey
"""
import os
import tempfile
import unittest
from typing import List, Optional, Tuple

import pandas as pd
from cleo import CommandTester, Output

from pyphishkey.application.PyPhishKeyApplication import PyPhishKeyApplication
from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.classifier.ModelTrainer import ModelTrainer
from pyphishkey.exception.SingleClassTrainingException import SingleClassTrainingException
from pyphishkey.feature.FeatureSchema import FeatureSchema


class CommandTest(unittest.TestCase):
    """
    Test cases for the commands of PyPhishKey.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    # ------------------------------------------------------------------------------------------------------------------
    def tearDown(self):
        self.directory.cleanup()

    # ------------------------------------------------------------------------------------------------------------------
    def path(self, name: str) -> str:
        """
        Returns the path of a file in the temporary directory.

        :rtype: str
        """
        return os.path.join(self.directory.name, name)

    # ------------------------------------------------------------------------------------------------------------------
    def write_corpus(self, n: int) -> str:
        """
        Writes a CSV file with n URLs, half phishing, told apart by the keyword 'login' only.

        :rtype: str
        """
        rows = []
        for i in range(n):
            if i % 2 == 0:
                rows.append(['http://h{0}.com/login/x'.format(i), 'phishing'])
            else:
                rows.append(['http://h{0}.com/lagin/x'.format(i), 'legitimate'])
        path = self.path('corpus.csv')
        pd.DataFrame(rows, columns=['url', 'label']).to_csv(path, index=False)

        return path

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def execute(name: str, parameters: List[Tuple[str, object]], verbosity: Optional[int] = None) -> Tuple[int, str]:
        """
        Runs a command and returns its exit code and its output.

        :rtype: (int,str)
        """
        application = PyPhishKeyApplication()
        command = application.find(name)
        tester = CommandTester(command)
        options = {'verbosity': verbosity} if verbosity is not None else {}
        status = tester.execute([('command', command.get_name())] + parameters, options)

        return status, tester.get_display()

    # ------------------------------------------------------------------------------------------------------------------
    def test01(self):
        """
        Test extract-features writes url, label, and the features, also for URLs with bytes that are not UTF-8.
        """
        csv_path = self.path('urls.csv')
        with open(csv_path, 'wb') as file:
            file.write(b'url,label\nhttp://a.com/\xff,phishing\nhttp://b.org/x-y.html?q=1,legitimate\n')
        text_path = self.path('urls.txt')
        with open(text_path, 'wb') as file:
            file.write(b'http://a.com/\xff\xfe\n')
        out = self.path('features.csv')

        status, display = self.execute('extract-features', [('--data', [csv_path, text_path + ':phishing']),
                                                            ('--out', out)])

        self.assertEqual(0, status, display)
        with open(out, 'rb') as file:
            lines = file.read().splitlines()
        header = 'url,label,' + ','.join(FeatureSchema().names)
        self.assertEqual(header.encode(), lines[0])
        self.assertEqual(4, len(lines))
        self.assertTrue(lines[1].startswith(b'http://a.com/\xff,phishing,1,1,'))
        self.assertTrue(lines[2].startswith(b'http://b.org/x-y.html?q=1,legitimate,'))
        self.assertTrue(lines[3].startswith(b'http://a.com/\xff\xfe,phishing,'))

    # ------------------------------------------------------------------------------------------------------------------
    def test02(self):
        """
        Test train, predict, evaluate, and importance on a model file.
        """
        corpus = self.write_corpus(80)
        config = self.path('train.cfg')
        with open(config, 'w', encoding='utf-8') as file:
            file.write('[random_forest]\nn_trees = 15\n')
        model = self.path('model.json')

        status, display = self.execute('train', [('config_file', config),
                                                 ('--data', [corpus]),
                                                 ('--model', model)],
                                       Output.VERBOSITY_VERY_VERBOSE)
        self.assertEqual(0, status, display)
        self.assertTrue(os.path.isfile(model))
        self.assertIn("'n_trees': 15", display)

        urls = self.path('new.txt')
        with open(urls, 'w', encoding='utf-8') as file:
            file.write('http://h7.com/login/x\nhttp://h8.com/lagin/x\n')
        predictions = self.path('predictions.csv')
        status, display = self.execute('predict', [('--model', model),
                                                   ('--data', [urls]),
                                                   ('--out', predictions)])
        self.assertEqual(0, status, display)
        frame = pd.read_csv(predictions, dtype=str)
        self.assertEqual(['url', 'label', 'score'], list(frame.columns))
        self.assertEqual(['phishing', 'legitimate'], list(frame['label']))
        self.assertIn('Classified 2 URLs: 1 phishing, 1 legitimate', display)

        report = self.path('report.json')
        status, display = self.execute('evaluate', [('--model', model),
                                                    ('--data', [corpus]),
                                                    ('--out', report)])
        self.assertEqual(0, status, display)
        self.assertTrue(os.path.isfile(report))

        ranking = self.path('importance.csv')
        status, display = self.execute('importance', [('--model', model),
                                                      ('--top', '3'),
                                                      ('--out', ranking)])
        self.assertEqual(0, status, display)
        self.assertIn('login_count', display)
        self.assertEqual('login_count', pd.read_csv(ranking, dtype=str)['Feature'][0])

    # ------------------------------------------------------------------------------------------------------------------
    def test03(self):
        """
        Test invalid command lines give exit code 1 and an error message.
        """
        corpus = self.write_corpus(20)

        status, display = self.execute('experiment', [('--data', [corpus]), ('--algorithms', '')])
        self.assertEqual(1, status)
        self.assertIn('At least one algorithm is required', display)

        status, display = self.execute('predict', [('--model', self.path('missing.json')), ('--data', [corpus])])
        self.assertEqual(1, status)

        status, display = self.execute('extract-features', [('--out', self.path('features.csv'))])
        self.assertEqual(1, status)
        self.assertIn('At least one --data source is required', display)

    # ------------------------------------------------------------------------------------------------------------------
    def test04(self):
        """
        Test experiment gives exit code 1 when a run fails and still writes the results of the other runs.
        """
        corpus = self.write_corpus(80)
        config = self.path('experiment.cfg')
        with open(config, 'w', encoding='utf-8') as file:
            file.write('[random_forest]\nn_trees = 10\n')
        out = self.path('results')

        original = ModelTrainer.fit

        def fit(trainer, spec, dataset, mode=FeatureSchema.MODE_BOTH):
            if spec.algorithm == ClassifierSpec.KNN:
                raise SingleClassTrainingException('Training set has only one class')
            return original(trainer, spec, dataset, mode)

        ModelTrainer.fit = fit
        try:
            status, display = self.execute('experiment', [('config_file', config),
                                                          ('--data', [corpus]),
                                                          ('--balance-target', '0'),
                                                          ('--algorithms', 'random_forest,knn'),
                                                          ('--out', out)])
        finally:
            ModelTrainer.fit = original

        self.assertEqual(1, status)
        self.assertIn('2 of 4 runs failed', display)
        results = pd.read_csv(os.path.join(out, 'results_large.csv'), dtype=str)
        self.assertEqual(['Random Forest', 'Random Forest (keyword)'], list(results['Algorithm']))
        self.assertTrue(os.path.isfile(os.path.join(out, 'runs', 'large_knn_both.json')))

        status, display = self.execute('experiment', [('config_file', config),
                                                      ('--data', [corpus]),
                                                      ('--balance-target', '0'),
                                                      ('--algorithms', 'random_forest'),
                                                      ('--out', out)])
        self.assertEqual(0, status, display)

# ----------------------------------------------------------------------------------------------------------------------
