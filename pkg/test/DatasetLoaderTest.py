"""
PyPhishKey
"""
import os
import tempfile
import unittest

from pyphishkey.Util import Util
from pyphishkey.dataset.DatasetLoader import DatasetLoader
from pyphishkey.dataset.Label import Label
from pyphishkey.exception.EmptyDatasetException import EmptyDatasetException
from pyphishkey.exception.MissingColumnException import MissingColumnException
from pyphishkey.feature.FeatureExtractor import FeatureExtractor


class DatasetLoaderTest(unittest.TestCase):
    """
    Unit test for class DatasetLoader.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    # ------------------------------------------------------------------------------------------------------------------
    def tearDown(self):
        self.directory.cleanup()

    # ------------------------------------------------------------------------------------------------------------------
    def write(self, name: str, text: str) -> str:
        """
        Writes a file in the temporary directory and returns its path.
        """
        path = os.path.join(self.directory.name, name)
        with open(path, 'w', encoding='utf-8') as file:
            file.write(text)

        return path

    # ------------------------------------------------------------------------------------------------------------------
    def test01(self):
        """
        Test parse_source.
        """
        self.assertEqual(('p.txt', Label.PHISHING), DatasetLoader.parse_source('p.txt:phishing'))
        self.assertEqual(('l.txt', Label.LEGITIMATE), DatasetLoader.parse_source('l.txt:Legitimate'))
        self.assertEqual(('urls.csv', None), DatasetLoader.parse_source('urls.csv'))
        self.assertEqual(('c:/data/urls.csv', None), DatasetLoader.parse_source('c:/data/urls.csv'))

    # ------------------------------------------------------------------------------------------------------------------
    def test02(self):
        """
        Test load_csv skips rows with an empty URL or an unknown label.
        """
        path = self.write('urls.csv', 'url,label\n'
                                      'http://a.com/login,phishing\n'
                                      ',legitimate\n'
                                      'http://b.com,maybe\n'
                                      'http://c.com,0\n'
                                      'http://d.com/?x=1,1\n')
        items, skipped = DatasetLoader().load_csv(path, 'url', 'label')

        self.assertEqual(2, skipped)
        self.assertEqual(['http://a.com/login', 'http://c.com', 'http://d.com/?x=1'], [item.url for item in items])
        self.assertEqual([Label.PHISHING, Label.LEGITIMATE, Label.PHISHING], [item.label for item in items])
        self.assertEqual(path + ':2', items[0].source)

    # ------------------------------------------------------------------------------------------------------------------
    def test03(self):
        """
        Test load_csv with a missing column.
        """
        path = self.write('urls.csv', 'address,label\nhttp://a.com,1\n')

        with self.assertRaises(MissingColumnException):
            DatasetLoader().load_csv(path, 'url', 'label')

    # ------------------------------------------------------------------------------------------------------------------
    def test04(self):
        """
        Test load_sources combines text files with per file labels.
        """
        phishing = self.write('phishing.txt', 'http://a.com/paypal\n\nhttp://b.com/login\n')
        legitimate = self.write('benign.txt', 'http://c.com\n')

        pool, skipped = DatasetLoader().load_sources([phishing + ':phishing', legitimate + ':legitimate'])

        self.assertEqual(1, skipped)
        self.assertEqual([Label.PHISHING, Label.PHISHING, Label.LEGITIMATE], [item.label for item in pool])

    # ------------------------------------------------------------------------------------------------------------------
    def test05(self):
        """
        Test files without valid rows and missing files.
        """
        path = self.write('empty.txt', '\n  \n')

        with self.assertRaises(EmptyDatasetException):
            DatasetLoader().load_text(path, Label.PHISHING)
        with self.assertRaises(FileNotFoundError):
            DatasetLoader().load_text(os.path.join(self.directory.name, 'nope.txt'), Label.PHISHING)

    # ------------------------------------------------------------------------------------------------------------------
    def test06(self):
        """
        Test load_urls and load_optionally_labeled.
        """
        unlabeled = self.write('new.csv', 'url\nhttp://a.com\nhttp://b.com\n')
        labeled = self.write('old.csv', 'url,label\nhttp://a.com,1\n')
        text = self.write('new.txt', 'http://x.com\n\n')

        loader = DatasetLoader()
        self.assertEqual(['http://a.com', 'http://b.com'], loader.load_urls(unlabeled))
        self.assertEqual(['http://x.com'], loader.load_urls(text))
        self.assertEqual([('http://a.com', None), ('http://b.com', None)], loader.load_optionally_labeled(unlabeled))
        self.assertEqual([('http://a.com', Label.PHISHING)], loader.load_optionally_labeled(labeled))
        self.assertEqual([('http://x.com', Label.LEGITIMATE)], loader.load_optionally_labeled(text + ':legitimate'))

    # ------------------------------------------------------------------------------------------------------------------
    def test07(self):
        """
        Test URLs with bytes that are not UTF-8 are read from CSV and text files and written back unchanged.
        """
        csv_path = os.path.join(self.directory.name, 'bytes.csv')
        with open(csv_path, 'wb') as file:
            file.write(b'url,label\nhttp://a.com/\xff,phishing\n')
        text_path = os.path.join(self.directory.name, 'bytes.txt')
        with open(text_path, 'wb') as file:
            file.write(b'http://a.com/\xff\xfe\n')

        loader = DatasetLoader()
        items, skipped = loader.load_csv(csv_path, 'url', 'label')
        self.assertEqual(0, skipped)
        self.assertEqual(['http://a.com/\udcff'], [item.url for item in items])

        items, skipped = loader.load_text(text_path, Label.PHISHING)
        self.assertEqual(0, skipped)
        self.assertEqual(['http://a.com/\udcff\udcfe'], [item.url for item in items])

        extractor = FeatureExtractor()
        self.assertEqual(15, extractor.extract_url(items[0].url)[extractor.schema.index('url_length')])

        out = os.path.join(self.directory.name, 'out', 'urls.txt')
        self.assertTrue(Util.write_two_phases(out, items[0].url + '\n'))
        self.assertFalse(Util.write_two_phases(out, items[0].url + '\n'))
        with open(out, 'rb') as file:
            self.assertEqual(b'http://a.com/\xff\xfe\n', file.read())

# ----------------------------------------------------------------------------------------------------------------------
