"""
PyPhishKey
"""
import re
import unittest

import numpy as np

from pyphishkey.feature.FeatureExtractor import FeatureExtractor
from pyphishkey.feature.FeatureSchema import FeatureSchema
from pyphishkey.url.UrlDecomposer import UrlDecomposer


class FeatureExtractorTest(unittest.TestCase):
    """
    Unit test for class FeatureExtractor.
    """
    PHISHING_URL = 'http://www.xmadwater.com.cn/js/?ref=http://us.battle.net/d3/en/index'

    ALPHABET = list('abeoprtyHLPS0:/?.-%#=&@') + ['://', 'http', 'https', 'ref', 'login', 'account', 'apple',
                                                  'paypal', 'LOGIN', 'PayPal', 'www.', '.com']

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def naive_features(raw: str):
        """
        Computes the features of a URL by regular expression splitting and plain scans.

        :param str raw: The raw URL.

        :rtype: list[int]
        """
        url = ''.join(chr(ord(c) + 32) if 'A' <= c <= 'Z' else c for c in raw.strip())
        match = re.fullmatch(r'([^/?#]*?://)?([^/?]*)([^?]*)(?:\?(.*))?', url, re.DOTALL)
        scopes = [url, match.group(2), match.group(3), match.group(4) or '']

        values = []
        for char in ('.', '-', '/', '%'):
            for text in scopes:
                values.append(sum(1 for c in text if c == char))
        for text in scopes:
            values.append(len(text))
        for keyword in ('http', 'ref', 'login', 'account', 'apple', 'paypal'):
            values.append(sum(1 for i in range(len(url)) if url[i:i + len(keyword)] == keyword))

        return values

    # ------------------------------------------------------------------------------------------------------------------
    def test01(self):
        """
        Test the schema: 26 unique names, 20 traditional followed by 6 keyword features.
        """
        schema = FeatureSchema()

        self.assertEqual(26, len(schema))
        self.assertEqual(26, len(set(schema.names)))
        self.assertEqual(list(range(20)), schema.traditional_indices)
        self.assertEqual(list(range(20, 26)), schema.keyword_indices)
        self.assertEqual('url_dot', schema.names[0])
        self.assertEqual('params_percent', schema.names[15])
        self.assertEqual('url_length', schema.names[16])
        self.assertEqual('params_length', schema.names[19])
        self.assertEqual(['http_count', 'ref_count', 'login_count', 'account_count', 'apple_count', 'paypal_count'],
                         list(schema.names[20:]))
        self.assertEqual(schema.traditional_indices, schema.indices(FeatureSchema.MODE_TRADITIONAL))
        self.assertEqual(schema.keyword_indices, schema.indices(FeatureSchema.MODE_KEYWORD_ONLY))
        self.assertEqual(list(range(26)), schema.indices(FeatureSchema.MODE_BOTH))

    # ------------------------------------------------------------------------------------------------------------------
    def test02(self):
        """
        Test count_char.
        """
        self.assertEqual(2, FeatureExtractor.count_char('www.a.b', '.'))
        self.assertEqual(0, FeatureExtractor.count_char('', '-'))
        self.assertEqual(3, FeatureExtractor.count_char('a-b--c', '-'))

    # ------------------------------------------------------------------------------------------------------------------
    def test03(self):
        """
        Test count_keyword with matches inside longer words.
        """
        self.assertEqual(2, FeatureExtractor.count_keyword(self.PHISHING_URL, 'http'))
        self.assertEqual(1, FeatureExtractor.count_keyword('https://paypal-secure-login.example/account', 'paypal'))
        self.assertEqual(0, FeatureExtractor.count_keyword('', 'login'))
        self.assertEqual(1, FeatureExtractor.count_keyword('https://a.com', 'http'))
        self.assertEqual(2, FeatureExtractor.count_keyword('a.com/preferences?refresh=1', 'ref'))

    # ------------------------------------------------------------------------------------------------------------------
    def test04(self):
        """
        Test extract on a small URL.
        """
        schema = FeatureSchema()
        vector = FeatureExtractor(schema).extract_url('http://a.b/c.html?x=1')

        expected = {'url_dot':         2,
                    'url_slash':       3,
                    'domain_dot':      1,
                    'pathfile_dot':    1,
                    'pathfile_slash':  1,
                    'params_dot':      0,
                    'url_length':      21,
                    'domain_length':   3,
                    'pathfile_length': 7,
                    'params_length':   3,
                    'http_count':      1}
        for name, value in zip(schema.names, vector.values):
            self.assertEqual(expected.get(name, 0), value, name)
        self.assertEqual(schema.version, vector.schema_version)

    # ------------------------------------------------------------------------------------------------------------------
    def test05(self):
        """
        Test extract on a single character URL.
        """
        schema = FeatureSchema()
        vector = FeatureExtractor(schema).extract_url('x')

        for name, value in zip(schema.names, vector.values):
            self.assertEqual(1 if name in ('url_length', 'domain_length') else 0, value, name)

    # ------------------------------------------------------------------------------------------------------------------
    def test06(self):
        """
        Test extract on a phishing URL counts 'http' twice and 'ref' once.
        """
        schema = FeatureSchema()
        vector = FeatureExtractor(schema).extract_url(self.PHISHING_URL)

        self.assertEqual(2, vector[schema.index('http_count')])
        self.assertEqual(1, vector[schema.index('ref_count')])
        self.assertEqual(0, vector[schema.index('login_count')])

    # ------------------------------------------------------------------------------------------------------------------
    def test07(self):
        """
        Test keyword counting is case insensitive.
        """
        extractor = FeatureExtractor()

        self.assertEqual(extractor.extract_url('http://a.com/login'), extractor.extract_url('HTTP://A.COM/LOGIN'))

    # ------------------------------------------------------------------------------------------------------------------
    def test08(self):
        """
        Test extract agrees with a naive computation on random URLs and the invariants of feature vectors hold.
        """
        extractor = FeatureExtractor()
        schema = extractor.schema
        url_length = schema.index('url_length')
        rng = np.random.default_rng(2016)

        for _ in range(10000):
            pieces = rng.choice(len(self.ALPHABET), size=int(rng.integers(1, 20)))
            raw = ''.join(self.ALPHABET[i] for i in pieces)
            vector = extractor.extract_url(raw)

            self.assertEqual(self.naive_features(raw), list(vector.values), raw)
            self.assertTrue(all(value >= 0 for value in vector.values))
            self.assertGreaterEqual(vector[url_length], sum(vector[url_length + 1:url_length + 4]))
            if UrlDecomposer.normalize(raw).startswith('http'):
                self.assertGreaterEqual(vector[schema.index('http_count')], 1)

    # ------------------------------------------------------------------------------------------------------------------
    def test09(self):
        """
        Test appending characters never decreases whole URL counts, the URL length, or keyword counts.
        """
        extractor = FeatureExtractor()
        schema = extractor.schema
        watched = [schema.index(name) for name in schema.names if name.startswith('url_') or
                   name.endswith('_count')]
        rng = np.random.default_rng(7)

        for _ in range(1000):
            pieces = rng.choice(len(self.ALPHABET), size=int(rng.integers(1, 20)))
            raw = ''.join(self.ALPHABET[i] for i in pieces)
            extra = ''.join(self.ALPHABET[i] for i in rng.choice(len(self.ALPHABET), size=3))
            before = extractor.extract_url(raw)
            after = extractor.extract_url(raw + extra)
            for index in watched:
                self.assertLessEqual(before[index], after[index])

    # ------------------------------------------------------------------------------------------------------------------
    def test10(self):
        """
        Test extract_matrix.
        """
        extractor = FeatureExtractor()

        matrix = extractor.extract_matrix(['http://a.com', 'b.org/login'])
        self.assertEqual((2, 26), matrix.shape)
        self.assertEqual(list(extractor.extract_url('b.org/login').values), list(matrix[1]))

        self.assertEqual((0, 26), extractor.extract_matrix([]).shape)

# ----------------------------------------------------------------------------------------------------------------------
