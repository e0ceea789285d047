"""
PyPhishKey
"""
from typing import Iterable, Optional

import numpy as np

from pyphishkey.feature.FeatureSchema import FeatureSchema
from pyphishkey.feature.FeatureVector import FeatureVector
from pyphishkey.url.UrlDecomposer import UrlDecomposer
from pyphishkey.url.UrlSegments import UrlSegments


class FeatureExtractor:
    """
    Computes the feature vector of URLs: character counts and lengths over the four scopes plus keyword counts over the
    whole URL.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, schema: Optional[FeatureSchema] = None):
        """
        Object constructor.

        :param FeatureSchema|None schema: The feature schema.
        """
        self._schema: FeatureSchema = schema or FeatureSchema()
        """
        The feature schema.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def schema(self) -> FeatureSchema:
        """
        The feature schema.

        :rtype: FeatureSchema
        """
        return self._schema

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def count_char(scope_text: str, char: str) -> int:
        """
        Returns the number of occurrences of a special character in the text of a scope.

        :param str scope_text: The text of the scope.
        :param str char: The special character.

        :rtype: int
        """
        return scope_text.count(char)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def count_keyword(url_full: str, keyword: str) -> int:
        """
        Returns the number of starting positions in a normalized URL where a keyword matches. Matches inside longer
        words count too, e.g. 'https' holds one 'http' and 'preferences' holds one 'ref'.

        :param str url_full: The normalized URL.
        :param str keyword: The keyword.

        :rtype: int
        """
        count = 0
        index = url_full.find(keyword)
        while index != -1:
            count += 1
            index = url_full.find(keyword, index + 1)

        return count

    # ------------------------------------------------------------------------------------------------------------------
    def extract(self, segments: UrlSegments) -> FeatureVector:
        """
        Returns the feature vector of a decomposed URL.

        :param UrlSegments segments: The decomposed URL.

        :rtype: FeatureVector
        """
        scopes = (segments.full, segments.domain, segments.pathfile, segments.params)

        values = []
        for _, char in FeatureSchema.CHARACTERS:
            for text in scopes:
                values.append(self.count_char(text, char))
        for text in scopes:
            values.append(len(text))
        for keyword in FeatureSchema.KEYWORDS:
            values.append(self.count_keyword(segments.full, keyword))

        return FeatureVector(values, self._schema.version)

    # ------------------------------------------------------------------------------------------------------------------
    def extract_url(self, raw: str) -> FeatureVector:
        """
        Returns the feature vector of a raw URL.

        :param str raw: The raw URL.

        :rtype: FeatureVector
        """
        return self.extract(UrlDecomposer.parse(raw))

    # ------------------------------------------------------------------------------------------------------------------
    def extract_matrix(self, urls: Iterable[str]) -> np.ndarray:
        """
        Returns the features of raw URLs as an integer matrix with one row per URL.

        :param iterable[str] urls: The raw URLs.

        :rtype: numpy.ndarray
        """
        rows = [self.extract_url(url).values for url in urls]
        if not rows:
            return np.zeros((0, len(self._schema)), dtype=np.int64)

        return np.asarray(rows, dtype=np.int64)

# ----------------------------------------------------------------------------------------------------------------------
