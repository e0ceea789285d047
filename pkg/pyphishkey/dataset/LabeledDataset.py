"""
PyPhishKey
"""
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from pyphishkey.dataset.Label import Label
from pyphishkey.dataset.LabeledUrl import LabeledUrl
from pyphishkey.feature.FeatureExtractor import FeatureExtractor
from pyphishkey.feature.FeatureSchema import FeatureSchema


class LabeledDataset:
    """
    A feature matrix with binary labels and the provenance of each row.

    Each row has a row id: its position in the list of labeled URLs the dataset was built from. Subsets keep the row ids
    of their parent, so row identity can be compared across splits and feature modes.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self,
                 features: np.ndarray,
                 labels: np.ndarray,
                 urls: Sequence[str],
                 schema_version: str,
                 provenance: str = '',
                 row_ids: Optional[np.ndarray] = None):
        """
        Object constructor.

        :param numpy.ndarray features: The feature matrix, one row per URL.
        :param numpy.ndarray labels: The labels.
        :param list[str] urls: The raw URLs.
        :param str schema_version: The version of the feature schema shared by all rows.
        :param str provenance: Free text descriptor of the source of the data.
        :param numpy.ndarray|None row_ids: The row ids. Defaults to 0, 1, 2, ...
        """
        features = np.array(features)
        labels = np.array(labels, dtype=np.int64)
        if features.ndim != 2 or features.shape[0] != labels.shape[0] or len(urls) != labels.shape[0]:
            raise ValueError('Features, labels, and URLs must have the same number of rows')

        features.setflags(write=False)
        labels.setflags(write=False)

        self.__features: np.ndarray = features
        """
        The feature matrix.
        """

        self.__labels: np.ndarray = labels
        """
        The labels.
        """

        self.__urls: Tuple[str, ...] = tuple(urls)
        """
        The raw URLs.
        """

        self.__schema_version: str = schema_version
        """
        The version of the feature schema.
        """

        self.__provenance: str = provenance
        """
        Free text descriptor of the source of the data.
        """

        if row_ids is None:
            row_ids = np.arange(labels.shape[0], dtype=np.int64)
        else:
            row_ids = np.array(row_ids, dtype=np.int64)
        row_ids.setflags(write=False)

        self.__row_ids: np.ndarray = row_ids
        """
        The row ids.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def from_labeled_urls(items: Sequence[LabeledUrl],
                          extractor: Optional[FeatureExtractor] = None,
                          provenance: str = '') -> 'LabeledDataset':
        """
        Builds a dataset by extracting the features of labeled URLs.

        :param list[LabeledUrl] items: The labeled URLs.
        :param FeatureExtractor|None extractor: The feature extractor.
        :param str provenance: Free text descriptor of the source of the data.

        :rtype: LabeledDataset
        """
        extractor = extractor or FeatureExtractor()
        urls = [item.url for item in items]
        features = extractor.extract_matrix(urls)
        labels = np.asarray([item.label for item in items], dtype=np.int64)

        return LabeledDataset(features, labels, urls, extractor.schema.version, provenance)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def features(self) -> np.ndarray:
        """
        The (read only) feature matrix.

        :rtype: numpy.ndarray
        """
        return self.__features

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def labels(self) -> np.ndarray:
        """
        The (read only) labels.

        :rtype: numpy.ndarray
        """
        return self.__labels

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def urls(self) -> Tuple[str, ...]:
        """
        The raw URLs.

        :rtype: tuple[str]
        """
        return self.__urls

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def row_ids(self) -> np.ndarray:
        """
        The (read only) row ids.

        :rtype: numpy.ndarray
        """
        return self.__row_ids

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def schema_version(self) -> str:
        """
        The version of the feature schema.

        :rtype: str
        """
        return self.__schema_version

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def provenance(self) -> str:
        """
        Free text descriptor of the source of the data.

        :rtype: str
        """
        return self.__provenance

    # ------------------------------------------------------------------------------------------------------------------
    def class_counts(self) -> Dict[int, int]:
        """
        Returns the number of rows per class.

        :rtype: dict[int,int]
        """
        phishing = int(np.count_nonzero(self.__labels == Label.PHISHING))

        return {Label.LEGITIMATE: len(self) - phishing, Label.PHISHING: phishing}

    # ------------------------------------------------------------------------------------------------------------------
    def subset(self, positions: Sequence[int], provenance: Optional[str] = None) -> 'LabeledDataset':
        """
        Returns the rows at some positions as a new dataset. Row ids are preserved.

        :param list[int] positions: The positions of the rows.
        :param str|None provenance: The provenance of the subset. Defaults to the provenance of this dataset.

        :rtype: LabeledDataset
        """
        positions = np.asarray(positions, dtype=np.int64)

        return LabeledDataset(self.__features[positions],
                              self.__labels[positions],
                              [self.__urls[position] for position in positions],
                              self.__schema_version,
                              self.__provenance if provenance is None else provenance,
                              self.__row_ids[positions])

    # ------------------------------------------------------------------------------------------------------------------
    def matrix(self, mode: str, schema: Optional[FeatureSchema] = None) -> np.ndarray:
        """
        Returns the columns of the feature matrix used by a feature mode.

        :param str mode: The feature mode.
        :param FeatureSchema|None schema: The feature schema.

        :rtype: numpy.ndarray
        """
        schema = schema or FeatureSchema()

        return self.__features[:, schema.indices(mode)]

    # ------------------------------------------------------------------------------------------------------------------
    def describe(self) -> List[str]:
        """
        Returns a human readable summary of this dataset.

        :rtype: list[str]
        """
        counts = self.class_counts()

        return ['Rows      : {0}'.format(len(self)),
                'Phishing  : {0}'.format(counts[Label.PHISHING]),
                'Legitimate: {0}'.format(counts[Label.LEGITIMATE]),
                'Source    : {0}'.format(self.__provenance)]

    # ------------------------------------------------------------------------------------------------------------------
    def __len__(self) -> int:
        return int(self.__labels.shape[0])

# ----------------------------------------------------------------------------------------------------------------------
