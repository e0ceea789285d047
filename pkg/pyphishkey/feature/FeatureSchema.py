"""
PyPhishKey
"""
from typing import Dict, List, Tuple

from pyphishkey.exception.ConfigException import ConfigException


class FeatureSchema:
    """
    The frozen, version-stamped layout of the 26 URL features.

    Traditional block (indices 0-19): the counts of '.', '-', '/', and '%' in each of the four scopes (url, domain,
    pathfile, params) followed by the lengths of the four scopes. Only 12 of these features are listed by name in the
    original feature table; the roster is completed from the four counted characters, the four scopes and the stated
    total of 20 traditional features.

    Keyword block (indices 20-25): the number of occurrences of 'http', 'ref', 'login', 'account', 'apple', and 'paypal'
    in the whole URL.

    Adding keywords or features requires a new VERSION: trained models are stamped with the version they were fitted
    on.
    """
    VERSION: str = 'url-lexical-26/1'
    """
    The version of the schema.
    """

    SCOPES: Tuple[str, ...] = ('url', 'domain', 'pathfile', 'params')
    """
    The scopes over which characters are counted.
    """

    CHARACTERS: Tuple[Tuple[str, str], ...] = (('dot', '.'), ('hyphen', '-'), ('slash', '/'), ('percent', '%'))
    """
    The counted special characters and their names.
    """

    KEYWORDS: Tuple[str, ...] = ('http', 'ref', 'login', 'account', 'apple', 'paypal')
    """
    The keywords counted in the whole URL.
    """

    MODE_TRADITIONAL: str = 'traditional'
    MODE_KEYWORD_ONLY: str = 'keyword_only'
    MODE_BOTH: str = 'both'

    MODES: Tuple[str, ...] = (MODE_TRADITIONAL, MODE_KEYWORD_ONLY, MODE_BOTH)
    """
    The feature modes, i.e. the column subsets classifiers can be trained on.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self):
        """
        Object constructor.
        """
        names = []
        for char_name, _ in FeatureSchema.CHARACTERS:
            for scope in FeatureSchema.SCOPES:
                names.append('{0}_{1}'.format(scope, char_name))
        for scope in FeatureSchema.SCOPES:
            names.append('{0}_length'.format(scope))
        for keyword in FeatureSchema.KEYWORDS:
            names.append('{0}_count'.format(keyword))

        self.__names: Tuple[str, ...] = tuple(names)
        """
        The feature names in schema order.
        """

        self.__index: Dict[str, int] = {name: index for index, name in enumerate(names)}
        """
        Map from feature name to index.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def version(self) -> str:
        """
        The version of this schema.

        :rtype: str
        """
        return FeatureSchema.VERSION

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def names(self) -> Tuple[str, ...]:
        """
        The 26 feature names in schema order.

        :rtype: tuple[str]
        """
        return self.__names

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def traditional_indices(self) -> List[int]:
        """
        The indices of the traditional features.

        :rtype: list[int]
        """
        return list(range(0, 20))

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def keyword_indices(self) -> List[int]:
        """
        The indices of the keyword features.

        :rtype: list[int]
        """
        return list(range(20, 26))

    # ------------------------------------------------------------------------------------------------------------------
    def index(self, name: str) -> int:
        """
        Returns the index of a feature.

        :param str name: The name of the feature.

        :rtype: int
        """
        return self.__index[name]

    # ------------------------------------------------------------------------------------------------------------------
    def indices(self, mode: str) -> List[int]:
        """
        Returns the indices of the features used in a feature mode.

        :param str mode: The feature mode.

        :rtype: list[int]
        """
        if mode == FeatureSchema.MODE_TRADITIONAL:
            return self.traditional_indices

        if mode == FeatureSchema.MODE_KEYWORD_ONLY:
            return self.keyword_indices

        if mode == FeatureSchema.MODE_BOTH:
            return self.traditional_indices + self.keyword_indices

        raise ConfigException("Unknown feature mode '{0}'. Expected one of: {1}".
                              format(mode, ', '.join(FeatureSchema.MODES)))

    # ------------------------------------------------------------------------------------------------------------------
    def names_for(self, mode: str) -> List[str]:
        """
        Returns the names of the features used in a feature mode.

        :param str mode: The feature mode.

        :rtype: list[str]
        """
        return [self.__names[index] for index in self.indices(mode)]

    # ------------------------------------------------------------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.__names)

# ----------------------------------------------------------------------------------------------------------------------
