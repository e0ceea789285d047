"""
PyPhishKey
"""
from pyphishkey.dataset.Label import Label


class LabeledUrl:
    """
    A raw URL with its class label and where it came from.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, url: str, label: int, source: str = ''):
        """
        Object constructor.

        :param str url: The raw URL.
        :param int label: The label (Label.PHISHING or Label.LEGITIMATE).
        :param str source: The source row, e.g. 'urls.csv:12'.
        """
        if label not in (Label.PHISHING, Label.LEGITIMATE):
            raise ValueError('Invalid label {0!r}'.format(label))

        self.__url: str = url
        self.__label: int = label
        self.__source: str = source

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def url(self) -> str:
        """
        The raw URL.

        :rtype: str
        """
        return self.__url

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def label(self) -> int:
        """
        The label.

        :rtype: int
        """
        return self.__label

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def source(self) -> str:
        """
        The source row.

        :rtype: str
        """
        return self.__source

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledUrl):
            return NotImplemented

        return (self.__url, self.__label, self.__source) == (other.url, other.label, other.source)

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash((self.__url, self.__label, self.__source))

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return 'LabeledUrl({0!r}, {1}, {2!r})'.format(self.__url, Label.name(self.__label), self.__source)

# ----------------------------------------------------------------------------------------------------------------------
