"""
PyPhishKey
"""


class UrlSegments:
    """
    A normalized URL split into the scopes over which features are counted.

    Every character of the URL belongs to exactly one of: the scheme prefix, the domain, the path and file, the '?'
    separator, or the parameters. Hence the scheme prefix, domain, pathfile, separator and parameters concatenated
    give the full URL back.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, full: str, scheme: str, domain: str, pathfile: str, params: str, has_separator: bool):
        """
        Object constructor.

        :param str full: The normalized whole URL.
        :param str scheme: The scheme prefix including '://' (empty for scheme-less URLs).
        :param str domain: The domain scope.
        :param str pathfile: The path and file scope.
        :param str params: The parameters scope (the query and everything after it).
        :param bool has_separator: Whether the URL has a '?' between pathfile and params.
        """
        self.__full: str = full
        """
        The normalized whole URL.
        """

        self.__scheme: str = scheme
        """
        The scheme prefix including '://'.
        """

        self.__domain: str = domain
        """
        The domain scope.
        """

        self.__pathfile: str = pathfile
        """
        The path and file scope.
        """

        self.__params: str = params
        """
        The parameters scope.
        """

        self.__has_separator: bool = has_separator
        """
        Whether the URL has a '?' between pathfile and params.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def full(self) -> str:
        """
        The normalized whole URL.

        :rtype: str
        """
        return self.__full

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def scheme(self) -> str:
        """
        The scheme prefix including '://', or an empty string.

        :rtype: str
        """
        return self.__scheme

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def domain(self) -> str:
        """
        The domain scope. Never contains '/' or '?'.

        :rtype: str
        """
        return self.__domain

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def pathfile(self) -> str:
        """
        The path and file scope. Never contains '?'.

        :rtype: str
        """
        return self.__pathfile

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def params(self) -> str:
        """
        The parameters scope, without the leading '?'. A fragment stays inside this scope.

        :rtype: str
        """
        return self.__params

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def has_separator(self) -> bool:
        """
        Whether the URL has a '?' between pathfile and params.

        :rtype: bool
        """
        return self.__has_separator

    # ------------------------------------------------------------------------------------------------------------------
    def reconstruct(self) -> str:
        """
        Returns the URL reassembled from its segments. Always equal to the full URL.

        :rtype: str
        """
        separator = '?' if self.__has_separator else ''

        return self.__scheme + self.__domain + self.__pathfile + separator + self.__params

    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, UrlSegments):
            return NotImplemented

        return (self.__full, self.__scheme, self.__domain, self.__pathfile, self.__params, self.__has_separator) == \
               (other.full, other.scheme, other.domain, other.pathfile, other.params, other.has_separator)

    # ------------------------------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash((self.__full, self.__has_separator))

    # ------------------------------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return 'UrlSegments(scheme={0!r}, domain={1!r}, pathfile={2!r}, params={3!r})'.format(self.__scheme,
                                                                                            self.__domain,
                                                                                            self.__pathfile,
                                                                                            self.__params)

# ----------------------------------------------------------------------------------------------------------------------
