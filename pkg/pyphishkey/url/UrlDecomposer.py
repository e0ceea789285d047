"""
PyPhishKey
"""
from pyphishkey.exception.EmptyUrlException import EmptyUrlException
from pyphishkey.url.UrlSegments import UrlSegments


class UrlDecomposer:
    """
    Splits raw URL strings into the scopes (whole URL, domain, path and file, parameters) over which features are
    counted. Purely lexical: URLs are never resolved nor fetched, and no registry aware host parsing is done (user info
    and ports stay inside the domain).
    """
    __ascii_lower = str.maketrans('ABCDEFGHIJKLMNOPQRSTUVWXYZ', 'abcdefghijklmnopqrstuvwxyz')
    """
    Translation table for lowercasing ASCII letters only.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def normalize(raw: str) -> str:
        """
        Returns a raw URL trimmed and lowercased. No percent-decoding and no scheme insertion is done.

        Only ASCII letters are lowercased, hence the length of the URL never changes by normalization.

        :param str raw: The raw URL.

        :rtype: str
        """
        url = raw.strip()
        if not url:
            raise EmptyUrlException(raw)

        return url.translate(UrlDecomposer.__ascii_lower)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def decompose(url: str) -> UrlSegments:
        """
        Splits a normalized URL into its segments.

        :param str url: The normalized URL.

        :rtype: UrlSegments
        """
        scheme = UrlDecomposer.__scheme_prefix(url)
        rest = url[len(scheme):]

        question = rest.find('?')
        if question == -1:
            before, params, has_separator = rest, '', False
        else:
            before, params, has_separator = rest[:question], rest[question + 1:], True

        slash = before.find('/')
        if slash == -1:
            domain, pathfile = before, ''
        else:
            domain, pathfile = before[:slash], before[slash:]

        return UrlSegments(url, scheme, domain, pathfile, params, has_separator)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def parse(raw: str) -> UrlSegments:
        """
        Normalizes and decomposes a raw URL.

        :param str raw: The raw URL.

        :rtype: UrlSegments
        """
        return UrlDecomposer.decompose(UrlDecomposer.normalize(raw))

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def __scheme_prefix(url: str) -> str:
        """
        Returns the scheme prefix (up to and including the first '://') of a URL. A '://' preceded by '/', '?', or '#'
        is part of the path or parameters, not a scheme.

        :param str url: The normalized URL.

        :rtype: str
        """
        index = url.find('://')
        if index == -1:
            return ''

        head = url[:index]
        if '/' in head or '?' in head or '#' in head:
            return ''

        return url[:index + 3]

# ----------------------------------------------------------------------------------------------------------------------
