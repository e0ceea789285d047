"""
PyPhishKey
"""
import os
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from pyphishkey.dataset.Label import Label
from pyphishkey.dataset.LabeledUrl import LabeledUrl
from pyphishkey.exception.EmptyDatasetException import EmptyDatasetException
from pyphishkey.exception.MissingColumnException import MissingColumnException
from pyphishkey.style.PyPhishKeyStyle import PyPhishKeyStyle


class DatasetLoader:
    """
    Reads labeled (and unlabeled) URL corpora.

    Two layouts are supported:
    * CSV files with a header row and configurable URL and label columns;
    * plain text files with one URL per line and one label for the whole file (the per-category layout of the
      ISCX-URL2016 archive).

    A data source is written as a path, optionally followed by ':phishing' or ':legitimate' for plain text files.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, url_column: str = 'url', label_column: str = 'label', io: Optional[PyPhishKeyStyle] = None):
        """
        Object constructor.

        :param str url_column: The name of the URL column in CSV files.
        :param str label_column: The name of the label column in CSV files.
        :param PyPhishKeyStyle|None io: The output decorator.
        """
        self._url_column: str = url_column
        """
        The name of the URL column in CSV files.
        """

        self._label_column: str = label_column
        """
        The name of the label column in CSV files.
        """

        self._io: Optional[PyPhishKeyStyle] = io
        """
        The output decorator.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def parse_source(source: str) -> Tuple[str, Optional[int]]:
        """
        Splits a data source into a path and the label for plain text files (or None for CSV files).

        :param str source: The data source, e.g. 'phishing.txt:phishing' or 'urls.csv'.

        :rtype: (str,int|None)
        """
        path, separator, suffix = source.rpartition(':')
        if separator and path and suffix.lower() in ('phishing', 'legitimate'):
            return path, Label.parse(suffix)

        return source, None

    # ------------------------------------------------------------------------------------------------------------------
    def load_sources(self, sources: Sequence[str]) -> Tuple[List[LabeledUrl], int]:
        """
        Loads and concatenates labeled URLs from several data sources. Returns the labeled URLs and the total number of
        skipped rows.

        :param list[str] sources: The data sources.

        :rtype: (list[LabeledUrl],int)
        """
        pool = []
        skipped = 0
        for source in sources:
            path, label = self.parse_source(source)
            if label is None:
                items, count = self.load_csv(path, self._url_column, self._label_column)
            else:
                items, count = self.load_text(path, label)
            pool.extend(items)
            skipped += count

        return pool, skipped

    # ------------------------------------------------------------------------------------------------------------------
    def load_csv(self, path: str, url_column: str, label_column: str) -> Tuple[List[LabeledUrl], int]:
        """
        Reads labeled URLs from a CSV file. Rows with an empty URL or an unrecognized label are reported and skipped.
        Returns the labeled URLs and the number of skipped rows.

        :param str path: The path of the CSV file.
        :param str url_column: The name of the URL column.
        :param str label_column: The name of the label column.

        :rtype: (list[LabeledUrl],int)
        """
        frame = self._read_csv(path)
        for column in (url_column, label_column):
            if column not in frame.columns:
                raise MissingColumnException(path, column, list(frame.columns))

        items = []
        skipped = 0
        for line, (url, label_text) in enumerate(zip(frame[url_column], frame[label_column]), start=2):
            label = Label.parse(label_text)
            if not url.strip():
                self._log_skipped(path, line, 'empty URL')
                skipped += 1
            elif label is None:
                self._log_skipped(path, line, 'unrecognized label {0!r}'.format(label_text))
                skipped += 1
            else:
                items.append(LabeledUrl(url, label, '{0}:{1}'.format(path, line)))

        self._log_loaded(path, items, skipped)

        return items, skipped

    # ------------------------------------------------------------------------------------------------------------------
    def load_text(self, path: str, label: int) -> Tuple[List[LabeledUrl], int]:
        """
        Reads URLs from a plain text file with one URL per line, all with the same label. Empty lines are reported and
        skipped. Returns the labeled URLs and the number of skipped lines.

        :param str path: The path of the text file.
        :param int label: The label of all URLs in the file.

        :rtype: (list[LabeledUrl],int)
        """
        items = []
        skipped = 0
        for line, url in enumerate(self._read_lines(path), start=1):
            if not url.strip():
                self._log_skipped(path, line, 'empty URL')
                skipped += 1
            else:
                items.append(LabeledUrl(url, label, '{0}:{1}'.format(path, line)))

        self._log_loaded(path, items, skipped)

        return items, skipped

    # ------------------------------------------------------------------------------------------------------------------
    def load_optionally_labeled(self, source: str) -> List[Tuple[str, Optional[int]]]:
        """
        Reads URLs with their labels when the source provides labels: a text file with a label suffix, or a CSV file
        with a label column. Otherwise the URLs are returned with label None.

        :param str source: The data source.

        :rtype: list[(str,int|None)]
        """
        path, label = self.parse_source(source)
        if label is not None:
            items, _ = self.load_text(path, label)
            return [(item.url, item.label) for item in items]

        if path.lower().endswith('.csv') and self._label_column in self._read_csv(path).columns:
            items, _ = self.load_csv(path, self._url_column, self._label_column)
            return [(item.url, item.label) for item in items]

        return [(url, None) for url in self.load_urls(source)]

    # ------------------------------------------------------------------------------------------------------------------
    def load_urls(self, source: str) -> List[str]:
        """
        Reads unlabeled URLs: the URL column of a CSV file (when the file has a header with the URL column) or else all
        non empty lines of a plain text file.

        :param str source: The data source.

        :rtype: list[str]
        """
        path, _ = self.parse_source(source)
        if path.lower().endswith('.csv'):
            frame = self._read_csv(path)
            if self._url_column not in frame.columns:
                raise MissingColumnException(path, self._url_column, list(frame.columns))
            lines = list(frame[self._url_column])
        else:
            lines = self._read_lines(path)

        urls = [url for url in lines if url.strip()]
        skipped = len(lines) - len(urls)
        if not urls:
            raise EmptyDatasetException(path, skipped)

        if self._io:
            self._io.text('Read {0} URLs from <fso>{1}</fso> ({2} skipped)'.format(len(urls), path, skipped))

        return urls

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def _read_csv(path: str) -> pd.DataFrame:
        """
        Reads a CSV file with all fields as strings.

        :param str path: The path of the CSV file.

        :rtype: pandas.DataFrame
        """
        if not os.path.isfile(path):
            raise FileNotFoundError("Data file '{0}' does not exist".format(path))

        try:
            return pd.read_csv(path,
                               dtype=str,
                               keep_default_na=False,
                               na_filter=False,
                               encoding='utf-8',
                               encoding_errors='surrogateescape')
        except pd.errors.EmptyDataError:
            raise EmptyDatasetException(path, 0)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def _read_lines(path: str) -> List[str]:
        """
        Reads the lines of a plain text file (without line terminators).

        :param str path: The path of the text file.

        :rtype: list[str]
        """
        if not os.path.isfile(path):
            raise FileNotFoundError("Data file '{0}' does not exist".format(path))

        with open(path, 'r', encoding='utf-8', errors='surrogateescape') as file:
            return file.read().splitlines()

    # ------------------------------------------------------------------------------------------------------------------
    def _log_skipped(self, path: str, line: int, reason: str) -> None:
        """
        Logs a skipped row.

        :param str path: The path of the data file.
        :param int line: The line number of the row.
        :param str reason: Why the row is skipped.
        """
        if self._io:
            self._io.log_verbose('Skipping <fso>{0}</fso>:{1}: {2}'.format(path, line, reason))

    # ------------------------------------------------------------------------------------------------------------------
    def _log_loaded(self, path: str, items: List[LabeledUrl], skipped: int) -> None:
        """
        Logs the number of loaded and skipped rows of a data file. Raises EmptyDatasetException when no row is valid.

        :param str path: The path of the data file.
        :param list[LabeledUrl] items: The loaded labeled URLs.
        :param int skipped: The number of skipped rows.
        """
        if not items:
            raise EmptyDatasetException(path, skipped)

        phishing = sum(1 for item in items if item.label == Label.PHISHING)
        if self._io:
            self._io.text('Read <fso>{0}</fso>: {1} phishing, {2} legitimate, {3} skipped'.
                          format(path, phishing, len(items) - phishing, skipped))

# ----------------------------------------------------------------------------------------------------------------------
