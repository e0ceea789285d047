"""
PyPhishKey
"""
import pandas as pd

from pyphishkey.Util import Util
from pyphishkey.command.BaseCommand import BaseCommand
from pyphishkey.dataset.DatasetLoader import DatasetLoader
from pyphishkey.dataset.Label import Label
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.feature.FeatureExtractor import FeatureExtractor


class ExtractFeaturesCommand(BaseCommand):
    """
    Extracts the 26 lexical features of URLs into a CSV file

    extract-features
        {--data=* : Data sources (CSV files, or text files with one URL per line, optionally suffixed with :phishing or :legitimate)}
        {--url-col=url : The name of the URL column in CSV files}
        {--label-col=label : The name of the label column in CSV files}
        {--out=features.csv : The output CSV file}
    """

    # ------------------------------------------------------------------------------------------------------------------
    def run_command(self) -> int:
        """
        Extracts the features of all URLs of the data sources.
        """
        sources = self.option('data')
        if not sources:
            raise ConfigException('At least one --data source is required')

        self.output.title('Feature extraction')

        loader = DatasetLoader(self.option('url-col'), self.option('label-col'), self.output)
        rows = []
        for source in sources:
            rows.extend(loader.load_optionally_labeled(source))

        extractor = FeatureExtractor()
        frame = pd.DataFrame(extractor.extract_matrix(url for url, _ in rows), columns=list(extractor.schema.names))
        frame.insert(0, 'url', [url for url, _ in rows])
        if any(label is not None for _, label in rows):
            frame.insert(1, 'label', [Label.name(label) if label is not None else '' for _, label in rows])

        Util.write_two_phases(self.option('out'), frame.to_csv(index=False), self.output)
        self.output.text('Extracted the features of {0} URLs'.format(len(rows)))

        return 0

# ----------------------------------------------------------------------------------------------------------------------
