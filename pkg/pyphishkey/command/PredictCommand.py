"""
PyPhishKey
"""
import numpy as np
import pandas as pd

from pyphishkey.Util import Util
from pyphishkey.classifier.ModelTrainer import ModelTrainer
from pyphishkey.command.BaseCommand import BaseCommand
from pyphishkey.dataset.DatasetLoader import DatasetLoader
from pyphishkey.dataset.Label import Label
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.feature.FeatureExtractor import FeatureExtractor


class PredictCommand(BaseCommand):
    """
    Classifies URLs with a trained model

    predict
        {--model=model.json : The model file}
        {--data=* : Data sources (text files with one URL per line, or CSV files with a URL column)}
        {--url-col=url : The name of the URL column in CSV files}
        {--out=predictions.csv : The output CSV file with url, label, and score}
    """

    # ------------------------------------------------------------------------------------------------------------------
    def run_command(self) -> int:
        """
        Predicts the class of all URLs of the data sources.
        """
        sources = self.option('data')
        if not sources:
            raise ConfigException('At least one --data source is required')

        model = self._load_model()
        self.output.title('Prediction with {0}'.format(model.spec.display_name))

        loader = DatasetLoader(self.option('url-col'), 'label', self.output)
        urls = []
        for source in sources:
            urls.extend(loader.load_urls(source))

        extractor = FeatureExtractor()
        scores = ModelTrainer.predict_features(model, extractor.extract_matrix(urls), extractor.schema.version)
        labels = ModelTrainer.labels_for(scores)

        frame = pd.DataFrame({'url':   urls,
                              'label': [Label.name(label) for label in labels],
                              'score': scores})
        Util.write_two_phases(self.option('out'), frame.to_csv(index=False), self.output)

        phishing = int(np.sum(labels == Label.PHISHING))
        self.output.text('Classified {0} URLs: {1} phishing, {2} legitimate'.
                         format(len(urls), phishing, len(urls) - phishing))

        return 0

# ----------------------------------------------------------------------------------------------------------------------
