"""
PyPhishKey
"""
from pyphishkey.classifier.ModelSerializer import ModelSerializer
from pyphishkey.classifier.ModelTrainer import ModelTrainer
from pyphishkey.command.BaseCommand import BaseCommand
from pyphishkey.dataset.LabeledDataset import LabeledDataset
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.experiment.ExperimentRunner import ExperimentRunner


class TrainCommand(BaseCommand):
    """
    Trains a classifier on all rows of labeled URL data and saves the model

    train
        {config_file? : Optional experiment configuration file with hyperparameters}
        {--data=* : Labeled data sources}
        {--url-col= : The name of the URL column in CSV files}
        {--label-col= : The name of the label column in CSV files}
        {--seed= : The seed of the random generators}
        {--balance-target= : Balance the classes by sampling this number of majority class rows}
        {--small : Train on the small (sampled) dataset}
        {--small-fraction= : The fraction of rows in the small dataset}
        {--algorithms=random_forest : The algorithm}
        {--features=both : The feature mode (traditional, keyword, or both)}
        {--model=model.json : The model file}
    """

    # ------------------------------------------------------------------------------------------------------------------
    def run_command(self) -> int:
        """
        Trains and saves the model.
        """
        config = self._create_config(self.argument('config_file'), 0)
        if len(config.algorithms) != 1:
            raise ConfigException('Train expects exactly one algorithm, got {0}'.format(', '.join(config.algorithms)))
        if len(config.features) != 1:
            raise ConfigException('Train expects exactly one feature mode, got {0}'.format(', '.join(config.features)))

        algorithm = config.algorithms[0]
        mode = config.features[0]
        spec = config.classifier_spec(algorithm)

        self.output.title('Training {0}'.format(spec.display_name))

        name, items = ExperimentRunner(config, self.output).build_datasets()[-1]
        dataset = LabeledDataset.from_labeled_urls(items, provenance=name)
        self.output.text(dataset.describe())

        model = ModelTrainer(self.output).fit(spec, dataset, mode)
        self.output.text('Trained <alg>{0}</alg> ({1}) in {2:.3f}s'.format(spec.display_name, mode, model.train_runtime))

        ModelSerializer.save(model, self.option('model'), self.output)

        return 0

# ----------------------------------------------------------------------------------------------------------------------
