"""
PyPhishKey
"""
import json
import os
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from pyphishkey.Util import Util
from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.classifier.ModelTrainer import ModelTrainer
from pyphishkey.dataset.DatasetLoader import DatasetLoader
from pyphishkey.dataset.DatasetSampler import DatasetSampler
from pyphishkey.dataset.LabeledDataset import LabeledDataset
from pyphishkey.dataset.LabeledUrl import LabeledUrl
from pyphishkey.evaluation.EvalReport import EvalReport
from pyphishkey.evaluation.Metrics import Metrics
from pyphishkey.evaluation.Timer import Timer
from pyphishkey.exception.MissingPairException import MissingPairException
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException
from pyphishkey.experiment.ComparisonRow import ComparisonRow
from pyphishkey.experiment.ErrorSummary import ErrorSummary
from pyphishkey.experiment.ExperimentConfig import ExperimentConfig
from pyphishkey.feature.FeatureSchema import FeatureSchema
from pyphishkey.style.PyPhishKeyStyle import PyPhishKeyStyle


class ExperimentRunner:
    """
    Runs the comparison of classifiers with and without keyword features.

    The labeled URLs are loaded and balanced into the large dataset; with the small option a stratified sample of the
    large dataset is the small dataset. Each dataset is split into train and test once, so all algorithms and feature
    modes see the very same rows and only the feature columns differ between paired runs.

    Per dataset the following files are written to the output directory:
    * results_<dataset>.csv: one row per successful run (Algorithm, TPR, FNR, TNR, FPR, Recall, Accuracy);
    * errors_<dataset>.csv: the error summary of the paired runs;
    * importance_<dataset>_<algorithm>_<mode>.csv: the feature importances of tree models;
    * runs/<dataset>_<algorithm>_<mode>.json: the full report of each run, including runtimes and failures.
    """
    LARGE: str = 'large'
    SMALL: str = 'small'

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, config: ExperimentConfig, io: Optional[PyPhishKeyStyle] = None):
        """
        Object constructor.

        :param ExperimentConfig config: The configuration.
        :param PyPhishKeyStyle|None io: The output decorator.
        """
        self._config: ExperimentConfig = config
        """
        The configuration.
        """

        self._io: Optional[PyPhishKeyStyle] = io
        """
        The output decorator.
        """

        self._trainer: ModelTrainer = ModelTrainer(io)
        """
        The trainer of the classifiers.
        """

    # ------------------------------------------------------------------------------------------------------------------
    def build_datasets(self) -> List[Tuple[str, List[LabeledUrl]]]:
        """
        Loads the data and returns the named datasets of the experiment.

        :rtype: list[(str,list[LabeledUrl])]
        """
        config = self._config
        loader = DatasetLoader(config.url_column, config.label_column, self._io)
        pool, _ = loader.load_sources(config.data)

        large = pool
        if config.balance_target > 0:
            large = DatasetSampler.balance(pool, config.balance_target, config.seed)
        datasets = [(ExperimentRunner.LARGE, large)]

        if config.small:
            datasets.append((ExperimentRunner.SMALL, DatasetSampler.subsample(large, config.small_fraction,
                                                                              config.seed)))

        return datasets

    # ------------------------------------------------------------------------------------------------------------------
    def run_experiment(self) -> List[ComparisonRow]:
        """
        Runs the experiment and writes the result files. Returns the runs of all datasets.

        :rtype: list[ComparisonRow]
        """
        rows = []
        for name, items in self.build_datasets():
            dataset = LabeledDataset.from_labeled_urls(items, provenance=name)
            rows.extend(self.run_dataset(name, dataset))

        return rows

    # ------------------------------------------------------------------------------------------------------------------
    def run_dataset(self, name: str, dataset: LabeledDataset) -> List[ComparisonRow]:
        """
        Runs all algorithms and feature modes on one dataset and writes its result files.

        :param str name: The name of the dataset.
        :param LabeledDataset dataset: The dataset.

        :rtype: list[ComparisonRow]
        """
        if self._io:
            self._io.title('Dataset {0}'.format(name))
            self._io.text(dataset.describe())

        train, test = DatasetSampler.split(dataset, self._config.split_spec())
        if self._io:
            self._io.log_verbose('Split into {0} train and {1} test rows'.format(len(train), len(test)))

        rows = []
        for algorithm in self._config.algorithms:
            for mode in self._config.features:
                rows.append(self.run_single(name, algorithm, mode, train, test))

        ExperimentRunner.compute_deltas(rows)
        self.write_results(name, rows)

        return rows

    # ------------------------------------------------------------------------------------------------------------------
    def run_single(self,
                   name: str,
                   algorithm: str,
                   mode: str,
                   train: LabeledDataset,
                   test: LabeledDataset) -> ComparisonRow:
        """
        Fits and evaluates one algorithm with one feature mode. Errors are caught and recorded in the returned row.

        :param str name: The name of the dataset.
        :param str algorithm: The algorithm.
        :param str mode: The feature mode.
        :param LabeledDataset train: The training set.
        :param LabeledDataset test: The test set.

        :rtype: ComparisonRow
        """
        train_rows = tuple(int(row_id) for row_id in train.row_ids)
        test_rows = tuple(int(row_id) for row_id in test.row_ids)
        spec = self._config.classifier_spec(algorithm)

        if self._io:
            self._io.text('Running <alg>{0}</alg> ({1})'.format(spec.display_name, mode))

        try:
            model = self._trainer.fit(spec, train, mode)
            scores, test_runtime = Timer.timed(lambda: ModelTrainer.predict_dataset(model, test))
            matrix = Metrics.confusion(ModelTrainer.labels_for(scores), test.labels)
            importances = None
            if algorithm in ClassifierSpec.TREE_ALGORITHMS:
                importances = ModelTrainer.feature_importance(model)
            report = EvalReport(matrix, model.train_runtime, test_runtime, importances)

            return ComparisonRow(name, algorithm, mode, report, train_rows, test_rows, model.converged)

        except PyPhishKeyException as exception:
            if self._io:
                self._io.run_failure(spec.display_name, mode, str(exception))

            return ComparisonRow(name, algorithm, mode, None, train_rows, test_rows, False, str(exception))

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def compute_deltas(rows: Sequence[ComparisonRow]) -> None:
        """
        Sets the relative error change against the traditional run of the same algorithm on all other runs.

        :param list[ComparisonRow] rows: The runs of one dataset.
        """
        baseline: Dict[str, ComparisonRow] = {row.algorithm: row for row in rows
                                              if row.feature_mode == FeatureSchema.MODE_TRADITIONAL and not row.failed}
        for row in rows:
            base = baseline.get(row.algorithm)
            if row.failed or base is None or row is base or row.test_rows != base.test_rows:
                continue
            reduction = ErrorSummary.reduction(base.error_rate, row.error_rate)
            row.error_delta_vs_traditional = -reduction if reduction is not None else None

    # ------------------------------------------------------------------------------------------------------------------
    def write_results(self, name: str, rows: Sequence[ComparisonRow]) -> None:
        """
        Writes the result files of one dataset.

        :param str name: The name of the dataset.
        :param list[ComparisonRow] rows: The runs of the dataset.
        """
        directory = self._config.output_directory

        table = [row.report.csv_row(row.label) for row in rows if not row.failed]
        frame = pd.DataFrame(table, columns=list(EvalReport.CSV_COLUMNS))
        Util.write_two_phases(os.path.join(directory, 'results_{0}.csv'.format(name)), frame.to_csv(index=False),
                              self._io)
        if self._io:
            self._io.result_table('Results for the {0} dataset'.format(name), EvalReport.CSV_COLUMNS, table)

        algorithms_with_pairs = {row.algorithm for row in rows if row.feature_mode == ErrorSummary.BEFORE} & \
                                {row.algorithm for row in rows if row.feature_mode == ErrorSummary.AFTER}
        if algorithms_with_pairs:
            try:
                summary = ErrorSummary.summarize_errors(rows)
                frame = ErrorSummary.to_frame(summary)
                Util.write_two_phases(os.path.join(directory, 'errors_{0}.csv'.format(name)),
                                      frame.to_csv(index=False),
                                      self._io)
            except MissingPairException as exception:
                if self._io:
                    self._io.warning('No error summary for the {0} dataset: {1}'.format(name, exception))

        for row in rows:
            base = '{0}_{1}_{2}'.format(name, row.algorithm, row.feature_mode)
            if row.report is not None and row.report.importances is not None:
                frame = pd.DataFrame(row.report.importances, columns=['Feature', 'Importance'])
                Util.write_two_phases(os.path.join(directory, 'importance_{0}.csv'.format(base)),
                                      frame.to_csv(index=False),
                                      self._io)

            data = row.to_dict()
            data['config'] = self._config.to_dict()
            Util.write_two_phases(os.path.join(directory, 'runs', '{0}.json'.format(base)),
                                  json.dumps(data, indent=2) + '\n',
                                  self._io)

# ----------------------------------------------------------------------------------------------------------------------
