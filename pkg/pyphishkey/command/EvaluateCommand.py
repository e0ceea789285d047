"""
PyPhishKey
"""
import json

from pyphishkey.Util import Util
from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.classifier.ModelTrainer import ModelTrainer
from pyphishkey.command.BaseCommand import BaseCommand
from pyphishkey.dataset.DatasetLoader import DatasetLoader
from pyphishkey.dataset.LabeledDataset import LabeledDataset
from pyphishkey.evaluation.EvalReport import EvalReport
from pyphishkey.evaluation.Metrics import Metrics
from pyphishkey.evaluation.Timer import Timer
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.experiment.ComparisonRow import ComparisonRow


class EvaluateCommand(BaseCommand):
    """
    Evaluates a trained model on labeled URL data

    evaluate
        {--model=model.json : The model file}
        {--data=* : Labeled data sources}
        {--url-col=url : The name of the URL column in CSV files}
        {--label-col=label : The name of the label column in CSV files}
        {--out= : Optional JSON report file}
    """

    # ------------------------------------------------------------------------------------------------------------------
    def run_command(self) -> int:
        """
        Evaluates the model.
        """
        sources = self.option('data')
        if not sources:
            raise ConfigException('At least one --data source is required')

        model = self._load_model()
        self.output.title('Evaluation of {0}'.format(model.spec.display_name))

        loader = DatasetLoader(self.option('url-col'), self.option('label-col'), self.output)
        items, _ = loader.load_sources(sources)
        dataset = LabeledDataset.from_labeled_urls(items, provenance='evaluation')

        scores, runtime = Timer.timed(lambda: ModelTrainer.predict_dataset(model, dataset))
        matrix = Metrics.confusion(ModelTrainer.labels_for(scores), dataset.labels)
        importances = None
        if model.algorithm in ClassifierSpec.TREE_ALGORITHMS:
            importances = ModelTrainer.feature_importance(model)
        report = EvalReport(matrix, model.train_runtime, runtime, importances)

        label = ComparisonRow(dataset.provenance, model.algorithm, model.feature_mode, report).label
        self.output.result_table('Results', EvalReport.CSV_COLUMNS, [report.csv_row(label)])
        self.output.text('Confusion matrix: TP={0} FP={1} FN={2} TN={3}'.
                         format(matrix.tp, matrix.fp, matrix.fn, matrix.tn))

        out = self._option_text('out')
        if out:
            Util.write_two_phases(out, json.dumps(report.to_dict(), indent=2) + '\n', self.output)

        return 0

# ----------------------------------------------------------------------------------------------------------------------
