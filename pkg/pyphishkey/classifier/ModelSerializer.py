"""
PyPhishKey
"""
import json
from typing import Any, Dict, Optional

from pyphishkey.Util import Util
from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.classifier.ModelTrainer import ModelTrainer
from pyphishkey.classifier.Standardizer import Standardizer
from pyphishkey.classifier.TrainedModel import TrainedModel
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException
from pyphishkey.style.PyPhishKeyStyle import PyPhishKeyStyle


class ModelSerializer:
    """
    Saves and loads trained models as JSON documents.

    A model file is a single object with keys:
    * format: always 'pyphishkey-model';
    * format_version: the version of this layout;
    * algorithm, spec: the algorithm and the full ClassifierSpec;
    * schema_version, feature_mode, feature_indices, feature_names: the input the model expects;
    * standardizer: per feature mean and std, or null;
    * train_runtime, converged, warning: training metadata;
    * state: the learned state of the classifier (trees, weights, support vectors, or stored training rows).
    """
    FORMAT: str = 'pyphishkey-model'
    FORMAT_VERSION: int = 1

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def to_dict(model: TrainedModel) -> Dict[str, Any]:
        """
        Returns a model as a JSON serializable dictionary.

        :param TrainedModel model: The model.

        :rtype: dict
        """
        return {'format':          ModelSerializer.FORMAT,
                'format_version':  ModelSerializer.FORMAT_VERSION,
                'algorithm':       model.algorithm,
                'spec':            model.spec.to_dict(),
                'schema_version':  model.schema_version,
                'feature_mode':    model.feature_mode,
                'feature_indices': list(model.feature_indices),
                'feature_names':   list(model.feature_names),
                'standardizer':    model.standardizer.to_dict() if model.standardizer else None,
                'train_runtime':   model.train_runtime,
                'converged':       model.converged,
                'warning':         model.warning,
                'state':           model.classifier.get_state()}

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def from_dict(data: Dict[str, Any]) -> TrainedModel:
        """
        Returns a model from a dictionary returned by to_dict.

        :param dict data: The dictionary.

        :rtype: TrainedModel
        """
        if data.get('format') != ModelSerializer.FORMAT:
            raise PyPhishKeyException('Not a PyPhishKey model file')
        if data.get('format_version') != ModelSerializer.FORMAT_VERSION:
            raise PyPhishKeyException('Unsupported model format version {0!r}'.format(data.get('format_version')))

        spec = ClassifierSpec.from_dict(data['spec'])
        classifier = ModelTrainer.create_classifier(spec)
        classifier.set_state(data['state'])
        classifier.restore_convergence(data['converged'], data['warning'])
        standardizer = Standardizer.from_dict(data['standardizer']) if data['standardizer'] else None

        return TrainedModel(spec,
                            data['schema_version'],
                            data['feature_mode'],
                            data['feature_indices'],
                            data['feature_names'],
                            classifier,
                            standardizer,
                            data['train_runtime'])

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def save(model: TrainedModel, filename: str, io: Optional[PyPhishKeyStyle] = None) -> None:
        """
        Saves a model.

        :param TrainedModel model: The model.
        :param str filename: The name of the model file.
        :param PyPhishKeyStyle|None io: The output decorator.
        """
        Util.write_two_phases(filename, json.dumps(ModelSerializer.to_dict(model), indent=1) + '\n', io)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def load(filename: str) -> TrainedModel:
        """
        Loads a model.

        :param str filename: The name of the model file.

        :rtype: TrainedModel
        """
        with open(filename, 'r', encoding='utf-8') as file:
            try:
                data = json.load(file)
            except json.JSONDecodeError as error:
                raise PyPhishKeyException("Model file '{0}' is not valid JSON: {1}".format(filename, error))

        return ModelSerializer.from_dict(data)

# ----------------------------------------------------------------------------------------------------------------------
