"""
PyPhishKey
"""
from typing import Dict, List, Optional, Sequence, Tuple, Type

import numpy as np

from pyphishkey.classifier.Classifier import Classifier
from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.classifier.GradientBoostingClassifier import GradientBoostingClassifier
from pyphishkey.classifier.KnnClassifier import KnnClassifier
from pyphishkey.classifier.LogisticRegressionClassifier import LogisticRegressionClassifier
from pyphishkey.classifier.MlpClassifier import MlpClassifier
from pyphishkey.classifier.Prediction import Prediction
from pyphishkey.classifier.RandomForestClassifier import RandomForestClassifier
from pyphishkey.classifier.Standardizer import Standardizer
from pyphishkey.classifier.SvmClassifier import SvmClassifier
from pyphishkey.classifier.TrainedModel import TrainedModel
from pyphishkey.dataset.LabeledDataset import LabeledDataset
from pyphishkey.evaluation.Timer import Timer
from pyphishkey.exception.NonFiniteFeatureException import NonFiniteFeatureException
from pyphishkey.exception.SchemaMismatchException import SchemaMismatchException
from pyphishkey.exception.SingleClassTrainingException import SingleClassTrainingException
from pyphishkey.exception.UnsupportedAlgorithmException import UnsupportedAlgorithmException
from pyphishkey.feature.FeatureSchema import FeatureSchema
from pyphishkey.feature.FeatureVector import FeatureVector
from pyphishkey.style.PyPhishKeyStyle import PyPhishKeyStyle


class ModelTrainer:
    """
    Fits classifiers on labeled datasets and applies trained models to feature vectors.
    """
    CLASSES: Dict[str, Type[Classifier]] = {ClassifierSpec.RANDOM_FOREST:       RandomForestClassifier,
                                            ClassifierSpec.GRADIENT_BOOSTING:   GradientBoostingClassifier,
                                            ClassifierSpec.MLP:                 MlpClassifier,
                                            ClassifierSpec.SVM_RBF:             SvmClassifier,
                                            ClassifierSpec.LOGISTIC_REGRESSION: LogisticRegressionClassifier,
                                            ClassifierSpec.KNN:                 KnnClassifier}
    """
    The classifier class per algorithm.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, io: Optional[PyPhishKeyStyle] = None, schema: Optional[FeatureSchema] = None):
        """
        Object constructor.

        :param PyPhishKeyStyle|None io: The output decorator.
        :param FeatureSchema|None schema: The feature schema.
        """
        self._io: Optional[PyPhishKeyStyle] = io
        """
        The output decorator.
        """

        self._schema: FeatureSchema = schema or FeatureSchema()
        """
        The feature schema.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def create_classifier(spec: ClassifierSpec) -> Classifier:
        """
        Returns an untrained classifier for a spec.

        :param ClassifierSpec spec: The spec.

        :rtype: Classifier
        """
        return ModelTrainer.CLASSES[spec.algorithm](spec.hyperparameters, spec.seed)

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, spec: ClassifierSpec, train: LabeledDataset, mode: str = FeatureSchema.MODE_BOTH) -> TrainedModel:
        """
        Fits a classifier on the columns of a feature mode of a labeled dataset.

        :param ClassifierSpec spec: The spec.
        :param LabeledDataset train: The training set.
        :param str mode: The feature mode.

        :rtype: TrainedModel
        """
        if train.schema_version != self._schema.version:
            raise SchemaMismatchException(self._schema.version, train.schema_version)

        return self.fit_matrix(spec,
                               train.matrix(mode, self._schema),
                               train.labels,
                               mode,
                               self._schema.indices(mode),
                               self._schema.names_for(mode))

    # ------------------------------------------------------------------------------------------------------------------
    def fit_matrix(self,
                   spec: ClassifierSpec,
                   x: np.ndarray,
                   y: np.ndarray,
                   mode: str = FeatureSchema.MODE_BOTH,
                   indices: Optional[Sequence[int]] = None,
                   names: Optional[Sequence[str]] = None) -> TrainedModel:
        """
        Fits a classifier on a feature matrix.

        :param ClassifierSpec spec: The spec.
        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        :param str mode: The feature mode the columns of x belong to.
        :param list[int]|None indices: The schema indices of the columns of x. Defaults to 0, 1, ...
        :param list[str]|None names: The names of the columns of x. Defaults to f0, f1, ...
        :rtype: TrainedModel
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)

        if x.ndim != 2 or x.shape[0] == 0:
            raise SingleClassTrainingException('Training set is empty')
        if np.unique(y).size < 2:
            raise SingleClassTrainingException('Training set has only one class ({0} rows)'.format(y.size))
        if not np.all(np.isfinite(x)):
            raise NonFiniteFeatureException('Training features contain NaN or infinite values')

        indices = list(indices) if indices is not None else list(range(x.shape[1]))
        names = list(names) if names is not None else ['f{0}'.format(i) for i in range(x.shape[1])]

        def train() -> Tuple[Classifier, Optional[Standardizer]]:
            standardizer = Standardizer.fit(x) if spec.standardize else None
            classifier = ModelTrainer.create_classifier(spec)
            classifier.fit(standardizer.transform(x) if standardizer else x, y)

            return classifier, standardizer

        (classifier, standardizer), runtime = Timer.timed(train)

        model = TrainedModel(spec, self._schema.version, mode, indices, names, classifier, standardizer, runtime)
        if self._io:
            self._io.log_verbose('Trained <alg>{0}</alg> on {1} rows and {2} features in {3:.3f}s'.
                                 format(spec.display_name, x.shape[0], x.shape[1], runtime))
            self._io.log_very_verbose('Hyperparameters of <alg>{0}</alg>: {1}'.format(spec.display_name,
                                                                                     spec.hyperparameters))
            if not model.converged:
                self._io.convergence_warning(spec.display_name, model.warning)

        return model

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def predict_matrix(model: TrainedModel, x: np.ndarray) -> np.ndarray:
        """
        Returns the scores of the phishing class of the rows of a matrix with the columns of the model's feature mode.
        Row order is preserved.

        :param TrainedModel model: The model.
        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        x = np.asarray(x, dtype=np.float64)
        if x.shape[0] == 0:
            return np.zeros(0, dtype=np.float64)
        if model.standardizer:
            x = model.standardizer.transform(x)

        return np.clip(model.classifier.predict_proba(x), 0.0, 1.0)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def labels_for(scores: np.ndarray) -> np.ndarray:
        """
        Returns the labels for scores.

        :param numpy.ndarray scores: The scores.

        :rtype: numpy.ndarray
        """
        return (np.asarray(scores) >= Prediction.THRESHOLD).astype(np.int64)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def predict_features(model: TrainedModel, features: np.ndarray, schema_version: str) -> np.ndarray:
        """
        Returns the scores of the rows of a full (all schema columns) feature matrix.

        :param TrainedModel model: The model.
        :param numpy.ndarray features: The features.
        :param str schema_version: The schema version of the features.

        :rtype: numpy.ndarray
        """
        if schema_version != model.schema_version:
            raise SchemaMismatchException(model.schema_version, schema_version)

        features = np.atleast_2d(np.asarray(features))

        return ModelTrainer.predict_matrix(model, features[:, list(model.feature_indices)])

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def predict(model: TrainedModel, vector: FeatureVector) -> Prediction:
        """
        Returns the prediction of a model for a feature vector.

        :param TrainedModel model: The model.
        :param FeatureVector vector: The feature vector.

        :rtype: Prediction
        """
        scores = ModelTrainer.predict_features(model, vector.as_array()[np.newaxis, :], vector.schema_version)

        return Prediction(float(scores[0]))

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def predict_dataset(model: TrainedModel, dataset: LabeledDataset) -> np.ndarray:
        """
        Returns the scores of all rows of a dataset, in row order.

        :param TrainedModel model: The model.
        :param LabeledDataset dataset: The dataset.

        :rtype: numpy.ndarray
        """
        return ModelTrainer.predict_features(model, dataset.features, dataset.schema_version)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def feature_importance(model: TrainedModel) -> List[Tuple[str, float]]:
        """
        Returns the gain based importance of the features of a tree model, normalized to sum 1, in descending order
        with ties in schema order. When the model has no splits at all the importances are 0.

        :param TrainedModel model: The model.

        :rtype: list[(str,float)]
        """
        gains = model.classifier.feature_gains()
        if model.algorithm not in ClassifierSpec.TREE_ALGORITHMS or gains is None:
            raise UnsupportedAlgorithmException("Feature importance is not available for '{0}'".
                                                format(model.algorithm))

        gains = np.maximum(np.asarray(gains, dtype=np.float64), 0.0)
        total = gains.sum()
        importances = gains / total if total > 0.0 else gains

        order = sorted(range(len(importances)), key=lambda i: (-importances[i], model.feature_indices[i]))

        return [(model.feature_names[i], float(importances[i])) for i in order]

# ----------------------------------------------------------------------------------------------------------------------
