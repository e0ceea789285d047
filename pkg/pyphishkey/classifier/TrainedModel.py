"""
PyPhishKey
"""
from typing import List, Optional, Tuple

from pyphishkey.classifier.Classifier import Classifier
from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.classifier.Standardizer import Standardizer


class TrainedModel:
    """
    A fitted classifier together with everything needed to apply it to feature vectors: the spec it was fitted with, the
    schema version and feature mode of its input, and the standardization fitted on the training data.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self,
                 spec: ClassifierSpec,
                 schema_version: str,
                 feature_mode: str,
                 feature_indices: List[int],
                 feature_names: List[str],
                 classifier: Classifier,
                 standardizer: Optional[Standardizer],
                 train_runtime: float):
        """
        Object constructor.

        :param ClassifierSpec spec: The spec the model was fitted with.
        :param str schema_version: The version of the feature schema.
        :param str feature_mode: The feature mode.
        :param list[int] feature_indices: The schema indices of the features used.
        :param list[str] feature_names: The names of the features used.
        :param Classifier classifier: The fitted classifier.
        :param Standardizer|None standardizer: The standardization, None when disabled.
        :param float train_runtime: The duration of the fit in seconds.
        """
        self.__spec: ClassifierSpec = spec
        self.__schema_version: str = schema_version
        self.__feature_mode: str = feature_mode
        self.__feature_indices: Tuple[int, ...] = tuple(feature_indices)
        self.__feature_names: Tuple[str, ...] = tuple(feature_names)
        self.__classifier: Classifier = classifier
        self.__standardizer: Optional[Standardizer] = standardizer
        self.__train_runtime: float = float(train_runtime)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def spec(self) -> ClassifierSpec:
        """
        The spec the model was fitted with.

        :rtype: ClassifierSpec
        """
        return self.__spec

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def algorithm(self) -> str:
        """
        The algorithm.

        :rtype: str
        """
        return self.__spec.algorithm

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def schema_version(self) -> str:
        """
        The version of the feature schema of the input.

        :rtype: str
        """
        return self.__schema_version

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def feature_mode(self) -> str:
        """
        The feature mode.

        :rtype: str
        """
        return self.__feature_mode

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def feature_indices(self) -> Tuple[int, ...]:
        """
        The schema indices of the features used.

        :rtype: tuple[int]
        """
        return self.__feature_indices

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def feature_names(self) -> Tuple[str, ...]:
        """
        The names of the features used.

        :rtype: tuple[str]
        """
        return self.__feature_names

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def classifier(self) -> Classifier:
        """
        The fitted classifier.

        :rtype: Classifier
        """
        return self.__classifier

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def standardizer(self) -> Optional[Standardizer]:
        """
        The standardization, None when disabled.

        :rtype: Standardizer|None
        """
        return self.__standardizer

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def train_runtime(self) -> float:
        """
        The duration of the fit in seconds.

        :rtype: float
        """
        return self.__train_runtime

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def converged(self) -> bool:
        """
        False if training stopped at an iteration cap.

        :rtype: bool
        """
        return self.__classifier.converged

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def warning(self) -> Optional[str]:
        """
        The training warning, if any.

        :rtype: str|None
        """
        return self.__classifier.warning

# ----------------------------------------------------------------------------------------------------------------------
