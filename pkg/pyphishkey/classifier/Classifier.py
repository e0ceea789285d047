"""
PyPhishKey
"""
import abc
from typing import Any, Dict, List, Optional

import numpy as np


class Classifier(metaclass=abc.ABCMeta):
    """
    Parent class for the binary classifiers. Classifiers work on float matrices (already standardized when required)
    and labels 1 (phishing) and 0 (legitimate).
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, hyperparameters: Dict[str, Any], seed: int):
        """
        Object constructor.

        :param dict hyperparameters: The validated hyperparameters.
        :param int seed: The seed of the random generator.
        """
        self._hyperparameters: Dict[str, Any] = dict(hyperparameters)
        """
        The hyperparameters.
        """

        self._seed: int = seed
        """
        The seed of the random generator.
        """

        self._converged: bool = True
        """
        False if an iterative training procedure stopped at its iteration cap.
        """

        self._warning: Optional[str] = None
        """
        Warning about the training procedure, if any.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def converged(self) -> bool:
        """
        False if an iterative training procedure stopped at its iteration cap.

        :rtype: bool
        """
        return self._converged

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def warning(self) -> Optional[str]:
        """
        Warning about the training procedure, if any.

        :rtype: str|None
        """
        return self._warning

    # ------------------------------------------------------------------------------------------------------------------
    def _set_not_converged(self, warning: str) -> None:
        """
        Flags the training procedure as not converged.

        :param str warning: The warning text.
        """
        self._converged = False
        self._warning = warning

    # ------------------------------------------------------------------------------------------------------------------
    def restore_convergence(self, converged: bool, warning: Optional[str]) -> None:
        """
        Restores the convergence status of a classifier loaded from a model file.

        :param bool converged: Whether the training procedure converged.
        :param str|None warning: The warning text.
        """
        self._converged = bool(converged)
        self._warning = warning

    # ------------------------------------------------------------------------------------------------------------------
    @abc.abstractmethod
    def fit(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Trains this classifier.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        """
        raise NotImplementedError()

    # ------------------------------------------------------------------------------------------------------------------
    @abc.abstractmethod
    def predict_proba(self, x: np.ndarray) -> np.ndarray:
        """
        Returns for each row a score in [0, 1]: the probability (or a monotone proxy) of the phishing class. A row is
        classified as phishing when its score is at least 0.5.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        raise NotImplementedError()

    # ------------------------------------------------------------------------------------------------------------------
    @abc.abstractmethod
    def get_state(self) -> Dict[str, Any]:
        """
        Returns the learned state as a JSON serializable dictionary.

        :rtype: dict
        """
        raise NotImplementedError()

    # ------------------------------------------------------------------------------------------------------------------
    @abc.abstractmethod
    def set_state(self, state: Dict[str, Any]) -> None:
        """
        Restores the learned state from a dictionary returned by get_state.

        :param dict state: The learned state.
        """
        raise NotImplementedError()

    # ------------------------------------------------------------------------------------------------------------------
    def feature_gains(self) -> Optional[List[float]]:
        """
        Returns the total split gain per feature for tree models, None for other models.

        :rtype: list[float]|None
        """
        return None

# ----------------------------------------------------------------------------------------------------------------------
