"""
PyPhishKey
"""
from typing import Any, Dict, Optional

import numpy as np

from pyphishkey.classifier.Activation import Activation
from pyphishkey.classifier.Classifier import Classifier
from pyphishkey.classifier.RbfKernel import RbfKernel
from pyphishkey.classifier.SmoSolver import SmoSolver


class SvmClassifier(Classifier):
    """
    Soft margin SVM with a Gaussian (RBF) kernel. The score of a row is the sigmoid of its decision value, so a row is
    phishing exactly when its decision value is not negative.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, hyperparameters: Dict[str, Any], seed: int):
        """
        Object constructor.

        :param dict hyperparameters: The validated hyperparameters.
        :param int seed: Unused, SMO is deterministic.
        """
        Classifier.__init__(self, hyperparameters, seed)

        self._support_vectors: np.ndarray = np.zeros((0, 0), dtype=np.float64)
        self._coefficients: np.ndarray = np.zeros(0, dtype=np.float64)
        self._rho: float = 0.0
        self._gamma: float = 1.0

        self.solver: Optional[SmoSolver] = None
        """
        The solver of the last fit.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def default_gamma(x: np.ndarray) -> float:
        """
        Returns 1 / (number of features x variance of all feature values), or 1 when the variance is 0.

        :param numpy.ndarray x: The training features.

        :rtype: float
        """
        variance = float(np.asarray(x, dtype=np.float64).var())
        if variance <= 0.0:
            return 1.0

        return 1.0 / (x.shape[1] * variance)

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Trains the SVM.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        """
        x = np.asarray(x, dtype=np.float64)
        signs = np.where(np.asarray(y) == 1, 1.0, -1.0)
        params = self._hyperparameters

        self._gamma = params['gamma'] if params['gamma'] is not None else SvmClassifier.default_gamma(x)
        kernel = RbfKernel(x, self._gamma, params['cache_rows'])
        self.solver = SmoSolver(kernel, signs, params['c'], params['tol'], params['max_iter'])
        alpha, self._rho = self.solver.solve()

        self._converged = True
        self._warning = None
        if not self.solver.converged:
            self._set_not_converged('SMO did not converge within {0} iterations'.format(params['max_iter']))

        support = alpha > 0.0
        self._support_vectors = x[support].copy()
        self._coefficients = (alpha * signs)[support]

    # ------------------------------------------------------------------------------------------------------------------
    def decision_function(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the decision values sum_i a_i y_i K(sv_i, x) - rho.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        x = np.asarray(x, dtype=np.float64)
        if self._coefficients.size == 0:
            return np.full(x.shape[0], -self._rho)

        return RbfKernel.matrix(x, self._support_vectors, self._gamma) @ self._coefficients - self._rho

    # ------------------------------------------------------------------------------------------------------------------
    def predict_proba(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the sigmoid of the decision values.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        return Activation.sigmoid(self.decision_function(x))

    # ------------------------------------------------------------------------------------------------------------------
    def get_state(self) -> Dict[str, Any]:
        """
        Returns the learned state as a JSON serializable dictionary.

        :rtype: dict
        """
        return {'support_vectors': self._support_vectors.tolist(),
                'coefficients':    self._coefficients.tolist(),
                'rho':             self._rho,
                'gamma':           self._gamma}

    # ------------------------------------------------------------------------------------------------------------------
    def set_state(self, state: Dict[str, Any]) -> None:
        """
        Restores the learned state.

        :param dict state: The learned state.
        """
        self._coefficients = np.asarray(state['coefficients'], dtype=np.float64)
        self._support_vectors = np.asarray(state['support_vectors'], dtype=np.float64). \
            reshape(self._coefficients.size, -1) if self._coefficients.size else np.zeros((0, 0))
        self._rho = float(state['rho'])
        self._gamma = float(state['gamma'])

# ----------------------------------------------------------------------------------------------------------------------
