"""
PyPhishKey
"""
from typing import Any, Dict, Tuple

import numpy as np

from pyphishkey.classifier.Activation import Activation
from pyphishkey.classifier.Classifier import Classifier


class LogisticRegressionClassifier(Classifier):
    """
    L2 regularized logistic regression trained with full batch gradient descent.

    The step size is 1 / L with L the Lipschitz constant of the gradient, i.e. a quarter of the largest eigenvalue of
    X'X / n (with a column of ones for the bias) plus the L2 penalty. With this step the loss decreases monotonically.
    Training stops when the norm of the gradient is below tol.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, hyperparameters: Dict[str, Any], seed: int):
        """
        Object constructor.

        :param dict hyperparameters: The validated hyperparameters.
        :param int seed: Unused, gradient descent from zero is deterministic.
        """
        Classifier.__init__(self, hyperparameters, seed)

        self._weights: np.ndarray = np.zeros(0, dtype=np.float64)
        """
        The weights of the features.
        """

        self._bias: float = 0.0
        """
        The bias.
        """

        self._iterations: int = 0
        """
        The number of gradient steps taken.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def iterations(self) -> int:
        """
        The number of gradient steps taken.

        :rtype: int
        """
        return self._iterations

    # ------------------------------------------------------------------------------------------------------------------
    def loss_and_gradient(self, params: np.ndarray, x: np.ndarray, y: np.ndarray) -> Tuple[float, np.ndarray]:
        """
        Returns the regularized loss and its gradient at params = [weights..., bias]. The bias is not penalized.

        :param numpy.ndarray params: The weights followed by the bias.
        :param numpy.ndarray x: The features.
        :param numpy.ndarray y: The labels.

        :rtype: (float,numpy.ndarray)
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        weights = params[:-1]
        z = x @ weights + params[-1]
        l2 = self._hyperparameters['l2']

        loss = Activation.log_loss(z, y) + 0.5 * l2 * float(weights @ weights)
        residual = (Activation.sigmoid(z) - y) / x.shape[0]
        gradient = np.empty_like(params)
        gradient[:-1] = x.T @ residual + l2 * weights
        gradient[-1] = residual.sum()

        return loss, gradient

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Trains the model.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        hyper = self._hyperparameters

        augmented = np.hstack([x, np.ones((x.shape[0], 1))])
        lipschitz = 0.25 * float(np.linalg.eigvalsh(augmented.T @ augmented / x.shape[0])[-1]) + hyper['l2']
        step = 1.0 / lipschitz

        params = np.zeros(x.shape[1] + 1, dtype=np.float64)
        self._converged = True
        self._warning = None
        self._iterations = 0
        while True:
            _, gradient = self.loss_and_gradient(params, x, y)
            if np.linalg.norm(gradient) < hyper['tol']:
                break
            if self._iterations >= hyper['max_iter']:
                self._set_not_converged('Logistic regression did not converge within {0} iterations'.
                                        format(hyper['max_iter']))
                break
            params -= step * gradient
            self._iterations += 1

        self._weights = params[:-1].copy()
        self._bias = float(params[-1])

    # ------------------------------------------------------------------------------------------------------------------
    def decision_function(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the log odds of the phishing class per row.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        return np.asarray(x, dtype=np.float64) @ self._weights + self._bias

    # ------------------------------------------------------------------------------------------------------------------
    def predict_proba(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the probability of the phishing class per row.

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
        return {'weights':    self._weights.tolist(),
                'bias':       self._bias,
                'iterations': self._iterations}

    # ------------------------------------------------------------------------------------------------------------------
    def set_state(self, state: Dict[str, Any]) -> None:
        """
        Restores the learned state.

        :param dict state: The learned state.
        """
        self._weights = np.asarray(state['weights'], dtype=np.float64)
        self._bias = float(state['bias'])
        self._iterations = int(state.get('iterations', 0))

# ----------------------------------------------------------------------------------------------------------------------
