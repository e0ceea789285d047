"""
PyPhishKey
"""
from typing import Any, Dict, List, Tuple

import numpy as np

from pyphishkey.classifier.Activation import Activation
from pyphishkey.classifier.Classifier import Classifier


class MlpClassifier(Classifier):
    """
    Feed forward network with ReLU hidden layers and a single sigmoid output unit, trained with mini-batch SGD with
    momentum on the binary cross entropy.

    After each epoch the loss over the full training set is computed. The parameters with the lowest loss are kept, and
    training stops early when the loss did not improve by more than tol for n_iter_no_change epochs. Training that uses
    all epochs without stopping early is flagged as not converged.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, hyperparameters: Dict[str, Any], seed: int):
        """
        Object constructor.

        :param dict hyperparameters: The validated hyperparameters.
        :param int seed: The seed of the random generator.
        """
        Classifier.__init__(self, hyperparameters, seed)

        self._weights: List[np.ndarray] = []
        """
        The weight matrices of the layers.
        """

        self._biases: List[np.ndarray] = []
        """
        The bias vectors of the layers.
        """

        self._loss_history: List[float] = []
        """
        The training loss after each epoch.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def loss_history(self) -> List[float]:
        """
        The training loss after each epoch.

        :rtype: list[float]
        """
        return list(self._loss_history)

    # ------------------------------------------------------------------------------------------------------------------
    def initialize(self, n_features: int, rng: np.random.Generator) -> None:
        """
        Initializes the parameters with He initialization.

        :param int n_features: The number of input features.
        :param numpy.random.Generator rng: The random generator.
        """
        sizes = [n_features] + list(self._hyperparameters['hidden_layers']) + [1]
        self._weights = []
        self._biases = []
        for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
            self._weights.append(rng.normal(0.0, np.sqrt(2.0 / fan_in), size=(fan_in, fan_out)))
            self._biases.append(np.zeros(fan_out, dtype=np.float64))

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Trains the network.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        params = self._hyperparameters
        rng = np.random.default_rng(self._seed)

        self.initialize(x.shape[1], rng)
        velocity = [np.zeros_like(p) for p in self.get_parameters()]

        best_loss = np.inf
        best_parameters = [p.copy() for p in self.get_parameters()]
        no_improvement = 0
        self._loss_history = []
        self._converged = True
        self._warning = None

        for epoch in range(params['epochs']):
            order = rng.permutation(x.shape[0])
            for start in range(0, x.shape[0], params['batch_size']):
                batch = order[start:start + params['batch_size']]
                _, gradients = self.loss_and_gradient(x[batch], y[batch])
                parameters = self.get_parameters()
                for i, gradient in enumerate(gradients):
                    velocity[i] = params['momentum'] * velocity[i] - params['learning_rate'] * gradient
                    parameters[i] += velocity[i]

            loss = Activation.log_loss(self.decision_function(x), y)
            if not np.isfinite(loss):
                self._set_not_converged('MLP training diverged at epoch {0}'.format(epoch + 1))
                break
            self._loss_history.append(loss)

            if loss < best_loss - params['tol']:
                no_improvement = 0
            else:
                no_improvement += 1
            if loss < best_loss:
                best_loss = loss
                best_parameters = [p.copy() for p in self.get_parameters()]

            if no_improvement >= params['n_iter_no_change']:
                break
        else:
            self._set_not_converged('MLP did not converge within {0} epochs'.format(params['epochs']))

        self.set_parameters(best_parameters)

    # ------------------------------------------------------------------------------------------------------------------
    def get_parameters(self) -> List[np.ndarray]:
        """
        Returns the parameters (not copies) as [W1, b1, W2, b2, ...].

        :rtype: list[numpy.ndarray]
        """
        parameters = []
        for weight, bias in zip(self._weights, self._biases):
            parameters.append(weight)
            parameters.append(bias)

        return parameters

    # ------------------------------------------------------------------------------------------------------------------
    def set_parameters(self, parameters: List[np.ndarray]) -> None:
        """
        Sets the parameters from a list as returned by get_parameters.

        :param list[numpy.ndarray] parameters: The parameters.
        """
        self._weights = [np.array(p, dtype=np.float64) for p in parameters[0::2]]
        self._biases = [np.array(p, dtype=np.float64) for p in parameters[1::2]]

    # ------------------------------------------------------------------------------------------------------------------
    def __forward(self, x: np.ndarray) -> Tuple[List[np.ndarray], np.ndarray]:
        """
        Returns the activations of the input and hidden layers, and the output logits.

        :param numpy.ndarray x: The features.

        :rtype: (list[numpy.ndarray],numpy.ndarray)
        """
        activations = [x]
        for weight, bias in zip(self._weights[:-1], self._biases[:-1]):
            activations.append(Activation.relu(activations[-1] @ weight + bias))
        logits = (activations[-1] @ self._weights[-1] + self._biases[-1])[:, 0]

        return activations, logits

    # ------------------------------------------------------------------------------------------------------------------
    def loss_and_gradient(self, x: np.ndarray, y: np.ndarray) -> Tuple[float, List[np.ndarray]]:
        """
        Returns the mean cross entropy on a batch and its gradient with respect to the parameters, in the order of
        get_parameters.

        :param numpy.ndarray x: The features.
        :param numpy.ndarray y: The labels.

        :rtype: (float,list[numpy.ndarray])
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        activations, logits = self.__forward(x)
        loss = Activation.log_loss(logits, y)

        delta = ((Activation.sigmoid(logits) - y) / x.shape[0])[:, np.newaxis]
        gradients: List[np.ndarray] = []
        for layer in range(len(self._weights) - 1, -1, -1):
            gradients.append(delta.sum(axis=0))
            gradients.append(activations[layer].T @ delta)
            if layer > 0:
                delta = (delta @ self._weights[layer].T) * (activations[layer] > 0.0)
        gradients.reverse()

        return loss, gradients

    # ------------------------------------------------------------------------------------------------------------------
    def decision_function(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the output logits.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        return self.__forward(np.asarray(x, dtype=np.float64))[1]

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
        return {'weights':      [weight.tolist() for weight in self._weights],
                'biases':       [bias.tolist() for bias in self._biases],
                'loss_history': list(self._loss_history)}

    # ------------------------------------------------------------------------------------------------------------------
    def set_state(self, state: Dict[str, Any]) -> None:
        """
        Restores the learned state.

        :param dict state: The learned state.
        """
        self._weights = [np.asarray(weight, dtype=np.float64) for weight in state['weights']]
        self._biases = [np.asarray(bias, dtype=np.float64) for bias in state['biases']]
        self._loss_history = [float(loss) for loss in state.get('loss_history', [])]

# ----------------------------------------------------------------------------------------------------------------------
