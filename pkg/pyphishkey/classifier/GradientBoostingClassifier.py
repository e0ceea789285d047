"""
PyPhishKey
"""
from typing import Any, Dict, List

import numpy as np

from pyphishkey.classifier.Activation import Activation
from pyphishkey.classifier.Classifier import Classifier
from pyphishkey.classifier.RegressionTree import RegressionTree


class GradientBoostingClassifier(Classifier):
    """
    Gradient boosted trees with the logistic loss, in the manner of XGBoost.

    Starting from the log odds of the training class ratio, each iteration fits a second order regression tree to the
    gradients and hessians of the loss of the current ensemble and adds it with weight learning_rate. When adding a tree
    would increase the training loss its weight is halved (up to 30 times, after that the tree is dropped), so the
    training loss never increases. The decision is the sigmoid of the weighted sum of all trees.
    """
    MAX_HALVINGS = 30

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, hyperparameters: Dict[str, Any], seed: int):
        """
        Object constructor.

        :param dict hyperparameters: The validated hyperparameters.
        :param int seed: The seed of the random generator (boosting without subsampling is deterministic).
        """
        Classifier.__init__(self, hyperparameters, seed)

        self._base_score: float = 0.0
        """
        The initial log odds.
        """

        self._trees: List[RegressionTree] = []
        """
        The trees.
        """

        self._weights: List[float] = []
        """
        The weights of the trees.
        """

        self._loss_history: List[float] = []
        """
        The training loss before the first tree and after each tree.
        """

        self._n_features: int = 0
        """
        The number of features.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def loss_history(self) -> List[float]:
        """
        The training loss before the first tree and after each added tree.

        :rtype: list[float]
        """
        return list(self._loss_history)

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Trains the boosted ensemble.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        self._n_features = x.shape[1]
        params = self._hyperparameters

        ratio = min(max(float(y.mean()), 1e-6), 1.0 - 1e-6)
        self._base_score = float(np.log(ratio / (1.0 - ratio)))
        self._trees = []
        self._weights = []

        margin = np.full(x.shape[0], self._base_score)
        loss = Activation.log_loss(margin, y)
        self._loss_history = [loss]

        for _ in range(params['n_trees']):
            p = Activation.sigmoid(margin)
            tree = RegressionTree(params['max_depth'], params['min_samples_split'], params['reg_lambda'])
            tree.fit(x, p - y, p * (1.0 - p))
            update = tree.predict_value(x)

            weight = params['learning_rate']
            new_loss = Activation.log_loss(margin + weight * update, y)
            halvings = 0
            while new_loss > loss and halvings < GradientBoostingClassifier.MAX_HALVINGS:
                weight /= 2.0
                halvings += 1
                new_loss = Activation.log_loss(margin + weight * update, y)

            if new_loss > loss:
                self._loss_history.append(loss)
                continue

            margin = margin + weight * update
            loss = new_loss
            self._trees.append(tree)
            self._weights.append(weight)
            self._loss_history.append(loss)

    # ------------------------------------------------------------------------------------------------------------------
    def decision_function(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the log odds of the phishing class per row.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        x = np.asarray(x, dtype=np.float64)
        margin = np.full(x.shape[0], self._base_score)
        for tree, weight in zip(self._trees, self._weights):
            margin += weight * tree.predict_value(x)

        return margin

    # ------------------------------------------------------------------------------------------------------------------
    def predict_proba(self, x: np.ndarray) -> np.ndarray:
        """
        Returns the probability of the phishing class per row.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        return Activation.sigmoid(self.decision_function(x))

    # ------------------------------------------------------------------------------------------------------------------
    def feature_gains(self) -> List[float]:
        """
        Returns the total split gain per feature over all trees.

        :rtype: list[float]
        """
        gains = np.zeros(self._n_features, dtype=np.float64)
        for tree in self._trees:
            gains += tree.feature_gains(self._n_features)

        return gains.tolist()

    # ------------------------------------------------------------------------------------------------------------------
    def get_state(self) -> Dict[str, Any]:
        """
        Returns the learned state as a JSON serializable dictionary.

        :rtype: dict
        """
        return {'n_features':   self._n_features,
                'base_score':   self._base_score,
                'weights':      list(self._weights),
                'loss_history': list(self._loss_history),
                'trees':        [tree.to_dict() for tree in self._trees]}

    # ------------------------------------------------------------------------------------------------------------------
    def set_state(self, state: Dict[str, Any]) -> None:
        """
        Restores the learned state.

        :param dict state: The learned state.
        """
        self._n_features = int(state['n_features'])
        self._base_score = float(state['base_score'])
        self._weights = [float(weight) for weight in state['weights']]
        self._loss_history = [float(loss) for loss in state['loss_history']]
        self._trees = []
        for data in state['trees']:
            tree = RegressionTree()
            tree.load_dict(data)
            self._trees.append(tree)

# ----------------------------------------------------------------------------------------------------------------------
