"""
PyPhishKey
"""
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List

import numpy as np

from pyphishkey.classifier.ClassificationTree import ClassificationTree
from pyphishkey.classifier.Classifier import Classifier


class RandomForestClassifier(Classifier):
    """
    Bagging of Gini classification trees grown on bootstrap samples; the final decision is the vote of all trees.

    Each tree draws its bootstrap sample and feature subsets from its own generator, spawned from the seed before any
    tree is grown. Trees can therefore be grown in parallel (n_jobs > 1) and still give the same forest as a serial
    fit.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, hyperparameters: Dict[str, Any], seed: int):
        """
        Object constructor.

        :param dict hyperparameters: The validated hyperparameters.
        :param int seed: The seed of the random generator.
        """
        Classifier.__init__(self, hyperparameters, seed)

        self._trees: List[ClassificationTree] = []
        """
        The trees of the forest.
        """

        self._n_features: int = 0
        """
        The number of features.
        """

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def trees(self) -> List[ClassificationTree]:
        """
        The trees of the forest.

        :rtype: list[ClassificationTree]
        """
        return list(self._trees)

    # ------------------------------------------------------------------------------------------------------------------
    def fit(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Grows the forest.

        :param numpy.ndarray x: The training features.
        :param numpy.ndarray y: The training labels.
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        n_rows, self._n_features = x.shape

        params = self._hyperparameters
        max_features = params['max_features'] or max(1, int(math.sqrt(self._n_features)))
        seeds = np.random.SeedSequence(self._seed).spawn(params['n_trees'])

        def grow(seed_sequence: np.random.SeedSequence) -> ClassificationTree:
            rng = np.random.default_rng(seed_sequence)
            sample = rng.integers(0, n_rows, size=n_rows)
            tree = ClassificationTree(params['max_depth'], params['min_samples_split'], max_features, rng)
            tree.fit(x[sample], y[sample], n_rows)

            return tree

        if params['n_jobs'] > 1:
            with ThreadPoolExecutor(max_workers=params['n_jobs']) as executor:
                self._trees = list(executor.map(grow, seeds))
        else:
            self._trees = [grow(seed_sequence) for seed_sequence in seeds]

    # ------------------------------------------------------------------------------------------------------------------
    def predict_proba(self, x: np.ndarray) -> np.ndarray:
        """
        Returns for each row the fraction of trees voting phishing.

        :param numpy.ndarray x: The features.

        :rtype: numpy.ndarray
        """
        x = np.asarray(x, dtype=np.float64)
        votes = np.zeros(x.shape[0], dtype=np.float64)
        for tree in self._trees:
            votes += tree.predict_value(x) >= 0.5

        return votes / len(self._trees)

    # ------------------------------------------------------------------------------------------------------------------
    def feature_gains(self) -> List[float]:
        """
        Returns the total weighted Gini decrease per feature over all trees.

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
        return {'n_features': self._n_features,
                'trees':      [tree.to_dict() for tree in self._trees]}

    # ------------------------------------------------------------------------------------------------------------------
    def set_state(self, state: Dict[str, Any]) -> None:
        """
        Restores the learned state.

        :param dict state: The learned state.
        """
        self._n_features = int(state['n_features'])
        self._trees = []
        for data in state['trees']:
            tree = ClassificationTree()
            tree.load_dict(data)
            self._trees.append(tree)

# ----------------------------------------------------------------------------------------------------------------------
