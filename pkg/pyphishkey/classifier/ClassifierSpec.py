"""
PyPhishKey
"""
from typing import Any, Dict, Optional

from pyphishkey.exception.HyperparameterException import HyperparameterException
from pyphishkey.exception.UnsupportedAlgorithmException import UnsupportedAlgorithmException


class ClassifierSpec:
    """
    An algorithm with its validated hyperparameters, seed, and standardization flag.

    Only the MLP layer sizes, the activation function, the kernel of the SVM, and k of kNN are given by the method this
    tool reproduces; all other defaults are conventional choices and can be overridden.
    """
    RANDOM_FOREST: str = 'random_forest'
    GRADIENT_BOOSTING: str = 'gradient_boosting'
    MLP: str = 'mlp'
    SVM_RBF: str = 'svm_rbf'
    LOGISTIC_REGRESSION: str = 'logistic_regression'
    KNN: str = 'knn'

    ALGORITHMS = (RANDOM_FOREST, GRADIENT_BOOSTING, MLP, SVM_RBF, LOGISTIC_REGRESSION, KNN)
    """
    All algorithms in reporting order.
    """

    TREE_ALGORITHMS = (RANDOM_FOREST, GRADIENT_BOOSTING)
    """
    The algorithms with gain based feature importances.
    """

    DISPLAY_NAMES = {RANDOM_FOREST:       'Random Forest',
                     GRADIENT_BOOSTING:   'XGboost',
                     MLP:                 'MLP',
                     SVM_RBF:             'SVM',
                     LOGISTIC_REGRESSION: 'Logistic Regression',
                     KNN:                 'kNN'}
    """
    The names of the algorithms in result tables.
    """

    DEFAULTS = {RANDOM_FOREST:       {'n_trees':           200,
                                      'max_depth':         None,
                                      'min_samples_split': 2,
                                      'max_features':      None,
                                      'n_jobs':            1},
                GRADIENT_BOOSTING:   {'n_trees':           200,
                                      'max_depth':         4,
                                      'learning_rate':     0.1,
                                      'reg_lambda':        1.0,
                                      'min_samples_split': 2},
                MLP:                 {'hidden_layers':     [40, 20, 10],
                                      'learning_rate':     0.01,
                                      'momentum':          0.9,
                                      'batch_size':        32,
                                      'epochs':            200,
                                      'tol':               1e-4,
                                      'n_iter_no_change':  10},
                SVM_RBF:             {'c':                 1.0,
                                      'gamma':             None,
                                      'tol':               1e-3,
                                      'max_iter':          1000000,
                                      'cache_rows':        1024},
                LOGISTIC_REGRESSION: {'l2':                1e-4,
                                      'tol':               1e-6,
                                      'max_iter':          10000},
                KNN:                 {'k':                 5,
                                      'batch_size':        512}}
    """
    The default hyperparameters per algorithm. max_depth None means unlimited, max_features None means
    floor(sqrt(number of features)), gamma None means 1 / (number of features x variance of the training features).
    """

    STANDARDIZE = {RANDOM_FOREST:       False,
                   GRADIENT_BOOSTING:   False,
                   MLP:                 True,
                   SVM_RBF:             True,
                   LOGISTIC_REGRESSION: True,
                   KNN:                 True}
    """
    Whether features are standardized by default. Split points of trees are scale invariant.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self,
                 algorithm: str,
                 hyperparameters: Optional[Dict[str, Any]] = None,
                 seed: int = 42,
                 standardize: Optional[bool] = None):
        """
        Object constructor.

        :param str algorithm: The algorithm.
        :param dict|None hyperparameters: Overrides of the default hyperparameters.
        :param int seed: The seed of the random generator.
        :param bool|None standardize: Whether to standardize the features. None for the default of the algorithm.
        """
        if algorithm not in ClassifierSpec.ALGORITHMS:
            raise UnsupportedAlgorithmException("Unknown algorithm '{0}'. Expected one of: {1}".
                                                format(algorithm, ', '.join(ClassifierSpec.ALGORITHMS)))

        params = dict(ClassifierSpec.DEFAULTS[algorithm])
        for key, value in (hyperparameters or {}).items():
            if key not in params:
                raise HyperparameterException("Unknown hyperparameter '{0}' for {1}".format(key, algorithm))
            params[key] = value

        self.__algorithm: str = algorithm
        self.__hyperparameters: Dict[str, Any] = ClassifierSpec.__validate(algorithm, params)
        self.__seed: int = int(seed)
        self.__standardize: bool = ClassifierSpec.STANDARDIZE[algorithm] if standardize is None else bool(standardize)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def algorithm(self) -> str:
        """
        The algorithm.

        :rtype: str
        """
        return self.__algorithm

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def hyperparameters(self) -> Dict[str, Any]:
        """
        A copy of the hyperparameters.

        :rtype: dict
        """
        return dict(self.__hyperparameters)

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def seed(self) -> int:
        """
        The seed of the random generator.

        :rtype: int
        """
        return self.__seed

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def standardize(self) -> bool:
        """
        Whether the features are standardized.

        :rtype: bool
        """
        return self.__standardize

    # ------------------------------------------------------------------------------------------------------------------
    @property
    def display_name(self) -> str:
        """
        The name of the algorithm in result tables.

        :rtype: str
        """
        return ClassifierSpec.DISPLAY_NAMES[self.__algorithm]

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        """
        Returns this spec as a JSON serializable dictionary.

        :rtype: dict
        """
        return {'algorithm':       self.__algorithm,
                'hyperparameters': self.hyperparameters,
                'seed':            self.__seed,
                'standardize':     self.__standardize}

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'ClassifierSpec':
        """
        Returns a spec from a dictionary returned by to_dict.

        :param dict data: The dictionary.

        :rtype: ClassifierSpec
        """
        return ClassifierSpec(data['algorithm'], data['hyperparameters'], data['seed'], data['standardize'])

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def __validate(algorithm: str, params: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validates and normalizes the hyperparameters of an algorithm.

        :param str algorithm: The algorithm.
        :param dict params: The hyperparameters.

        :rtype: dict
        """
        def positive_int(key: str, optional: bool = False) -> None:
            value = params[key]
            if value is None and optional:
                return
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise HyperparameterException('{0}.{1} must be a positive integer, got {2!r}'.
                                              format(algorithm, key, value))

        def positive_float(key: str, optional: bool = False, allow_zero: bool = False) -> None:
            value = params[key]
            if value is None and optional:
                return
            if isinstance(value, bool) or not isinstance(value, (int, float)) or value < 0.0 or \
                    (value == 0.0 and not allow_zero):
                raise HyperparameterException('{0}.{1} must be a positive number, got {2!r}'.
                                              format(algorithm, key, value))
            params[key] = float(value)

        if algorithm == ClassifierSpec.RANDOM_FOREST:
            positive_int('n_trees')
            positive_int('max_depth', optional=True)
            positive_int('max_features', optional=True)
            positive_int('n_jobs')
            positive_int('min_samples_split')
            if params['min_samples_split'] < 2:
                raise HyperparameterException('{0}.min_samples_split must be at least 2'.format(algorithm))

        elif algorithm == ClassifierSpec.GRADIENT_BOOSTING:
            positive_int('n_trees')
            positive_int('max_depth')
            positive_float('learning_rate')
            positive_float('reg_lambda', allow_zero=True)
            positive_int('min_samples_split')
            if params['min_samples_split'] < 2:
                raise HyperparameterException('{0}.min_samples_split must be at least 2'.format(algorithm))

        elif algorithm == ClassifierSpec.MLP:
            layers = params['hidden_layers']
            if not isinstance(layers, (list, tuple)) or not layers or \
                    any(isinstance(size, bool) or not isinstance(size, int) or size < 1 for size in layers):
                raise HyperparameterException('{0}.hidden_layers must be a non empty list of positive integers, got '
                                              '{1!r}'.format(algorithm, layers))
            params['hidden_layers'] = list(layers)
            positive_float('learning_rate')
            positive_float('momentum', allow_zero=True)
            if params['momentum'] >= 1.0:
                raise HyperparameterException('{0}.momentum must be less than 1'.format(algorithm))
            positive_int('batch_size')
            positive_int('epochs')
            positive_float('tol', allow_zero=True)
            positive_int('n_iter_no_change')

        elif algorithm == ClassifierSpec.SVM_RBF:
            positive_float('c')
            positive_float('gamma', optional=True)
            positive_float('tol')
            positive_int('max_iter')
            positive_int('cache_rows')

        elif algorithm == ClassifierSpec.LOGISTIC_REGRESSION:
            positive_float('l2', allow_zero=True)
            positive_float('tol')
            positive_int('max_iter')

        elif algorithm == ClassifierSpec.KNN:
            positive_int('k')
            positive_int('batch_size')

        return params

# ----------------------------------------------------------------------------------------------------------------------
