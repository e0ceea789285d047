"""
PyPhishKey
"""
import configparser
import os
from typing import Any, Dict, List, Optional, Sequence

from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.dataset.SplitSpec import SplitSpec
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException
from pyphishkey.feature.FeatureSchema import FeatureSchema


class ExperimentConfig:
    """
    The configuration of an experiment: the data, the sampling protocol, the algorithms and feature modes, and the
    output directory.

    Values come from built-in defaults, overridden by an INI configuration file (section [experiment] and one optional
    section per algorithm with hyperparameter overrides), overridden by command line options.
    """
    SECTION: str = 'experiment'

    DEFAULTS: Dict[str, Any] = {'data':             [],
                                'url_column':       'url',
                                'label_column':     'label',
                                'seed':             42,
                                'train_fraction':   0.8,
                                'balance_target':   10000,
                                'small':            False,
                                'small_fraction':   0.1,
                                'algorithms':       list(ClassifierSpec.ALGORITHMS),
                                'features':         [FeatureSchema.MODE_TRADITIONAL, FeatureSchema.MODE_BOTH],
                                'output_directory': 'results'}
    """
    The built-in defaults. A balance target of 0 disables balancing.
    """

    MODE_ALIASES: Dict[str, str] = {'traditional':  FeatureSchema.MODE_TRADITIONAL,
                                    'keyword':      FeatureSchema.MODE_KEYWORD_ONLY,
                                    'keyword_only': FeatureSchema.MODE_KEYWORD_ONLY,
                                    'both':         FeatureSchema.MODE_BOTH}
    """
    The accepted names of the feature modes.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self,
                 data: Sequence[str],
                 url_column: str = 'url',
                 label_column: str = 'label',
                 seed: int = 42,
                 train_fraction: float = 0.8,
                 balance_target: int = 10000,
                 small: bool = False,
                 small_fraction: float = 0.1,
                 algorithms: Optional[Sequence[str]] = None,
                 features: Optional[Sequence[str]] = None,
                 output_directory: str = 'results',
                 hyperparameters: Optional[Dict[str, Dict[str, Any]]] = None):
        """
        Object constructor.

        :param list[str] data: The data sources.
        :param str url_column: The name of the URL column in CSV files.
        :param str label_column: The name of the label column in CSV files.
        :param int seed: The seed for sampling, splitting and the classifiers.
        :param float train_fraction: The fraction of rows used for training.
        :param int balance_target: The number of majority class rows kept when balancing, 0 for no balancing.
        :param bool small: Whether to run the small dataset too.
        :param float small_fraction: The fraction of the large dataset sampled for the small dataset.
        :param list[str]|None algorithms: The algorithms.
        :param list[str]|None features: The feature modes.
        :param str output_directory: The directory for the result files.
        :param dict|None hyperparameters: Hyperparameter overrides per algorithm (may include 'standardize').
        """
        self.data: List[str] = list(data)
        self.url_column: str = url_column
        self.label_column: str = label_column
        self.seed: int = int(seed)
        self.train_fraction: float = float(train_fraction)
        self.balance_target: int = int(balance_target)
        self.small: bool = bool(small)
        self.small_fraction: float = float(small_fraction)
        self.algorithms: List[str] = list(algorithms if algorithms is not None else ClassifierSpec.ALGORITHMS)
        self.features: List[str] = [ExperimentConfig.parse_mode(mode) for mode in
                                     (features if features is not None else ExperimentConfig.DEFAULTS['features'])]
        self.output_directory: str = output_directory
        self.hyperparameters: Dict[str, Dict[str, Any]] = {key: dict(value) for key, value in
                                                           (hyperparameters or {}).items()}

        self.__validate()

    # ------------------------------------------------------------------------------------------------------------------
    def __validate(self) -> None:
        """
        Validates this configuration.
        """
        if not self.data:
            raise ConfigException('No data sources given')

        if not self.algorithms:
            raise ConfigException('At least one algorithm is required')

        for algorithm in self.algorithms:
            if algorithm not in ClassifierSpec.ALGORITHMS:
                raise ConfigException("Unknown algorithm '{0}'. Expected one of: {1}".
                                      format(algorithm, ', '.join(ClassifierSpec.ALGORITHMS)))

        if len(set(self.algorithms)) != len(self.algorithms):
            raise ConfigException('Duplicate algorithms in {0}'.format(', '.join(self.algorithms)))

        if not self.features:
            raise ConfigException('At least one feature mode is required')

        if not 0.0 < self.small_fraction <= 1.0:
            raise ConfigException('Small fraction must be in (0, 1], got {0}'.format(self.small_fraction))

        if self.balance_target < 0:
            raise ConfigException('Balance target must not be negative, got {0}'.format(self.balance_target))

        for algorithm in self.hyperparameters:
            if algorithm not in ClassifierSpec.ALGORITHMS:
                raise ConfigException("Hyperparameters given for unknown algorithm '{0}'".format(algorithm))

        # Raises on an invalid train fraction.
        self.split_spec()

        # Raises on invalid hyperparameters, also of algorithms not selected.
        for algorithm in sorted(set(self.algorithms) | set(self.hyperparameters)):
            try:
                self.classifier_spec(algorithm)
            except PyPhishKeyException as exception:
                raise ConfigException(str(exception))

    # ------------------------------------------------------------------------------------------------------------------
    def split_spec(self) -> SplitSpec:
        """
        Returns the specification of the train/test split.

        :rtype: SplitSpec
        """
        return SplitSpec(self.train_fraction, self.seed, True)

    # ------------------------------------------------------------------------------------------------------------------
    def classifier_spec(self, algorithm: str) -> ClassifierSpec:
        """
        Returns the classifier spec of an algorithm.

        :param str algorithm: The algorithm.

        :rtype: ClassifierSpec
        """
        overrides = dict(self.hyperparameters.get(algorithm, {}))
        standardize = overrides.pop('standardize', None)

        return ClassifierSpec(algorithm, overrides, self.seed, standardize)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def parse_mode(text: str) -> str:
        """
        Returns the feature mode denoted by a text.

        :param str text: The text, e.g. traditional, keyword, or both.

        :rtype: str
        """
        mode = ExperimentConfig.MODE_ALIASES.get(str(text).strip().lower())
        if mode is None:
            raise ConfigException("Unknown feature mode '{0}'. Expected one of: traditional, keyword, both".
                                  format(text))

        return mode

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def parse_list(text: str) -> List[str]:
        """
        Returns the items of a comma (or newline) separated list.

        :param str text: The text.

        :rtype: list[str]
        """
        return [item.strip() for item in text.replace('\n', ',').split(',') if item.strip()]

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def parse_value(text: str) -> Any:
        """
        Returns a hyperparameter value from its text: none, a boolean, an integer, a float, or a comma separated list of
        integers.

        :param str text: The text.

        :rtype: *
        """
        value = text.strip()
        lower = value.lower()
        if lower in ('none', 'null', ''):
            return None
        if lower in ('true', 'yes', 'on'):
            return True
        if lower in ('false', 'no', 'off'):
            return False
        if ',' in value:
            try:
                return [int(item) for item in ExperimentConfig.parse_list(value)]
            except ValueError:
                raise ConfigException("Invalid list of integers '{0}'".format(text))
        try:
            return int(value)
        except ValueError:
            pass
        try:
            return float(value)
        except ValueError:
            raise ConfigException("Invalid value '{0}'".format(text))

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def read_config_file(config_filename: str) -> Dict[str, Any]:
        """
        Reads the values given in a configuration file.

        :param str config_filename: The name of the configuration file.

        :rtype: dict
        """
        if not os.path.isfile(config_filename):
            raise FileNotFoundError("Configuration file '{0}' does not exist".format(config_filename))

        config = configparser.ConfigParser()
        try:
            config.read(config_filename, encoding='utf-8')
        except configparser.Error as error:
            raise ConfigException("Invalid configuration file '{0}': {1}".format(config_filename, error))

        values: Dict[str, Any] = {}
        if config.has_section(ExperimentConfig.SECTION):
            section = ExperimentConfig.SECTION
            for option in config.options(section):
                if option not in ExperimentConfig.DEFAULTS:
                    raise ConfigException("Unknown option '{0}' in section [{1}]".format(option, section))
            try:
                if config.has_option(section, 'data'):
                    values['data'] = [line.strip() for line in config.get(section, 'data').splitlines()
                                      if line.strip()]
                for option in ('url_column', 'label_column', 'output_directory'):
                    if config.has_option(section, option):
                        values[option] = config.get(section, option)
                for option in ('seed', 'balance_target'):
                    if config.has_option(section, option):
                        values[option] = config.getint(section, option)
                for option in ('train_fraction', 'small_fraction'):
                    if config.has_option(section, option):
                        values[option] = config.getfloat(section, option)
                if config.has_option(section, 'small'):
                    values['small'] = config.getboolean(section, 'small')
                for option in ('algorithms', 'features'):
                    if config.has_option(section, option):
                        values[option] = ExperimentConfig.parse_list(config.get(section, option))
            except ValueError as error:
                raise ConfigException("Invalid value in section [{0}]: {1}".format(section, error))

        hyperparameters = {}
        for algorithm in ClassifierSpec.ALGORITHMS:
            if config.has_section(algorithm):
                hyperparameters[algorithm] = {option: ExperimentConfig.parse_value(config.get(algorithm, option))
                                              for option in config.options(algorithm)}
        for section in config.sections():
            if section != ExperimentConfig.SECTION and section not in ClassifierSpec.ALGORITHMS:
                raise ConfigException("Unknown section [{0}] in '{1}'".format(section, config_filename))
        if hyperparameters:
            values['hyperparameters'] = hyperparameters

        return values

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def create(config_filename: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> 'ExperimentConfig':
        """
        Returns the configuration from built-in defaults, an optional configuration file, and overrides (command line
        options). Overrides with value None are ignored.

        :param str|None config_filename: The name of the configuration file.
        :param dict|None overrides: The overriding values.

        :rtype: ExperimentConfig
        """
        values = dict(ExperimentConfig.DEFAULTS)
        if config_filename:
            values.update(ExperimentConfig.read_config_file(config_filename))
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value

        return ExperimentConfig(**values)

    # ------------------------------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        """
        Returns this configuration as a JSON serializable dictionary.

        :rtype: dict
        """
        return {'data':             list(self.data),
                'url_column':       self.url_column,
                'label_column':     self.label_column,
                'seed':             self.seed,
                'train_fraction':   self.train_fraction,
                'balance_target':   self.balance_target,
                'small':            self.small,
                'small_fraction':   self.small_fraction,
                'algorithms':       list(self.algorithms),
                'features':         list(self.features),
                'output_directory': self.output_directory,
                'hyperparameters':  {key: dict(value) for key, value in self.hyperparameters.items()}}

# ----------------------------------------------------------------------------------------------------------------------
