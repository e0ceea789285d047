"""
PyPhishKey
"""
import abc
from typing import Any, Dict, List, Optional

from cleo import Command, Input, Output

from pyphishkey.classifier.ModelSerializer import ModelSerializer
from pyphishkey.classifier.TrainedModel import TrainedModel
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.exception.PyPhishKeyException import PyPhishKeyException
from pyphishkey.experiment.ExperimentConfig import ExperimentConfig
from pyphishkey.style.PyPhishKeyStyle import PyPhishKeyStyle


class BaseCommand(Command):
    """
    Parent class of the PyPhishKey commands. Errors of PyPhishKey and missing files are reported and give exit code 1.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def execute(self, input_object: Input, output_object: Output) -> int:
        """
        Executes this command.
        """
        self.input = input_object
        self.output = output_object

        return self.handle()

    # ------------------------------------------------------------------------------------------------------------------
    def handle(self) -> int:
        """
        Executes this command with the PyPhishKey output style.
        """
        self.output = PyPhishKeyStyle(self.input, self.output)

        try:
            return self.run_command()
        except (PyPhishKeyException, FileNotFoundError) as exception:
            self.output.error(str(exception))
            return 1

    # ------------------------------------------------------------------------------------------------------------------
    @abc.abstractmethod
    def run_command(self) -> int:
        """
        Executes the actual command and returns the exit code.

        :rtype: int
        """
        raise NotImplementedError()

    # ------------------------------------------------------------------------------------------------------------------
    def _has_option(self, name: str) -> bool:
        """
        Returns True if this command defines an option.

        :param str name: The name of the option.

        :rtype: bool
        """
        return self.get_definition().has_option(name)

    # ------------------------------------------------------------------------------------------------------------------
    def _option_number(self, name: str, kind: type) -> Any:
        """
        Returns the value of a numeric option, or None when the option is not given.

        :param str name: The name of the option.
        :param type kind: int or float.

        :rtype: int|float|None
        """
        if not self._has_option(name):
            return None

        value = self.option(name)
        if value is None:
            return None

        try:
            return kind(value)
        except ValueError:
            raise ConfigException("Option --{0} expects a number, got '{1}'".format(name, value))

    # ------------------------------------------------------------------------------------------------------------------
    def _option_list(self, name: str) -> Optional[List[str]]:
        """
        Returns the items of a comma separated option, or None when the option is not given.

        :param str name: The name of the option.

        :rtype: list[str]|None
        """
        if not self._has_option(name):
            return None

        value = self.option(name)
        if value is None:
            return None

        return ExperimentConfig.parse_list(value)

    # ------------------------------------------------------------------------------------------------------------------
    def _option_text(self, name: str) -> Optional[str]:
        """
        Returns the value of a text option, or None when the option is not given.

        :param str name: The name of the option.

        :rtype: str|None
        """
        if not self._has_option(name):
            return None

        return self.option(name) or None

    # ------------------------------------------------------------------------------------------------------------------
    def _overrides(self) -> Dict[str, Any]:
        """
        Returns the configuration values given on the command line.

        :rtype: dict
        """
        data = self.option('data') if self._has_option('data') else None
        small = self.option('small') if self._has_option('small') else None

        return {'data':             list(data) if data else None,
                'url_column':       self._option_text('url-col'),
                'label_column':     self._option_text('label-col'),
                'seed':             self._option_number('seed', int),
                'train_fraction':   self._option_number('train-fraction', float),
                'balance_target':   self._option_number('balance-target', int),
                'small':            True if small else None,
                'small_fraction':   self._option_number('small-fraction', float),
                'algorithms':       self._option_list('algorithms'),
                'features':         self._option_list('features'),
                'output_directory': self._option_text('out')}

    # ------------------------------------------------------------------------------------------------------------------
    def _create_config(self, config_filename: Optional[str], balance_default: Optional[int] = None) -> ExperimentConfig:
        """
        Returns the configuration from the configuration file and the command line.

        :param str|None config_filename: The name of the configuration file.
        :param int|None balance_default: The balance target when neither file nor command line gives one.

        :rtype: ExperimentConfig
        """
        overrides = self._overrides()
        if balance_default is not None and overrides['balance_target'] is None:
            in_file = config_filename and 'balance_target' in ExperimentConfig.read_config_file(config_filename)
            if not in_file:
                overrides['balance_target'] = balance_default

        return ExperimentConfig.create(config_filename, overrides)

    # ------------------------------------------------------------------------------------------------------------------
    def _load_model(self) -> TrainedModel:
        """
        Loads the model given by option --model.

        :rtype: TrainedModel
        """
        filename = self._option_text('model')
        if not filename:
            raise ConfigException('Option --model is required')

        model = ModelSerializer.load(filename)
        self.output.log_verbose('Loaded <alg>{0}</alg> model from <fso>{1}</fso>'.
                                format(model.spec.display_name, filename))
        if not model.converged:
            self.output.convergence_warning(model.spec.display_name, model.warning)

        return model

# ----------------------------------------------------------------------------------------------------------------------
