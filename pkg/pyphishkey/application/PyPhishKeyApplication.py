"""
PyPhishKey
"""
from typing import List

from cleo import Application, Command

from pyphishkey.command.EvaluateCommand import EvaluateCommand
from pyphishkey.command.ExperimentCommand import ExperimentCommand
from pyphishkey.command.ExtractFeaturesCommand import ExtractFeaturesCommand
from pyphishkey.command.ImportanceCommand import ImportanceCommand
from pyphishkey.command.PredictCommand import PredictCommand
from pyphishkey.command.TrainCommand import TrainCommand


class PyPhishKeyApplication(Application):
    """
    The PyPhishKey application.
    """

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self):
        """
        Object constructor
        """
        Application.__init__(self, 'pyphishkey', '1.0.0')

    # ------------------------------------------------------------------------------------------------------------------
    def get_default_commands(self) -> List[Command]:
        """
        Returns the default commands of this application.

        :rtype: list[Command]
        """
        commands = Application.get_default_commands(self)

        self.add(ExtractFeaturesCommand())
        self.add(TrainCommand())
        self.add(PredictCommand())
        self.add(EvaluateCommand())
        self.add(ExperimentCommand())
        self.add(ImportanceCommand())

        return commands

# ----------------------------------------------------------------------------------------------------------------------
