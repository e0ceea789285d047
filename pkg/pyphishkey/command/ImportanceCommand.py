"""
PyPhishKey
"""
import pandas as pd

from pyphishkey.Util import Util
from pyphishkey.classifier.ModelTrainer import ModelTrainer
from pyphishkey.command.BaseCommand import BaseCommand
from pyphishkey.exception.ConfigException import ConfigException


class ImportanceCommand(BaseCommand):
    """
    Shows the gain based feature importances of a tree model

    importance
        {--model=model.json : The model file (random forest or gradient boosting)}
        {--top=10 : The number of features shown}
        {--out= : Optional CSV file for the full ranking}
    """

    # ------------------------------------------------------------------------------------------------------------------
    def run_command(self) -> int:
        """
        Shows the feature importances.
        """
        top = self._option_number('top', int)
        if top is None or top < 1:
            raise ConfigException('Option --top must be a positive integer')

        model = self._load_model()
        ranking = ModelTrainer.feature_importance(model)

        self.output.result_table('Feature importance of {0}'.format(model.spec.display_name),
                                 ['Feature', 'Importance'],
                                 [[name, '{0:.4f}'.format(value)] for name, value in ranking[:top]])

        out = self._option_text('out')
        if out:
            frame = pd.DataFrame(ranking, columns=['Feature', 'Importance'])
            Util.write_two_phases(out, frame.to_csv(index=False), self.output)

        return 0

# ----------------------------------------------------------------------------------------------------------------------
