"""
PyPhishKey
"""
from pyphishkey.command.BaseCommand import BaseCommand
from pyphishkey.experiment.ExperimentRunner import ExperimentRunner


class ExperimentCommand(BaseCommand):
    """
    Compares all classifiers with and without keyword features

    experiment
        {config_file? : Optional experiment configuration file}
        {--data=* : Labeled data sources}
        {--url-col= : The name of the URL column in CSV files}
        {--label-col= : The name of the label column in CSV files}
        {--seed= : The seed of the random generators}
        {--train-fraction= : The fraction of rows used for training}
        {--balance-target= : The number of majority class rows kept when balancing (0 for no balancing)}
        {--small : Run the small dataset too}
        {--small-fraction= : The fraction of rows in the small dataset}
        {--algorithms= : Comma separated algorithms}
        {--features= : Comma separated feature modes (traditional, keyword, both)}
        {--out= : The output directory}
    """

    # ------------------------------------------------------------------------------------------------------------------
    def run_command(self) -> int:
        """
        Runs the experiment. Returns 1 when a run failed.
        """
        config = self._create_config(self.argument('config_file'))

        rows = ExperimentRunner(config, self.output).run_experiment()

        failed = [row for row in rows if row.failed]
        if failed:
            self.output.error('{0} of {1} runs failed'.format(len(failed), len(rows)))
            return 1

        self.output.success('Completed {0} runs'.format(len(rows)))

        return 0

# ----------------------------------------------------------------------------------------------------------------------
