"""
PyPhishKey
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from pyphishkey.classifier.ClassifierSpec import ClassifierSpec
from pyphishkey.evaluation.EvalReport import EvalReport
from pyphishkey.exception.MissingPairException import MissingPairException
from pyphishkey.experiment.ComparisonRow import ComparisonRow
from pyphishkey.feature.FeatureSchema import FeatureSchema


class ErrorSummary:
    """
    Pairs the runs of each algorithm without and with keyword features and summarizes their errors: the error rate
    (1 - accuracy), FNR and FPR of both runs, the relative reduction of each, and which run was better.
    """
    BEFORE: str = FeatureSchema.MODE_TRADITIONAL
    AFTER: str = FeatureSchema.MODE_BOTH

    MEASURES = ('error', 'fnr', 'fpr')

    COLUMNS = ('Algorithm',
               'Error (traditional)', 'Error (keyword)', 'Error reduction',
               'FNR (traditional)', 'FNR (keyword)', 'FNR reduction',
               'FPR (traditional)', 'FPR (keyword)', 'FPR reduction',
               'Winner')

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def reduction(before: Optional[Fraction], after: Optional[Fraction]) -> Optional[Fraction]:
        """
        Returns the relative reduction (before - after) / before. Exactly 0 when both are equal, None when undefined.

        :param Fraction|None before: The value without keyword features.
        :param Fraction|None after: The value with keyword features.

        :rtype: Fraction|None
        """
        if before is None or after is None:
            return None
        if before == after:
            return Fraction(0)
        if before == 0:
            return None

        return (before - after) / before

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def __measures(row: ComparisonRow) -> Dict[str, Optional[Fraction]]:
        """
        Returns the error measures of a run.

        :param ComparisonRow row: The run.

        :rtype: dict[str,Fraction|None]
        """
        return {'error':    row.error_rate,
                'fnr':      row.report.fnr,
                'fpr':      row.report.fpr,
                'accuracy': row.report.accuracy}

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def summarize_errors(rows: Sequence[ComparisonRow]) -> List[Dict[str, Any]]:
        """
        Returns per algorithm (in reporting order) the errors of the paired runs. Only successful runs are
        considered.

        :param list[ComparisonRow] rows: The runs of one dataset.

        :rtype: list[dict]
        """
        runs: Dict[str, Dict[str, ComparisonRow]] = {}
        for row in rows:
            if not row.failed and row.feature_mode in (ErrorSummary.BEFORE, ErrorSummary.AFTER):
                runs.setdefault(row.algorithm, {})[row.feature_mode] = row

        summary = []
        for algorithm in sorted(runs, key=ClassifierSpec.ALGORITHMS.index):
            pair = runs[algorithm]
            for mode in (ErrorSummary.BEFORE, ErrorSummary.AFTER):
                if mode not in pair:
                    raise MissingPairException("No successful '{0}' run for {1}".format(mode, algorithm))

            before = ErrorSummary.__measures(pair[ErrorSummary.BEFORE])
            after = ErrorSummary.__measures(pair[ErrorSummary.AFTER])

            entry: Dict[str, Any] = {'algorithm': algorithm,
                                     'label':     ClassifierSpec.DISPLAY_NAMES[algorithm]}
            for measure in ErrorSummary.MEASURES:
                entry[measure + '_traditional'] = before[measure]
                entry[measure + '_keyword'] = after[measure]
                entry[measure + '_reduction'] = ErrorSummary.reduction(before[measure], after[measure])

            if before['accuracy'] == after['accuracy']:
                entry['winner'] = 'tie'
            elif (after['accuracy'] or 0) > (before['accuracy'] or 0):
                entry['winner'] = 'keyword'
            else:
                entry['winner'] = 'traditional'

            summary.append(entry)

        return summary

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def to_frame(summary: Sequence[Dict[str, Any]]) -> pd.DataFrame:
        """
        Returns an error summary as a table with percentages, ready for plotting.

        :param list[dict] summary: The error summary.

        :rtype: pandas.DataFrame
        """
        records = []
        for entry in summary:
            record = [entry['label']]
            for measure in ErrorSummary.MEASURES:
                record.append(EvalReport.percent(entry[measure + '_traditional'], 3))
                record.append(EvalReport.percent(entry[measure + '_keyword'], 3))
                record.append(EvalReport.percent(entry[measure + '_reduction'], 2))
            record.append(entry['winner'])
            records.append(record)

        return pd.DataFrame(records, columns=list(ErrorSummary.COLUMNS))

# ----------------------------------------------------------------------------------------------------------------------
