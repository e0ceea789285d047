"""
PyPhishKey
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from pyphishkey.dataset.Label import Label
from pyphishkey.dataset.LabeledDataset import LabeledDataset
from pyphishkey.dataset.LabeledUrl import LabeledUrl
from pyphishkey.dataset.SplitSpec import SplitSpec
from pyphishkey.exception.ConfigException import ConfigException
from pyphishkey.exception.InsufficientMajorityException import InsufficientMajorityException
from pyphishkey.exception.TooFewRowsException import TooFewRowsException


class DatasetSampler:
    """
    Seeded balancing, subsampling, and splitting of datasets.

    All randomness comes from numpy's PCG64 generator seeded with the given seed (numpy.random.default_rng), so every
    result is reproducible from (inputs, seed). Samples never fabricate rows and keep the order of their input.
    Duplicate URLs are kept.
    """
    CLASS_ORDER: Tuple[int, int] = (Label.LEGITIMATE, Label.PHISHING)
    """
    The order in which classes are sampled (and receive rounding remainders).
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def balance(pool: Sequence[LabeledUrl], majority_target: int, seed: int) -> List[LabeledUrl]:
        """
        Returns all minority class rows plus a uniform random sample of majority_target majority class rows.

        :param list[LabeledUrl] pool: The labeled URLs.
        :param int majority_target: The number of majority class rows to keep.
        :param int seed: The seed of the random generator.

        :rtype: list[LabeledUrl]
        """
        positions = {label: [i for i, item in enumerate(pool) if item.label == label]
                     for label in DatasetSampler.CLASS_ORDER}

        legitimate = len(positions[Label.LEGITIMATE])
        phishing = len(positions[Label.PHISHING])
        majority = Label.LEGITIMATE if legitimate >= phishing else Label.PHISHING

        available = len(positions[majority])
        if available < majority_target:
            raise InsufficientMajorityException(available, majority_target)

        rng = np.random.default_rng(seed)
        chosen = rng.choice(available, size=majority_target, replace=False)
        keep = set(positions[1 - majority])
        keep.update(positions[majority][index] for index in chosen)

        return [pool[i] for i in sorted(keep)]

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def subsample(data: Sequence[LabeledUrl], fraction: float, seed: int) -> List[LabeledUrl]:
        """
        Returns a stratified random sample of a fraction of the rows. Per class counts are allocated by the largest
        remainder method, hence the class ratio is preserved as closely as integer rounding allows.

        :param list[LabeledUrl] data: The labeled URLs.
        :param float fraction: The fraction of rows to keep, 0 < fraction <= 1.
        :param int seed: The seed of the random generator.

        :rtype: list[LabeledUrl]
        """
        if not 0.0 < fraction <= 1.0:
            raise ConfigException('Subsample fraction must be in (0, 1], got {0}'.format(fraction))

        positions = [[i for i, item in enumerate(data) if item.label == label] for label in DatasetSampler.CLASS_ORDER]
        quotas = DatasetSampler.allocate([len(members) for members in positions], fraction)

        rng = np.random.default_rng(seed)
        keep = []
        for members, quota in zip(positions, quotas):
            chosen = rng.choice(len(members), size=quota, replace=False)
            keep.extend(members[index] for index in chosen)

        return [data[i] for i in sorted(keep)]

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def split(data: LabeledDataset, spec: SplitSpec) -> Tuple[LabeledDataset, LabeledDataset]:
        """
        Splits a dataset into disjoint training and test sets that together hold all rows.

        With stratification the per class training counts are allocated by the largest remainder method and each class
        keeps at least one row on each side.

        :param LabeledDataset data: The dataset.
        :param SplitSpec spec: The split specification.

        :rtype: (LabeledDataset,LabeledDataset)
        """
        rng = np.random.default_rng(spec.seed)
        train = []

        if spec.stratified:
            groups = [np.flatnonzero(data.labels == label) for label in DatasetSampler.CLASS_ORDER]
            for label, group in zip(DatasetSampler.CLASS_ORDER, groups):
                if len(group) < 2:
                    raise TooFewRowsException('A stratified split requires at least 2 {0} rows, got {1}'.
                                              format(Label.name(label), len(group)))

            quotas = DatasetSampler.allocate([len(group) for group in groups], spec.train_fraction)
            for group, quota in zip(groups, quotas):
                quota = min(max(quota, 1), len(group) - 1)
                train.extend(rng.permutation(group)[:quota])
        else:
            if len(data) < 2:
                raise TooFewRowsException('A split requires at least 2 rows, got {0}'.format(len(data)))

            quota = min(max(DatasetSampler.allocate([len(data)], spec.train_fraction)[0], 1), len(data) - 1)
            train.extend(rng.permutation(len(data))[:quota])

        train_positions = np.sort(np.asarray(train, dtype=np.int64))
        test_positions = np.setdiff1d(np.arange(len(data), dtype=np.int64), train_positions)

        return data.subset(train_positions, data.provenance + ' [train]'), \
            data.subset(test_positions, data.provenance + ' [test]')

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def allocate(sizes: Sequence[int], fraction: float) -> List[int]:
        """
        Allocates floor(total x fraction) rows over groups proportional to their sizes by the largest remainder method.
        Ties go to the group listed first. The fraction is taken at its decimal value, so 0.29 x 100 is exactly 29.

        :param list[int] sizes: The sizes of the groups.
        :param float fraction: The fraction.

        :rtype: list[int]
        """
        ratio = Fraction(str(fraction))
        exact = [size * ratio for size in sizes]
        quotas = [int(value) for value in exact]
        target = int(sum(sizes) * ratio)

        order = sorted(range(len(sizes)), key=lambda i: (-(exact[i] - quotas[i]), i))
        for i in order[:target - sum(quotas)]:
            quotas[i] += 1

        return quotas

# ----------------------------------------------------------------------------------------------------------------------
