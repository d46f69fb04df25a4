import itertools

import pytest

from qalpine.polyring import Poly
from qalpine.qbinom import QBinomTable


def kangaroo_oracle(max_part, min_part=1):
    """Weight polynomial of gap->=2 partitions with parts in [min_part, max_part].

    Such partitions have distinct parts, so they are exactly the subsets of
    the allowed range with no two adjacent elements.
    """
    allowed = list(range(min_part, max_part + 1))
    counts = {}
    for r in range(len(allowed) + 1):
        for subset in itertools.combinations(allowed, r):
            if all(b - a >= 2 for a, b in zip(subset, subset[1:])):
                w = sum(subset)
                counts[w] = counts.get(w, 0) + 1
    return Poly.from_terms(counts)


def partition_counts(D, allowed=lambda p: True):
    """Number of partitions of each w <= D into allowed parts (coin-change DP)."""
    counts = [1] + [0] * D
    for part in range(1, D + 1):
        if allowed(part):
            for w in range(part, D + 1):
                counts[w] += counts[w - part]
    return counts


@pytest.fixture(scope="session")
def table():
    return QBinomTable()
