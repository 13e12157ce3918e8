from collections import Counter

import pytest

from sptrec.partitions import (
    OVERPARTITION_LIMIT,
    OracleRangeError,
    Partition,
    PartitionClass,
    enumerate_partitions,
    m2_oracle,
    m2spt_oracle,
    oracle_tables,
    overpartition_count,
    p_oracle,
    spt_oracle,
    sptbar_oracle,
)
from sptrec.series import alternate, invert, theta_series, triangular_series


def stream_sptbar(n, count_overlined=True):
    """sptbar(n) straight from the explicit overpartition stream."""
    total = 0
    for lam in enumerate_partitions(n, "overpartition"):
        v = lam.smallest
        if v % 2:
            m = lam.multiplicity(v)
            if not count_overlined and v in lam.overlines:
                m -= 1
            total += m
    return total


def test_ordinary_partitions_of_4():
    parts = [lam.parts for lam in enumerate_partitions(4)]
    assert sorted(parts) == sorted([(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])


@pytest.mark.parametrize("cls", list(PartitionClass))
def test_zero_has_one_empty_partition(cls):
    assert list(enumerate_partitions(0, cls)) == [Partition(())]


def test_overpartitions_of_4():
    objs = list(enumerate_partitions(4, "overpartition"))
    assert len(objs) == 14
    assert len(set(objs)) == 14


def test_stream_invariants():
    for n in range(1, 13):
        for cls in PartitionClass:
            seen = set()
            for lam in enumerate_partitions(n, cls):
                assert lam.total == n
                assert list(lam.parts) == sorted(lam.parts, reverse=True)
                assert lam.overlines <= set(lam.parts)
                if cls is PartitionClass.DISTINCT_ODD_PARTS:
                    counts = Counter(lam.parts)
                    assert all(c == 1 for v, c in counts.items() if v % 2)
                if cls is not PartitionClass.OVERPARTITION:
                    assert not lam.overlines
                assert lam not in seen
                seen.add(lam)


def test_stream_is_deterministic():
    assert list(enumerate_partitions(9, "overpartition")) == list(enumerate_partitions(9, "overpartition"))


def test_stream_counts_match_counting_oracles():
    for n in range(0, 16):
        assert sum(1 for _ in enumerate_partitions(n)) == p_oracle(n)
        assert sum(1 for _ in enumerate_partitions(n, "overpartition")) == overpartition_count(n)
        assert sum(1 for _ in enumerate_partitions(n, "distinct_odd_parts")) == m2_oracle(n)


def test_oracle_range_errors():
    with pytest.raises(OracleRangeError):
        p_oracle(61)
    with pytest.raises(OracleRangeError):
        next(enumerate_partitions(OVERPARTITION_LIMIT + 1, "overpartition"))
    with pytest.raises(OracleRangeError):
        spt_oracle(0)
    with pytest.raises(OracleRangeError):
        sptbar_oracle(41)


def test_spt_examples():
    assert spt_oracle(1) == 1
    assert spt_oracle(4) == 10  # 4:1, 3+1:1, 2+2:2, 2+1+1:2, 1^4:4
    assert spt_oracle(5) == 14


def test_overpartition_count_display():
    assert [overpartition_count(n) for n in range(7)] == [1, 2, 4, 8, 14, 24, 40]


def test_m2_display():
    assert m2_oracle(3) == 2 and m2_oracle(4) == 3 and m2_oracle(6) == 5


def test_p_examples():
    assert p_oracle(0) == 1 and p_oracle(4) == 5 and p_oracle(10) == 42


def test_m2spt_examples():
    assert m2spt_oracle(1) == 0
    assert m2spt_oracle(2) == 1
    # n = 3: M2spt(3) - M2spt(2) - M2spt(0) = (-1)^3 c(3) = -1
    assert m2spt_oracle(3) - m2spt_oracle(2) == -1


def test_sptbar_examples_forced_by_convolution():
    pbar = [1, 2, 4, 8, 14]
    b = [0, 2, 0, 4, -4]
    for N in range(1, 5):
        assert sptbar_oracle(N) == sum(pbar[N - m] * b[m] for m in range(1, N + 1))


def test_overline_convention_through_12():
    # the weighted count agrees with the explicit stream, and the alternative
    # reading that ignores overlined smallest parts already fails at n = 1
    for n in range(1, 13):
        assert sptbar_oracle(n) == stream_sptbar(n)
    assert stream_sptbar(1, count_overlined=False) == 1 != sptbar_oracle(1)


def test_stream_stats_match_weighted_walk():
    T = oracle_tables(14)
    for n in range(1, 15):
        lams = list(enumerate_partitions(n))
        assert T["spt"][n] == sum(lam.multiplicity(lam.smallest) for lam in lams)
        m2 = list(enumerate_partitions(n, "distinct_odd_parts"))
        assert T["m2spt"][n] == sum(lam.multiplicity(lam.smallest) for lam in m2 if lam.smallest % 2 == 0)
        assert T["sptbar"][n] == stream_sptbar(n)


def test_oracle_tables_match_per_n_oracles():
    T = oracle_tables(25)
    for n in range(1, 26):
        assert T["p"][n] == p_oracle(n)
        assert T["spt"][n] == spt_oracle(n)
        assert T["pbar"][n] == overpartition_count(n)
        assert T["sptbar"][n] == sptbar_oracle(n)
        assert T["m2"][n] == m2_oracle(n)
        assert T["m2spt"][n] == m2spt_oracle(n)


def test_generating_functions_from_oracles():
    T = oracle_tables(40)
    assert T["pbar"].data == invert(theta_series(40)).coeffs
    assert T["m2"].data == alternate(invert(triangular_series(40))).coeffs


def test_count_inequalities():
    T = oracle_tables(60)
    for n in range(1, 61):
        assert T["spt"][n] >= T["p"][n]
        assert T["m2spt"][n] <= T["spt"][n]
    for name in ("p", "spt", "pbar", "sptbar", "m2", "m2spt"):
        assert all(v >= 0 for v in T[name].data)
