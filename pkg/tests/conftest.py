"""Shared independent oracles and hypothesis strategies for the test suite.

Everything here is deliberately naive: direct enumeration and recursion only,
so the values frozen into the tests never depend on the code paths they
check.
"""

import functools

from hypothesis import strategies as st

from pitgf.qseries import QSeries


@functools.lru_cache(maxsize=None)
def _count_partitions(total, max_part):
    if total == 0:
        return 1
    if max_part == 0:
        return 0
    return sum(_count_partitions(total - p, p)
               for p in range(min(total, max_part), 0, -1))


def partition_count(k):
    """Number of integer partitions of k, by direct recursion."""
    return _count_partitions(k, k) if k >= 0 else 0


def partitions_inside_box(rows, cols):
    """All partitions fitting in a rows x cols box, as tuples."""
    out = []

    def rec(prefix, remaining, cap):
        out.append(tuple(prefix))
        if remaining == 0:
            return
        for p in range(min(cap, cols), 0, -1):
            rec(prefix + [p], remaining - 1, p)

    rec([], rows, cols)
    return sorted(set(out))


def qseries_strategy(max_abs=6, max_len=5, max_order_slack=4):
    """Small random Laurent windows for ring-axiom properties."""
    def build(low, coeffs, slack):
        order = low + len(coeffs) - 1 + slack
        return QSeries(low, coeffs, order)

    return st.builds(
        build,
        st.integers(min_value=-4, max_value=4),
        st.lists(st.integers(min_value=-max_abs, max_value=max_abs),
                 min_size=0, max_size=max_len),
        st.integers(min_value=0, max_value=max_order_slack),
    )


def partition_strategy(max_rows=5, max_part=6):
    return st.lists(st.integers(min_value=0, max_value=max_part),
                    min_size=0, max_size=max_rows).map(
                        lambda xs: tuple(sorted(xs, reverse=True)))
