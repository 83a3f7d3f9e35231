"""Brute-force enumeration oracles: ground truth for every closed formula.

Plane partitions with a pit and prescribed asymptotics are enumerated inside
a finite window, depth-first with branch-and-bound on the accumulated weight.
The pit forces the whole quadrant i > n, j > m to zero, so only the hook of
rows 1..n and columns 1..m is ever free; every cell deviating from the
pointwise-minimal configuration costs at least one unit of weight, which
bounds the search.

Infinite cells (the lam region) are a distinct marker (math.inf), never a
large integer.
"""

from __future__ import annotations

import math

from .partitions import Partition, PitConfig
from .qseries import QSeries

INF = math.inf


class WindowError(ValueError):
    """A window violates monotonicity, boundary pinning, or the pit."""


class Window:
    """A finite H' x H array of values with inf markers on the lam cells."""

    __slots__ = ("rows", "cols", "values")

    def __init__(self, values):
        values = tuple(tuple(row) for row in values)
        if not values or not values[0]:
            raise WindowError("window must be nonempty")
        if any(len(row) != len(values[0]) for row in values):
            raise WindowError("window rows must have equal length")
        object.__setattr__(self, "rows", len(values))
        object.__setattr__(self, "cols", len(values[0]))
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("Window is immutable")

    def value(self, i, j):
        """1-based lookup."""
        return self.values[i - 1][j - 1]


def default_window_size(config, order):
    """The conservative window bound: any deviating cell costs weight.

    The margin is order + 2: a run of unit-cost deviations ending against
    the pinned boundary can have length exactly `order`, so one extra row
    and column keep the adjacent-line assertion below out of its reach.
    """
    lam = config.lam
    H = max(lam.part(1) + config.n, config.m) + order + 2
    Hp = max(len(lam) + config.m, config.n) + order + 2
    return H, Hp


def minimal_window(config, H, Hp):
    """The pointwise-minimal admissible window (weight floor)."""
    config.validate()
    n, m, nu, mu, lam = config.n, config.m, config.nu, config.mu, config.lam
    if H <= lam.part(1) or Hp <= len(lam) or H <= m or Hp <= n:
        raise WindowError("window too small for lam and the pit")
    vals = [[0] * H for _ in range(Hp)]
    for i in range(Hp, 0, -1):
        for j in range(H, 0, -1):
            if lam.part(i) >= j:
                vals[i - 1][j - 1] = INF
                continue
            if j == H:
                vals[i - 1][j - 1] = nu.part(i)
                continue
            if i == Hp:
                vals[i - 1][j - 1] = mu.part(j)
                continue
            if i > n and j > m:
                vals[i - 1][j - 1] = 0
                continue
            right = vals[i - 1][j]
            below = vals[i][j - 1]
            right = 0 if right is INF else right
            below = 0 if below is INF else below
            vals[i - 1][j - 1] = max(right, below, nu.part(i), mu.part(j))
    return Window(vals)


def weight(config, window):
    """Renormalized box count of a window, per the staircase grading.

    Cells with i - n <= j - m contribute a_ij - nu_i, the others a_ij - mu_j;
    lam cells are skipped.  Validates all window invariants first.
    """
    config.validate()
    n, m, nu, mu, lam = config.n, config.m, config.nu, config.mu, config.lam
    Hp, H = window.rows, window.cols
    if H <= lam.part(1) or Hp <= len(lam):
        raise WindowError("window does not contain the lam region")
    if H < m + 1 or Hp < n + 1:
        raise WindowError("window does not contain the pit cell")
    for i in range(1, Hp + 1):
        for j in range(1, H + 1):
            v = window.value(i, j)
            in_lam = lam.part(i) >= j
            if in_lam != (v is INF):
                raise WindowError(
                    "cell (%d,%d) must be infinite exactly on lam" % (i, j))
            if v is INF:
                continue
            if not (isinstance(v, int) and v >= 0):
                raise WindowError("cell (%d,%d) is not a nonnegative integer" % (i, j))
            if j < H and window.value(i, j + 1) is not INF and v < window.value(i, j + 1):
                raise WindowError("row %d increases at column %d" % (i, j))
            if i < Hp and window.value(i + 1, j) is not INF and v < window.value(i + 1, j):
                raise WindowError("column %d increases at row %d" % (j, i))
    for i in range(1, Hp + 1):
        if lam.part(i) >= H:
            continue
        if window.value(i, H) != nu.part(i):
            raise WindowError("column %d of row %d is not pinned to nu" % (H, i))
    for j in range(1, H + 1):
        if window.value(Hp, j) != mu.part(j):
            raise WindowError("row %d is not pinned to mu at column %d" % (Hp, j))
    if window.value(n + 1, m + 1) != 0:
        raise WindowError("pit cell (%d,%d) is not zero" % (n + 1, m + 1))
    total = 0
    for i in range(1, Hp + 1):
        for j in range(1, H + 1):
            v = window.value(i, j)
            if v is INF:
                continue
            asym = nu.part(i) if i - n <= j - m else mu.part(j)
            if v < asym:
                raise WindowError("cell (%d,%d) lies below its asymptote" % (i, j))
            total += v - asym
    return total


def enumerate_chi(config, order, H=None, Hp=None):
    """Counting series of pit plane partitions through q^order, by DFS.

    The window defaults to the conservative bound; passing larger H, Hp is
    how the window-doubling stability check is run.  The row and column
    adjacent to the pinned boundary are asserted to sit at their asymptote in
    every accepted configuration, turning an undersized window into a loud
    failure instead of a silent undercount.
    """
    config.validate()
    n, m, nu, mu, lam = config.n, config.m, config.nu, config.mu, config.lam
    dH, dHp = default_window_size(config, order)
    H = dH if H is None else H
    Hp = dHp if Hp is None else Hp
    if H < dH or Hp < dHp:
        raise WindowError("window below the certified bound")

    # free cells: the hook (i <= n or j <= m), minus lam, pinned boundary
    # (j = H, i = Hp) and the forced-zero pit quadrant
    free = []
    for i in range(Hp - 1, 0, -1):
        for j in range(H - 1, 0, -1):
            if i > n and j > m:
                continue
            if lam.part(i) >= j:
                continue
            free.append((i, j))
    # bottom-right to top-left so each cell sees its right and below neighbour
    free.sort(key=lambda c: (-c[0], -c[1]))

    base = minimal_window(config, H, Hp)
    floor = {}
    for (i, j) in free:
        asym = nu.part(i) if i - n <= j - m else mu.part(j)
        floor[(i, j)] = base.value(i, j) - asym
    suffix = [0] * (len(free) + 1)
    for k in range(len(free) - 1, -1, -1):
        suffix[k] = suffix[k + 1] + floor[free[k]]

    vals = {}

    def lookup(i, j):
        if j == H:
            return nu.part(i)
        if i == Hp:
            return mu.part(j)
        if i > n and j > m:
            return 0
        if lam.part(i) >= j:
            return INF
        return vals[(i, j)]

    counts = [0] * (order + 1)
    ncells = len(free)

    def check_edges():
        for i in range(1, min(n, Hp - 1) + 1):
            if lam.part(i) >= H - 1:
                continue
            if lookup(i, H - 1) != nu.part(i):
                raise WindowError(
                    "window too small: row %d deviates at column %d" % (i, H - 1))
        for j in range(1, min(m, H - 1) + 1):
            if lookup(Hp - 1, j) != mu.part(j):
                raise WindowError(
                    "window too small: column %d deviates at row %d" % (j, Hp - 1))

    def rec(k, acc):
        if k == ncells:
            check_edges()
            counts[acc] += 1
            return
        i, j = free[k]
        right = lookup(i, j + 1)
        below = lookup(i + 1, j)
        lb = max(right if right is not INF else 0,
                 below if below is not INF else 0,
                 nu.part(i), mu.part(j))
        asym = nu.part(i) if i - n <= j - m else mu.part(j)
        rest = suffix[k + 1]
        v = lb
        while acc + (v - asym) + rest <= order:
            vals[(i, j)] = v
            rec(k + 1, acc + (v - asym))
            v += 1
        vals.pop((i, j), None)

    rec(0, 0)
    return QSeries(0, counts, order)


def _bounded_partitions(max_part, budget):
    """Counts by weight of partitions with parts <= max_part, weight <= budget."""
    counts = [0] * (budget + 1)

    def rec(total, largest):
        counts[total] += 1
        for p in range(min(largest, budget - total), 0, -1):
            rec(total + p, p)

    rec(0, max_part)
    return counts


def enumerate_v_partitions(nu1, mu1, order):
    """Counting series of V-partitions with arm asymptotes nu1, mu1.

    A V-partition is a stem a_0 with two weakly decreasing arms tending to
    nu1 and mu1; the weight subtracts the asymptote from each entry (stem
    counts on the nu side).  Enumerated by stem value and arm deviations.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    counts = [0] * (order + 1)
    for a0 in range(max(nu1, mu1), nu1 + order + 1):
        w0 = a0 - nu1
        arm_a = _bounded_partitions(a0 - nu1, order - w0)
        arm_b = _bounded_partitions(a0 - mu1, order - w0)
        for wa, ca in enumerate(arm_a):
            if ca == 0:
                continue
            for wb in range(0, order - w0 - wa + 1):
                cb = arm_b[wb]
                if cb:
                    counts[w0 + wa + wb] += ca * cb
    return QSeries(0, counts, order)
