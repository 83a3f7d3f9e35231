"""Lattice points of the finitized pit polyhedron and Brion vertex sums.

sq_direct enumerates the integer points of the finite polyhedron directly
(weight-bounded, since the polyhedron is unbounded upward).  The vertex sums
rebuild the same series from ribbon data: acyclic vertices of the polyhedron
correspond to decompositions of the skew staircase diagram into n + m
ribbons, one per boundary value, realized as particle jumps.  Each ribbon's
cone is simple and unimodular, so its contribution is a signed monomial over
a finite Pochhammer product; cyclic vertices contribute nothing under the
q-specialization and are never generated.

Two implementations of the general vertex sum are provided: the closed form
parametrized by (sigma, tau, A), and a geometric enumerator that walks the
ribbon decompositions compatible with an arbitrary interleaving order of the
boundary values.  The latter is what makes the order-independence phenomenon
checkable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import (Partition, PitConfig, add_ribbon_by_jump,
                         frobenius_data, particle_slots, perm_sign,
                         ribbon_boxes_in_path_order)
from .qseries import QSeries, invert, monomial, pochhammer


class BrionPreconditionError(ValueError):
    """A stated precondition (finitization size, strictness, interlacing) fails."""


# -- vertex cone contributions ------------------------------------------------

@dataclass(frozen=True)
class VertexContribution:
    """sign * q^delta / prod_k (q)_k, the rational contribution of a cone."""

    sign: int
    delta: int
    denom: tuple

    def __mul__(self, other):
        return VertexContribution(self.sign * other.sign,
                                  self.delta + other.delta,
                                  self.denom + other.denom)

    def to_series(self, order):
        """Materialize as a QSeries exact through q^order."""
        rel = order - self.delta
        if rel < 0:
            return QSeries.zero(order)
        acc = monomial(self.sign, self.delta)
        for k in self.denom:
            acc = acc * invert(pochhammer(k, rel))
        return acc.truncate(order)


UNIT_CONTRIBUTION = VertexContribution(1, 0, ())


def ribbon_cone_contribution(boxes, base, orientation):
    """Contribution of one ribbon's cone at a polyhedron vertex.

    `base` is the pinned boundary value carried by every cell of the ribbon.
    Orientation "row" pins the NE end (ribbons reaching column H); boxes are
    numbered from the SW end, an edge is negative when the next box sits on
    top of the previous one.  Orientation "column" pins the SW end (ribbons
    reaching row H'); numbering starts from the NE end and an edge is
    negative when the next box sits to the left.  Each negative edge at
    position s rewrites 1/(1-q^-s) as -q^s/(1-q^s).
    """
    path = ribbon_boxes_in_path_order(boxes)
    h = len(path)
    if orientation == "row":
        walk = path
        def negative(prev, cur):
            return cur[0] == prev[0] - 1  # next box above
    elif orientation == "column":
        walk = list(reversed(path))
        def negative(prev, cur):
            return cur[1] == prev[1] - 1  # next box to the left
    else:
        raise ValueError("orientation must be 'row' or 'column'")
    sign = 1
    delta = base * h
    for s in range(1, h):
        if negative(walk[s - 1], walk[s]):
            sign = -sign
            delta += s
    denom = (h - 1,) if h > 1 else ()
    return VertexContribution(sign, delta, denom)


# -- direct enumeration of the polyhedron --------------------------------------

def _check_finitization(config, H, Hp):
    config.validate()
    if H <= config.lam.part(1) or Hp <= len(config.lam):
        raise BrionPreconditionError(
            "finitization H=%d, H'=%d does not contain lam" % (H, Hp))
    if H < config.m + 1 or Hp < config.n + 1:
        raise BrionPreconditionError(
            "finitization H=%d, H'=%d does not contain the pit" % (H, Hp))


def _grid_minima(config, H, Hp):
    """Pointwise-minimal coordinate values over all non-lam grid cells."""
    n, m, nu, mu, lam = config.n, config.m, config.nu, config.mu, config.lam
    mins = {}
    for i in range(Hp, 0, -1):
        for j in range(H, 0, -1):
            if lam.part(i) >= j:
                continue
            if j == H:
                v = nu.part(i)
            elif i == Hp:
                v = mu.part(j)
            elif i > n and j > m:
                v = 0
            else:
                v = max(nu.part(i), mu.part(j),
                        mins.get((i, j + 1), 0), mins.get((i + 1, j), 0))
            mins[(i, j)] = v
    return mins


def sq_direct(config, H, Hp, order):
    """Characteristic series of the finitized polyhedron through q^order.

    Sums q^(sum of all coordinates) over integer points; pinned boundary
    coordinates count.  The pit forces the quadrant i > n, j > m to zero, so
    only the hook of rows <= n and columns <= m is searched.
    """
    _check_finitization(config, H, Hp)
    n, m, nu, mu, lam = config.n, config.m, config.nu, config.mu, config.lam
    base = sum(nu.part(i) for i in range(1, Hp + 1))          # column H
    base += sum(mu.part(j) for j in range(1, H))              # row Hp, j < H
    free = [(i, j)
            for i in range(Hp - 1, 0, -1)
            for j in range(H - 1, 0, -1)
            if (i <= n or j <= m) and lam.part(i) < j]
    free.sort(key=lambda c: (-c[0], -c[1]))

    mins = _grid_minima(config, H, Hp)
    suffix = [0] * (len(free) + 1)
    for k in range(len(free) - 1, -1, -1):
        suffix[k] = suffix[k + 1] + mins[free[k]]

    counts = {}
    vals = {}

    def lookup(i, j):
        if j == H:
            return nu.part(i)
        if i == Hp:
            return mu.part(j)
        if i > n and j > m:
            return 0
        if lam.part(i) >= j:
            return None
        return vals[(i, j)]

    ncells = len(free)

    def rec(k, acc):
        if k == ncells:
            counts[acc] = counts.get(acc, 0) + 1
            return
        i, j = free[k]
        right = lookup(i, j + 1)
        below = lookup(i + 1, j)
        lb = max(right if right is not None else 0,
                 below if below is not None else 0,
                 nu.part(i), mu.part(j))
        rest = suffix[k + 1]
        v = lb
        while acc + v + rest <= order:
            vals[(i, j)] = v
            rec(k + 1, acc + v)
            v += 1
        vals.pop((i, j), None)

    if base <= order:
        rec(0, base)
    return QSeries.from_dict(counts, order)


def sq_min_weight(config, H, Hp):
    """Total coordinate sum of the pointwise-minimal lattice point."""
    _check_finitization(config, H, Hp)
    return sum(_grid_minima(config, H, Hp).values())


# -- printed vertex sums -------------------------------------------------------

def _term_series(sign, delta, ks, order):
    rel = order - delta
    if rel < 0:
        return QSeries.zero(order)
    if any(k < 0 for k in ks):
        raise BrionPreconditionError("negative Pochhammer index in vertex term")
    acc = monomial(sign, delta)
    for k in ks:
        acc = acc * invert(pochhammer(k, rel))
    return acc.truncate(order)


def delta_H_m0(n, nu, lam, H):
    """Grading correction for m = 0: sum nu_i (H - lam_i)."""
    nu, lam = Partition(nu), Partition(lam)
    return sum(nu.part(i) * (H - lam.part(i)) for i in range(1, n + 1))


def delta_HHp(config, H, Hp):
    """Grading correction Delta^(H,H') between q^(sum t) and the pit grading."""
    fd = frobenius_data(config)
    n, m, r = config.n, config.m, fd.r
    nu, mu = config.nu, config.mu
    total = 0
    for i in range(1, n - r + 1):
        total += nu.part(i) * (H - fd.P[i - 1] - i + n - m)
    for j in range(1, m - r + 1):
        total += mu.part(j) * (Hp - fd.Q[j - 1] - j + m - n)
    for i in range(n - r + 1, n + 1):
        total += nu.part(i) * (H - i + n - m + 1)
    for j in range(m - r + 1, m + 1):
        total += mu.part(j) * (Hp - j + m - n)
    return total


def vertex_sum_m0(n, nu, lam, H, order):
    """Brion sum for the m = 0 polyhedron, straight from the permutation form:
    sum_sigma (-1)^|sigma| q^(Delta^(sigma,H)) / prod_i (q)_(H - sigma(i) - lam_i + i - 1).

    Requires strictly decreasing nu (nu_1 > ... > nu_n >= 0) and H > lam_1 + n - 1.
    """
    nu, lam = Partition(nu), Partition(lam)
    if len(nu) > n:
        raise BrionPreconditionError("l(nu) exceeds n")
    vals = [nu.part(i) for i in range(1, n + 1)]
    if any(vals[i] <= vals[i + 1] for i in range(n - 1)):
        raise BrionPreconditionError("vertex_sum_m0 requires strictly decreasing nu")
    if H <= lam.part(1) + n - 1:
        raise BrionPreconditionError("H must exceed lam_1 + n - 1")
    total = QSeries.zero(order)
    for sigma in itertools.permutations(range(1, n + 1)):
        delta = sum(H * nu.part(i) - i * lam.part(i) - i * nu.part(i) + i * i
                    for i in range(1, n + 1))
        delta -= sum((lam.part(i) - i) * (nu.part(sigma[i - 1]) - sigma[i - 1])
                     for i in range(1, n + 1))
        ks = [H - sigma[i - 1] - lam.part(i) + i - 1 for i in range(1, n + 1)]
        sign = perm_sign(tuple(s - 1 for s in sigma))
        total = total + _term_series(sign, delta, ks, order)
    return total


def _interlacing(config):
    vals = [config.nu.part(i) for i in range(1, config.n + 1)] + \
           [config.mu.part(j) for j in range(1, config.m + 1)]
    return all(a > b for a, b in zip(vals, vals[1:]))


def vertex_sum_general(config, H, Hp, order):
    """Brion sum for the general polyhedron from the (sigma, tau, A) closed form.

    Works under the interlacing nu_1 > ... > nu_n > mu_1 > ... > mu_m with
    H > lam_1 + n - 1 and H' > lam'_1 + m - 1.  The exponent used here is the
    corrected reading of the printed display (the one consistent with the
    explicit limit formula); tau must jump rightward at finite H', and the
    A-values may not vacate a column ribbon's starting slot.
    """
    config.validate()
    fd = frobenius_data(config)
    n, m, r = config.n, config.m, fd.r
    nu, mu, lam = config.nu, config.mu, config.lam
    if not _interlacing(config):
        raise BrionPreconditionError(
            "vertex_sum_general requires nu_1 > ... > nu_n > mu_1 > ... > mu_m")
    if H <= lam.part(1) + n - 1 or Hp <= (len(lam) + m - 1 if m else len(lam)):
        raise BrionPreconditionError("finitization too small for the vertex sum")
    _check_finitization(config, H, Hp)

    # admissible A-values: from {-L_s : s > n-r}, small enough that every
    # jump stays rightward, and never equal to a mu-source slot H'-n+m-j
    pool = []
    s = n - r + 1
    forbidden = {Hp - n + m - j for j in range(1, m + 1)}
    while True:
        v = -fd.L(s)
        if v > Hp + m - n - 2:
            break
        if v not in forbidden:
            pool.append(v)
        s += 1

    total = QSeries.zero(order)
    for A in itertools.combinations(sorted(pool, reverse=True), r):
        B = [fd.P[i] + 1 for i in range(n - r)] + [-a for a in reversed(A)]
        C = list(fd.Q) + list(A)
        for tau in itertools.permutations(range(m)):
            if any(Hp - (tau[j] + 1) + m - n - C[j] - 1 < 0 for j in range(m)):
                continue  # tau not admissible at this H'
            for sigma in itertools.permutations(range(n)):
                delta = 0
                for i in range(1, r + 1):
                    a = A[i - 1]
                    delta += a * (a + 1) // 2 + a * (
                        fd.N[sigma[n - i]] - fd.M[tau[m - r + i - 1]])
                for i0 in range(n - r):
                    delta += (fd.P[i0] + 1) * (n - (i0 + 1) - fd.N[sigma[i0]])
                for j0 in range(m - r):
                    delta += fd.Q[j0] * (m - (j0 + 1) - fd.M[tau[j0]])
                delta += sum(nu.part(i) * (H + n - m + 1 - i)
                             for i in range(1, n + 1))
                delta += sum(mu.part(j) * (Hp + m - n - j)
                             for j in range(1, m + 1))
                ks = [H - (sigma[i] + 1) + n - m - B[i] for i in range(n)]
                ks += [Hp - (tau[j] + 1) + m - n - C[j] - 1 for j in range(m)]
                if any(k < 0 for k in ks):
                    continue
                sign = perm_sign(sigma) * perm_sign(tau)
                if sum(a - i + 1 for i, a in enumerate(A, start=1)) % 2:
                    sign = -sign
                total = total + _term_series(sign, delta, ks, order)
    return total


# -- geometric vertex enumeration (arbitrary interleaving order) --------------

def standard_order(config):
    """All nu labels before all mu labels, each in index order."""
    return [("nu", i) for i in range(1, config.n + 1)] + \
           [("mu", j) for j in range(1, config.m + 1)]


def reversed_order(config):
    """All mu labels before all nu labels."""
    return [("mu", j) for j in range(1, config.m + 1)] + \
           [("nu", i) for i in range(1, config.n + 1)]


def _validate_order(config, labels):
    want = sorted(standard_order(config))
    if sorted(labels) != want:
        raise ValueError("order must mention each boundary label exactly once")
    for kind in ("nu", "mu"):
        idx = [i for (k, i) in labels if k == kind]
        if idx != sorted(idx):
            raise ValueError("order must keep %s_1 > %s_2 > ... internally"
                             % (kind, kind))


def brion_vertices(config, H, Hp, order, labels=None):
    """Ribbon decompositions of the staircase skew shape compatible with an order.

    Yields (contribution, ribbons) per acyclic vertex, where ribbons maps each
    label to its frozenset of boxes.  Processing the boundary labels in
    decreasing order and requiring each jump to be legal at its turn is what
    realizes order-compatibility.
    """
    config.validate()
    n, m, nu, mu, lam = config.n, config.m, config.nu, config.mu, config.lam
    if labels is None:
        labels = standard_order(config)
    _validate_order(config, labels)
    if H <= lam.part(1) + n - 1 or Hp <= max(len(lam) + m - 1, n):
        raise BrionPreconditionError("finitization too small for ribbon jumps")
    shift = n - m + 1
    final = Partition((H,) * n + (m,) * (Hp - n))
    count = Hp + m + 2
    final_slots = set(particle_slots(final, shift, count))
    slot_floor = -Hp + n - m  # below every legal jump source
    targets_nu = {i: H + n - m + 1 - i for i in range(1, n + 1)}
    sources_mu = {j: -Hp + n - m + j for j in range(1, m + 1)}
    out = []

    def occupied(parts):
        return set(particle_slots(Partition(parts), shift, count))

    def rec(idx, parts, contrib, ribbons):
        if contrib.delta > order:
            return
        if idx == len(labels):
            if Partition(parts) == final:
                out.append((contrib, dict(ribbons)))
            return
        kind, which = labels[idx]
        occ = occupied(parts)
        if kind == "nu":
            tgt = targets_nu[which]
            if tgt in occ:
                return
            pending_mu_sources = {sources_mu[j] for (k, j) in labels[idx + 1:]
                                  if k == "mu"}
            for src in sorted((p for p in occ if slot_floor <= p < tgt),
                              reverse=True):
                if src in pending_mu_sources:
                    continue
                new_parts, boxes = add_ribbon_by_jump(parts, src, tgt, shift)
                if (which, H) not in boxes:
                    continue
                c = ribbon_cone_contribution(boxes, nu.part(which), "row")
                ribbons.append(((kind, which), boxes))
                rec(idx + 1, new_parts, contrib * c, ribbons)
                ribbons.pop()
        else:
            src = sources_mu[which]
            if src not in occ:
                return
            more_nu = any(k == "nu" for (k, _) in labels[idx + 1:])
            for tgt in range(src + 1, H + n - m + 1):
                if tgt in occ:
                    continue
                if not more_nu and tgt not in final_slots:
                    continue
                new_parts, boxes = add_ribbon_by_jump(parts, src, tgt, shift)
                if (Hp, which) not in boxes:
                    continue
                c = ribbon_cone_contribution(boxes, mu.part(which), "column")
                ribbons.append(((kind, which), boxes))
                rec(idx + 1, new_parts, contrib * c, ribbons)
                ribbons.pop()

    rec(0, tuple(lam.parts), UNIT_CONTRIBUTION, [])
    return out


def vertex_sum_by_order(config, H, Hp, order, labels=None):
    """Geometric Brion sum: sum of cone contributions over order-compatible vertices."""
    total = QSeries.zero(order)
    for contrib, _ in brion_vertices(config, H, Hp, order, labels):
        total = total + contrib.to_series(order)
    return total


@dataclass(frozen=True)
class OrderIndependenceResult:
    first: QSeries
    second: QSeries
    window_ok: bool

    @property
    def equal(self):
        return self.first == self.second


def order_independence_check(config, H, Hp, order, o1=None, o2=None):
    """Evaluate the Brion sum under two interleaving orders.

    Inside the window n+1-H' <= nu_i - mu_j <= H-m-1 the two sums must agree;
    outside it they are permitted to differ, so the result reports rather
    than asserts.
    """
    config.validate()
    o1 = standard_order(config) if o1 is None else o1
    o2 = reversed_order(config) if o2 is None else o2
    window_ok = all(
        config.n + 1 - Hp <= config.nu.part(i) - config.mu.part(j) <= H - config.m - 1
        for i in range(1, config.n + 1)
        for j in range(1, config.m + 1))
    s1 = vertex_sum_by_order(config, H, Hp, order, o1)
    s2 = vertex_sum_by_order(config, H, Hp, order, o2)
    return OrderIndependenceResult(s1, s2, window_ok)


def example_11_sums(nu1, mu1, H, Hp, order):
    """The two n = m = 1 Brion sums S_o (nu_1 > mu_1) and S_o' (mu_1 > nu_1)."""
    s_o = QSeries.zero(order)
    for a in range(0, Hp - 1):
        delta = a * (a + 1) // 2 + (H + a) * nu1 + (Hp - a - 1) * mu1
        sign = -1 if a % 2 else 1
        s_o = s_o + _term_series(sign, delta, (H + a - 1, Hp - a - 2), order)
    s_op = QSeries.zero(order)
    for b in range(0, H - 1):
        delta = b * (b + 1) // 2 + (H - b - 1) * nu1 + (Hp + b) * mu1
        sign = -1 if b % 2 else 1
        s_op = s_op + _term_series(sign, delta, (H - b - 2, Hp + b - 1), order)
    return s_o, s_op


def walls_ribbon_splits(boxes, nu1, mu1, order):
    """All two-ribbon splits of a corner-to-corner ribbon, bucketed by cut edge.

    The piece containing the NE end carries nu1 (row orientation), the piece
    containing the SW end carries mu1 (column orientation).  A cut between
    vertically adjacent boxes is a horizontal grid edge and lands in the
    nu_1 > mu_1 bucket; a cut between horizontally adjacent boxes lands in
    the mu_1 > nu_1 bucket.  Returns (horizontal_sum, vertical_sum, terms).
    """
    path = ribbon_boxes_in_path_order(boxes)
    h = len(path)
    horiz = QSeries.zero(order)
    vert = QSeries.zero(order)
    terms = []
    for k in range(1, h):
        lower = path[:k]
        upper = path[k:]
        c = ribbon_cone_contribution(lower, mu1, "column") * \
            ribbon_cone_contribution(upper, nu1, "row")
        series = c.to_series(order)
        stacked = path[k][0] == path[k - 1][0] - 1  # next box above: horizontal edge
        if stacked:
            horiz = horiz + series
        else:
            vert = vert + series
        terms.append(("horizontal" if stacked else "vertical", c))
    return horiz, vert, terms
