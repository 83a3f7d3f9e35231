"""The oriented strip graph and non-intersecting path machinery.

Vertices sit at (a + 1/2, b) for integers a and b >= 0.  Horizontal edges
always point right and the edge at height y weighs q^y; vertical edges point
up in the left half-plane (a < 0) and down in the right half-plane (a >= 0)
and weigh 1.  Infinitely remote terminals are handled by the exact
renormalization rule: paths from (-inf, b) have every horizontal edge over a
negative column divided by q^b (and one q^b division per uncovered negative
column), and symmetrically for (+inf, b) over the nonnegative columns.  That
turns the informal weight q^(-b(inf/2 -+ 1/2)) into a finite, testable
convention; the widening checks certify the truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import qseries
from .qseries import QSeries, monomial
from .partitions import frobenius_data, inversions, perm_sign


class StripTooSmall(ValueError):
    """The truncated strip provably clips paths of weight <= order."""


@dataclass(frozen=True)
class Terminal:
    """A path endpoint: finite vertex, left/right infinity, or top of a column.

    `x` is the integer a of the vertex abscissa a + 1/2; `y` a height.
    """

    kind: str
    x: int = None
    y: int = None

    @staticmethod
    def finite(x, y):
        return Terminal("finite", x=x, y=y)

    @staticmethod
    def left_inf(b):
        return Terminal("left_inf", y=b)

    @staticmethod
    def right_inf(b):
        return Terminal("right_inf", y=b)

    @staticmethod
    def top(x):
        return Terminal("top", x=x)

    def __str__(self):
        if self.kind == "finite":
            return "(%d+1/2, %d)" % (self.x, self.y)
        if self.kind == "left_inf":
            return "(-oo, %d)" % self.y
        if self.kind == "right_inf":
            return "(+oo, %d)" % self.y
        return "(%d+1/2, +oo)" % self.x


@dataclass(frozen=True)
class StripGraph:
    """Truncation of the strip: vertex columns amin..amax, heights 0..ymax."""

    amin: int
    amax: int
    ymax: int

    @staticmethod
    def for_terminals(terminals, order):
        """A strip certified wide enough for paths of weight <= order."""
        xs = [-1, 0]
        ys = [0]
        has_left = has_right = False
        for t in terminals:
            if t.kind in ("finite", "top"):
                xs.append(t.x)
            if t.y is not None:
                ys.append(t.y)
            has_left = has_left or t.kind == "left_inf"
            has_right = has_right or t.kind == "right_inf"
        amin = min(xs) - (order + 2 if has_left else 0)
        amax = max(xs) + (order + 2 if has_right else 0)
        ymax = max(ys) + order + 1
        return StripGraph(amin, amax, ymax)

    def covers(self, other):
        return (self.amin <= other.amin and self.amax >= other.amax
                and self.ymax >= other.ymax)


def _columns(s, t, g):
    a_s = g.amin if s.kind == "left_inf" else s.x
    a_t = g.amax if t.kind == "right_inf" else t.x
    return a_s, a_t


def _shift(s, t, a_s, a_t):
    """Constant renormalization exponent from uncovered columns."""
    shift = 0
    if s.kind == "left_inf":
        shift -= s.y * max(0, -1 - a_t)
    if t.kind == "right_inf":
        shift -= t.y * max(0, a_s + 1)
    return shift


def path_gf(g, s, t, order):
    """Sum of renormalized path weights from s to t, exact through
    q^(order + shift) where shift is the constant renormalization exponent.

    Raises StripTooSmall when the strip provably clips contributing paths.
    """
    if not g.covers(StripGraph.for_terminals((s, t), order)):
        raise StripTooSmall("strip %r cannot certify order %d for %s -> %s"
                            % (g, order, s, t))
    a_s, a_t = _columns(s, t, g)
    shift = _shift(s, t, a_s, a_t)
    if a_s > a_t or (s.kind == "top" and s.x < 0) or (t.kind == "top" and t.x > -1):
        return QSeries.zero(order + shift)
    if a_s == a_t and (s.kind, t.kind) != ("finite", "finite"):
        raise ValueError("degenerate terminal columns")
    bL = s.y if s.kind == "left_inf" else None
    bR = t.y if t.kind == "right_inf" else None
    ymax = g.ymax
    dist = [[0] * (order + 1) for _ in range(ymax + 1)]
    if s.kind == "top":
        dist[ymax][0] = 1
    else:
        dist[s.y][0] = 1
    result = [0] * (order + 1)
    for a in range(a_s, a_t + 1):
        if t.kind == "top" and a == a_t:
            # arrival states; the free ascent is not a new path
            for y in range(ymax + 1):
                for w in range(order + 1):
                    result[w] += dist[y][w]
            break
        # vertical closure at column a
        if a <= -1:
            for y in range(1, ymax + 1):
                row, prev = dist[y], dist[y - 1]
                for w in range(order + 1):
                    row[w] += prev[w]
        else:
            for y in range(ymax - 1, -1, -1):
                row, nxt = dist[y], dist[y + 1]
                for w in range(order + 1):
                    row[w] += nxt[w]
        if a == a_t:
            if t.kind == "finite":
                result = dist[t.y][:]
            else:  # right_inf
                for y in range(bR + 1, ymax + 1):
                    if any(dist[y]):
                        raise StripTooSmall(
                            "mass at height %d survives to the right edge" % y)
                result = dist[bR][:]
            break
        # horizontal edge over integer column a+1
        i = a + 1
        base = 0
        if bL is not None and i < 0:
            base += bL
        if bR is not None and i >= 0:
            base += bR
        ndist = [[0] * (order + 1) for _ in range(ymax + 1)]
        for y in range(ymax + 1):
            cost = y - base
            if cost < 0:
                continue  # below the right renormalization level: cannot finish
            row = dist[y]
            nrow = ndist[y]
            for w in range(order + 1 - cost):
                if row[w]:
                    nrow[w + cost] += row[w]
        dist = ndist
    return QSeries(shift, result, order + shift)


def closed_form(s, t, order):
    """The paper's closed forms for the four supported terminal pairs."""
    from .formulas import r_series
    from .qseries import invert, pochhammer, INFINITY
    inv = invert(pochhammer(INFINITY, order))
    if s.kind == "finite" and t.kind == "finite" and t.y == 0 and t.x >= s.x:
        return qseries.qbinom(t.x - s.x + s.y, s.y, order)
    if s.kind == "left_inf" and t.kind == "top":
        a = -t.x - 1
        if a >= 0:
            return inv.shift(-a * s.y).truncate(order - a * s.y)
    if s.kind == "top" and t.kind == "right_inf" and s.x >= 0:
        e = -(s.x + 1) * t.y
        return inv.shift(e).truncate(order + e)
    if s.kind == "left_inf" and t.kind == "right_inf":
        return r_series(t.y - s.y, order)
    raise ValueError("no closed form for %s -> %s" % (s, t))


def source_target_layout(config):
    """Sources, targets, and the unique non-crossing permutation sigma_{m,n,r}.

    s_i = (-inf, M_i) for i <= m, then (P_(i-m) + 1/2, +inf); t_j = (+inf, N_j)
    for j <= n, then (-Q_(j-n) - 1/2, +inf).  sigma is returned 0-based.
    """
    fd = frobenius_data(config)
    m, n, r = config.m, config.n, fd.r
    S = [Terminal.left_inf(fd.M[i]) for i in range(m)] + \
        [Terminal.top(fd.P[i]) for i in range(n - r)]
    T = [Terminal.right_inf(fd.N[j]) for j in range(n)] + \
        [Terminal.top(-fd.Q[j] - 1) for j in range(m - r)]
    sigma = []
    for i in range(m + n - r):
        if i < m - r:
            sigma.append(n + i)
        elif i < m:
            sigma.append(n - r + (i - (m - r)))
        else:
            sigma.append(i - m)
    return S, T, tuple(sigma)


def _enumerate_paths(g, s, t, order):
    """All paths s -> t of relative weight <= order, with occupied vertices.

    Returns a list of (weight, frozenset of (a, y) vertices), tails included
    within the window.  Exponential; test-scale instances only.
    """
    a_s, a_t = _columns(s, t, g)
    if a_s > a_t:
        return []
    bL = s.y if s.kind == "left_inf" else None
    bR = t.y if t.kind == "right_inf" else None
    out = []

    def finish(a, y, w, occ):
        if t.kind == "top":
            occ = occ | {(a, yy) for yy in range(y, g.ymax + 1)}
            out.append((w, frozenset(occ)))
        elif t.kind == "finite":
            if y == t.y:
                out.append((w, frozenset(occ)))
        else:
            if y == bR:
                out.append((w, frozenset(occ)))

    def step(a, y, w, occ):
        # try to end here
        if a == a_t:
            finish(a, y, w, occ)
        # vertical move
        ny = y + 1 if a <= -1 else y - 1
        if 0 <= ny <= g.ymax and (a, ny) not in occ:
            step(a, ny, w, occ | {(a, ny)})
        # horizontal move
        if a < a_t:
            i = a + 1
            base = (bL if (bL is not None and i < 0) else 0) + \
                   (bR if (bR is not None and i >= 0) else 0)
            cost = y - base
            if cost >= 0 and w + cost <= order:
                step(a + 1, y, w + cost, occ | {(a + 1, y)})

    if s.kind == "top":
        for y0 in range(g.ymax + 1):
            occ0 = {(a_s, yy) for yy in range(y0, g.ymax + 1)}
            step(a_s, y0, 0, occ0)
    else:
        y0 = s.y
        step(a_s, y0, 0, {(a_s, y0)})
    return out


def lgv_check(g, S, T, sigma, order):
    """Both sides of the LGV identity for the single contributing permutation.

    lhs: direct enumeration of vertex-disjoint families joining s_i to
    t_(sigma(i)); rhs: (-1)^|sigma| det(P(s_i -> t_j)).  Returned as a pair
    for the caller to assert.
    """
    k = len(S)
    if len(T) != k or sorted(sigma) != list(range(k)):
        raise ValueError("sigma must be a permutation of the target indices")
    shifts = [_shift(S[i], T[sigma[i]], *_columns(S[i], T[sigma[i]], g))
              for i in range(k)]
    paths = [_enumerate_paths(g, S[i], T[sigma[i]], order) for i in range(k)]
    acc = {}

    def combine(i, w, occ):
        if w > order:
            return
        if i == k:
            acc[w] = acc.get(w, 0) + 1
            return
        for (pw, pocc) in paths[i]:
            if w + pw <= order and not (occ & pocc):
                combine(i + 1, w + pw, occ | pocc)

    combine(0, 0, frozenset())
    total_shift = sum(shifts)
    lhs = QSeries.from_dict({w + total_shift: c for w, c in acc.items()},
                            order + total_shift)
    matrix = [[path_gf(g, S[i], T[j], order) for j in range(k)]
              for i in range(k)]
    rhs = qseries.det(matrix)
    if perm_sign(sigma) < 0:
        rhs = -rhs
    return lhs, rhs


def sigma_mnr_inversions(config):
    """Inversion count of sigma_{m,n,r}; the paper gives mn - r^2."""
    _, _, sigma = source_target_layout(config)
    return inversions(sigma)
