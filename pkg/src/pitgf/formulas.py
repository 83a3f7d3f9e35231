"""Closed-form generating functions of pit plane partitions.

Three equivalent formulas are implemented independently: the determinant of
the block matrix of single-path generating functions (chi_det), the bosonic
sum over strictly decreasing r-tuples A (chi_bos), and the fully explicit sum
over triples (sigma, tau, A) with the zero terms removed (chi_explicit).
Together with the wall case chi_wall and the V-partition series r_series they
cover every closed form in scope; the enumeration oracles certify them.

Every infinite sum is cut by an explicit lower bound on the minimal exponent
a term can contribute, quadratic in the largest A, so the loop exit is a
checked invariant rather than an act of faith.  `cutoff_bump` widens every
cutoff; re-running with a bump must never change a reported coefficient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import qseries
from .qseries import QSeries, INFINITY, invert, monomial, pochhammer
from .partitions import (Partition, PitConfig, a_shifted, frobenius_data,
                         perm_sign)


# -- sign conventions, one function per formula ------------------------------

def sign_det(m, n, r):
    """Global sign of the determinant formula: (-1)^(mn - r)."""
    return -1 if (m * n - r) & 1 else 1


def sign_bos(m, n, r, A):
    """Sign of a bosonic-sum term: (-1)^(r(m+n)) * (-1)^(sum A)."""
    return -1 if (r * (m + n) + sum(A)) & 1 else 1


def sign_explicit(m, n, r, sigma, tau, A):
    """Sign of an explicit-sum term: global (-1)^(r(m+n)) times
    (-1)^(|sigma| + |tau| + sum A)."""
    s = perm_sign(sigma) * perm_sign(tau)
    return s * (-1 if (r * (m + n) + sum(A)) & 1 else 1)


# -- helpers -----------------------------------------------------------------

def _inv_poch_power(power, order):
    """1/(q)_oo^power, exact through q^order."""
    base = invert(pochhammer(INFINITY, order))
    return base ** power


def _finish(numerator, power, order):
    """numerator / (q)_oo^power, trusted through q^order.

    The numerator must be trusted through q^order itself; its possibly
    negative valuation dictates how deep the inverse Pochhammer has to go.
    """
    if numerator.order is not None and numerator.order < order:
        raise AssertionError("numerator window %r is narrower than %d"
                             % (numerator.order, order))
    g_ord = order - min(numerator._low_eff, 0)
    result = numerator * _inv_poch_power(power, g_ord)
    if result.order is not None and result.order < order:
        raise AssertionError("truncation bookkeeping lost digits")
    return result.truncate(order)


def _perms(k):
    return itertools.permutations(range(k))


# -- the closed forms ---------------------------------------------------------

def r_series(d, order, cutoff_bump=0):
    """V-partition series R(d; q) = sum_i (-1)^i q^(i(i+1)/2 + d i) / (q)_oo^2.

    The summand exponent eventually increases by i+1+d per step, so the sum
    is cut once it exceeds the order while increasing.
    """
    terms = {}
    i = 0
    while True:
        e = i * (i + 1) // 2 + d * i
        if e > order + cutoff_bump and i >= -d:
            break
        if e <= order + cutoff_bump:
            terms[e] = terms.get(e, 0) + (1 if i % 2 == 0 else -1)
        i += 1
    numerator = QSeries.from_dict(terms, order)
    return _finish(numerator, 2, order)


def chi_wall(n, nu, lam, order):
    """Pit against the wall (m = 0):
    q^(sum (lam_i + n - i)(nu_i + n - i)) a_{nu+rho}(q^(-lam-rho)) / (q)_oo^n.
    """
    nu, lam = Partition(nu), Partition(lam)
    PitConfig(n, 0, nu=nu, lam=lam).validate()
    E = sum((lam.part(i) + n - i) * (nu.part(i) + n - i) for i in range(1, n + 1))
    N = [nu.part(j) + n - j for j in range(1, n + 1)]
    args = [-(lam.part(i) + n - i) for i in range(1, n + 1)]
    numerator = a_shifted(N, args).shift(E)
    return _finish(numerator, n, order)


def macmahon_staircase(n, order):
    """The staircase formula q^(-C(n,3)) V(1, q, ..., q^(n-1)) / (q)_oo^n."""
    V = QSeries.one()
    for i in range(n):
        for j in range(i + 1, n):
            V = V * (monomial(1, i) - monomial(1, j))
    c3 = n * (n - 1) * (n - 2) // 6
    return _finish(V.shift(-c3), n, order)


def plane_partition_gf(order):
    """MacMahon's prod_k (1 - q^k)^(-k), exact through q^order."""
    result = QSeries.one(order)
    for k in range(1, order + 1):
        inv_k = invert(QSeries(0, [1] + [0] * (k - 1) + [-1], order))
        result = result * inv_k ** k
    return result


def theorem1_matrix(config, entry_order):
    """The block matrix of the determinant formula, entries trusted to entry_order.

    Top-left m x n: sum_a (-1)^a q^(C(a+1,2) + (N_j - M_i) a); top-right
    m x (m-r): q^(-M_i Q_j); bottom-left (n-r) x n: q^(-N_j (P_i + 1));
    bottom-right: zero.
    """
    fd = frobenius_data(config)
    m, n, r = config.m, config.n, fd.r
    size = m + n - r
    matrix = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i < m and j < n:
                d = fd.N[j] - fd.M[i]
                terms = {}
                a = 0
                while True:
                    e = a * (a + 1) // 2 + d * a
                    if e > entry_order and a >= -d:
                        break
                    if e <= entry_order:
                        terms[e] = terms.get(e, 0) + (1 if a % 2 == 0 else -1)
                    a += 1
                matrix[i][j] = QSeries.from_dict(terms, entry_order)
            elif i < m:
                matrix[i][j] = monomial(1, -fd.M[i] * fd.Q[j - n])
            elif j < n:
                matrix[i][j] = monomial(1, -fd.N[j] * (fd.P[i - m] + 1))
            else:
                matrix[i][j] = QSeries.zero()
    return matrix


def chi_det(config, order):
    """Determinant formula:
    (-1)^(mn-r) q^delta det(block matrix) / (q)_oo^(m+n)."""
    config.validate()
    fd = frobenius_data(config)
    m, n, r = config.m, config.n, fd.r
    # entry window: deep enough that every permutation product stays trusted
    # past q^(order - delta) after the monomial lows are spent
    slack = fd.delta
    slack += sum(fd.M[i] * fd.Q[j] for i in range(m) for j in range(m - r))
    slack += sum(fd.N[j] * (fd.P[i] + 1) for i in range(n - r) for j in range(n))
    for i in range(m):
        for j in range(n):
            d = fd.N[j] - fd.M[i]
            if d < 0:
                slack += d * d // 2 + 1
    entry_order = order + slack + 4
    matrix = theorem1_matrix(config, entry_order)
    D = qseries.det(matrix)
    numerator = D.shift(fd.delta)
    if sign_det(m, n, r) < 0:
        numerator = -numerator
    return _finish(numerator, m + n, order)


def _a_cutoff(order, K, G, r, cutoff_bump):
    """Largest A_1 a bosonic term can carry and still reach <= order.

    f(a) = C(a+1,2) - aK lower-bounds the A-dependent exponent; G bounds the
    rest from below by -G.
    """
    if r == 0:
        return -1

    def f(a):
        return a * (a + 1) // 2 - a * K

    min_f = min(f(a) for a in range(0, K + 2))
    a = 0
    while f(a) + (r - 1) * min_f - G <= order or a <= K:
        a += 1
    return a + cutoff_bump


def chi_bos(config, order, cutoff_bump=0):
    """Bosonic formula: sum over A_1 > ... > A_r >= 0 of
    (-1)^(r(m+n)+sum A) q^(delta + sum C(A_i+1,2)) a_N(q^A, q^(-P-1))
    a_M(q^(-A), q^(-Q)) / (q)_oo^(m+n)."""
    config.validate()
    fd = frobenius_data(config)
    m, n, r = config.m, config.n, fd.r
    K = max(fd.M, default=0)
    G = sum((p + 1) * max(fd.N, default=0) for p in fd.P) + \
        sum(q * max(fd.M, default=0) for q in fd.Q)
    a_max = _a_cutoff(order - fd.delta, K, G, r, cutoff_bump)
    total = QSeries.zero()
    for A in itertools.combinations(range(a_max, -1, -1), r):
        e0 = fd.delta + sum(a * (a + 1) // 2 for a in A)
        aN = a_shifted(fd.N, list(A) + [-(p + 1) for p in fd.P])
        aM = a_shifted(fd.M, [-a for a in A] + [-q for q in fd.Q])
        term = aN * aM
        if term.is_zero:
            continue
        term = term.shift(e0)
        if sign_bos(m, n, r, A) < 0:
            term = -term
        total = total + term
    return _finish(total.with_order(order), m + n, order)


@dataclass(frozen=True)
class ThetaTerm:
    """One term of the explicit sum: permutations sigma, tau (0-based image
    tuples) and the strictly decreasing tuple A drawn from {-L_s : s > n-r}."""

    sigma: tuple
    tau: tuple
    A: tuple

    def exponent(self, fd):
        r = len(self.A)
        n, m = len(self.sigma), len(self.tau)
        e = 0
        for i in range(r):
            a = self.A[i]
            e += a * (a + 1) // 2 + a * (fd.N[self.sigma[i]] - fd.M[self.tau[i]])
        for i in range(r, n):
            e -= (fd.P[i - r] + 1) * (fd.N[self.sigma[i]] - fd.N[i - r])
        for i in range(r, m):
            e -= fd.Q[i - r] * (fd.M[self.tau[i]] - fd.M[i - r])
        return e


def theta_terms(config, order, cutoff_bump=0):
    """All (sigma, tau, A) triples whose exponent can reach <= order.

    A-values are drawn only from {-L_s : s > n-r}, never filtered post hoc
    from all integers; the terms dropped by the exponent filter cannot touch
    any coefficient at or below the order.
    """
    fd = frobenius_data(config)
    m, n, r = config.m, config.n, fd.r
    K = max(fd.M, default=0)
    G = sum((p + 1) * max(fd.N, default=0) for p in fd.P) + \
        sum(q * max(fd.M, default=0) for q in fd.Q)
    a_max = _a_cutoff(order, K, G, r, cutoff_bump)
    pool = []
    s = n - r + 1
    while True:
        v = -fd.L(s)
        if v > a_max:
            break
        pool.append(v)
        s += 1
    out = []
    for A in itertools.combinations(sorted(pool, reverse=True), r):
        for sigma in _perms(n):
            for tau in _perms(m):
                term = ThetaTerm(sigma, tau, A)
                if term.exponent(fd) <= order:
                    out.append(term)
    return out


def chi_explicit(config, order, cutoff_bump=0):
    """Explicit formula: the permutation expansion of the bosonic sum with
    the vanishing terms (A_i equal to some Q_j) never generated."""
    config.validate()
    fd = frobenius_data(config)
    m, n, r = config.m, config.n, fd.r
    coeffs = {}
    for term in theta_terms(config, order, cutoff_bump):
        e = term.exponent(fd)
        coeffs[e] = coeffs.get(e, 0) + sign_explicit(m, n, r, term.sigma,
                                                     term.tau, term.A)
    numerator = QSeries.from_dict(coeffs, order)
    return _finish(numerator, m + n, order)


METHODS = ("det", "bos", "explicit", "oracle", "wall")


def chi(config, order, method="det"):
    """Dispatch to one of the chi implementations by name."""
    config.validate()
    if method == "det":
        return chi_det(config, order)
    if method == "bos":
        return chi_bos(config, order)
    if method == "explicit":
        return chi_explicit(config, order)
    if method == "oracle":
        from . import oracle
        return oracle.enumerate_chi(config, order)
    if method == "wall":
        if config.m != 0:
            raise ValueError("the wall formula requires m = 0")
        return chi_wall(config.n, config.nu, config.lam, order)
    raise ValueError("unknown method %r" % (method,))
