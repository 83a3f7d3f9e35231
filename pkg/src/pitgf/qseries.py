"""Exact truncated Laurent series in q over arbitrary-precision integers.

The universal value type is :class:`QSeries`: a contiguous window of integer
coefficients starting at a (possibly negative) lowest exponent, together with
a truncation order.  A series with ``order=N`` is exact modulo q^(N+1);
``order=None`` means the series is an exact Laurent polynomial, known at every
exponent.

Truncation bookkeeping is sound for Laurent windows: the product of a series
exact up to q^Na with one exact up to q^Nb is trusted only up to
min(Na + low_b, Nb + low_a), which reduces to the familiar min(Na, Nb) when
both factors have nonnegative valuation.  Reading a coefficient above the
recorded order raises instead of returning garbage.
"""

from __future__ import annotations

import math

INFINITY = math.inf


class QSeries:
    """Immutable truncated Laurent series with integer coefficients."""

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, low=0, coeffs=(), order=None):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError("QSeries coefficients must be ints, got %r" % (c,))
        if order is not None:
            # drop anything above the trusted window
            keep = order - low + 1
            coeffs = coeffs[:max(keep, 0)]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            low += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            low = 0
        if order is not None and coeffs and low + len(coeffs) - 1 > order:
            raise AssertionError("coefficient window exceeds order")
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order=None):
        return QSeries(0, (), order)

    @staticmethod
    def one(order=None):
        return monomial(1, 0, order)

    @staticmethod
    def from_dict(d, order=None):
        """Build a series from an exponent -> coefficient mapping."""
        if not d:
            return QSeries.zero(order)
        lo, hi = min(d), max(d)
        return QSeries(lo, [d.get(e, 0) for e in range(lo, hi + 1)], order)

    # -- basic accessors ---------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def _low_eff(self):
        # valuation used for truncation bookkeeping; 0 for the zero series
        return self.low if self.coeffs else 0

    def coefficient(self, k):
        """Coefficient of q^k.  Raises if k lies above the trusted window."""
        if self.order is not None and k > self.order:
            raise ValueError(
                "coefficient of q^%d requested but series is only exact "
                "through q^%d" % (k, self.order)
            )
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coefficients(self, lo, hi):
        """List of coefficients of q^lo .. q^hi inclusive."""
        return [self.coefficient(k) for k in range(lo, hi + 1)]

    def truncate(self, order):
        """Restrict the trusted window to q^order (never widens it)."""
        if self.order is not None:
            order = min(order, self.order)
        return QSeries(self.low, self.coeffs, order)

    def with_order(self, order):
        """Re-tag the trusted window.  Internal: callers must justify widening."""
        return QSeries(self.low, self.coeffs, order)

    def shift(self, e):
        """Multiply by q^e."""
        order = None if self.order is None else self.order + e
        return QSeries(self.low + e, self.coeffs, order)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, QSeries):
            return x
        if isinstance(x, int):
            return QSeries(0, (x,), None)
        return None

    def __add__(self, other):
        other = QSeries._coerce(other)
        if other is None:
            return NotImplemented
        order = _min_order(self.order, other.order)
        if self.is_zero and other.is_zero:
            return QSeries.zero(order)
        lo = min([s.low for s in (self, other) if s.coeffs])
        hi = max([s.low + len(s.coeffs) - 1 for s in (self, other) if s.coeffs])
        out = [0] * (hi - lo + 1)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                out[s.low + i - lo] += c
        return QSeries(lo, out, order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.low, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = QSeries._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = QSeries._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = QSeries._coerce(other)
        if other is None:
            return NotImplemented
        cand = []
        if self.order is not None:
            cand.append(self.order + other._low_eff)
        if other.order is not None:
            cand.append(other.order + self._low_eff)
        order = min(cand) if cand else None
        if self.is_zero or other.is_zero:
            return QSeries.zero(order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QSeries(self.low + other.low, out, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QSeries powers must be nonnegative integers")
        result = QSeries.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = QSeries._coerce(other)
        if other is None:
            return NotImplemented
        w = _min_order(self.order, other.order)
        if w is None:
            return self.low == other.low and self.coeffs == other.coeffs
        a, b = self.truncate(w), other.truncate(w)
        return a.low == b.low and a.coeffs == b.coeffs

    __hash__ = None

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        if self.is_zero:
            body = "0"
        else:
            terms = []
            for i, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                e = self.low + i
                mag = abs(c)
                if e == 0:
                    t = str(mag)
                elif mag == 1:
                    t = "q" if e == 1 else "q^%d" % e
                else:
                    t = "%d*q^%d" % (mag, e) if e != 1 else "%d*q" % mag
                if not terms:
                    terms.append(t if c > 0 else "-" + t)
                else:
                    terms.append(("+ " if c > 0 else "- ") + t)
            body = " ".join(terms)
        tail = "" if self.order is None else " + O(q^%d)" % (self.order + 1)
        return "QSeries(%s%s)" % (body, tail)


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def monomial(sign, exponent, order=None):
    """sign * q^exponent, truncated at order (zero if exponent > order)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if order is not None and exponent > order:
        return QSeries.zero(order)
    return QSeries(exponent, (sign,), order)


def invert(a, order=None):
    """Multiplicative inverse of a series whose lowest coefficient is +-1.

    A leading monomial q^s is factored out first, so Laurent units invert
    fine.  The result is trusted through a.order - 2*a.low (the deeper tail
    of a cannot determine more), or through the requested order for exact
    inputs.
    """
    if a.is_zero:
        raise ValueError("cannot invert the zero series")
    lead = a.coeffs[0]
    if lead not in (1, -1):
        raise ValueError(
            "series is not invertible over the integers: leading coefficient "
            "%d is not a unit" % lead
        )
    s = a.low
    avail = None if a.order is None else a.order - s  # relative window of a/q^s
    if order is None:
        if avail is None:
            raise ValueError("order is required to invert an exact polynomial")
        rel = avail
    else:
        rel = order + s
        if avail is not None:
            rel = min(rel, avail)
    if rel < 0:
        raise ValueError("requested order is below the invertible window")
    u = [0] * (rel + 1)
    for i, c in enumerate(a.coeffs):
        if i <= rel:
            u[i] = c
    v = [0] * (rel + 1)
    v[0] = lead
    for k in range(1, rel + 1):
        acc = 0
        for j in range(1, k + 1):
            if u[j]:
                acc += u[j] * v[k - j]
        v[k] = -lead * acc
    return QSeries(-s, v, rel - s)


def pochhammer(k, order=None):
    """Finite q-Pochhammer (q)_k = prod_{s=1}^{k} (1 - q^s); k may be INFINITY.

    For k = INFINITY only factors with s <= order matter, so a finite order
    is required there.
    """
    if k is INFINITY or k == INFINITY:
        if order is None:
            raise ValueError("(q)_oo requires a truncation order")
        k = order
    elif not isinstance(k, int) or k < 0:
        raise ValueError("Pochhammer index must be a nonnegative integer or INFINITY")
    result = QSeries.one(order)
    for s in range(1, k + 1):
        result = result * QSeries(0, [1] + [0] * (s - 1) + [-1], order)
    return result


def qbinom(a, b, order=None):
    """Gaussian binomial coefficient [a choose b]_q as an exact polynomial."""
    if not (isinstance(a, int) and isinstance(b, int)) or a < b or b < 0:
        raise ValueError("qbinom requires integers a >= b >= 0")
    # Pascal recurrence [a,b] = [a-1,b-1] + q^b [a-1,b] on raw coefficient lists
    row = [[1]]  # row for a'=0: only b'=0
    for ap in range(1, a + 1):
        new = []
        for bp in range(0, min(ap, b) + 1):
            if bp == 0 or bp == ap:
                new.append([1])
                continue
            left = row[bp - 1]
            right = row[bp] if bp < len(row) else []
            width = max(len(left), bp + len(right))
            acc = [0] * width
            for i, c in enumerate(left):
                acc[i] += c
            for i, c in enumerate(right):
                acc[bp + i] += c
            new.append(acc)
        row = new
    return QSeries(0, row[b], order)


def det(matrix, cap=10):
    """Exact determinant of a square grid of QSeries by cofactor expansion.

    Sizes are capped (default 10) because the expansion is factorial; the
    matrices arising here are at most m+n-r across, which is small.
    """
    k = len(matrix)
    for row in matrix:
        if len(row) != k:
            raise ValueError("determinant requires a square matrix")
    if k > cap:
        raise ValueError("matrix size %d exceeds cap %d" % (k, cap))
    if k == 0:
        return QSeries.one()
    memo = {}

    def minor(r, cols):
        if r == k:
            return QSeries.one()
        key = cols
        got = memo.get(key)
        if got is not None:
            return got
        acc = QSeries.zero()
        sign = 1
        for idx, c in enumerate(cols):
            entry = matrix[r][c]
            # exact zeros contribute nothing; truncated zeros still carry
            # their window into the bookkeeping
            if not (entry.is_zero and entry.order is None):
                sub = minor(r + 1, cols[:idx] + cols[idx + 1:])
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, tuple(range(k)))
