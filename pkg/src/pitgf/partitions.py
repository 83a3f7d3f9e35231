"""Partitions, pit configurations, and the derived boundary data.

Docstrings use the 1-based indexing of the mathematical conventions
(``part(i)`` is the i-th part, i >= 1, zero beyond the length); internal
storage is 0-based tuples.  Trailing zeros are accepted on input and stripped.

Also houses the particle/hole machinery: a partition corresponds to the
strictly decreasing set of "particle" slots part(i) - i (+ optional shift),
and adding a ribbon (border strip) is exactly one particle jumping to a
higher free slot.  Both the ribbon utilities here and the Brion vertex sums
are built on those jumps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class Partition:
    """Weakly decreasing finite sequence of nonnegative integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts._parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be nonnegative: %r" % (parts,))
        object.__setattr__(self, "_parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @staticmethod
    def from_text(text):
        """Parse comma-separated decreasing integers; empty string is empty."""
        toks = [tok.strip() for tok in text.split(",")]
        return Partition(tuple(int(tok) for tok in toks if tok))

    @property
    def parts(self):
        return self._parts

    def part(self, i):
        """i-th part, 1-based; 0 for i beyond the length."""
        if i < 1:
            raise IndexError("parts are indexed from 1")
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def __len__(self):
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self == Partition(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._parts)

    def __bool__(self):
        return bool(self._parts)

    def __repr__(self):
        return "Partition(%r)" % (self._parts,)

    def __str__(self):
        return ",".join(str(p) for p in self._parts)

    def size(self):
        return sum(self._parts)

    def conjugate(self):
        """Transpose of the Young diagram: part'_j = #{i : part_i >= j}."""
        if not self._parts:
            return Partition(())
        cols = [0] * self._parts[0]
        for p in self._parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, inner):
        """True if the diagram of inner fits inside this one."""
        inner = Partition(inner)
        return all(self.part(i) >= inner.part(i) for i in range(1, len(inner) + 1))


class InvalidPitConfig(ValueError):
    """One of the admissibility constraints fails; names the offending index."""

    def __init__(self, reason, index, message):
        super().__init__(message)
        self.reason = reason
        self.index = index


@dataclass(frozen=True)
class PitConfig:
    """Pit position (n+1, m+1) together with the boundary partitions.

    Admissibility: l(nu) <= n, l(mu) <= m, and lam_{n+1} <= m.
    """

    n: int
    m: int
    nu: Partition
    mu: Partition
    lam: Partition

    def __init__(self, n, m, nu=(), mu=(), lam=()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "nu", Partition(nu))
        object.__setattr__(self, "mu", Partition(mu))
        object.__setattr__(self, "lam", Partition(lam))

    def validate(self):
        """Check the three admissibility constraints; returns self."""
        if self.n < 0 or self.m < 0:
            raise InvalidPitConfig("negative_size", 0, "n and m must be >= 0")
        if len(self.nu) > self.n:
            raise InvalidPitConfig(
                "nu_too_long", len(self.nu),
                "nu has %d parts but l(nu) <= n = %d is required"
                % (len(self.nu), self.n))
        if len(self.mu) > self.m:
            raise InvalidPitConfig(
                "mu_too_long", len(self.mu),
                "mu has %d parts but l(mu) <= m = %d is required"
                % (len(self.mu), self.m))
        if self.lam.part(self.n + 1) > self.m:
            raise InvalidPitConfig(
                "lam_too_deep", self.n + 1,
                "lam_%d = %d exceeds m = %d"
                % (self.n + 1, self.lam.part(self.n + 1), self.m))
        return self

    def __str__(self):
        return "n=%d m=%d nu=(%s) mu=(%s) lam=(%s)" % (
            self.n, self.m, self.nu, self.mu, self.lam)


@dataclass(frozen=True)
class FrobeniusData:
    """Derived quantities of a pit configuration.

    r is the atypicality min{t : lam_{n-t} >= m-t}; pi and kappa are the
    row/column remainders of lam after removing the r-hook core; N, M, P, Q
    are the rho-shifted strictly decreasing vectors; delta is the grading
    normalization sum(M_j Q_j) + sum(N_i (P_i + 1)).
    """

    r: int
    pi: Partition
    kappa: Partition
    N: tuple
    M: tuple
    P: tuple
    Q: tuple
    delta: int
    n: int
    m: int
    lam: Partition

    def L(self, i):
        """Total function lam_i - i + n - m + 1, defined for every i >= 1."""
        return self.lam.part(i) - i + self.n - self.m + 1


def atypicality(n, m, lam):
    """r = min{t : lam_{n-t} >= m-t}, with lam_0 treated as infinite."""
    lam = Partition(lam)
    for t in range(min(n, m) + 1):
        if n - t == 0 or lam.part(n - t) >= m - t:
            return t
    raise AssertionError("atypicality search fell through")  # unreachable


def atypicality_staircase(n, m, lam):
    """r recomputed as the number of horizontal steps of the staircase from (n, m).

    The staircase bends around the diagonal cells (n-t, m-t); it takes a
    horizontal step at offset t exactly while the cell lies outside lam.
    """
    lam = Partition(lam)
    steps = 0
    for t in range(min(n, m)):
        if lam.part(n - t) >= m - t:
            break
        steps += 1
    return steps


def frobenius_data(config):
    """All derived data of a valid PitConfig, computed once."""
    config.validate()
    n, m, lam = config.n, config.m, config.lam
    r = atypicality(n, m, lam)
    assert r == atypicality_staircase(n, m, lam)
    lamc = lam.conjugate()
    pi = Partition([lam.part(i) - (m - r) for i in range(1, n - r + 1)])
    kappa = Partition([lamc.part(j) - (n - r) for j in range(1, m - r + 1)])
    N = tuple(config.nu.part(i) + n - i for i in range(1, n + 1))
    M = tuple(config.mu.part(j) + m - j for j in range(1, m + 1))
    P = tuple(pi.part(i) + (n - r) - i for i in range(1, n - r + 1))
    Q = tuple(kappa.part(j) + (m - r) - j for j in range(1, m - r + 1))
    delta = sum(M[j] * Q[j] for j in range(m - r)) + \
        sum(N[i] * (P[i] + 1) for i in range(n - r))
    return FrobeniusData(r, pi, kappa, N, M, P, Q, delta, n, m, lam)


def particles(p, shift=0):
    """Infinite decreasing generator part(i) - i + shift, i = 1, 2, ...

    The complementary holes are {-(p'_j - j) - 1 + shift}.
    """
    p = Partition(p)
    i = 1
    while True:
        yield p.part(i) - i + shift
        i += 1


def particle_slots(p, shift, count):
    """First `count` particle slots as a tuple."""
    gen = particles(p, shift)
    return tuple(next(gen) for _ in range(count))


def perm_sign(perm):
    """Sign of a permutation given as a 0-based tuple of images."""
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


def inversions(perm):
    return sum(1 for i in range(len(perm))
               for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def a_shifted(exponents, args, order=None):
    """det(q^{args_i * exponents_j}) — the specialization a_{.}(q^{args}).

    `exponents` are already rho-shifted (N, M, ...); `args` are the integer
    exponent vectors such as (A, -P-1).  Repeated exponents or args make the
    determinant the zero series, which is the signal, not an error.
    """
    from . import qseries
    exponents = tuple(exponents)
    args = tuple(args)
    if len(exponents) != len(args):
        raise ValueError("exponents and args must have equal length")
    k = len(args)
    if k == 0:
        return qseries.QSeries.one(order)
    matrix = [[qseries.monomial(1, args[i] * exponents[j], order)
               for j in range(k)] for i in range(k)]
    return qseries.det(matrix)


# -- skew shapes and ribbons ------------------------------------------------

def skew_boxes(outer, inner):
    """Boxes of outer - inner as a set of 1-based (row, col) pairs."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError("inner partition does not fit inside outer")
    return {(i, j)
            for i in range(1, len(outer) + 1)
            for j in range(inner.part(i) + 1, outer.part(i) + 1)}


def _connected(boxes):
    if not boxes:
        return False
    boxes = set(boxes)
    seen = set()
    stack = [next(iter(boxes))]
    while stack:
        b = stack.pop()
        if b in seen:
            continue
        seen.add(b)
        i, j = b
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in boxes and nb not in seen:
                stack.append(nb)
    return seen == boxes


def _has_square(boxes):
    boxes = set(boxes)
    return any((i, j) in boxes and (i + 1, j) in boxes and
               (i, j + 1) in boxes and (i + 1, j + 1) in boxes
               for (i, j) in boxes)


def is_ribbon(outer, inner):
    """True iff outer - inner is edge-connected with no 2x2 block."""
    boxes = skew_boxes(outer, inner)
    return _connected(boxes) and not _has_square(boxes)


def is_ribbon_by_jump(outer, inner):
    """Ribbon test in particle coordinates: exactly one particle moved right."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError("inner partition does not fit inside outer")
    count = max(len(outer), len(inner)) + 1
    a = set(particle_slots(outer, 0, count))
    b = set(particle_slots(inner, 0, count))
    gained, lost = a - b, b - a
    if len(gained) != 1 or len(lost) != 1:
        return False
    return next(iter(gained)) > next(iter(lost))


def add_ribbon_by_jump(parts, src, dst, shift=0):
    """Move the particle at slot src to the free slot dst > src.

    Returns (new_parts, boxes) where boxes is the frozenset of 1-based cells
    of the added ribbon.  Raises ValueError when the jump is not legal.
    """
    parts = tuple(Partition(parts).parts)
    if dst <= src:
        raise ValueError("jumps go to strictly higher slots")
    count = max(len(parts) + 1, shift - src + 1, shift - dst + 1, 1) + 1
    slots = [parts[i] - (i + 1) + shift if i < len(parts) else -(i + 1) + shift
             for i in range(count)]
    if src not in slots:
        raise ValueError("slot %d is not occupied" % src)
    if dst in slots:
        raise ValueError("slot %d is already occupied" % dst)
    new_slots = sorted((set(slots) - {src}) | {dst}, reverse=True)
    new_parts = tuple(new_slots[i] + (i + 1) - shift for i in range(count))
    boxes = set()
    for i in range(count):
        old = parts[i] if i < len(parts) else 0
        for c in range(old + 1, new_parts[i] + 1):
            boxes.add((i + 1, c))
    while new_parts and new_parts[-1] == 0:
        new_parts = new_parts[:-1]
    if any(p < 0 for p in new_parts):
        raise AssertionError("jump produced a negative part")
    return new_parts, frozenset(boxes)


def ribbon_boxes_in_path_order(boxes):
    """Boxes of a ribbon ordered from the SW end to the NE end.

    A ribbon has exactly one box on each of a consecutive run of diagonals
    j - i, so sorting by content is the walk order.  Raises if the input is
    not a ribbon path.
    """
    ordered = sorted(boxes, key=lambda b: b[1] - b[0])
    contents = [j - i for (i, j) in ordered]
    if contents != list(range(contents[0], contents[0] + len(ordered))):
        raise ValueError("box set is not a ribbon (repeated or missing diagonal)")
    for (i1, j1), (i2, j2) in zip(ordered, ordered[1:]):
        if not ((i2 == i1 and j2 == j1 + 1) or (i2 == i1 - 1 and j2 == j1)):
            raise ValueError("box set is not a ribbon (broken path)")
    return ordered


def _removable_ribbons(outer, inner, end_box):
    """All border strips of `outer` containing end_box whose removal stays above inner."""
    outer, inner = Partition(outer), Partition(inner)
    count = len(outer) + 2
    slots = set(particle_slots(outer, 0, count))
    floor = -count
    results = []
    content = end_box[1] - end_box[0]
    for t in sorted(slots, reverse=True):
        if t < content:
            break
        for s in range(content - 1, floor - 1, -1):
            if s in slots or s >= t:
                continue
            beta_slots = sorted((slots - {t}) | {s}, reverse=True)
            beta = []
            for i, slot in enumerate(beta_slots):
                beta.append(slot + (i + 1))
            try:
                beta_p = Partition(beta)
            except ValueError:
                continue
            boxes = skew_boxes(outer, beta_p)
            if end_box not in boxes:
                continue
            if not beta_p.contains(inner):
                continue
            results.append((beta_p, frozenset(boxes)))
    return results


def ribbon_decompositions(outer, inner, k, end_boxes):
    """All decompositions of outer - inner into k disjoint ribbons.

    Each ribbon must contain its designated end box.  Returns a list of
    tuples of frozensets, aligned with the order of `end_boxes`.  Ribbons are
    peeled from the outer shape, always removing the designated end with the
    lowest diagonal content first (the removal order is forced for the
    shapes used here, so each decomposition appears exactly once).
    """
    outer, inner = Partition(outer), Partition(inner)
    end_boxes = list(end_boxes)
    if k != len(end_boxes):
        raise ValueError("k must equal the number of end boxes")
    sk = skew_boxes(outer, inner)
    if any(e not in sk for e in end_boxes):
        raise ValueError("every end box must lie in the skew shape")

    def rec(cur, remaining):
        if not remaining:
            return [dict()] if cur == inner else []
        e = min(remaining, key=lambda b: b[1] - b[0])
        rest = [b for b in remaining if b != e]
        out = []
        for beta, boxes in _removable_ribbons(cur, inner, e):
            if any(b in boxes for b in rest):
                continue
            for partial in rec(beta, rest):
                partial = dict(partial)
                partial[e] = boxes
                out.append(partial)
        return out

    return [tuple(d[e] for e in end_boxes) for d in rec(outer, inner, end_boxes)]


def partitions_in_box(rows, max_part):
    """All partitions with at most `rows` parts, each at most `max_part`."""
    if rows == 0 or max_part == 0:
        return [Partition(())]
    out = []

    def rec(prefix, remaining, cap):
        out.append(Partition(prefix))
        if remaining == 0:
            return
        for p in range(min(cap, max_part), 0, -1):
            rec(prefix + [p], remaining - 1, p)

    rec([], rows, max_part)
    seen = set()
    uniq = []
    for p in out:
        if p.parts not in seen:
            seen.add(p.parts)
            uniq.append(p)
    return uniq
