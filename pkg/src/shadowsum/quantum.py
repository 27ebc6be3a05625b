"""SU(2) level-k quantum data at q = exp(2*pi*i/rbar), rbar = k + 2.

Colors are half-integer spins stored as doubled integers (2j), which keeps
all admissibility arithmetic exact.  Public entry points accept spins as
int, float, or Fraction with 2j integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ColorOutOfRange

__all__ = [
    "Level",
    "doubled",
    "quantum_int",
    "u_exponent",
    "v_dim",
    "triple_admissible",
    "sixj",
    "SIXJ_SYMMETRIES",
]


def doubled(j) -> int:
    """Return 2j as an exact integer; reject non-half-integer input."""
    t = Fraction(j) * 2
    if t.denominator != 1:
        raise ColorOutOfRange(f"color {j!r} is not a half-integer")
    return int(t)


@dataclass(frozen=True)
class Level:
    """Level k with rbar = k + 2 and color set {0, 1/2, ..., k/2}."""

    k: int
    _sixj_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"level k must be a positive integer, got {self.k!r}")

    @property
    def rbar(self) -> int:
        return self.k + 2

    @property
    def colors(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(t, 2) for t in range(self.k + 1))

    @property
    def doubled_colors(self) -> range:
        return range(self.k + 1)

    def check_color(self, j) -> int:
        t = doubled(j)
        if not 0 <= t <= self.k:
            raise ColorOutOfRange(f"color {j!r} outside color set of level {self.k}")
        return t


def quantum_int(level: Level, n: int) -> float:
    """Quantum integer [n] = sin(n*pi/rbar)/sin(pi/rbar)."""
    r = level.rbar
    return math.sin(n * math.pi / r) / math.sin(math.pi / r)


def u_exponent(level: Level, j) -> complex:
    """Exponential weight of color j: pi*i*(j - j(j+1)/rbar), purely imaginary."""
    t = level.check_color(j)
    val = Fraction(t, 2) - Fraction(t * (t + 2), 4 * level.rbar)
    return complex(0.0, math.pi * float(val))


def v_dim(level: Level, j) -> float:
    """Signed quantum dimension of color j: (-1)^{2j} [2j+1]."""
    t = level.check_color(j)
    sign = -1.0 if t % 2 else 1.0
    return sign * quantum_int(level, t + 1)


def _triple_ok(tk_max: int, ta: int, tb: int, tc: int) -> bool:
    return (
        (ta + tb + tc) % 2 == 0
        and ta + tb + tc <= 2 * tk_max
        and abs(ta - tb) <= tc <= ta + tb
    )


def triple_admissible(level: Level, i, j, k) -> bool:
    """True iff (i, j, k) couples at this level: integral total spin, the
    three triangle inequalities, and i + j + k <= rbar - 2."""
    ti, tj, tk = level.check_color(i), level.check_color(j), level.check_color(k)
    return _triple_ok(level.k, ti, tj, tk)


def _qfactorials(level: Level) -> list[float]:
    """[n]! for n = 0 .. rbar-1 ([rbar-1]! is the last nonzero value)."""
    r = level.rbar
    out = [1.0]
    for n in range(1, r):
        out.append(out[-1] * quantum_int(level, n))
    return out


def _sixj_doubled(level: Level, t1: int, t2: int, t3: int, t4: int, t5: int, t6: int) -> float:
    triads = (
        (t1, t2, t3),
        (t1, t5, t6),
        (t4, t2, t6),
        (t4, t5, t3),
    )
    km = level.k
    for ta, tb, tc in triads:
        if not _triple_ok(km, ta, tb, tc):
            return 0.0

    qf = _qfactorials(level)

    def fact(t: int) -> float:
        # t is a doubled even quantity here; argument of [.]! is t//2
        return qf[t // 2]

    delta = 1.0
    for ta, tb, tc in triads:
        delta *= math.sqrt(
            fact(-ta + tb + tc) * fact(ta - tb + tc) * fact(ta + tb - tc)
            / fact(ta + tb + tc + 2)
        )

    tT = [ta + tb + tc for ta, tb, tc in triads]
    tQ = (t1 + t2 + t4 + t5, t2 + t3 + t5 + t6, t3 + t1 + t6 + t4)
    # z beyond rbar-2 only adds terms with a vanishing [z+1]! numerator
    z_lo = max(tT) // 2
    z_hi = min(min(tQ) // 2, level.rbar - 2)
    total = 0.0
    for z in range(z_lo, z_hi + 1):
        term = qf[z + 1]
        for tt in tT:
            term /= qf[z - tt // 2]
        for tq in tQ:
            term /= qf[tq // 2 - z]
        total += -term if z % 2 else term
    return delta * total


def sixj(level: Level, i, j, k, l, m, n) -> float:
    """Quantum 6j-symbol of the tuple arranged as

        { i  j  k }
        { l  m  n }

    in the symmetric (tetrahedral) normalization with quantum integers
    [n] = sin(n*pi/rbar)/sin(pi/rbar).  The coupled triads are
    (i,j,k), (i,m,n), (l,j,n), (l,m,k); the value is 0 whenever any of
    them is inadmissible at this level.
    """
    ts = (
        level.check_color(i), level.check_color(j), level.check_color(k),
        level.check_color(l), level.check_color(m), level.check_color(n),
    )
    # memo writes are idempotent and a dict store is atomic under the GIL,
    # so concurrent readers never observe a partial value
    cached = level._sixj_cache.get(ts)
    if cached is None:
        cached = _sixj_doubled(level, *ts)
        level._sixj_cache[ts] = cached
    return cached


def _column_perms(cols):
    (a, d), (b, e), (c, f) = cols
    yield (a, b, c, d, e, f)
    yield (a, c, b, d, f, e)
    yield (b, a, c, e, d, f)
    yield (b, c, a, e, f, d)
    yield (c, a, b, f, d, e)
    yield (c, b, a, f, e, d)


def SIXJ_SYMMETRIES(i, j, k, l, m, n):
    """The 24 classical tetrahedral symmetries of a 6j tuple: column
    permutations composed with upper/lower swaps in two columns at once."""
    cols = ((i, l), (j, m), (k, n))
    flips = ((False, False, False), (True, True, False), (True, False, True), (False, True, True))
    out = []
    for fa, fb, fc in flips:
        c0 = (cols[0][::-1] if fa else cols[0],
              cols[1][::-1] if fb else cols[1],
              cols[2][::-1] if fc else cols[2])
        out.extend(_column_perms(c0))
    return out
