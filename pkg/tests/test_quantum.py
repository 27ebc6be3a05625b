import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shadowsum.errors import ColorOutOfRange
from shadowsum.quantum import (
    SIXJ_SYMMETRIES,
    Level,
    quantum_int,
    sixj,
    triple_admissible,
    u_exponent,
    v_dim,
)

F = Fraction
HALF = F(1, 2)


def admissible_oracle(k, ti, tj, tk):
    """Fusion-range membership, written independently of the packaged check."""
    if (ti + tj) % 2 != tk % 2:
        return False
    return tk in range(abs(ti - tj), min(ti + tj, 2 * k - ti - tj) + 1, 2)


class TestWeights:
    def test_u_of_zero_vanishes(self):
        for k in range(1, 7):
            assert u_exponent(Level(k), 0) == 0

    def test_u_half_at_level_one(self):
        # pi*i*(1/2 - (1/2)(3/2)/3) = pi*i/4
        assert u_exponent(Level(1), HALF) == pytest.approx(complex(0, math.pi / 4))

    def test_exp_2u_unit_modulus(self):
        for k in range(1, 7):
            lev = Level(k)
            for j in lev.colors:
                import cmath
                assert abs(cmath.exp(2 * u_exponent(lev, j))) == pytest.approx(1.0)

    def test_v_of_zero(self):
        for k in range(1, 7):
            assert v_dim(Level(k), 0) == pytest.approx(1.0)

    def test_v_half_at_level_one(self):
        # sin(2pi/3) = sin(pi/3), so the signed dimension is exactly -1
        assert v_dim(Level(1), HALF) == pytest.approx(-1.0, abs=1e-12)

    def test_v_mirror_symmetry(self):
        for k in range(1, 9):
            lev = Level(k)
            for t in range(k + 1):
                a = abs(v_dim(lev, F(t, 2)))
                b = abs(v_dim(lev, F(k - t, 2)))
                assert a == pytest.approx(b, abs=1e-12)

    def test_color_range_checked(self):
        with pytest.raises(ColorOutOfRange):
            v_dim(Level(1), 1)
        with pytest.raises(ColorOutOfRange):
            u_exponent(Level(2), F(1, 3))

    def test_level_must_be_positive(self):
        with pytest.raises(ValueError):
            Level(0)


class TestAdmissibility:
    def test_examples(self):
        lev = Level(1)
        assert triple_admissible(lev, HALF, 0, HALF)
        assert not triple_admissible(lev, HALF, HALF, HALF)
        for k in range(1, 9):
            assert triple_admissible(Level(k), 0, 0, 0)

    def test_matches_independent_filter(self):
        for k in range(1, 9):
            lev = Level(k)
            for ti, tj, tk in itertools.product(range(k + 1), repeat=3):
                mine = triple_admissible(lev, F(ti, 2), F(tj, 2), F(tk, 2))
                assert mine == admissible_oracle(k, ti, tj, tk)

    @given(st.integers(1, 8), st.data())
    def test_fully_symmetric(self, k, data):
        ts = [data.draw(st.integers(0, k)) for _ in range(3)]
        lev = Level(k)
        vals = {
            triple_admissible(lev, *(F(t, 2) for t in perm))
            for perm in itertools.permutations(ts)
        }
        assert len(vals) == 1


def _spins(ts):
    return [F(t, 2) for t in ts]


class TestSixJ:
    def test_inadmissible_is_zero(self):
        lev = Level(2)
        assert sixj(lev, HALF, HALF, HALF, 0, 0, 0) == 0.0

    def test_column_swap(self):
        lev = Level(4)
        rng = random.Random(3)
        seen = 0
        while seen < 25:
            ts = [rng.randint(0, 4) for _ in range(6)]
            a = sixj(lev, *_spins(ts))
            if a == 0.0:
                continue
            seen += 1
            i, j, k, l, m, n = ts
            b = sixj(lev, *_spins((j, i, k, m, l, n)))
            assert a == pytest.approx(b, abs=1e-13)

    def test_tetrahedral_symmetries_sample(self):
        lev = Level(3)
        for ts in itertools.product(range(4), repeat=6):
            a = sixj(lev, *_spins(ts))
            if a == 0.0:
                continue
            for sym in SIXJ_SYMMETRIES(*ts):
                assert sixj(lev, *_spins(sym)) == pytest.approx(a, abs=1e-12)

    def test_zero_color_reduction(self):
        # {a b c; 0 c b} = (-1)^(a+b+c) / sqrt([2b+1][2c+1])
        for k in (2, 3, 4):
            lev = Level(k)
            for ta, tb, tc in itertools.product(range(k + 1), repeat=3):
                val = sixj(lev, *_spins((ta, tb, tc)), 0, *_spins((tc, tb)))
                if not admissible_oracle(k, ta, tb, tc):
                    assert val == 0.0
                    continue
                sign = -1.0 if ((ta + tb + tc) // 2) % 2 else 1.0
                expect = sign / math.sqrt(quantum_int(lev, tb + 1) * quantum_int(lev, tc + 1))
                assert val == pytest.approx(expect, abs=1e-12)

    def test_orthogonality(self):
        # sum_x [2x+1] {a b x; c d p} {a b x; c d q} = delta_pq / [2p+1]
        for k in (2, 3, 4):
            lev = Level(k)
            rng = random.Random(k)
            for _ in range(80):
                ta, tb, tc, td, tp, tq = (rng.randint(0, k) for _ in range(6))
                total = 0.0
                for tx in range(k + 1):
                    total += quantum_int(lev, tx + 1) * sixj(
                        lev, *_spins((ta, tb, tx, tc, td, tp))
                    ) * sixj(lev, *_spins((ta, tb, tx, tc, td, tq)))
                if (
                    tp == tq
                    and admissible_oracle(k, ta, td, tp)
                    and admissible_oracle(k, tc, tb, tp)
                ):
                    assert total == pytest.approx(1.0 / quantum_int(lev, tp + 1), abs=1e-12)
                else:
                    assert total == pytest.approx(0.0, abs=1e-12)

    def test_classical_limit_against_sympy(self):
        wigner = pytest.importorskip("sympy.physics.wigner")
        lev = Level(10**7 - 2)
        rng = random.Random(0)
        for _ in range(15):
            ts = [rng.randint(0, 4) for _ in range(6)]
            mine = sixj(lev, *_spins(ts))
            try:
                ref = float(wigner.wigner_6j(*(F(t, 2) for t in ts)))
            except ValueError:
                ref = 0.0
            assert mine == pytest.approx(ref, abs=1e-9)


def pentagon_residual(lev, ts):
    """Both sides of the recoupling pentagon for doubled spins
    (a, b, c, d, e, f, p, q, r)."""
    ta, tb, tc, td, te, tf, tp, tq, tr = ts
    lhs = 0.0
    for tx in range(lev.k + 1):
        t1 = sixj(lev, *_spins((ta, tb, tx, tc, td, tp)))
        if t1 == 0.0:
            continue
        t2 = sixj(lev, *_spins((tc, td, tx, te, tf, tq)))
        if t2 == 0.0:
            continue
        t3 = sixj(lev, *_spins((te, tf, tx, tb, ta, tr)))
        if t3 == 0.0:
            continue
        tphi = ta + tb + tc + td + te + tf + tp + tq + tr + tx
        sign = -1.0 if (tphi // 2) % 2 else 1.0
        lhs += sign * quantum_int(lev, tx + 1) * t1 * t2 * t3
    rhs = sixj(lev, *_spins((tp, tq, tr, te, ta, td))) * sixj(
        lev, *_spins((tp, tq, tr, tf, tb, tc)))
    return lhs, rhs


def random_pentagon_tuple(rng, k):
    """Doubled 9-tuple whose right-hand-side triads are all admissible."""
    for _ in range(400):
        ta, td, tb, tf = (rng.randint(0, k) for _ in range(4))
        tp = rng.choice(range(abs(ta - td), min(ta + td, 2 * k - ta - td) + 1, 2) or [None])
        if tp is None:
            continue
        tq = rng.randint(0, k)
        rs = range(abs(tp - tq), min(tp + tq, 2 * k - tp - tq) + 1, 2)
        if not rs:
            continue
        tr = rng.choice(list(rs))
        te_opts = [te for te in range(k + 1)
                   if admissible_oracle(k, te, tq, td) and admissible_oracle(k, te, ta, tr)]
        tc_opts = [tc for tc in range(k + 1)
                   if admissible_oracle(k, tp, tb, tc) and admissible_oracle(k, tf, tq, tc)]
        if not te_opts or not tc_opts:
            continue
        te = rng.choice(te_opts)
        tc = rng.choice(tc_opts)
        if not admissible_oracle(k, tf, tb, tr):
            continue
        return (ta, tb, tc, td, te, tf, tp, tq, tr)
    raise AssertionError("could not build a pentagon tuple")


def test_pentagon_smoke():
    rng = random.Random(11)
    for k in (2, 4, 6):
        lev = Level(k)
        for _ in range(40):
            ts = random_pentagon_tuple(rng, k)
            lhs, rhs = pentagon_residual(lev, ts)
            assert lhs == pytest.approx(rhs, abs=1e-11)
