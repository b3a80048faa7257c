import random
from fractions import Fraction as F
from itertools import product

import pytest

from quiver_o_kit import ChargeMatrix, Weighting, normalize, u_s_map, uglov, wall_forms
from quiver_o_kit.partitions import EnumerationCapExceeded, RibbonSpec
from quiver_o_kit.weights import sum_fundamental
from quiver_o_kit.weightings import (
    OnWall,
    TensorCase,
    act_on_charge_data,
    dual_wall_data,
    fixed_points,
    git_wall_test,
    hamiltonian_wall_test,
    reflect_root,
    weyl_act_on_matrix,
)


def random_matrix(rng, max_e=5, max_ell=5):
    e, ell = rng.randint(1, max_e), rng.randint(1, max_ell)
    return ChargeMatrix(tuple(tuple(rng.randint(-3, 3) for _ in range(e)) for _ in range(ell)), rng.randint(0, 2))


def sign_vector(wt, m_max):
    """Signs of theta_i - theta_j - kappa (r_i - r_j + m e) computed from scratch."""
    out = []
    for i in range(wt.ell):
        for j in range(wt.ell):
            if i == j:
                continue
            for m in range(-m_max, m_max + 1):
                v = wt.theta[i] - wt.theta[j] - wt.kappa * (wt.residues[i] - wt.residues[j] + m * wt.e)
                out.append((v > 0) - (v < 0))
    return out


# ---------------------------------------------------------------------------
# Uglov weightings and the u_s map

def test_uglov_two_by_two_example():
    wt = uglov((1, 0), 2)
    assert wt.kappa == 2 and wt.theta == (F(4), F(4))
    assert wt.is_generic()


def test_uglov_zero_charges_increasing():
    for e in (1, 2, 3):
        for ell in (1, 2, 4):
            wt = uglov((0,) * ell, e)
            assert wt.theta == tuple(F((i + 1) * e) for i in range(ell))


def test_u_s_of_uglov_is_e_times_sum_of_fundamentals():
    rng = random.Random(4)
    for _ in range(60):
        u = random_matrix(rng)
        assert u_s_map(uglov(u), u.s).coeffs == (F(u.e),) * u.ell


def test_u_s_when_theta_is_kappa_times_s():
    for ell in (1, 2, 3):
        s = tuple(range(ell))
        wt = Weighting(tuple(F(3) * x for x in s), F(3), 2, tuple(x % 2 for x in s))
        got = u_s_map(wt, s).coeffs
        assert got == tuple(F(6) if k == 1 % ell else F(0) for k in range(ell))


def test_u_s_equivariance():
    rng = random.Random(9)
    for _ in range(20):
        e, ell = rng.randint(1, 4), rng.randint(2, 4)
        s = [rng.randint(-4, 4) for _ in range(ell)]
        th = Weighting(tuple(F(rng.randint(-30, 30), rng.randint(1, 4)) for _ in range(ell)),
                       F(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 3)), e, tuple(x % e for x in s))
        for k in range(ell):
            s2, th2 = act_on_charge_data(k, s, th)
            assert u_s_map(th2, s2) == u_s_map(th, s).reflect((k + 1) % ell)


# ---------------------------------------------------------------------------
# normalize

def test_normalize_fixes_uglov_weightings():
    rng = random.Random(6)
    for _ in range(60):
        e, ell = rng.randint(1, 4), rng.randint(1, 4)
        s = tuple(rng.randint(-4, 4) for _ in range(ell))
        wt = uglov(s, e)
        for sign, inp in ((1, wt), (1, wt.scale(3)), (-1, wt.negate())):
            out = normalize(inp)
            assert out.sign == sign
            assert out.matrix.s == s
            assert out.permutation == tuple(range(ell))


def test_normalize_output_chamber_contains_input():
    rng = random.Random(8)
    done = 0
    while done < 100:
        th = Weighting(tuple(F(rng.randint(-60, 60), rng.randint(1, 7)) for _ in range(2)),
                       F(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 3)), 2, (rng.randrange(2), rng.randrange(2)))
        try:
            out = normalize(th)
        except OnWall:
            assert not th.is_generic() or any(x == 0 for x in sign_vector(th, th.m_bound()))
            continue
        done += 1
        assert sign_vector(th.permute(out.permutation), 4) == sign_vector(out.weighting(), 4)


def test_normalize_rejects_walls_and_tensor_case():
    with pytest.raises(OnWall):
        normalize(Weighting((F(1), F(1)), F(1), 2, (0, 0)))
    with pytest.raises(TensorCase):
        normalize(Weighting((F(1), F(2)), F(0), 2, (0, 0)))


# ---------------------------------------------------------------------------
# wall forms

def test_wall_form_equal_residues_m_zero():
    forms = wall_forms(3, 2, (1, 1), range(0, 1))
    f = next(f for f in forms if (f.i, f.j, f.m) == (0, 1, 0))
    assert f.evaluate((F(7), F(7)), F(5)) == 0
    assert f.evaluate((F(7), F(2)), F(5)) == 5


def test_wall_form_count():
    for ell in (1, 2, 3, 4):
        for m in (0, 1, 3):
            assert len(wall_forms(3, ell, (0,) * ell, range(-m, m + 1))) == ell * (ell - 1) * (2 * m + 1)


def test_uglov_is_off_every_wall_when_generic():
    rng = random.Random(12)
    for _ in range(50):
        e, ell = rng.randint(1, 4), rng.randint(1, 4)
        wt = uglov(tuple(rng.randint(-3, 3) for _ in range(ell)), e)
        if wt.is_generic():
            assert all(x != 0 for x in sign_vector(wt, 4))


# ---------------------------------------------------------------------------
# GIT and Hamiltonian walls

def test_git_no_walls_without_boxes():
    lam = sum_fundamental(3, (0, 1))
    for a in range(3):
        for length in range(1, 8):
            assert not git_wall_test((0, 1), 3, lam, RibbonSpec(a, length, 3))


def test_git_single_box_simple_root():
    lam = sum_fundamental(2, (1,))
    mu = lam.sub_root(1)
    assert git_wall_test((1,), 2, mu, RibbonSpec(1, 1, 2))
    assert not git_wall_test((1,), 2, mu, RibbonSpec(0, 1, 2))


def test_git_walls_weyl_equivariant():
    # s_i permutes the positive roots other than alpha_i
    checked = 0
    for e in (2, 3):
        for s in product(range(e), repeat=2):
            lam = sum_fundamental(e, s)
            for v in product(range(2), repeat=e):
                mu = lam.sub_roots(v)
                if not fixed_points(s, e, mu):
                    continue
                for i in range(e):
                    mu2 = mu.reflect(i)
                    try:
                        fixed_points(s, e, mu2)
                    except EnumerationCapExceeded:
                        continue
                    for a in range(e):
                        for length in range(1, 2 * e + 2):
                            r = RibbonSpec(a, length, e)
                            r2 = reflect_root(r, i, e)
                            if r2 is None or r == RibbonSpec(i, 1, e):
                                continue
                            checked += 1
                            assert git_wall_test(s, e, mu, r) == git_wall_test(s, e, mu2, r2)
    assert checked > 1000


def test_hamiltonian_level_one_has_only_imaginary_roots():
    # with one row every sl_1 root is a multiple of delta: beads only drop within their own row
    from quiver_o_kit.weightings import hamiltonian_offsets
    for length in range(1, 5):
        src, dst, d = hamiltonian_offsets(RibbonSpec(0, length, 1), 1)
        assert src == dst == 1 and d == length
    for e in (2, 3):
        lam = sum_fundamental(e, (0,))
        for length in range(1, 5):
            assert not hamiltonian_wall_test((0,), e, lam, RibbonSpec(0, length, 1))
        for v in product(range(3), repeat=e):
            mu = lam.sub_roots(v)
            if not fixed_points((0,), e, mu):
                continue
            dch, de, dmu, _ = dual_wall_data((0,), e, mu)
            for length in range(1, 5):
                r = RibbonSpec(0, length, 1)
                assert hamiltonian_wall_test((0,), e, mu, r) == git_wall_test(dch, de, dmu, r)


def test_hamiltonian_hand_fixture():
    # charges (0, 0), e = 2, one box of residue 0: fixed points ((1), ()) and ((), (1))
    lam = sum_fundamental(2, (0, 0))
    mu = lam.sub_root(0)
    assert len(fixed_points((0, 0), 2, mu)) == 2
    assert hamiltonian_wall_test((0, 0), 2, mu, RibbonSpec(1, 1, 2))
    assert not hamiltonian_wall_test((0, 0), 2, mu, RibbonSpec(0, 1, 2))


def test_hamiltonian_matches_dual_git_small():
    for e in (2, 3):
        for s in product(range(e), repeat=2):
            lam = sum_fundamental(e, s)
            for v in product(range(2), repeat=e):
                mu = lam.sub_roots(v)
                if not fixed_points(s, e, mu):
                    continue
                dch, de, dmu, _ = dual_wall_data(s, e, mu)
                for a in range(e):
                    for length in range(1, 2 * e + 2):
                        r = RibbonSpec(a, length, e)
                        assert git_wall_test(s, e, mu, r) == hamiltonian_wall_test(dch, de, dmu, r)


# ---------------------------------------------------------------------------
# Weyl actions on charge matrices

def test_weyl_act_identity():
    u = ChargeMatrix(((1, 2, 0), (0, -1, 3)))
    assert weyl_act_on_matrix([], [], u) == u


def test_weyl_row_and_column_actions_commute():
    rng = random.Random(3)
    for _ in range(50):
        u = random_matrix(rng, 4, 4)
        rw = [rng.randrange(u.e) for _ in range(rng.randint(0, 4))]
        cw = [rng.randrange(u.ell) for _ in range(rng.randint(0, 4))]
        a = weyl_act_on_matrix(rw, [], weyl_act_on_matrix([], cw, u))
        b = weyl_act_on_matrix([], cw, weyl_act_on_matrix(rw, [], u))
        assert a == b == weyl_act_on_matrix(rw, cw, u)


def test_weyl_actions_preserve_their_own_sums():
    rng = random.Random(13)
    for _ in range(50):
        u = random_matrix(rng, 4, 4)
        rw = [rng.randrange(u.e) for _ in range(3)]
        cw = [rng.randrange(u.ell) for _ in range(3)]
        assert weyl_act_on_matrix(rw, [], u).s == u.s
        assert weyl_act_on_matrix([], cw, u).t == u.t
