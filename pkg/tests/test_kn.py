import random
from fractions import Fraction as F

import pytest

import oracles
from quiver_o_kit import Multipartition
from quiver_o_kit.kn import (
    Collision,
    KNError,
    Lift,
    Loading,
    Multisegment,
    build_representation,
    documented_u,
    induce,
    is_violating,
    lift_from,
    limit_check,
    loading_from_lift,
    loading_signature,
    norm_u,
    perturbed_gradings,
    unsteadiness,
)
from quiver_o_kit.partitions import all_multipartitions
from quiver_o_kit.weightings import Weighting

TH1 = Weighting((F(0),), F(-2), 3, (1,))
TH2 = Weighting((F(1, 3), F(11, 5)), F(-2, 3), 2, (0, 1))


def multisegments(e, max_boxes):
    segs = [(r, n) for r in range(e) for n in range(1, max_boxes + 1)]
    out = [()]

    def rec(start, cur, b):
        for i in range(start, len(segs)):
            if b + segs[i][1] <= max_boxes:
                out.append(tuple(cur + [segs[i]]))
                rec(i, cur + [segs[i]], b + segs[i][1])

    rec(0, [], 0)
    return [Multisegment(s) for s in out]


def sweep_unsteadiness(pos, lo, k):
    """Largest j with some a < lo, [a - k, a] empty and exactly j points below a - k (dense grid of a)."""
    best = 0
    grid = sorted({p + k + d for p in pos for d in (F(1, 1000), F(1, 7))} | {lo - F(1, 1000)})
    for a in grid:
        if a >= lo or any(a - k <= p <= a for p in pos):
            continue
        best = max(best, sum(1 for p in pos if p < a - k))
    return best


# ---------------------------------------------------------------------------
# lifts and norms

def test_single_box_eigenvalue():
    mp = Multipartition.of([(1,)], (1,), 3)
    lift = lift_from(mp, Multisegment(), TH1, 10)
    assert lift.entries == ((("box", 1, 1, 1), 1, F(1)),)
    assert norm_u(lift, 10) == 82


def test_single_segment_on_empty_diagram():
    mp = Multipartition.of([()], (1,), 3)
    lift = lift_from(mp, Multisegment(((2, 1),)), TH1, -7)
    assert lift.entries == ((("seg", 0, 0), 2, F(-7)),)


def test_eigenvalue_counts_match_dimension_vector():
    for mp in all_multipartitions((0, 1), 2, 4):
        for m in multisegments(2, 2):
            lift = lift_from(mp, m, TH2, documented_u(mp, TH2))
            dv = [0, 0]
            for comp in mp.components:
                for c in comp.contents():
                    dv[c % 2] += 1
            seg = m.box_count(2)
            assert lift.vertex_counts(2) == [dv[i] + seg[i] for i in range(2)]


def test_norm_of_constant_lift_and_translation():
    lift = Lift(((("a",), 0, F(5)),))
    assert norm_u(lift, 5) == 1
    rng = random.Random(2)
    for _ in range(20):
        ents = tuple((("a", n), 0, F(rng.randint(-20, 20), 3)) for n in range(4))
        c, u = F(rng.randint(-9, 9), 2), F(rng.randint(-9, 9))
        shifted = Lift(tuple((a, v, x + c) for a, v, x in ents))
        assert norm_u(shifted, u + c) == norm_u(Lift(ents), u)


def test_kappa_must_be_negative():
    mp = Multipartition.of([(1,)], (0,), 2)
    with pytest.raises(KNError):
        lift_from(mp, Multisegment(), Weighting((F(0),), F(1), 2, (0,)), 0)


def test_documented_u_rule():
    mp = Multipartition.of([(2, 1), (1,)], (0, 1), 2)
    vals = [abs(v) for _, _, v in lift_from(mp, Multisegment(), TH2, 0).entries]
    assert documented_u(mp, TH2) == -(1 + 2 * -(-max(vals) // 1))
    assert documented_u(Multipartition.of([(), ()], (0, 1), 2), TH2) == -1


# ---------------------------------------------------------------------------
# loadings

def test_loading_sign_rule():
    lift = Lift(((("a",), 2, F(1)),))
    assert loading_from_lift(lift).support == ((F(-1), 2),)


def test_loading_collision():
    with pytest.raises(Collision):
        loading_from_lift(Lift(((("a",), 0, F(1)), (("b",), 1, F(1)))))


def test_loading_json_round_trip():
    ld = Loading(((F(3, 2), 1), (F(-2), 0)))
    assert Loading.from_json(ld.to_json()) == ld
    assert ld.vertex_counts(2) == [1, 1]


def test_is_violating_examples():
    th = Weighting((F(5), F(10)), F(0), 2, (0, 1))
    assert is_violating(Loading(((F(3), 0),)), th)
    assert not is_violating(Loading(((F(11), 0), (F(12), 1))), th)
    assert not is_violating(Loading(()), th)
    with pytest.raises(KNError):
        is_violating(Loading(()), TH2)


def test_unsteadiness_examples():
    th = Weighting((F(5), F(10)), F(-1), 2, (0, 1))
    assert unsteadiness(Loading(((F(2), 0), (F(9, 2), 1))), th) == 1
    assert unsteadiness(Loading(((F(9, 2), 0), (F(5), 1), (F(11, 2), 0))), th) == 0
    assert unsteadiness(Loading(()), th) == 0


def test_unsteadiness_matches_sweep():
    rng = random.Random(5)
    for _ in range(300):
        k = F(rng.randint(1, 6), rng.randint(1, 3))
        th = Weighting((F(rng.randint(-5, 5)), F(rng.randint(-5, 5))), -k, 2, (0, 1))
        pos = sorted({F(rng.randint(-40, 20), 4) for _ in range(rng.randint(0, 5))})
        ld = Loading(tuple((p, rng.randrange(2)) for p in pos))
        assert unsteadiness(ld, th) == sweep_unsteadiness(pos, min(th.theta), k)


def test_induce():
    rng = random.Random(6)
    for _ in range(100):
        k = F(rng.randint(1, 4), rng.randint(1, 2))
        th = Weighting((F(rng.randint(-5, 5)), F(rng.randint(-5, 5))), -k, 2, (0, 1))
        i = Loading(tuple((F(p, 2), rng.randrange(2)) for p in set(rng.sample(range(-10, 30), rng.randint(0, 4)))))
        j = Loading(tuple((F(p, 2), rng.randrange(2)) for p in set(rng.sample(range(-10, 30), rng.randint(0, 4)))))
        assert induce(i, Loading(()), th) == i
        out = induce(i, j, th)
        assert sorted(v for _, v in out.support) == sorted(v for _, v in i.support + j.support)
        if j.support:
            assert unsteadiness(out, th) >= len(j.support)


def test_violating_becomes_unsteady_under_small_kappa():
    rng = random.Random(8)
    for _ in range(200):
        theta = (F(rng.randint(0, 10)), F(rng.randint(0, 10)))
        pos = sorted({F(rng.randint(-20, 30)) for _ in range(rng.randint(1, 5))})
        ld = Loading(tuple((p, 0) for p in pos))
        tensor = Weighting(theta, F(0), 2, (0, 0))
        if not is_violating(ld, tensor):
            continue
        k = F(1, 10)
        gaps = [b - a for a, b in zip(pos, pos[1:])] + [t - p for p in pos for t in theta if t > p]
        if min(gaps) > k:
            assert unsteadiness(ld, Weighting(theta, -k, 2, (0, 0))) >= 1


def test_loading_signature_proxy():
    ld = Loading(((F(1), 0), (F(3), 1)))
    sig = loading_signature(ld, TH2)
    assert sig.proxy and sig.vertices == (0, 1)
    assert loading_signature(ld.translate(F(1, 1000)), TH2).vertices == (0, 1)


# ---------------------------------------------------------------------------
# representations

def test_single_box_representation():
    rep = build_representation(Multipartition.of([(1,)], (0,), 2), Multisegment(), Weighting((F(0),), F(-1), 2, (0,)))
    assert rep.x == [] and rep.xbar == [] and len(rep.q) == 1


def test_segment_is_one_jordan_block():
    th = Weighting((F(0),), F(-1), 3, (0,))
    for n in range(1, 6):
        rep = build_representation(Multipartition.of([()], (0,), 3), Multisegment(((1, n),)), th)
        assert rep.q == []
        assert oracles.jordan_type(rep.matrix("x")) == (n,)


def test_jordan_type_of_segment_part_is_row_lengths():
    mp = Multipartition.of([(2, 1)], (0,), 3)
    th = Weighting((F(0),), F(-1), 3, (0,))
    for m in multisegments(3, 5):
        rep = build_representation(mp, m, th)
        seg_labels = [b for b, _ in rep.basis if b[0] == "seg"]
        expected = tuple(sorted((n for _, n in m.segments), reverse=True))
        assert oracles.jordan_type(rep.matrix("x", seg_labels)) == expected


def test_limit_check_passes_on_documented_grading():
    for th in (Weighting((F(1, 3),), F(-1, 2), 2, (0,)), TH2):
        for mp in all_multipartitions(tuple(th.residues), th.e, 4):
            for m in multisegments(th.e, 4 - mp.size()):
                rep = build_representation(mp, m, th)
                rpt = limit_check(rep, lift_from(mp, m, th, documented_u(mp, th)), th)
                assert rpt.ok, rpt.offending


def test_limit_check_negative_control():
    th = Weighting((F(0),), F(-1), 2, (0,))
    mp = Multipartition.of([(1,)], (0,), 2)
    rep = build_representation(mp, Multisegment(), th)
    bad = Lift(((("box", 1, 1, 1), 0, F(1, 2)),))
    rpt = limit_check(rep, bad, th)
    assert not rpt.ok
    assert rpt.offending == [("q", ("box", 1, 1, 1), ("w", 1), F(1, 2), F(1))]


def test_limit_check_zero_representation():
    mp = Multipartition.of([()], (0,), 2)
    th = Weighting((F(0),), F(-1), 2, (0,))
    rep = build_representation(mp, Multisegment(), th)
    rpt = limit_check(rep, Lift(()), th)
    assert rpt.ok and rpt.checked == 0


def test_limit_check_rejects_mismatched_grading():
    mp = Multipartition.of([(1,)], (0,), 2)
    th = Weighting((F(0),), F(-1), 2, (0,))
    with pytest.raises(KNError):
        limit_check(build_representation(mp, Multisegment(), th), Lift(()), th)


def test_perturbed_gradings_do_not_beat_lift():
    mp = Multipartition.of([(2, 1), (1,)], (0, 1), 2)
    m = Multisegment(((0, 1), (1, 1)))
    u = documented_u(mp, TH2)
    base = norm_u(lift_from(mp, m, TH2, u), u)
    ps = perturbed_gradings(mp, m, TH2, u, 200, seed=3)
    assert len(ps) == 200
    assert all(norm_u(p, u) >= base for p in ps)


def test_loadings_injective_on_pairs():
    # every segment is centred at u, so segments of equal parity collide and have no loading;
    # injectivity is checked on the vertex-eigenvalue data for all pairs and on loadings where defined
    th = Weighting((F(1, 3), F(11, 5)), F(-2, 3), 2, (0, 1))
    seen, seen_loading = {}, {}
    collisions = 0
    for mp in all_multipartitions((0, 1), 2, 5):
        for m in multisegments(2, 8 - mp.size()):
            lift = lift_from(mp, m, th, F(-101, 7))
            key = tuple(sorted((v, x) for _, v, x in lift.entries))
            assert key not in seen, (seen.get(key), (mp, m))
            seen[key] = (mp, m)
            try:
                ld = loading_from_lift(lift)
            except Collision:
                collisions += 1
                assert len(m.segments) > 1
                continue
            assert ld.support not in seen_loading
            seen_loading[ld.support] = (mp, m)
    assert len(seen) > 3000 and len(seen_loading) > 1000
