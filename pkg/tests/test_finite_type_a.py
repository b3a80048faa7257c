from itertools import product

import pytest

from quiver_o_kit import ChargeMatrix, matrix_dual
from quiver_o_kit.finite_type_a import (
    NotZeroOne,
    describe,
    finite_dimension_vector,
    finite_dual,
    fits_box,
    longest_element,
    multipartition_from_matrix,
    reversal,
    zero_one_matrices,
)
from quiver_o_kit.partitions import dimension_vector

WORKED = ChargeMatrix(((1, 0, 1, 1), (0, 0, 1, 0), (0, 1, 0, 1)))


def partitions_in_box(rows, cols):
    """All partitions inside a rows x cols rectangle, by direct recursion."""
    out = []

    def rec(prefix, cap):
        out.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for p in range(1, cap + 1):
            rec(prefix + [p], p)

    rec([], cols)
    return out


def test_worked_example():
    mp = multipartition_from_matrix(WORKED)
    assert WORKED.s == (3, 1, 2)
    assert [c.parts for c in mp.components] == [(1, 1), (2,), (2, 1)]
    assert [c.charge for c in mp.components] == [3, 1, 2]
    assert finite_dimension_vector(WORKED) == (2, 3, 2)
    assert fits_box(mp)


def test_zero_and_left_packed_rows_are_empty():
    for e in range(1, 6):
        for k in range(e + 1):
            row = tuple(1 if j < k else 0 for j in range(e))
            mp = multipartition_from_matrix(ChargeMatrix((row,)))
            assert mp.components[0].parts == () and mp.components[0].charge == k


def test_rejects_non_zero_one():
    with pytest.raises(NotZeroOne):
        multipartition_from_matrix(ChargeMatrix(((0, 2),)))


def test_bijection_with_box_bounded_multipartitions():
    for e in range(1, 5):
        for ell in range(1, 5):
            for s in product(range(e + 1), repeat=ell):
                images = {}
                by_t = {}
                for u in zero_one_matrices(ell, e, s):
                    mp = multipartition_from_matrix(u)
                    key = tuple(c.parts for c in mp.components)
                    assert key not in images
                    images[key] = u
                    assert fits_box(mp)
                    assert tuple(c.charge for c in mp.components) == s
                    dv = tuple(sorted(dimension_vector(mp).items()))
                    by_t.setdefault(u.t, set()).add(dv)
                boxed = list(product(*(partitions_in_box(x, e - x) for x in s)))
                assert set(images) == set(boxed)
                # each column-sum class is one dimension vector, and distinct classes differ
                dims = {}
                for t, vs in by_t.items():
                    assert len(vs) == 1
                    dims[vs.pop()] = t
                assert len(dims) == len(by_t)


def test_fits_box_rejects_oversized():
    from quiver_o_kit import Multipartition
    assert not fits_box(Multipartition.of([(3,)], (1,), 3))
    assert not fits_box(Multipartition.of([(1, 1)], (1,), 3))
    assert fits_box(Multipartition.of([(2,)], (1,), 3))


def test_reversal():
    assert reversal(reversal(WORKED)) == WORKED
    r = reversal(WORKED)
    assert r.s == tuple(reversed(WORKED.s)) and r.t == tuple(reversed(WORKED.t))
    pal = ChargeMatrix(((1, 0, 1), (0, 1, 0), (1, 0, 1)))
    assert reversal(pal) == pal
    for u in zero_one_matrices(3, 3):
        assert reversal(u).transpose() == reversal(u.transpose())
    assert longest_element((1, 2, 3)) == (3, 2, 1)


def test_descriptor_contents():
    d = describe(WORKED)
    assert d.chamber == "preferred"
    kinds = [p.kind for p in d.presentations]
    assert kinds == ["quiver", "s3", "slice"]
    assert d.presentations[1].params == (WORKED.t, WORKED.s)
    assert all(p.chamber == "opposite" for p in d.reversed_presentations)
    js = d.to_json()
    assert js["dimension_vector"] == [0, 2, 3, 2]


def test_finite_dual_swaps_margins():
    d = finite_dual(WORKED)
    assert d.chamber == "opposite"
    assert d.matrix.s == WORKED.t and d.matrix.t == WORKED.s
    assert d.presentations[1].params == (WORKED.s, WORKED.t)
    assert d.reversed_presentations[1].params == (tuple(reversed(WORKED.s)), tuple(reversed(WORKED.t)))


def test_finite_dual_involution():
    for u in zero_one_matrices(2, 3):
        assert finite_dual(finite_dual(u)) == describe(u)


def test_finite_dual_matches_duality_module():
    for u in zero_one_matrices(2, 3):
        d = finite_dual(u)
        assert d.matrix == matrix_dual(u)
        assert d.to_json()["dimension_vector"] == [dimension_vector(multipartition_from_matrix(matrix_dual(u)))[i]
                                                   for i in range(u.ell)]
