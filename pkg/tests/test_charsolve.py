import pytest

from jordanlab.charsolve import (
    char_A, char_CJ, char_inner_CJ, char_M, char_MD, char_oriented_necklaces, predicted_vs_oracle,
    resubstitute, solve_characters,
)
from jordanlab.closed import antisymmetric_dim, c, r, s
from jordanlab.dims import solve_weak
from jordanlab.partitions import Partition, closed_dim_M, closed_dim_MD

P_ = Partition.parse


def test_low_degree_rows():
    t = solve_characters(3, 4)
    assert t.A[1] == {P_("1"): 1}
    assert 1 not in t.B
    assert t.A[2] == {P_("2"): 1}
    assert t.B[2] == {P_("1,1"): 1}


def test_json_layout():
    j = solve_characters(2, 3).to_json()
    assert j["A"][0] == {"degree": 1, "schur": {"1": 1}}
    assert j["B"][1] == {"degree": 2, "schur": {"1,1": 1}}


@pytest.mark.parametrize("D", [1, 2, 3, 4])
def test_conjecture_in_glennie_range(D):
    t = solve_characters(D, 7)
    assert resubstitute(t).passed
    w = solve_weak(D, 7)
    assert t.dims() == (w.a, w.b)
    cmp = predicted_vs_oracle(D, 7, t)
    assert cmp.passed
    assert all(row.equal for row in cmp.b_rows)
    assert t.negative_entries() == []


def test_glennie_module():
    cmp = predicted_vs_oracle(3, 8)
    assert cmp.si8["A_8 - ch CJ_8"] == {"3,3,2": 1}
    assert cmp.si8["equals [L(3,3,2;3)]"]


@pytest.mark.parametrize("D", [1, 2, 3, 4])
@pytest.mark.parametrize("n", range(1, 8))
def test_closed_characters_specialize(n, D):
    assert char_CJ(n, D).dimensions().get(n, 0) == s(n, D)
    assert char_A(n, D).dimensions().get(n, 0) == antisymmetric_dim(n, D)
    assert char_oriented_necklaces(n, D).dimensions().get(n, 0) == c(n, D)
    assert char_inner_CJ(n, D).dimensions().get(n, 0) == r(n, D)
    assert char_M(n, D).dimensions().get(n, 0) == closed_dim_M(n, D)
    assert char_MD(n, D).dimensions().get(n, 0) == closed_dim_MD(n, D)


def test_tabulated_range():
    with pytest.raises(ValueError):
        char_M(8, 3)
    with pytest.raises(ValueError):
        char_MD(8, 3)


@pytest.mark.slow
def test_d5_prediction_dims():
    t = solve_characters(5, 6)
    assert t.dims() == (solve_weak(5, 6).a, solve_weak(5, 6).b)
    assert resubstitute(t).passed
