from math import factorial

import pytest
from hypothesis import given, strategies as st

from jordanlab.partitions import (
    M_CLASSES, MD_CLASSES, Partition, VirtualSymClass, addable, check_c1_constraint,
    class_from_json, closed_dim_M, closed_dim_MD, dim_gl, dim_sn, hook_lengths, induce, kostka,
    md_class_from_m, partitions, removable, restrict,
)

P_ = Partition.parse


def test_parse_and_conjugate():
    assert P_("4,1^4") == Partition((4, 1, 1, 1, 1))
    assert P_("2^2,1^3") == Partition((2, 2, 1, 1, 1))
    assert P_("3,2,1").conjugate() == P_("3,2,1")
    assert P_("4,1").conjugate() == P_("2,1^3")
    with pytest.raises(ValueError):
        P_("2,4")


@pytest.mark.parametrize("Y,d", [("3,1^4", 15), ("2^2,1^3", 14), ("4,1^4", 35),
                                 ("3,2,1^3", 64), ("2^2,1^4", 20), ("3,1^5", 21)])
def test_hook_dimensions(Y, d):
    assert dim_sn(P_(Y)) == d


def test_hook_lengths():
    assert sorted(hook_lengths(P_("3,2"))) == [1, 1, 2, 3, 4]


def test_dim_gl_quoted():
    assert dim_gl(P_("3,1,1,1"), 4) == 10
    assert dim_gl(P_("3,2,1,1"), 4) == 20
    assert dim_gl(P_("1^5"), 4) == 0


@pytest.mark.parametrize("n", range(1, 10))
def test_sum_of_squares(n):
    assert sum(dim_sn(Y) ** 2 for Y in partitions(n)) == factorial(n)


@pytest.mark.parametrize("n,D", [(n, D) for n in range(1, 8) for D in range(1, 5)])
def test_schur_weyl(n, D):
    assert sum(dim_sn(Y) * dim_gl(Y, D) for Y in partitions(n)) == D ** n


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert all(len(Y) <= 2 for Y in partitions(7, max_parts=2))


def test_removable_addable():
    assert set(removable(P_("3,1"))) == {P_("2,1"), P_("3")}
    assert set(addable(P_("2"))) == {P_("3"), P_("2,1")}


def test_restriction_of_m7():
    want = VirtualSymClass.of((4, "3,1^4"), (2, "2,1^5"), (2, "2^2,1^3"), (2, "4,1^3"), (1, "3,2,1^2"))
    assert restrict(M_CLASSES[7]) == want


def test_md5_from_m4():
    assert md_class_from_m(M_CLASSES[4]) == VirtualSymClass.of((1, "2,1^3"))


@pytest.mark.parametrize("D", [4, 5, 6])
def test_md_tabulated(D):
    assert md_class_from_m(M_CLASSES[D]) == MD_CLASSES[D + 1]


def test_md_dims():
    assert M_CLASSES[6].dimension() == 30
    assert M_CLASSES[7].dimension() == 175
    assert [MD_CLASSES[n].dimension() for n in (5, 6, 7)] == [4, 25, 180]
    assert md_class_from_m(M_CLASSES[7]).dimension() == 1225


def test_md8_class():
    want = VirtualSymClass.of(
        (2, "5,1^3"), (3, "4,2,1^2"), (4, "4,1^4"), (1, "3^2,1^2"), (1, "3,2,2,1"), (6, "3,2,1^3"),
        (5, "3,1^5"), (2, "2^3,1^2"), (3, "2^2,1^4"), (2, "2,1^6"))
    assert md_class_from_m(M_CLASSES[7]) == want


@given(st.integers(2, 8).flatmap(lambda n: st.lists(
    st.tuples(st.sampled_from(list(partitions(n))), st.integers(-3, 3)), max_size=4).map(
        lambda ts: VirtualSymClass(n, dict(ts)))))
def test_branching_dimensions(cls):
    assert restrict(cls).dimension() == cls.dimension()
    assert induce(cls).dimension() == (cls.n + 1) * cls.dimension()


@pytest.mark.parametrize("D", [4, 5, 6, 7])
def test_c1_constraint(D):
    assert check_c1_constraint(M_CLASSES[D], D).passed


def test_closed_dims_m_md():
    assert [closed_dim_M(n, 4) for n in range(1, 8)] == [0, 0, 0, 1, 4, 20, 60]
    assert [closed_dim_MD(n, 4) for n in range(1, 8)] == [0, 0, 0, 0, 4, 16, 80]
    with pytest.raises(ValueError):
        closed_dim_M(8, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_rows(n):
    # h_1^n = sum f^Y s_Y
    for Y in partitions(n):
        assert kostka(Y, (1,) * n) == dim_sn(Y)
    assert kostka(Partition((n,)), (n,)) == 1


def test_class_json_round_trip():
    c = MD_CLASSES[7]
    assert class_from_json(7, c.to_json()) == c
