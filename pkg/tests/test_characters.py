import pytest
from hypothesis import given, settings, strategies as st

from jordanlab.characters import (
    CharClass, EnvelopeExceeded, char_mul, char_of_schur, check_envelope, from_schur, lambda_class,
    mult_L2k_char, orbit_size, power_product, schur_decompose, schur_monomial,
)
from jordanlab.partitions import Partition, dim_gl, dim_sn, kostka, partitions
from jordanlab.series import P, AsymmetricCharacter

P_ = Partition.parse


def test_orbit_size():
    assert orbit_size(P_("2,1"), 3) == 6
    assert orbit_size(P_("1,1"), 3) == 3


@pytest.mark.parametrize("n,D", [(n, D) for n in range(1, 6) for D in (1, 2, 3, 4)])
def test_schur_monomial_is_kostka(n, D):
    for Y in partitions(n, max_parts=D):
        got = dict(schur_monomial(Y, D))
        for mu in partitions(n, max_parts=D):
            assert got.get(mu, 0) == kostka(Y, tuple(mu)), (Y, mu)


@pytest.mark.parametrize("n,D", [(n, D) for n in range(1, 6) for D in (2, 3, 4)])
def test_power_sum_expansion(n, D):
    # p_1^n = sum f^Y s_Y
    dec = schur_decompose(power_product([1] * n, D, n))
    assert dec == {(Y, 0): dim_sn(Y) for Y in partitions(n, max_parts=D)}


def test_schur_dimension():
    for Y in ("3,1", "2,2", "2,1,1", "1^4"):
        c = char_of_schur(P_(Y), 4)
        assert c.dimensions() == {4: dim_gl(P_(Y), 4)}
    assert char_of_schur(P_("1^5"), 4).is_zero()


def test_round_trip_schur():
    c = power_product([2, 1, 1], 3, 4)
    assert from_schur(3, 4, schur_decompose(c)) == c


def test_littlewood_richardson_small():
    K = CharClass.natural(3, 3)
    prod = char_mul(char_of_schur(P_("2"), 3, 3), K)
    assert schur_decompose(prod) == {(P_("3"), 0): 1, (P_("2,1"), 0): 1}


def test_lambda_of_natural():
    # lambda(K^D) = sum (-1)^k Lambda^k, exterior powers vanish above D
    lam = lambda_class(CharClass.natural(3, 5))
    dec = schur_decompose(lam)
    assert dec == {(Partition(()), 0): 1, (P_("1"), 0): -1, (P_("1,1"), 0): 1, (P_("1^3"), 0): -1}


def test_lambda_constant_term_rejected():
    with pytest.raises(ValueError):
        lambda_class(CharClass.one(2, 3))


def test_mult_l2k():
    c = CharClass.natural(2, 3).times_t(P(1))
    assert mult_L2k_char(c, 1) == CharClass.natural(2, 3)
    assert mult_L2k_char(c, 0).is_zero()
    with pytest.raises(AsymmetricCharacter):
        mult_L2k_char(CharClass(2, 3, {(P_("1"), 1): 1}), 0)


def test_envelope():
    check_envelope(6, 12)
    with pytest.raises(EnvelopeExceeded):
        check_envelope(7, 3)
    check_envelope(7, 3, force=True)


def _classes(D, N):
    lam = st.sampled_from([Y for n in range(1, N + 1) for Y in partitions(n, max_parts=D)])
    return st.dictionaries(st.tuples(lam, st.integers(-1, 1)), st.integers(-2, 2), max_size=3).map(
        lambda t: CharClass(D, N, t))


@settings(max_examples=25, deadline=None)
@given(_classes(2, 4), _classes(2, 4))
def test_lambda_multiplicative(a, b):
    assert lambda_class(a + b) == char_mul(lambda_class(a), lambda_class(b))


@settings(max_examples=25, deadline=None)
@given(_classes(3, 4), _classes(3, 4), _classes(3, 4))
def test_char_ring_laws(a, b, c):
    assert char_mul(a, b) == char_mul(b, a)
    assert char_mul(char_mul(a, b), c) == char_mul(a, char_mul(b, c))
    assert char_mul(a, b + c) == char_mul(a, b) + char_mul(a, c)
