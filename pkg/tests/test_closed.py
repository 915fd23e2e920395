import pytest

from jordanlab.closed import (
    antisymmetric_dim, c, coprime_count, divisors, necklace_bracelet_bruteforce, r, s, totient,
)


def test_anchor_values():
    assert s(4, 2) == 10
    assert s(15, 2) == 16512
    assert r(15, 2) == 15288
    assert c(6, 2) == 1


def test_small_values():
    assert [s(n, 1) for n in range(1, 6)] == [1] * 5
    assert [r(n, 1) for n in range(1, 6)] == [0] * 5
    assert r(1, 5) == 0
    assert [r(n, 2) for n in range(1, 6)] == [0, 1, 2, 6, 12]


@pytest.mark.parametrize("m", range(1, 60))
def test_totient_matches_count(m):
    assert totient(m) == coprime_count(m)
    assert sum(totient(d) for d in divisors(m)) == m


@pytest.mark.parametrize("D", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 11))
def test_closed_forms_against_bruteforce(n, D):
    w = necklace_bracelet_bruteforce(n, D)
    assert s(n, D) == (w.words + w.palindromes) // 2
    assert c(n, D) == w.oriented_pairs
    assert antisymmetric_dim(n, D) == (w.words - w.palindromes) // 2
    assert r(n, D) == antisymmetric_dim(n, D) - c(n, D)
    assert w.bracelets == w.necklaces - w.oriented_pairs


@pytest.mark.parametrize("n", [5, 7])
def test_odd_length_pairs_d4(n):
    assert c(n, 4) == necklace_bracelet_bruteforce(n, 4).oriented_pairs


def test_bruteforce_bound():
    with pytest.raises(ValueError):
        necklace_bracelet_bruteforce(30, 3)


def test_invalid_args():
    with pytest.raises(ValueError):
        s(0, 2)
