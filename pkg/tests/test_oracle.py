import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from jordanlab import oracle
from jordanlab.charsolve import _schur_row, char_CJ
from jordanlab.closed import r, s
from jordanlab.oracle import (
    SpanBasis, bracket, jacobi_triple_check, jordan, jordan_monomials, multilinear_dims, parse_word,
    span_CJ, span_inner_CJ, span_inner_SJ, span_SJ, weight_character, weight_class, word_str,
)
from jordanlab.partitions import closed_dim_M, closed_dim_MD


def w(s_):
    return parse_word(s_)


def test_word_round_trip():
    assert word_str(parse_word("1213")) == "1213"


def test_jordan_and_bracket():
    x, y = {w("1"): 1}, {w("2"): 1}
    assert jordan(x, y) == {w("12"): 1, w("21"): 1}
    assert bracket(x, y) == {w("12"): 1, w("21"): -1}
    assert jordan(x, x) == {w("11"): 2}


def test_span_basics():
    b = SpanBasis.from_vectors([{w("12"): 2, w("21"): 2}, {w("12"): 1, w("21"): 1}, {w("11"): 3}])
    assert b.rank == 2
    assert b.contains({w("12"): 5, w("21"): 5})
    assert not b.contains({w("12"): 1})


def test_echelon_deterministic_under_permutation():
    vecs = [{w("123"): 1, w("321"): 1}, {w("213"): 2, w("312"): 2}, {w("132"): 1, w("231"): 1},
            {w("123"): 1, w("321"): 1, w("213"): 1, w("312"): 1}]
    ref = SpanBasis.from_vectors(vecs, symmetry=1)
    rng = random.Random(7)
    for _ in range(10):
        rng.shuffle(vecs)
        assert SpanBasis.from_vectors(vecs, symmetry=1) == ref
        assert SpanBasis.from_vectors(vecs, symmetry=1).to_jsonl() == ref.to_jsonl()


@settings(max_examples=20, deadline=None)
@given(st.lists(st.dictionaries(st.sampled_from(["12", "21", "11", "22", "13"]), st.integers(-3, 3),
                                max_size=4), max_size=6), st.randoms())
def test_echelon_determinism_property(vecs, rnd):
    vecs = [{w(k): v for k, v in d.items() if v} for d in vecs]
    shuffled = list(vecs)
    rnd.shuffle(shuffled)
    assert SpanBasis.from_vectors(vecs) == SpanBasis.from_vectors(shuffled)


@pytest.mark.parametrize("D,top", [(1, 7), (2, 7), (3, 7), (4, 6)])
def test_full_degree_dims(D, top):
    for n in range(1, top + 1):
        d = oracle.oracle_for(D).dims(n)
        assert d["CJ"] == s(n, D)
        assert d["InnerCJ"] == r(n, D)
        assert d["M"] == closed_dim_M(n, D)
        assert d["MD"] == closed_dim_MD(n, D)


@pytest.mark.parametrize("D", [2, 3, 4, 5])
def test_multilinear_small(D):
    d = multilinear_dims(D)
    assert d["CJ"] == factorial(D) // 2
    assert d["SJ"] == [None, None, 1, 3, 11, 55][D]
    assert d["InnerCJ"] == [None, None, 1, 2, 9, 48][D]


@pytest.mark.slow
@pytest.mark.parametrize("D,sj,m,md", [(6, 330, 30, 25), (7, 2345, 175, 180)])
def test_multilinear_large(D, sj, m, md):
    d = multilinear_dims(D)
    assert (d["SJ"], d["M"], d["MD"]) == (sj, m, md)


@pytest.mark.parametrize("D,n", [(2, 5), (3, 5), (3, 6)])
def test_inner_sj_inside_inner_cj(D, n):
    assert span_inner_CJ(n, D).contains_span(span_inner_SJ(n, D))
    assert span_CJ(n, D).contains_span(span_SJ(n, D))


@pytest.mark.parametrize("D", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_cj_character_matches_weights(n, D):
    got = weight_class(weight_character(span_CJ(n, D), D), D, n)
    assert _schur_row(got, n) == _schur_row(char_CJ(n, D), n)


@pytest.mark.parametrize("m", [(1, 1, 1), (2, 1), (2, 2), (1, 1, 1, 1), (2, 1, 1), (3, 2)])
def test_bracketing_route_matches_recursive(m):
    D = len(m)
    direct = SpanBasis.from_vectors(jordan_monomials(m), symmetry=1)
    assert direct == span_SJ(sum(m), D, multidegree=m)


def test_jacobi():
    assert jacobi_triple_check(50).passed
