import json

import pytest
from hypothesis import given, settings, strategies as st

from jordanlab.closed import r, s
from jordanlab.dims import (
    DimTable, SolutionCache, phi_product, solve_weak, solve_weakest, verify_reduction, weak_residues,
)


def test_d1_baseline():
    t = solve_weak(1, 30)
    assert t.a == [1] * 30 and t.b == [0] * 30


def test_d2_table():
    t = solve_weak(2, 15)
    assert t.a == [s(n, 2) for n in range(1, 16)]
    assert t.b == [r(n, 2) for n in range(1, 16)]
    assert (t.a[3], t.a[14], t.b[14]) == (10, 16512, 15288)


def test_d3_table():
    t = solve_weak(3, 8)
    assert t.a[:7] == [s(n, 3) for n in range(1, 8)]
    assert t.a[7] == s(8, 3) + 3 == 3324
    assert t.b == [r(n, 3) for n in range(1, 9)]


def test_d4_offsets():
    t = solve_weak(4, 7)
    assert [t.a[n - 1] - s(n, 4) for n in range(1, 8)] == [0, 0, 0, -1, -4, -20, -60]
    assert [t.b[n - 1] - r(n, 4) for n in range(1, 8)] == [0, 0, 0, 0, -4, -16, -80]


@pytest.mark.parametrize("D", [1, 2, 3, 4])
def test_weak_equals_weakest(D):
    assert solve_weakest(D, 20) == solve_weak(D, 20).a
    assert verify_reduction(D, 20).passed


@pytest.mark.parametrize("D", [1, 2, 5])
def test_residues_hold(D):
    t = solve_weak(D, 12)
    l0, l2 = weak_residues(t, 12)
    assert l0 == [1] + [0] * 12
    assert l2 == [0, -D] + [0] * 11


@settings(max_examples=15)
@given(st.integers(1, 5), st.integers(1, 12), st.integers(1, 12))
def test_prefix_stability(D, N, M):
    lo, hi = sorted((N, M))
    big = solve_weak(D, hi)
    assert solve_weak(D, lo).a == big.a[:lo]
    assert solve_weak(D, lo).b == big.b[:lo]
    assert solve_weakest(D, lo) == solve_weakest(D, hi)[:lo]


def test_rejects_bad_args():
    with pytest.raises(ValueError):
        solve_weak(0, 5)
    with pytest.raises(ValueError):
        solve_weakest(2, 0)
    with pytest.raises(ValueError):
        phi_product(DimTable(2, 1, [2], [0]), 3)


def test_cache_round_trip(tmp_path):
    cache = SolutionCache(tmp_path)
    cold = solve_weak(3, 10, cache)
    rec = json.loads((tmp_path / "weak_D3_N10.json").read_text())
    assert all(isinstance(x, str) for x in rec["a"])
    assert solve_weak(3, 10, cache) == cold
    # prefix served from the longer file
    assert solve_weak(3, 6, cache) == solve_weak(3, 6)
    assert not (tmp_path / "weak_D3_N6.json").exists()
    assert solve_weakest(3, 10, cache) == cold.a


def test_cache_env(tmp_cache):
    c = SolutionCache()
    assert c.root == tmp_cache
