"""
Degree-by-degree solvers for the predicted dimensions a_n(D), b_n(D).

Two equivalent formulations are solved independently:

* weak form: the residue equations on the three-factor product
  Phi = prod (1 - z^n t)^a_n (1 - z^n/t)^a_n (1 - z^n)^(a_n + b_n);
* weakest form: Res psi * prod (1 - z^n (t + 1/t) + z^2n)^a_n = 0 with
  psi = D z/t + (1 - D z) - t, which only sees the a_n.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from .series import ONE, LaurentPoly, T, TINV, TSeries, residue, series_mul, series_pow

log = logging.getLogger(__name__)

CACHE_ENV = "JORDANLAB_CACHE_DIR"


class SolverError(RuntimeError):
    """An unsolvable step in a triangular system; always an implementation bug."""


@dataclass
class DimTable:
    D: int
    N: int
    a: list[int] = field(default_factory=list)
    b: list[int] = field(default_factory=list)

    def negatives(self) -> list[tuple[str, int, int]]:
        out = [("a", n, v) for n, v in enumerate(self.a, 1) if v < 0]
        out += [("b", n, v) for n, v in enumerate(self.b, 1) if v < 0]
        return out

    def truncate(self, N: int) -> "DimTable":
        return DimTable(self.D, N, self.a[:N], self.b[:N])


def _factor(trunc: int, n: int, poly: LaurentPoly) -> TSeries:
    """1 - z^n * poly as a series."""
    terms = [ONE] + [LaurentPoly()] * trunc
    if n <= trunc:
        terms[n] = -poly
    return TSeries(trunc, terms)


def _weak_factors(trunc: int, n: int, a: int, b: int) -> list[TSeries]:
    return [
        series_pow(_factor(trunc, n, T), a),
        series_pow(_factor(trunc, n, TINV), a),
        series_pow(_factor(trunc, n, ONE), a + b),
    ]


def phi_product(tbl: DimTable, N: int) -> TSeries:
    """Phi truncated at z^N from the first N entries of the table."""
    if len(tbl.a) < N or len(tbl.b) < N:
        raise ValueError("table holds %d degrees, %d needed" % (min(len(tbl.a), len(tbl.b)), N))
    phi = TSeries.one(N)
    for n in range(1, N + 1):
        for f in _weak_factors(N, n, tbl.a[n - 1], tbl.b[n - 1]):
            phi = series_mul(phi, f)
    return phi


def _trinomial(trunc: int, n: int) -> TSeries:
    terms = [ONE] + [LaurentPoly()] * trunc
    if n <= trunc:
        terms[n] = -(T + TINV)
    if 2 * n <= trunc:
        terms[2 * n] = ONE
    return TSeries(trunc, terms)


def weakest_product(a: list[int], N: int) -> TSeries:
    """prod_{n<=N} (1 - z^n (t + 1/t) + z^2n)^a_n truncated at z^N."""
    prod = TSeries.one(N)
    for n in range(1, N + 1):
        prod = series_mul(prod, series_pow(_trinomial(N, n), a[n - 1]))
    return prod


def psi(D: int, N: int) -> TSeries:
    return TSeries(N, [ONE - T, LaurentPoly({-1: D, 0: -D})])


def _res_l0(p: LaurentPoly) -> int:
    # Res (1/t - 1) p
    return p[0] - p[-1]


def _res_l2(p: LaurentPoly) -> int:
    # Res (1 - t) p
    return p[-1] - p[-2]


def solve_weak(D: int, N: int, cache: "SolutionCache | None" = None) -> DimTable:
    """Unique (a, b) with Res (1/t - 1) Phi = 1 and Res (1 - t) Phi = -D z through z^N."""
    if D < 1 or N < 1:
        raise ValueError("solve_weak needs D >= 1 and N >= 1")
    if cache is not None:
        hit = cache.load("weak", D, N)
        if hit is not None:
            return hit
    phi = TSeries.one(N)
    a: list[int] = []
    b: list[int] = []
    for n in range(1, N + 1):
        x = phi[n]
        # the degree-n factors add -a (t + 1/t) - (a + b) to this coefficient:
        # L(2) multiplicity -a, L(0) multiplicity -b
        target_l2 = -D if n == 1 else 0
        an = _res_l2(x) - target_l2
        bn = _res_l0(x)
        y = x - an * (T + TINV) - (an + bn)
        if _res_l2(y) != target_l2 or _res_l0(y) != 0:
            raise SolverError("weak solve failed at degree %d (D=%d)" % (n, D))
        a.append(an)
        b.append(bn)
        for f in _weak_factors(N, n, an, bn):
            phi = series_mul(phi, f)
    tbl = DimTable(D, N, a, b)
    for kind, n, v in tbl.negatives():
        log.warning("negative solved value %s_%d(%d) = %d", kind, n, D, v)
    if cache is not None:
        cache.store("weak", tbl)
    return tbl


def solve_weakest(D: int, N: int, cache: "SolutionCache | None" = None) -> list[int]:
    """Unique a_1..a_N with Res psi * prod (1 - z^n(t+1/t) + z^2n)^a_n = 0."""
    if D < 1 or N < 1:
        raise ValueError("solve_weakest needs D >= 1 and N >= 1")
    if cache is not None:
        hit = cache.load("weakest", D, N)
        if hit is not None:
            return hit.a
    ps = psi(D, N)
    prod = TSeries.one(N)
    lead = ps[0]
    # coefficient of the unknown a_n in the degree-n residue: Res lead * -(t + 1/t)
    unit = (lead * -(T + TINV))[-1]
    if unit not in (1, -1):
        raise SolverError("leading coefficient %d is not a unit" % unit)
    a: list[int] = []
    for n in range(1, N + 1):
        acc = LaurentPoly()
        for i in range(0, min(n, 1) + 1):
            acc = acc + ps[i] * prod[n - i]
        an = -residue(acc) * unit
        if residue(acc) + unit * an != 0:
            raise SolverError("weakest solve failed at degree %d (D=%d)" % (n, D))
        a.append(an)
        prod = series_mul(prod, series_pow(_trinomial(N, n), an))
    if cache is not None:
        cache.store("weakest", DimTable(D, N, a, []))
    return a


@dataclass
class ReductionReport:
    D: int
    N: int
    same_a: bool
    full_residue_zero: bool
    reduced_residue_zero: bool
    first_mismatch: int | None = None

    @property
    def passed(self) -> bool:
        return self.same_a and self.full_residue_zero and self.reduced_residue_zero


def verify_reduction(D: int, N: int, cache: "SolutionCache | None" = None) -> ReductionReport:
    """Check that the weak solution also solves the weakest equation, both with
    and without the (1 - z^n)^(a_n + b_n) factors."""
    tbl = solve_weak(D, N, cache)
    a2 = solve_weakest(D, N, cache)
    mismatch = next((n for n, (x, y) in enumerate(zip(tbl.a, a2), 1) if x != y), None)
    ps = psi(D, N)
    full = residue(series_mul(ps, phi_product(tbl, N)))
    reduced = residue(series_mul(ps, weakest_product(tbl.a, N)))
    return ReductionReport(
        D=D, N=N,
        same_a=mismatch is None and len(tbl.a) == len(a2),
        full_residue_zero=all(v == 0 for v in full),
        reduced_residue_zero=all(v == 0 for v in reduced),
        first_mismatch=mismatch,
    )


def weak_residues(tbl: DimTable, N: int) -> tuple[list[int], list[int]]:
    """(Res (1/t - 1) Phi, Res (1 - t) Phi) per z-degree."""
    phi = phi_product(tbl, N)
    l0 = [_res_l0(c) for c in phi.coeffs]
    l2 = [_res_l2(c) for c in phi.coeffs]
    return l0, l2


class SolutionCache:
    """JSON files keyed by (form, D, N); big integers stored as decimal strings."""

    def __init__(self, root: str | os.PathLike | None = None):
        if root is None:
            root = os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "jordanlab"
        self.root = Path(root)

    def path(self, form: str, D: int, N: int) -> Path:
        return self.root / ("%s_D%d_N%d.json" % (form, D, N))

    def load(self, form: str, D: int, N: int) -> DimTable | None:
        p = self.path(form, D, N)
        if p.exists():
            return self._read(p)
        # any longer solve contains this one as a prefix
        best = None
        for q in self.root.glob("%s_D%d_N*.json" % (form, D)):
            try:
                m = int(q.stem.rsplit("_N", 1)[1])
            except ValueError:
                continue
            if m >= N and (best is None or m < best[0]):
                best = (m, q)
        if best is None:
            return None
        return self._read(best[1]).truncate(N)

    def _read(self, p: Path) -> DimTable:
        rec = json.loads(p.read_text())
        return DimTable(rec["D"], rec["N"], [int(x) for x in rec["a"]], [int(x) for x in rec["b"]])

    def store(self, form: str, tbl: DimTable) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        rec = {"form": form, "D": tbl.D, "N": tbl.N,
               "a": [str(x) for x in tbl.a], "b": [str(x) for x in tbl.b]}
        p = self.path(form, tbl.D, tbl.N)
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps(rec, sort_keys=True))
        tmp.replace(p)
        return p
