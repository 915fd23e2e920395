"""
Brute-force ground truth inside the tensor algebra T(D).

Words are tuples of letter indices 0..D-1 (printed 1-based).  Every space
computed here is multigraded, so bases are built one multidegree component
at a time and glued as direct sums.  Spaces fixed (or negated) by word
reversal are eliminated in orbit coordinates: one column per reversal
orbit {w, reversed(w)}, keyed by the lexicographically smaller word.

Echelon forms are exact: integer matrices are reduced with FLINT's
fraction-free rref, and a SpanBasis stores the reduced rows together with
their common denominator.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Iterator, Mapping

import flint

from .series import ONE, LaurentPoly, T, TINV, TSeries, P, residue, series_mul

Word = tuple[int, ...]
SparseVec = dict  # Word -> int or Fraction, no zero entries

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


def word_str(w: Word) -> str:
    return "".join(str(x + 1) for x in w)


def parse_word(s: str) -> Word:
    return tuple(int(ch) - 1 for ch in s)


class SpanBasis:
    """Reduced row echelon basis of a subspace of homogeneous tensors.

    symmetry is +1 for reversal-fixed spaces, -1 for reversal-negated ones
    and 0 for no assumed symmetry.  Rows are stored in compressed
    coordinates as integer numerators over a common denominator.
    """

    def __init__(self, columns: list[Word], rows: list[dict[Word, int]], den: int, symmetry: int):
        self.columns = columns
        self._rows = rows
        self.den = den
        self.symmetry = symmetry

    @classmethod
    def empty(cls, symmetry: int = 0) -> "SpanBasis":
        return cls([], [], 1, symmetry)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Mapping[Word, int]], symmetry: int = 0,
                     budget: int = DEFAULT_BUDGET) -> "SpanBasis":
        """Echelonize integer (or rational) vectors given in full word coordinates."""
        comp = []
        for v in vectors:
            cv = _compress(v, symmetry)
            if cv:
                comp.append(cv)
        return cls._from_compressed(comp, symmetry, budget)

    @classmethod
    def _from_compressed(cls, comp: list[dict[Word, object]], symmetry: int, budget: int) -> "SpanBasis":
        if not comp:
            return cls.empty(symmetry)
        comp = [_integral(v) for v in comp]
        nnz = sum(len(v) for v in comp)
        if nnz > budget:
            raise BudgetExceeded("%d nonzero generator entries exceed the budget %d" % (nnz, budget))
        columns = sorted({w for v in comp for w in v})
        index = {w: i for i, w in enumerate(columns)}
        ncols = len(columns)
        dense = []
        for v in comp:
            row = [0] * ncols
            for w, c in v.items():
                row[index[w]] = c
            dense.append(row)
        R, den, rank = flint.fmpz_mat(dense).rref()
        rows = []
        for r in R.tolist()[:rank]:
            rows.append({columns[j]: int(c) for j, c in enumerate(r) if c != 0})
        used = sorted({w for r in rows for w in r})
        return cls(used, rows, int(den) if rows else 1, symmetry)

    @classmethod
    def direct_sum(cls, parts: Iterable["SpanBasis"]) -> "SpanBasis":
        """Glue bases living on disjoint columns (different multidegrees)."""
        parts = [p for p in parts if p.rank]
        if not parts:
            return cls.empty()
        sym = {p.symmetry for p in parts}
        if len(sym) != 1:
            raise ValueError("cannot glue bases with different symmetries")
        rows = []
        seen: set = set()
        for p in parts:
            cols = set(p.columns)
            if seen & cols:
                raise ValueError("direct_sum parts overlap")
            seen |= cols
            for r in p._rows:
                rows.append({w: Fraction(c, p.den) for w, c in r.items()})
        return cls._from_rational_rref(rows, sym.pop())

    @classmethod
    def _from_rational_rref(cls, rows: list[dict[Word, Fraction]], symmetry: int) -> "SpanBasis":
        # rows are already in reduced echelon form; bring to a common denominator
        den = 1
        for r in rows:
            for c in r.values():
                den = den * c.denominator // gcd(den, c.denominator)
        rows = sorted(rows, key=lambda r: min(r))
        irows = [{w: int(c * den) for w, c in r.items()} for r in rows]
        cols = sorted({w for r in irows for w in r})
        return cls(cols, irows, den, symmetry)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> list[Word]:
        return [min(r) for r in self._rows]

    def compressed_rows(self) -> list[dict[Word, Fraction]]:
        return [{w: Fraction(c, self.den) for w, c in r.items()} for r in self._rows]

    def rows(self) -> list[dict[Word, Fraction]]:
        """Rows in full word coordinates, pivot coefficient 1."""
        return [_expand({w: Fraction(c, self.den) for w, c in r.items()}, self.symmetry)
                for r in self._rows]

    def int_rows(self) -> Iterator[dict[Word, int]]:
        """Rows scaled by the common denominator, in full word coordinates."""
        for r in self._rows:
            yield _expand(r, self.symmetry)

    def key(self) -> tuple:
        """Canonical fingerprint: two bases of the same space have equal keys."""
        return tuple(tuple(sorted(r.items())) for r in self.compressed_rows())

    def __eq__(self, other):
        if not isinstance(other, SpanBasis):
            return NotImplemented
        return self.symmetry == other.symmetry and self.key() == other.key()

    def contains(self, vec: Mapping[Word, int]) -> bool:
        cv = _compress(vec, self.symmetry) if self.symmetry else dict(vec)
        if not cv:
            return True
        both = self._from_compressed([dict(r) for r in self._rows] + [cv], self.symmetry, DEFAULT_BUDGET)
        return both.rank == self.rank

    def contains_span(self, other: "SpanBasis") -> bool:
        if other.rank == 0:
            return True
        if self.symmetry != other.symmetry:
            raise ValueError("bases have different symmetries")
        both = self._from_compressed([dict(r) for r in self._rows] + [dict(r) for r in other._rows],
                                     self.symmetry, DEFAULT_BUDGET)
        return both.rank == self.rank

    def to_jsonl(self) -> str:
        lines = []
        for row in self.rows():
            rec = {word_str(w): _qstr(c) for w, c in sorted(row.items())}
            lines.append(json.dumps(rec, sort_keys=False))
        return "\n".join(lines) + ("\n" if lines else "")

    def __repr__(self):
        return "SpanBasis(rank=%d, symmetry=%+d)" % (self.rank, self.symmetry)


def _qstr(c: Fraction) -> str:
    return "%d/%d" % (c.numerator, c.denominator)


def _integral(v: Mapping[Word, object]) -> dict[Word, int]:
    if all(isinstance(c, int) for c in v.values()):
        return dict(v)
    den = 1
    for c in v.values():
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    return {w: int(Fraction(c) * den) for w, c in v.items()}


def _compress(v: Mapping[Word, object], symmetry: int) -> dict[Word, object]:
    if symmetry == 0:
        return {w: c for w, c in v.items() if c}
    out = {}
    for w, c in v.items():
        if not c:
            continue
        r = w[::-1]
        if w < r:
            out[w] = c
        elif w == r:
            if symmetry < 0:
                raise ValueError("reversal-negated vector has a palindrome coordinate")
            out[w] = c
        # coordinates on the larger word of each orbit are implied
    return out


def _expand(v: Mapping[Word, object], symmetry: int) -> dict:
    if symmetry == 0:
        return dict(v)
    out = {}
    for w, c in v.items():
        out[w] = c
        r = w[::-1]
        if r != w:
            out[r] = c if symmetry > 0 else -c
    return out


# products in the tensor algebra


def _assoc(u: Mapping[Word, int], v: Mapping[Word, int]) -> dict[Word, int]:
    out: dict[Word, int] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            w = a + b
            out[w] = out.get(w, 0) + ca * cb
    return out


def jordan(u: Mapping[Word, int], v: Mapping[Word, int]) -> dict[Word, int]:
    """uv + vu, i.e. twice the Jordan product (scaling does not change spans)."""
    out: dict[Word, int] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            c = ca * cb
            w = a + b
            out[w] = out.get(w, 0) + c
            w = b + a
            out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def bracket(u: Mapping[Word, int], v: Mapping[Word, int]) -> dict[Word, int]:
    """Commutator uv - vu."""
    out: dict[Word, int] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            c = ca * cb
            w = a + b
            out[w] = out.get(w, 0) + c
            w = b + a
            out[w] = out.get(w, 0) - c
    return {w: c for w, c in out.items() if c}


# multidegree bookkeeping


def compositions(n: int, D: int) -> Iterator[tuple[int, ...]]:
    """All multidegrees (m_1..m_D) with sum n, in lexicographically decreasing order."""
    if D == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, D - 1):
            yield (first,) + rest


def words_of(m: tuple[int, ...]) -> list[Word]:
    letters = [i for i, k in enumerate(m) for _ in range(k)]
    return sorted(set(itertools.permutations(letters)))


def _count_words(m: tuple[int, ...]) -> int:
    n = factorial(sum(m))
    for k in m:
        n //= factorial(k)
    return n


def _sub_multidegrees(m: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Unordered splits m = m1 + m2 with both parts nonzero, m1 <= m2."""
    for m1 in itertools.product(*(range(k + 1) for k in m)):
        m2 = tuple(a - b for a, b in zip(m, m1))
        if not any(m1) or not any(m2):
            continue
        if m1 <= m2:
            yield m1, m2


def _normalize_multidegree(multidegree, D: int) -> tuple[int, ...]:
    m = tuple(int(x) for x in multidegree)
    if len(m) > D:
        raise ValueError("multidegree %r has more than D=%d entries" % (m, D))
    return m + (0,) * (D - len(m))


def _check_budget(m: tuple[int, ...], budget: int):
    nw = _count_words(m)
    if nw > budget:
        raise BudgetExceeded("component %r has %d words, budget %d" % (m, nw, budget))


class JordanOracle:
    """Memoized component bases for one alphabet size D."""

    def __init__(self, D: int, budget: int = DEFAULT_BUDGET):
        if D < 1:
            raise ValueError("D must be >= 1")
        self.D = D
        self.budget = budget
        self._sj: dict[tuple[int, ...], SpanBasis] = {}
        self._cj: dict[tuple[int, ...], SpanBasis] = {}
        self._icj: dict[tuple[int, ...], SpanBasis] = {}
        self._isj: dict[tuple[int, ...], SpanBasis] = {}

    # component spaces

    def sj(self, m: tuple[int, ...]) -> SpanBasis:
        """Jordan polynomials of multidegree m in the tensor algebra."""
        if m in self._sj:
            return self._sj[m]
        _check_budget(m, self.budget)
        n = sum(m)
        if n == 1:
            i = m.index(1)
            basis = SpanBasis.from_vectors([{(i,): 1}], symmetry=1)
        else:
            gens = []
            for m1, m2 in _sub_multidegrees(m):
                b1 = list(self.sj(m1).int_rows())
                b2 = b1 if m1 == m2 else list(self.sj(m2).int_rows())
                for i, u in enumerate(b1):
                    for j, v in enumerate(b2):
                        if m1 == m2 and j < i:
                            continue
                        p = jordan(u, v)
                        if p:
                            gens.append(p)
            basis = SpanBasis.from_vectors(gens, symmetry=1, budget=self.budget)
        self._sj[m] = basis
        return basis

    def cj(self, m: tuple[int, ...]) -> SpanBasis:
        """Reversal-fixed tensors of multidegree m, spanned by w + reversed(w)."""
        if m in self._cj:
            return self._cj[m]
        _check_budget(m, self.budget)
        gens = []
        for w in words_of(m):
            r = w[::-1]
            if w <= r:
                gens.append({w: 2} if w == r else {w: 1, r: 1})
        basis = SpanBasis.from_vectors(gens, symmetry=1, budget=self.budget)
        self._cj[m] = basis
        return basis

    def inner_cj(self, m: tuple[int, ...]) -> SpanBasis:
        """sum_i [x_i, CJ] in multidegree m."""
        if m in self._icj:
            return self._icj[m]
        _check_budget(m, self.budget)
        gens = []
        if sum(m) >= 2:
            for i in range(self.D):
                if m[i] == 0:
                    continue
                rest = tuple(k - (1 if j == i else 0) for j, k in enumerate(m))
                for v in self.cj(rest).int_rows():
                    p = bracket({(i,): 1}, v)
                    if p:
                        gens.append(p)
        basis = SpanBasis.from_vectors(gens, symmetry=-1, budget=self.budget)
        self._icj[m] = basis
        return basis

    def inner_sj(self, m: tuple[int, ...]) -> SpanBasis:
        """[SJ, SJ] in multidegree m."""
        if m in self._isj:
            return self._isj[m]
        _check_budget(m, self.budget)
        gens = []
        for m1, m2 in _sub_multidegrees(m):
            b1 = list(self.sj(m1).int_rows())
            b2 = b1 if m1 == m2 else list(self.sj(m2).int_rows())
            for i, u in enumerate(b1):
                for j, v in enumerate(b2):
                    if m1 == m2 and j <= i:
                        continue
                    p = bracket(u, v)
                    if p:
                        gens.append(p)
        basis = SpanBasis.from_vectors(gens, symmetry=-1, budget=self.budget)
        self._isj[m] = basis
        return basis

    # graded pieces

    def _components(self, n: int, multidegree) -> list[tuple[int, ...]]:
        if multidegree is not None:
            m = _normalize_multidegree(multidegree, self.D)
            if sum(m) != n:
                raise ValueError("multidegree %r does not have total degree %d" % (m, n))
            return [m]
        total = self.D ** n
        if total > self.budget:
            raise BudgetExceeded("D^n = %d exceeds the budget %d" % (total, self.budget))
        return list(compositions(n, self.D))

    def _graded(self, fn, n: int, multidegree) -> SpanBasis:
        return SpanBasis.direct_sum(fn(m) for m in self._components(n, multidegree))

    def span_SJ(self, n: int, multidegree=None) -> SpanBasis:
        return self._graded(self.sj, n, multidegree)

    def span_CJ(self, n: int, multidegree=None) -> SpanBasis:
        return self._graded(self.cj, n, multidegree)

    def span_inner_CJ(self, n: int, multidegree=None) -> SpanBasis:
        return self._graded(self.inner_cj, n, multidegree)

    def span_inner_SJ(self, n: int, multidegree=None) -> SpanBasis:
        return self._graded(self.inner_sj, n, multidegree)

    def dims(self, n: int, multidegree=None) -> dict[str, int]:
        """Ranks of all four spaces, summed component by component."""
        comps = self._components(n, multidegree)
        out = {"SJ": 0, "CJ": 0, "InnerCJ": 0, "InnerSJ": 0}
        for m in comps:
            out["SJ"] += self.sj(m).rank
            out["CJ"] += self.cj(m).rank
            out["InnerCJ"] += self.inner_cj(m).rank
            out["InnerSJ"] += self.inner_sj(m).rank
        out["M"] = out["CJ"] - out["SJ"]
        out["MD"] = out["InnerCJ"] - out["InnerSJ"]
        return out


_ORACLES: dict[int, JordanOracle] = {}


def oracle_for(D: int) -> JordanOracle:
    if D not in _ORACLES:
        _ORACLES[D] = JordanOracle(D)
    return _ORACLES[D]


def span_SJ(n: int, D: int, multidegree=None) -> SpanBasis:
    return oracle_for(D).span_SJ(n, multidegree)


def span_CJ(n: int, D: int, multidegree=None) -> SpanBasis:
    return oracle_for(D).span_CJ(n, multidegree)


def span_inner_CJ(n: int, D: int, multidegree=None) -> SpanBasis:
    return oracle_for(D).span_inner_CJ(n, multidegree)


def span_inner_SJ(n: int, D: int, multidegree=None) -> SpanBasis:
    return oracle_for(D).span_inner_SJ(n, multidegree)


def multilinear_dims(D: int) -> dict[str, int]:
    """Dimensions of the multidegree (1,...,1) components in D letters."""
    return oracle_for(D).dims(D, (1,) * D)


def multidegree_of(w: Word, D: int) -> tuple[int, ...]:
    m = [0] * D
    for x in w:
        m[x] += 1
    return tuple(m)


def weight_character(basis: SpanBasis, D: int) -> dict[tuple[int, ...], int]:
    """Dimension of each multidegree component of a graded basis."""
    out: dict[tuple[int, ...], int] = {}
    for p in basis.pivots:
        m = multidegree_of(p, D)
        out[m] = out.get(m, 0) + 1
    return dict(sorted(out.items(), reverse=True))


def weight_class(weights: Mapping[tuple[int, ...], int], D: int, trunc: int):
    """Monomial-basis CharClass read off the dominant multidegrees."""
    from .characters import CharClass
    full = {(m, 0): v for m, v in weights.items()}
    return CharClass.from_full(D, trunc, full)


# the brute-force route: every commutative bracketing of a multiset


def jordan_monomials(m: tuple[int, ...]) -> list[dict[Word, int]]:
    """Expansions of all Jordan monomials of multidegree m (no basis reuse)."""
    return [dict(v) for v in _jordan_monomials(m)]


@lru_cache(maxsize=None)
def _jordan_monomials(m: tuple[int, ...]) -> tuple[tuple[tuple[Word, int], ...], ...]:
    if sum(m) == 1:
        return ((((m.index(1),), 1),),)
    seen = set()
    out = []
    for m1, m2 in _sub_multidegrees(m):
        left = _jordan_monomials(m1)
        right = _jordan_monomials(m2)
        for i, u in enumerate(left):
            for j, v in enumerate(right):
                if m1 == m2 and j < i:
                    continue
                p = tuple(sorted(jordan(dict(u), dict(v)).items()))
                if p and p not in seen:
                    seen.add(p)
                    out.append(p)
    return tuple(out)


# Jacobi triple product


@dataclass
class JacobiReport:
    N: int
    product_equals_sum: bool
    l0_residue_is_one: bool
    l2_residue_is_minus_z: bool

    @property
    def passed(self) -> bool:
        return self.product_equals_sum and self.l0_residue_is_one and self.l2_residue_is_minus_z


def jacobi_triple_check(N: int) -> JacobiReport:
    """prod (1 - z^n t)(1 - z^n/t)(1 - z^n) against sum (-1)^n z^(n(n+1)/2) P_n."""
    prod = TSeries.one(N)
    for n in range(1, N + 1):
        for p in (T, TINV, ONE):
            f = [ONE] + [LaurentPoly()] * N
            f[n] = -p
            prod = series_mul(prod, TSeries(N, f))
    terms = [LaurentPoly()] * (N + 1)
    k = 0
    while k * (k + 1) // 2 <= N:
        d = k * (k + 1) // 2
        terms[d] = terms[d] + P(k) * (-1) ** k
        k += 1
    total = TSeries(N, terms)
    l0 = residue(prod * (TINV - ONE))
    l2 = residue(prod * (ONE - T))
    want_l2 = [0] * (N + 1)
    if N >= 1:
        want_l2[1] = -1
    return JacobiReport(
        N=N,
        product_equals_sum=prod == total,
        l0_residue_is_one=l0 == [1] + [0] * N,
        l2_residue_is_minus_z=l2 == want_l2,
    )
