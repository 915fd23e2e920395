"""
Truncated virtual characters of GL(D) x PSL(2).

A CharClass is a symmetric polynomial in z_1..z_D (total degree <= trunc)
with Laurent coefficients in t, stored on the monomial symmetric basis:
terms[(lam, j)] is the coefficient of m_lam * t^j.  The lambda operation
expands every m_lam into its monomial orbit and multiplies the factors
(1 - z^alpha t^j)^mult; Schur coefficients come from peeling off the
lexicographically largest monomial (Kostka triangularity).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .partitions import Partition, partitions
from .series import AsymmetricCharacter, LaurentPoly

ENVELOPE_D = 6
ENVELOPE_N = 12


class EnvelopeExceeded(ValueError):
    pass


def check_envelope(D: int, N: int, force: bool = False):
    if force:
        return
    if D > ENVELOPE_D or N > ENVELOPE_N:
        raise EnvelopeExceeded(
            "D=%d, N=%d is outside the supported envelope D<=%d, N<=%d "
            "(pass force_envelope to override)" % (D, N, ENVELOPE_D, ENVELOPE_N))


@lru_cache(maxsize=None)
def orbit(lam: Partition, D: int) -> tuple[tuple[int, ...], ...]:
    """Distinct exponent vectors of length D that sort to lam."""
    if len(lam) > D:
        return ()
    padded = tuple(lam) + (0,) * (D - len(lam))
    return tuple(sorted(set(itertools.permutations(padded)), reverse=True))


def orbit_size(lam: Partition, D: int) -> int:
    if len(lam) > D:
        return 0
    padded = tuple(lam) + (0,) * (D - len(lam))
    n = D
    size = 1
    for v in set(padded):
        k = padded.count(v)
        size *= comb(n, k)
        n -= k
    return size


def _sort_key(v: tuple[int, ...]) -> Partition:
    return Partition(sorted((x for x in v if x), reverse=True))


def _is_dominant(v: tuple[int, ...]) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


@lru_cache(maxsize=None)
def _targets(D: int, N: int) -> tuple[Partition, ...]:
    out = []
    for n in range(N + 1):
        out.extend(partitions(n, max_parts=D))
    return tuple(out)


@lru_cache(maxsize=None)
def _splits(nu: Partition, D: int) -> tuple[tuple[Partition, Partition], ...]:
    # all (sort(alpha), sort(nu - alpha)) for 0 <= alpha <= nu componentwise
    padded = tuple(nu) + (0,) * (D - len(nu))
    out = []
    for alpha in itertools.product(*(range(x + 1) for x in padded)):
        beta = tuple(x - y for x, y in zip(padded, alpha))
        out.append((_sort_key(alpha), _sort_key(beta)))
    return tuple(out)


class CharClass:
    """Truncated symmetric character; immutable."""

    __slots__ = ("D", "trunc", "terms", "basis")

    def __init__(self, D: int, trunc: int, terms: Mapping | None = None, basis: str = "monomial"):
        if basis not in ("monomial", "schur"):
            raise ValueError("basis must be 'monomial' or 'schur'")
        clean: dict[tuple[Partition, int], int] = {}
        for (lam, j), v in (terms or {}).items():
            if not v:
                continue
            lam = Partition(lam)
            if len(lam) > D:
                if basis == "schur":
                    # L(Y; D) = 0 when the height exceeds D
                    continue
                raise ValueError("partition %s has more than D=%d parts" % (lam.key(), D))
            if lam.size > trunc:
                continue
            key = (lam, int(j))
            s = clean.get(key, 0) + v
            if s:
                clean[key] = s
            else:
                clean.pop(key, None)
        self.D = D
        self.trunc = trunc
        self.terms = clean
        self.basis = basis

    # construction helpers

    @classmethod
    def one(cls, D: int, trunc: int) -> "CharClass":
        return cls(D, trunc, {(Partition(()), 0): 1})

    @classmethod
    def zero(cls, D: int, trunc: int) -> "CharClass":
        return cls(D, trunc, {})

    @classmethod
    def natural(cls, D: int, trunc: int) -> "CharClass":
        """[K^D] = z_1 + ... + z_D."""
        return cls(D, trunc, {(Partition((1,)), 0): 1})

    @classmethod
    def power_sum(cls, k: int, D: int, trunc: int) -> "CharClass":
        return cls(D, trunc, {(Partition((k,)), 0): 1})

    @classmethod
    def from_full(cls, D: int, trunc: int, full: Mapping[tuple[tuple[int, ...], int], int]) -> "CharClass":
        """Keep the dominant exponent vectors of a symmetric polynomial."""
        terms = {}
        for (v, j), x in full.items():
            if x and _is_dominant(v):
                terms[(_sort_key(v), j)] = x
        return cls(D, trunc, terms)

    def to_full(self) -> dict[tuple[tuple[int, ...], int], int]:
        self._need("monomial")
        full: dict = {}
        for (lam, j), v in self.terms.items():
            for alpha in orbit(lam, self.D):
                full[(alpha, j)] = v
        return full

    # comparisons and linear structure

    def _need(self, basis: str):
        if self.basis != basis:
            raise ValueError("operation needs the %s basis, got %s" % (basis, self.basis))

    def _check(self, other: "CharClass"):
        if self.D != other.D or self.trunc != other.trunc or self.basis != other.basis:
            raise ValueError("incompatible classes: (D=%d, N=%d, %s) vs (D=%d, N=%d, %s)" % (
                self.D, self.trunc, self.basis, other.D, other.trunc, other.basis))

    def __eq__(self, other):
        if not isinstance(other, CharClass):
            return NotImplemented
        return (self.D, self.trunc, self.basis, self.terms) == (other.D, other.trunc, other.basis, other.terms)

    def __hash__(self):
        return hash((self.D, self.trunc, self.basis, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return CharClass(self.D, self.trunc, t, self.basis)

    def __neg__(self):
        return CharClass(self.D, self.trunc, {k: -v for k, v in self.terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "CharClass":
        return CharClass(self.D, self.trunc, {key: k * v for key, v in self.terms.items()}, self.basis)

    def __rmul__(self, k):
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, LaurentPoly):
            return self.times_t(other)
        if isinstance(other, CharClass):
            return char_mul(self, other)
        return NotImplemented

    def times_t(self, p: LaurentPoly) -> "CharClass":
        """Multiply by a pure PSL(2) class such as P_k."""
        t: dict = {}
        for (lam, j), v in self.terms.items():
            for e, w in p.items():
                key = (lam, j + e)
                t[key] = t.get(key, 0) + v * w
        return CharClass(self.D, self.trunc, t, self.basis)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {lam.size for lam, _ in self.terms}

    def degree_part(self, n: int) -> "CharClass":
        return CharClass(self.D, self.trunc, {k: v for k, v in self.terms.items() if k[0].size == n}, self.basis)

    def with_trunc(self, trunc: int) -> "CharClass":
        return CharClass(self.D, trunc, self.terms, self.basis)

    def t_poly(self) -> dict[Partition, LaurentPoly]:
        """Group terms as {lam: Laurent polynomial in t}."""
        g: dict[Partition, dict[int, int]] = defaultdict(dict)
        for (lam, j), v in self.terms.items():
            g[lam][j] = v
        return {lam: LaurentPoly(c) for lam, c in g.items()}

    def is_t_symmetric(self) -> bool:
        return all(self.terms.get((lam, -j), 0) == v for (lam, j), v in self.terms.items())

    def has_constant_term(self) -> bool:
        return any(lam.size == 0 for lam, _ in self.terms)

    def specialize(self) -> dict[int, LaurentPoly]:
        """Set every z_i = 1 keeping the z-grading: {degree: poly in t}."""
        out: dict[int, dict[int, int]] = defaultdict(dict)
        for (lam, j), v in self.terms.items():
            if self.basis == "monomial":
                w = v * orbit_size(lam, self.D)
            else:
                from .partitions import dim_gl
                w = v * dim_gl(lam, self.D)
            d = out[lam.size]
            d[j] = d.get(j, 0) + w
        return {n: LaurentPoly(c) for n, c in sorted(out.items())}

    def dimensions(self) -> dict[int, int]:
        """Total dimension per degree (z_i = 1 and t = 1)."""
        return {n: p.evaluate_at_one() for n, p in self.specialize().items() if p.evaluate_at_one()}

    def __repr__(self):
        body = " + ".join("%d*%s[%s]t^%d" % (v, "m" if self.basis == "monomial" else "s", lam.key(), j)
                          for (lam, j), v in sorted(self.terms.items(), key=lambda kv: (kv[0][0].size, kv[0])))
        return "CharClass(D=%d, N=%d, %s)" % (self.D, self.trunc, body or "0")


def char_mul(a: CharClass, b: CharClass) -> CharClass:
    """Product in the monomial basis, truncated at total z-degree N."""
    a._check(b)
    a._need("monomial")
    D, N = a.D, a.trunc
    ga, gb = a.t_poly(), b.t_poly()
    if not ga or not gb:
        return CharClass.zero(D, N)
    da = {lam.size for lam in ga}
    db = {lam.size for lam in gb}
    sums = {x + y for x in da for y in db if x + y <= N}
    out: dict = {}
    for nu in _targets(D, N):
        if nu.size not in sums:
            continue
        acc = LaurentPoly()
        for ka, kb in _splits(nu, D):
            pa = ga.get(ka)
            if pa is None:
                continue
            pb = gb.get(kb)
            if pb is None:
                continue
            acc = acc + pa * pb
        for j, v in acc.items():
            out[(nu, j)] = v
    return CharClass(D, N, out)


def _mul_weight_power(full: dict, alpha: tuple[int, ...], deg: int, j: int, m: int, N: int) -> dict:
    """full * (1 - z^alpha t^j)^m, truncated at total degree N."""
    kmax = N // deg
    coef = []
    for k in range(1, kmax + 1):
        # generalized binomial: coefficient of x^k in (1 - x)^m
        c = (-1) ** k * _binom(m, k)
        if c:
            coef.append((k, c))
    if not coef:
        return full
    out = dict(full)
    for (v, e), x in full.items():
        room = N - sum(v)
        for k, c in coef:
            if k * deg > room:
                break
            w = tuple(p + k * q for p, q in zip(v, alpha))
            key = (w, e + k * j)
            s = out.get(key, 0) + x * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _binom(m: int, k: int) -> int:
    # binomial coefficient valid for negative m
    num = 1
    for i in range(k):
        num *= m - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


def lambda_full(c: CharClass, start: dict | None = None) -> dict:
    """Multiply start (default 1) by lambda(c) in the full exponent representation."""
    c._need("monomial")
    if c.has_constant_term():
        raise ValueError("lambda needs a class with zero constant term")
    D, N = c.D, c.trunc
    full = dict(start) if start is not None else {((0,) * D, 0): 1}
    for (lam, j), m in sorted(c.terms.items(), key=lambda kv: (kv[0][0].size, kv[0][0], kv[0][1])):
        deg = lam.size
        for alpha in orbit(lam, D):
            full = _mul_weight_power(full, alpha, deg, j, m, N)
    return full


def lambda_class(c: CharClass) -> CharClass:
    """lambda(c) = prod over weights z^alpha t^j of (1 - z^alpha t^j)^mult."""
    return CharClass.from_full(c.D, c.trunc, lambda_full(c))


# Schur functions


def _msym_mul(a: Mapping[Partition, int], b: Mapping[Partition, int], D: int) -> dict[Partition, int]:
    """Product of symmetric polynomials given on the monomial basis (no truncation)."""
    if not a or not b:
        return {}
    sizes = {x.size + y.size for x in a for y in b}
    out: dict[Partition, int] = {}
    for n in sizes:
        for nu in partitions(n, max_parts=D):
            s = 0
            for ka, kb in _splits(nu, D):
                va = a.get(ka)
                if va is None:
                    continue
                vb = b.get(kb)
                if vb is None:
                    continue
                s += va * vb
            if s:
                out[nu] = s
    return out


@lru_cache(maxsize=None)
def _h(k: int, D: int) -> tuple:
    if k < 0:
        return ()
    return tuple((lam, 1) for lam in partitions(k, max_parts=D))


@lru_cache(maxsize=None)
def schur_monomial(Y: Partition, D: int) -> tuple[tuple[Partition, int], ...]:
    """s_Y(z_1..z_D) on the monomial basis via the Jacobi-Trudi determinant."""
    Y = Partition(Y)
    if len(Y) > D:
        return ()
    if not Y:
        return ((Partition(()), 1),)
    l = len(Y)
    hs = {}

    def h(k):
        if k not in hs:
            hs[k] = dict(_h(k, D))
        return hs[k]

    memo: dict = {}

    def det(row: int, cols: tuple[int, ...]) -> dict[Partition, int]:
        # Laplace expansion along `row` over the remaining columns
        if row == l:
            return {Partition(()): 1}
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc: dict[Partition, int] = {}
        for pos, col in enumerate(cols):
            k = Y[row] - row + col
            if k < 0:
                continue
            hk = h(k) if k > 0 else {Partition(()): 1}
            sub = det(row + 1, cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            prod = _msym_mul(hk, sub, D)
            sign = -1 if pos % 2 else 1
            for lam, v in prod.items():
                acc[lam] = acc.get(lam, 0) + sign * v
        acc = {lam: v for lam, v in acc.items() if v}
        memo[key] = acc
        return acc

    res = det(0, tuple(range(l)))
    return tuple(sorted(res.items(), reverse=True))


def char_of_schur(Y: Partition, D: int, trunc: int | None = None, j: int = 0) -> CharClass:
    """Character of L(Y; D) (times t^j); zero when height(Y) > D."""
    Y = Partition(Y)
    if trunc is None:
        trunc = Y.size
    return CharClass(D, trunc, {(lam, j): v for lam, v in schur_monomial(Y, D)})


def schur_decompose(c: CharClass) -> dict[tuple[Partition, int], int]:
    """Schur-basis coefficients {(Y, j): mult} of a monomial-basis class."""
    c._need("monomial")
    rest = dict(c.terms)
    out: dict[tuple[Partition, int], int] = {}
    while rest:
        # the largest partition (lexicographically) is the leading Schur term
        lam, j = max(rest, key=lambda k: (k[0].size, tuple(k[0]), k[1]))
        v = rest[(lam, j)]
        out[(lam, j)] = v
        for mu, k in schur_monomial(lam, c.D):
            key = (mu, j)
            s = rest.get(key, 0) - v * k
            if s:
                rest[key] = s
            else:
                rest.pop(key, None)
        if (lam, j) in rest:
            raise ArithmeticError("Schur peeling did not clear the leading term %s" % (lam,))
    return out


def to_schur(c: CharClass) -> CharClass:
    return CharClass(c.D, c.trunc, schur_decompose(c), basis="schur")


def from_schur(D: int, trunc: int, coeffs: Mapping[tuple[Partition, int], int]) -> CharClass:
    """Monomial-basis class from Schur coefficients {(Y, j): mult}."""
    t: dict = {}
    for (Y, j), v in coeffs.items():
        for lam, k in schur_monomial(Partition(Y), D):
            key = (lam, j)
            t[key] = t.get(key, 0) + v * k
    return CharClass(D, trunc, t)


def mult_L2k_char(c: CharClass, k: int) -> CharClass:
    """The GL(D) class [c : L(2k)], extracted per partition as c_k - c_(k+1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if not c.is_t_symmetric():
        raise AsymmetricCharacter("class is not symmetric under t <-> 1/t")
    out = {}
    for lam, p in c.t_poly().items():
        v = p[k] - p[k + 1]
        if v:
            out[(lam, 0)] = v
    return CharClass(c.D, c.trunc, out, c.basis)


def schur_degree_table(coeffs: Mapping[tuple[Partition, int], int]) -> dict[int, dict[Partition, int]]:
    """Regroup t-free Schur coefficients as {degree: {Y: mult}}."""
    out: dict[int, dict[Partition, int]] = defaultdict(dict)
    for (Y, j), v in coeffs.items():
        if j != 0:
            raise ValueError("class has a nonzero t-exponent")
        out[Y.size][Y] = v
    return {n: dict(sorted(d.items(), reverse=True)) for n, d in sorted(out.items())}


def power_product(ks: Iterable[int], D: int, trunc: int) -> CharClass:
    """p_k1 * p_k2 * ... in the monomial basis."""
    acc = CharClass.one(D, trunc)
    for k in ks:
        acc = char_mul(acc, CharClass.power_sum(k, D, trunc))
    return acc
