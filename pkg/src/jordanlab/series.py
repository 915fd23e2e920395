"""
Exact arithmetic in Z[t, 1/t][[z]] truncated at a fixed z-degree.

LaurentPoly holds a finite integer Laurent polynomial in t; TSeries is a
dense vector of LaurentPoly coefficients indexed by z-degree 0..trunc.
The PSL(2) multiplicity extractors at the bottom read off [a : L(2k)]
from the t-coefficients of a symmetric polynomial.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Integer Laurent polynomial in t, stored as a sparse exponent map."""

    __slots__ = ("_c", "_lo", "_hi", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        if c:
            self._lo = min(c)
            self._hi = max(c)
        else:
            self._lo = self._hi = None
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # c must already be free of zeros
        obj = cls.__new__(cls)
        obj._c = c
        if c:
            obj._lo = min(c)
            obj._hi = max(c)
        else:
            obj._lo = obj._hi = None
        obj._hash = None
        return obj

    @classmethod
    def const(cls, v: int) -> "LaurentPoly":
        return cls({0: v})

    @classmethod
    def monomial(cls, e: int, v: int = 1) -> "LaurentPoly":
        return cls({e: v})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    @property
    def min_exp(self):
        return self._lo

    @property
    def max_exp(self):
        return self._hi

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_symmetric(self) -> bool:
        c = self._c
        return all(c.get(-e, 0) == v for e, v in c.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for e2, v2 in b.items():
            for e1, v1 in a.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        return "LaurentPoly(%s)" % self.to_str()

    def to_str(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                parts.append(str(v))
            else:
                mono = var if e == 1 else "%s^%d" % (var, e)
                if v == 1:
                    parts.append(mono)
                elif v == -1:
                    parts.append("-" + mono)
                else:
                    parts.append("%d*%s" % (v, mono))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1)
TINV = LaurentPoly.monomial(-1)


def P(n: int) -> LaurentPoly:
    """t^-n + ... + t^n, the character of L(2n)."""
    if n < 0:
        raise ValueError("P_n needs n >= 0")
    return LaurentPoly({e: 1 for e in range(-n, n + 1)})


class TruncationMismatch(ValueError):
    pass


class TSeries:
    """Power series in z with LaurentPoly coefficients, truncated at z^trunc."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, trunc: int, coeffs: Iterable | None = None):
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        cs = []
        if coeffs is not None:
            for c in coeffs:
                if isinstance(c, int):
                    c = LaurentPoly.const(c)
                elif isinstance(c, Mapping):
                    c = LaurentPoly(c)
                cs.append(c)
        if len(cs) > trunc + 1:
            # higher terms are simply not representable at this truncation
            cs = cs[: trunc + 1]
        cs.extend([ZERO] * (trunc + 1 - len(cs)))
        self.trunc = trunc
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, trunc: int) -> "TSeries":
        return cls(trunc, [ONE])

    @classmethod
    def from_terms(cls, trunc: int, terms: Mapping[tuple[int, int], int]) -> "TSeries":
        """Build from {(z_degree, t_exponent): coeff}; terms above trunc are dropped."""
        rows: list[dict[int, int]] = [{} for _ in range(trunc + 1)]
        for (d, e), v in terms.items():
            if 0 <= d <= trunc:
                rows[d][e] = rows[d].get(e, 0) + v
        return cls(trunc, [LaurentPoly(r) for r in rows])

    def __getitem__(self, d: int) -> LaurentPoly:
        return self.coeffs[d]

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def _check(self, other: "TSeries"):
        if self.trunc != other.trunc:
            raise TruncationMismatch(
                "truncation degrees differ: %d vs %d" % (self.trunc, other.trunc))

    def __add__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check(other)
        return TSeries(self.trunc, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check(other)
        return TSeries(self.trunc, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TSeries(self.trunc, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return TSeries(self.trunc, [a * other for a in self.coeffs])
        if not isinstance(other, TSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        return series_pow(self, m)

    def is_unit(self) -> bool:
        return self.coeffs[0] == ONE

    def support(self) -> list[int]:
        return [d for d, c in enumerate(self.coeffs) if c]

    def evaluate_t_at_one(self) -> list[int]:
        return [c.evaluate_at_one() for c in self.coeffs]

    def __repr__(self):
        parts = []
        for d, c in enumerate(self.coeffs):
            if c:
                parts.append("(%s)*z^%d" % (c.to_str(), d))
        return "TSeries(%d, %s)" % (self.trunc, " + ".join(parts) or "0")


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product truncated at the common truncation degree."""
    a._check(b)
    N = a.trunc
    ai = [(i, c) for i, c in enumerate(a.coeffs) if c]
    bj = [(j, c) for j, c in enumerate(b.coeffs) if c]
    out = [ZERO] * (N + 1)
    for i, ca in ai:
        for j, cb in bj:
            if i + j > N:
                break
            out[i + j] = out[i + j] + ca * cb
    return TSeries(N, out)


def series_inv(a: TSeries) -> TSeries:
    """Inverse of a series whose constant term is exactly 1."""
    if a.coeffs[0] != ONE:
        raise ValueError("series_inv needs constant term 1, got %s" % a.coeffs[0].to_str())
    N = a.trunc
    nz = [(i, c) for i, c in enumerate(a.coeffs) if c and i > 0]
    b = [ONE] + [ZERO] * N
    for k in range(1, N + 1):
        acc = ZERO
        for i, c in nz:
            if i > k:
                break
            if b[k - i]:
                acc = acc + c * b[k - i]
        b[k] = -acc
    return TSeries(N, b)


def series_pow(a: TSeries, m: int) -> TSeries:
    """a**m by binary powering; negative m goes through series_inv."""
    if m < 0:
        if not a.is_unit():
            raise ValueError("negative power of a non-unit series")
        a = series_inv(a)
        m = -m
    result = TSeries.one(a.trunc)
    base = a
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def residue(f):
    """Coefficient of t^-1; applied per z-degree for a TSeries."""
    if isinstance(f, TSeries):
        return [c[-1] for c in f.coeffs]
    if isinstance(f, LaurentPoly):
        return f[-1]
    raise TypeError("residue expects LaurentPoly or TSeries")


class AsymmetricCharacter(ValueError):
    pass


def multiplicity(a: LaurentPoly, k: int) -> int:
    """[a : L(2k)] = c_k - c_{k+1} for a symmetric Laurent polynomial."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if not a.is_symmetric():
        raise AsymmetricCharacter("%s is not symmetric under t <-> 1/t" % a.to_str())
    return a[k] - a[k + 1]


def decompose(a: LaurentPoly) -> dict[int, int]:
    """All nonzero multiplicities {k: [a : L(2k)]}."""
    if not a.is_symmetric():
        raise AsymmetricCharacter("%s is not symmetric under t <-> 1/t" % a.to_str())
    if not a:
        return {}
    out = {}
    for k in range(0, a.max_exp + 1):
        m = a[k] - a[k + 1]
        if m:
            out[k] = m
    return out
