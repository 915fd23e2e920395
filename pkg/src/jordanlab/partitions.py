"""
Young diagrams, hook formulas and one-box branching between symmetric groups.

Also holds the closed dimension formulas for missing tetrads M_n(D) and
missing derivations MD_n(D), and the Ind-Res construction that produces
the multilinear class of MD(D+1) from that of M(D).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Mapping


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError("partition parts must be positive: %r" % (parts,))
            if i and parts[i - 1] < p:
                raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accept "4,1,1,1,1", "4,1^4" or "(4,1^4)"."""
        text = text.strip().strip("()[]").replace(" ", "")
        if not text:
            return cls(())
        parts = []
        for tok in text.split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError("cannot parse partition %r" % text)
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def column(self, i: int) -> int:
        """Height of the i-th column (1-based)."""
        return sum(1 for p in self if p >= i)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(self.column(i) for i in range(1, self[0] + 1))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def key(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self):
        return "Partition(%s)" % self.key()


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_parts is None:
        max_parts = n

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p, slots - 1):
                yield (p,) + tail

    for parts in rec(n, max_part, max_parts):
        yield Partition(parts)


def hook_lengths(Y: Partition) -> list[int]:
    conj = Y.conjugate()
    return [(Y[i] - j - 1) + (conj[j] - i - 1) + 1 for i, j in Y.cells()]


@lru_cache(maxsize=None)
def dim_sn(Y: Partition) -> int:
    """Dimension of the irreducible S_|Y| module S(Y) (hook length formula)."""
    Y = Partition(Y)
    prod = 1
    for h in hook_lengths(Y):
        prod *= h
    return factorial(Y.size) // prod


@lru_cache(maxsize=None)
def dim_gl(Y: Partition, D: int) -> int:
    """Dimension of L(Y; D) by the hook-content formula; 0 when height > D."""
    Y = Partition(Y)
    if Y.height > D:
        return 0
    num = 1
    for i, j in Y.cells():
        num *= D + j - i
    den = 1
    for h in hook_lengths(Y):
        den *= h
    return num // den


def removable(Y: Partition) -> list[Partition]:
    out = []
    for i in range(len(Y)):
        if i + 1 == len(Y) or Y[i] > Y[i + 1]:
            parts = list(Y)
            parts[i] -= 1
            out.append(Partition(p for p in parts if p))
    return out


def addable(Y: Partition) -> list[Partition]:
    out = []
    for i in range(len(Y) + 1):
        if i == 0 or Y[i - 1] > (Y[i] if i < len(Y) else 0):
            parts = list(Y) + [0]
            parts[i] += 1
            out.append(Partition(p for p in parts if p))
    return out


@dataclass
class VirtualSymClass:
    """Virtual class in K_0(S_n), coefficients keyed by partitions of n."""

    n: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for Y, v in self.coeffs.items():
            Y = Partition(Y)
            if Y.size != self.n:
                raise ValueError("partition %s does not have size %d" % (Y.key(), self.n))
            if v:
                clean[Y] = clean.get(Y, 0) + v
        self.coeffs = {Y: v for Y, v in clean.items() if v}

    @classmethod
    def of(cls, *terms) -> "VirtualSymClass":
        """VirtualSymClass.of((2, "4,1^4"), (1, "3,2,1^3"), ...)."""
        coeffs: dict[Partition, int] = {}
        n = None
        for mult, Y in terms:
            if isinstance(Y, str):
                Y = Partition.parse(Y)
            Y = Partition(Y)
            n = Y.size if n is None else n
            coeffs[Y] = coeffs.get(Y, 0) + mult
        if n is None:
            raise ValueError("empty class needs an explicit size")
        return cls(n, coeffs)

    def __add__(self, other: "VirtualSymClass") -> "VirtualSymClass":
        if self.n != other.n:
            raise ValueError("cannot add classes of sizes %d and %d" % (self.n, other.n))
        c = dict(self.coeffs)
        for Y, v in other.coeffs.items():
            c[Y] = c.get(Y, 0) + v
        return VirtualSymClass(self.n, c)

    def __neg__(self):
        return VirtualSymClass(self.n, {Y: -v for Y, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return VirtualSymClass(self.n, {Y: k * v for Y, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, VirtualSymClass):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def dimension(self) -> int:
        return sum(v * dim_sn(Y) for Y, v in self.coeffs.items())

    def to_json(self) -> dict[str, int]:
        return {Y.key(): v for Y, v in sorted(self.coeffs.items(), reverse=True)}

    def __repr__(self):
        body = " + ".join("%d[%s]" % (v, Y.key()) for Y, v in sorted(self.coeffs.items(), reverse=True))
        return "VirtualSymClass(%d, %s)" % (self.n, body or "0")


def restrict(cls: VirtualSymClass) -> VirtualSymClass:
    """Res from S_n to S_{n-1}: delete one box in every possible way."""
    if cls.n < 1:
        raise ValueError("cannot restrict a class of S_0")
    out: dict[Partition, int] = {}
    for Y, v in cls.coeffs.items():
        for Z in removable(Y):
            out[Z] = out.get(Z, 0) + v
    return VirtualSymClass(cls.n - 1, out)


def induce(cls: VirtualSymClass) -> VirtualSymClass:
    """Ind from S_n to S_{n+1}: add one box in every possible way."""
    out: dict[Partition, int] = {}
    for Y, v in cls.coeffs.items():
        for Z in addable(Y):
            out[Z] = out.get(Z, 0) + v
    return VirtualSymClass(cls.n + 1, out)


def md_class_from_m(cM: VirtualSymClass) -> VirtualSymClass:
    """[MD(D+1)] = Ind Res [M(D)] - [M(D)] in K_0(S_{D+1})."""
    return induce(restrict(cM)) - cM


# Multilinear missing tetrads M(D), as S_{D+1}-classes.
M_CLASSES: dict[int, VirtualSymClass] = {
    4: VirtualSymClass.of((1, "1^5")),
    5: VirtualSymClass.of((1, "2,1^4")),
    6: VirtualSymClass.of((2, "3,1^4")),
    7: VirtualSymClass.of((2, "4,1^4"), (1, "3,2,1^3"), (1, "2^2,1^4"), (1, "3,1^5")),
}

# Multilinear missing derivations MD(D), as S_D-classes.
MD_CLASSES: dict[int, VirtualSymClass] = {
    5: VirtualSymClass.of((1, "2,1^3")),
    6: VirtualSymClass.of((1, "1^6"), (1, "2,1^4"), (1, "3,1^3"), (1, "2^2,1^2")),
    7: VirtualSymClass.of((2, "2,1^5"), (2, "2^2,1^3"), (2, "3,1^4"), (2, "3,2,1^2"), (2, "4,1^3")),
}


def closed_dim_M(n: int, D: int) -> int:
    """dim M_n(D) for n <= 7."""
    if n > 7:
        raise ValueError("no closed formula for dim M_n(D) with n > 7")
    if n < 4:
        return 0
    if n == 4:
        return comb(D, 4)
    if n == 5:
        return D * comb(D, 4)
    if n == 6:
        return 2 * comb(D + 1, 2) * comb(D, 4)
    return 2 * D * comb(D + 1, 2) * comb(D, 4) - dim_gl(Partition((3, 2, 1, 1)), D)


def closed_dim_MD(n: int, D: int) -> int:
    """dim MD_n(D) for n <= 7."""
    if n > 7:
        raise ValueError("closed formula for dim MD_n(D) only covers n <= 7")
    if n <= 4:
        return 0
    if n == 5:
        return D * comb(D, 4) - comb(D, 5)
    if n == 6:
        return comb(D, 6) + D * D * comb(D, 4) - D * comb(D, 5)
    return 2 * (D * dim_gl(Partition((3, 1, 1, 1)), D) + comb(D, 2) * comb(D, 5) - comb(D, 7))


@dataclass
class C1Report:
    D: int
    passed: bool
    violations: list[str]


def check_c1_constraint(cM: VirtualSymClass, D: int) -> C1Report:
    """Column constraints on diagrams that may occur in the multilinear M(D)."""
    violations = []
    for Y in sorted(cM.coeffs, reverse=True):
        c1, c2 = Y.column(1), Y.column(2)
        if not (c1 >= 5 or (c1 == 4 and c2 == 4)):
            violations.append("%s: c1=%d, c2=%d breaks c1>=5 or c1=c2=4" % (Y.key(), c1, c2))
        if D % 4 in (2, 3) and c1 > D - 1:
            violations.append("%s: c1=%d exceeds D-1=%d" % (Y.key(), c1, D - 1))
    return C1Report(D=D, passed=not violations, violations=violations)


def kostka(shape: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    return _kostka(Partition(shape), tuple(c for c in content))


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    # peel off the largest letter as a horizontal strip
    while content and content[-1] == 0:
        content = content[:-1]
    if not content:
        return 1 if not shape else 0
    k = content[-1]
    rest = content[:-1]
    if shape.size != sum(content):
        return 0
    total = 0
    for inner in _horizontal_strips(shape, k):
        total += _kostka(inner, rest)
    return total


def _horizontal_strips(shape: Partition, k: int) -> Iterator[Partition]:
    """Partitions mu inside shape with shape/mu a horizontal strip of size k."""
    parts = list(shape)
    n = len(parts)

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                yield Partition(p for p in acc if p)
            return
        below = parts[i + 1] if i + 1 < n else 0
        for take in range(0, min(left, parts[i] - below) + 1):
            yield from rec(i + 1, left - take, acc + [parts[i] - take])

    yield from rec(0, k, [])


def class_from_json(n: int, data: Mapping[str, int]) -> VirtualSymClass:
    return VirtualSymClass(n, {Partition.parse(k): v for k, v in data.items()})
