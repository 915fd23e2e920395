"""
Scalar closed formulas: s_n(D) (symmetric tensors under reversal), r_n(D)
(inner derivations of the reversal-fixed algebra), c_n(D) (oriented
pairs of necklaces), plus the brute-force word census that checks them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

ENUMERATION_BOUND = 10**7


def totient(m: int) -> int:
    if m < 1:
        raise ValueError("totient needs m >= 1")
    result = m
    p = 2
    k = m
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def divisors(n: int) -> list[int]:
    return [i for i in range(1, n + 1) if n % i == 0]


def _necklace_sum(n: int, D: int) -> int:
    # sum_{i | n} phi(i) D^(n/i)
    return sum(totient(i) * D ** (n // i) for i in divisors(n))


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError("closed formula produced a non-integer %s" % x)
    return x.numerator


def s(n: int, D: int) -> int:
    """Dimension of the reversal-fixed degree-n tensors on D letters."""
    if n < 1:
        raise ValueError("s_n needs n >= 1")
    if n % 2 == 0:
        return (D ** n + D ** (n // 2)) // 2
    return (D ** n + D ** ((n + 1) // 2)) // 2


def c(n: int, D: int) -> int:
    """Number of pairs of oriented necklaces of length n on D letters."""
    if n < 1:
        raise ValueError("c_n needs n >= 1")
    total = _necklace_sum(n, D)
    if n % 2 == 0:
        h = n // 2
        return _as_int(Fraction(total, 4 * h) - Fraction((D + 1) * D ** h, 4))
    h = (n - 1) // 2
    # the odd-length normalisation is 1/(2n) = 1/(4h+2)
    return _as_int(Fraction(total, 4 * h + 2) - Fraction(D ** (h + 1), 2))


def r(n: int, D: int) -> int:
    """Dimension of the degree-n inner derivations of the reversal-fixed algebra."""
    if n < 1:
        raise ValueError("r_n needs n >= 1")
    if n == 1:
        return 0
    total = _necklace_sum(n, D)
    if n % 2 == 0:
        h = n // 2
        return _as_int(Fraction(D ** n, 2) + Fraction((D - 1) * D ** h, 4)
                       - Fraction(total, 4 * h))
    h = (n - 1) // 2
    return _as_int(Fraction(D ** n, 2) - Fraction(total, 4 * h + 2))


def antisymmetric_dim(n: int, D: int) -> int:
    """Number of oriented pairs of words, i.e. dim of the reversal-antifixed tensors."""
    return (D ** n - D ** ((n + 1) // 2)) // 2


@dataclass(frozen=True)
class WordCensus:
    n: int
    D: int
    words: int
    palindromes: int
    necklaces: int
    symmetric_necklaces: int
    bracelets: int
    oriented_pairs: int


def _min_rotation(w: tuple) -> tuple:
    return min(w[i:] + w[:i] for i in range(len(w)))


def necklace_bracelet_bruteforce(n: int, D: int) -> WordCensus:
    """Count necklaces, bracelets and oriented pairs by walking every word."""
    if n < 1 or D < 1:
        raise ValueError("need n, D >= 1")
    if D ** n > ENUMERATION_BOUND:
        raise ValueError("D^n = %d exceeds the enumeration bound %d" % (D ** n, ENUMERATION_BOUND))
    words = 0
    palindromes = 0
    necklaces = 0
    symmetric = 0
    for w in itertools.product(range(D), repeat=n):
        words += 1
        rw = w[::-1]
        if w == rw:
            palindromes += 1
        if _min_rotation(w) != w:
            continue
        necklaces += 1
        if _min_rotation(rw) == w:
            symmetric += 1
    pairs = (necklaces - symmetric) // 2
    return WordCensus(n=n, D=D, words=words, palindromes=palindromes,
                      necklaces=necklaces, symmetric_necklaces=symmetric,
                      bracelets=symmetric + pairs, oriented_pairs=pairs)


def coprime_count(m: int) -> int:
    """Direct count of residues coprime to m (oracle for totient)."""
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)
