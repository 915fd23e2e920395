"""
Character-level solver for A(D), B(D) and the comparison against the
characters of the reversal-fixed algebra CJ_n(D) minus missing tetrads.

The solver follows the inductive construction degree by degree: with the
candidate c = A*P_1 + B known below degree n, lambda(c) is read at
degree n; its L(2)-part fixes the new piece of A and its L(0)-part the new
piece of B.  lambda is multiplicative, so the running product is updated
by lambda(new piece) instead of being recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import (
    CharClass,
    char_mul,
    char_of_schur,
    check_envelope,
    from_schur,
    lambda_class,
    lambda_full,
    mult_L2k_char,
    power_product,
    schur_decompose,
    schur_degree_table,
)
from .closed import divisors, totient
from .partitions import Partition, dim_gl
from .series import P


@dataclass
class ConjectureTables:
    D: int
    N: int
    A: dict[int, dict[Partition, int]] = field(default_factory=dict)
    B: dict[int, dict[Partition, int]] = field(default_factory=dict)

    def a_class(self) -> CharClass:
        return _class_from_table(self.D, self.N, self.A)

    def b_class(self) -> CharClass:
        return _class_from_table(self.D, self.N, self.B)

    def dims(self) -> tuple[list[int], list[int]]:
        a = [sum(v * dim_gl(Y, self.D) for Y, v in self.A.get(n, {}).items()) for n in range(1, self.N + 1)]
        b = [sum(v * dim_gl(Y, self.D) for Y, v in self.B.get(n, {}).items()) for n in range(1, self.N + 1)]
        return a, b

    def negative_entries(self) -> list[tuple[str, int, Partition, int]]:
        out = []
        for name, tbl in (("A", self.A), ("B", self.B)):
            for n, row in tbl.items():
                out.extend((name, n, Y, v) for Y, v in row.items() if v < 0)
        return out

    def to_json(self) -> dict:
        def rows(tbl):
            return [{"degree": n, "schur": {Y.key(): v for Y, v in tbl.get(n, {}).items()}}
                    for n in range(1, self.N + 1)]
        return {"D": self.D, "N": self.N, "A": rows(self.A), "B": rows(self.B)}


def _class_from_table(D: int, N: int, tbl: dict[int, dict[Partition, int]]) -> CharClass:
    coeffs = {(Y, 0): v for row in tbl.values() for Y, v in row.items()}
    return from_schur(D, N, coeffs)


def _degree_part_full(full: dict, n: int, D: int, N: int) -> CharClass:
    return CharClass.from_full(D, N, {k: v for k, v in full.items() if sum(k[0]) == n})


def solve_characters(D: int, N: int, force_envelope: bool = False) -> ConjectureTables:
    """A(D), B(D) through degree N, in the Schur basis."""
    if D < 1 or N < 1:
        raise ValueError("solve_characters needs D >= 1 and N >= 1")
    check_envelope(D, N, force_envelope)
    natural = CharClass.natural(D, N)
    running = {((0,) * D, 0): 1}     # lambda(A*P_1 + B) in full exponent form
    A_mono = CharClass.zero(D, N)
    B_mono = CharClass.zero(D, N)
    for n in range(1, N + 1):
        x = _degree_part_full(running, n, D, N)
        target = natural if n == 1 else CharClass.zero(D, N)
        # adding alpha*P_1 + beta at degree n shifts this degree by -(alpha*P_1 + beta)
        alpha = mult_L2k_char(x, 1) + target
        beta = mult_L2k_char(x, 0)
        step = alpha.times_t(P(1)) + beta
        A_mono = A_mono + alpha
        B_mono = B_mono + beta
        if not step.is_zero():
            running = lambda_full(step, start=running)
    tbl = ConjectureTables(D, N)
    tbl.A = schur_degree_table(schur_decompose(A_mono))
    tbl.B = schur_degree_table(schur_decompose(B_mono))
    return tbl


@dataclass
class ResubstitutionReport:
    D: int
    N: int
    l0_ok: bool
    l2_ok: bool

    @property
    def passed(self):
        return self.l0_ok and self.l2_ok


def resubstitute(tbl: ConjectureTables) -> ResubstitutionReport:
    """lambda(A*P_1 + B) should have L(0)-part 1 and L(2)-part -[K^D] through degree N."""
    D, N = tbl.D, tbl.N
    c = tbl.a_class().times_t(P(1)) + tbl.b_class()
    lam = lambda_class(c)
    l0 = mult_L2k_char(lam, 0)
    l2 = mult_L2k_char(lam, 1)
    return ResubstitutionReport(D, N, l0 == CharClass.one(D, N), l2 == -CharClass.natural(D, N))


def _ppow(parts: list[int], D: int, N: int) -> CharClass:
    return power_product(parts, D, N)


def char_CJ(n: int, D: int, trunc: int | None = None) -> CharClass:
    """Character of CJ_n(D): (p_1^n + p_2^(n//2) p_1^(n%2)) / 2."""
    if n < 1:
        raise ValueError("char_CJ needs n >= 1")
    N = n if trunc is None else trunc
    words = _ppow([1] * n, D, N)
    pal = _ppow([2] * (n // 2) + [1] * (n % 2), D, N)
    return _halve(words + pal)


def char_A(n: int, D: int, trunc: int | None = None) -> CharClass:
    """Character of the reversal-antifixed tensors of degree n."""
    N = n if trunc is None else trunc
    words = _ppow([1] * n, D, N)
    pal = _ppow([2] * (n // 2) + [1] * (n % 2), D, N)
    return _halve(words - pal)


def char_oriented_necklaces(n: int, D: int, trunc: int | None = None) -> CharClass:
    """Character of the span of oriented necklace pairs (one vector per pair)."""
    N = n if trunc is None else trunc
    neck = CharClass.zero(D, N)
    for d in divisors(n):
        neck = neck + _ppow([d] * (n // d), D, N).scale(totient(d))
    if n % 2:
        refl = _ppow([1] + [2] * (n // 2), D, N).scale(2 * n)
    else:
        refl = (_ppow([2] * (n // 2), D, N) + _ppow([1, 1] + [2] * (n // 2 - 1), D, N)).scale(n)
    # oriented pairs = (necklaces - reflection average) / 2, over n * 2
    return _divide(neck.scale(2) - refl, 4 * n)


def char_inner_CJ(n: int, D: int, trunc: int | None = None) -> CharClass:
    return char_A(n, D, trunc) - char_oriented_necklaces(n, D, trunc)


def _halve(c: CharClass) -> CharClass:
    return _divide(c, 2)


def _divide(c: CharClass, k: int) -> CharClass:
    terms = {}
    for key, v in c.terms.items():
        if v % k:
            raise ArithmeticError("character coefficient %d not divisible by %d" % (v, k))
        terms[key] = v // k
    return CharClass(c.D, c.trunc, terms, c.basis)


def _L(Y: str, D: int, N: int) -> CharClass:
    return char_of_schur(Partition.parse(Y), D, N)


def char_M(n: int, D: int, trunc: int | None = None) -> CharClass:
    """Character of the missing tetrads M_n(D), n <= 7."""
    N = n if trunc is None else trunc
    if n > 7:
        raise ValueError("missing tetrad characters are only known for n <= 7")
    if n < 4:
        return CharClass.zero(D, N)
    lam4 = _L("1^4", D, N)
    K = CharClass.natural(D, N)
    if n == 4:
        return lam4
    if n == 5:
        return char_mul(K, lam4)
    m6 = char_mul(_L("2", D, N), lam4).scale(2)
    if n == 6:
        return m6
    return char_mul(K, m6) - _L("3,2,1^2", D, N)


def char_MD(n: int, D: int, trunc: int | None = None) -> CharClass:
    """Character of the missing derivations MD_n(D), n <= 7."""
    N = n if trunc is None else trunc
    if n > 7:
        raise ValueError("missing derivation characters are only tabulated for n <= 7")
    if n <= 4:
        return CharClass.zero(D, N)
    if n == 5:
        return _L("2,1^3", D, N)
    if n == 6:
        return _L("1^6", D, N) + _L("2,1^4", D, N) + _L("2^2,1^2", D, N) + _L("3,1^3", D, N)
    acc = CharClass.zero(D, N)
    for Y in ("4,1^3", "3,2,1^2", "3,1^4", "2^2,1^3", "2,1^5"):
        acc = acc + _L(Y, D, N)
    return acc.scale(2)


@dataclass
class DegreeComparison:
    n: int
    predicted: dict[Partition, int]
    expected: dict[Partition, int]
    hard: bool

    @property
    def equal(self) -> bool:
        return self.predicted == self.expected

    @property
    def difference(self) -> dict[Partition, int]:
        keys = set(self.predicted) | set(self.expected)
        d = {Y: self.predicted.get(Y, 0) - self.expected.get(Y, 0) for Y in keys}
        return {Y: v for Y, v in sorted(d.items(), reverse=True) if v}


@dataclass
class OracleComparison:
    D: int
    N: int
    a_rows: list[DegreeComparison]
    b_rows: list[DegreeComparison]
    si8: dict | None = None

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.a_rows if r.hard)


def _schur_row(c: CharClass, n: int) -> dict[Partition, int]:
    dec = schur_decompose(c.degree_part(n))
    return dict(sorted(((Y, v) for (Y, j), v in dec.items()), reverse=True))


def predicted_vs_oracle(D: int, N: int, tbl: ConjectureTables | None = None,
                        force_envelope: bool = False) -> OracleComparison:
    """Compare A_n with ch CJ_n - ch M_n (hard for n <= 7) and B_n with
    ch Inner CJ_n - ch MD_n (report only)."""
    if tbl is None:
        tbl = solve_characters(D, N, force_envelope)
    a_rows, b_rows = [], []
    for n in range(1, min(N, 7) + 1):
        exp_a = char_CJ(n, D) - char_M(n, D)
        a_rows.append(DegreeComparison(n, dict(tbl.A.get(n, {})), _schur_row(exp_a, n), hard=True))
        if n >= 2:
            exp_b = char_inner_CJ(n, D) - char_MD(n, D)
            b_rows.append(DegreeComparison(n, dict(tbl.B.get(n, {})), _schur_row(exp_b, n), hard=False))
    si8 = None
    if D == 3 and N >= 8:
        diff = {Y: v for Y, v in tbl.A.get(8, {}).items()}
        cj8 = _schur_row(char_CJ(8, 3), 8)
        for Y, v in cj8.items():
            diff[Y] = diff.get(Y, 0) - v
        diff = {Y: v for Y, v in sorted(diff.items(), reverse=True) if v}
        si8 = {"A_8 - ch CJ_8": {Y.key(): v for Y, v in diff.items()},
               "equals [L(3,3,2;3)]": diff == {Partition((3, 3, 2)): 1}}
    return OracleComparison(D, N, a_rows, b_rows, si8)
