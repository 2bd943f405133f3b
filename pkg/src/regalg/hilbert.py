"""Rational Hilbert series in one or two variables, comparison against
irreducible-word counts, and Euler-characteristic checks for complexes.

Series arithmetic is integer-array long division (the denominator must
have constant term 1 after sign normalization), not symbolic rational
functions: exact, simple, and fast at this scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rewrite import bidegree_counts, degree_counts
from .scalars import ParseError, PolyRing, parse_poly


@dataclass
class SeriesExpr:
    """numerator/denominator with integer coefficients.

    One variable: dicts {degree: int}.  Two variables: dicts {(i,j): int}.
    """
    numerator: dict
    denominator: dict
    nvars: int

    def __post_init__(self):
        key0 = 0 if self.nvars == 1 else (0, 0)
        c = self.denominator.get(key0, 0)
        if c == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if c < 0:
            self.numerator = {k: -v for k, v in self.numerator.items()}
            self.denominator = {k: -v for k, v in self.denominator.items()}


def series_from_strings(num_text, den_text, variables=("t",)):
    """Parse polynomial expressions in the coefficient grammar over the
    given series variables."""
    ring = PolyRing(tuple(variables))
    num = parse_poly(ring, num_text)
    den = parse_poly(ring, den_text)
    nvars = len(variables)

    def todict(p):
        out = {}
        for mono, c in p.terms.items():
            if c.denominator != 1:
                raise ParseError("series coefficients must be integers", 0)
            key = mono[0] if nvars == 1 else tuple(mono)
            out[key] = int(c)
        return out

    return SeriesExpr(todict(num), todict(den), nvars)


def standard_single_series():
    """1/((1-t)^3 (1-t^2)), the single-graded series of every catalog family."""
    return series_from_strings("1", "(1-t)^3*(1-t^2)")


def standard_bigraded_series():
    """1/((1-u)^2 (1-v)(1-u*v)), the bigraded refinement."""
    return series_from_strings("1", "(1-u)^2*(1-v)*(1-u*v)", variables=("u", "v"))


def expand(series: SeriesExpr, bound: int):
    """Exact power-series coefficients through the bound.

    One variable: list c[0..bound].  Two variables: dict {(i,j): c} over
    i+j <= bound.
    """
    if series.nvars == 1:
        return _expand1(series, bound)
    return _expand2(series, bound)


def _expand1(series, bound):
    num, den = series.numerator, series.denominator
    d0 = den[0]
    out = []
    for n in range(bound + 1):
        acc = Fraction(num.get(n, 0))
        for k, dk in den.items():
            if 1 <= k <= n:
                acc -= dk * out[n - k]
        acc = acc / d0
        out.append(acc)
    result = []
    for c in out:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("non-integer series coefficient %s" % c)
            c = int(c)
        result.append(c)
    return result

def _expand2(series, bound):
    num, den = series.numerator, series.denominator
    d0 = den[(0, 0)]
    out = {}
    for n in range(bound + 1):
        for i in range(n + 1):
            key = (i, n - i)
            acc = Fraction(num.get(key, 0))
            for (a, b), dk in den.items():
                if (a, b) == (0, 0):
                    continue
                prev = (i - a, n - i - b)
                if prev[0] >= 0 and prev[1] >= 0:
                    acc -= dk * out[prev]
            acc = acc / d0
            if acc.denominator != 1:
                raise ValueError("non-integer series coefficient %s" % acc)
            out[key] = int(acc)
    return out


def series_product_expand(s1, s2, bound):
    """Convolution of two expansions (used by the multiplicativity test)."""
    c1, c2 = expand(s1, bound), expand(s2, bound)
    if s1.nvars == 1:
        return [sum(c1[k] * c2[n - k] for k in range(n + 1)) for n in range(bound + 1)]
    out = {}
    for n in range(bound + 1):
        for i in range(n + 1):
            key = (i, n - i)
            out[key] = sum(c1.get((a, b), 0) * c2.get((i - a, n - i - b), 0)
                           for a in range(i + 1) for b in range(n - i + 1))
    return out


# ---------------------------------------------------------------------------
# Checks against presentations.
# ---------------------------------------------------------------------------

@dataclass
class HilbertReport:
    ok: bool
    counts: object        # list (single) or dict (bigraded)
    expected: object
    first_mismatch: object = None

    def __bool__(self):
        return self.ok


def hilbert_check(pres, bound, series: SeriesExpr) -> HilbertReport:
    """PASS iff irreducible-word counts equal the series coefficients in
    every (bi)degree <= bound."""
    sys = pres.completed(bound)
    if series.nvars == 1:
        counts = degree_counts(sys, bound)
        expected = expand(series, bound)
        for n in range(bound + 1):
            if counts[n] != expected[n]:
                return HilbertReport(False, counts, expected, (n, counts[n], expected[n]))
        return HilbertReport(True, counts, expected)
    counts = bidegree_counts(sys, bound)
    expected = expand(series, bound)
    keys = sorted(set(expected) | set(counts), key=lambda k: (sum(k), k))
    for key in keys:
        if sum(key) > bound:
            continue
        if counts.get(key, 0) != expected.get(key, 0):
            return HilbertReport(False, counts, expected,
                                 (key, counts.get(key, 0), expected.get(key, 0)))
    return HilbertReport(True, counts, expected)


def euler_check(shift_lists, series: SeriesExpr) -> bool:
    """Alternating-sum check for a free complex augmented by the trivial
    module.

    ``shift_lists`` gives, per homological position starting at the algebra
    itself, the multiset of generator shifts, e.g. the standard complex is
    [[0], [1,1,1], [2,2,3,3], [4,4,4], [5]].  True iff
    series * sum_i (-1)^i sum_j t^shift == 1 as a power series (through
    twice the largest shift plus 4), i.e. the augmented alternating sum of
    term-wise Hilbert series vanishes.  An empty list verifies the zero
    complex.
    """
    if series.nvars != 1:
        raise ValueError("euler_check wants a single-variable series")
    if not shift_lists:
        return True
    max_shift = max((s for shifts in shift_lists for s in shifts), default=0)
    bound = 2 * max_shift + 4
    p = {}
    for i, shifts in enumerate(shift_lists):
        sign = 1 if i % 2 == 0 else -1
        for s in shifts:
            p[s] = p.get(s, 0) + sign
    h = expand(series, bound)
    for n in range(bound + 1):
        acc = sum(coeff * h[n - s] for s, coeff in p.items() if s <= n)
        if acc != (1 if n == 0 else 0):
            return False
    return True


@dataclass
class QuotientSeriesReport:
    ok: bool
    base_counts: list
    quotient_counts: list
    expected: list
    detail: str = ""

    def __bool__(self):
        return self.ok


def quotient_series_check(pres, z, bound) -> QuotientSeriesReport:
    """Check that dividing out a verified normal element z of degree d drops
    the Hilbert coefficients by exactly the factor (1 - t^d)."""
    from .normal import quotient, verify_normal

    witness = verify_normal(z, pres)
    if not witness.ok:
        raise ValueError("element is not verified normal: %s" % witness.detail)
    d = z.total_degree()
    base = degree_counts(pres.completed(bound), bound)
    q = quotient(pres, [z])
    qcounts = degree_counts(q.completed(bound), bound)
    expected = [base[n] - (base[n - d] if n >= d else 0) for n in range(bound + 1)]
    ok = qcounts == expected
    detail = "" if ok else "first mismatch at degree %d" % next(
        n for n in range(bound + 1) if qcounts[n] != expected[n])
    return QuotientSeriesReport(ok, base, qcounts, expected, detail)
