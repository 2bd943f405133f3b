"""Words in noncommuting generators, bigrading, the degree-lex monomial
order, linear combinations, linear substitutions, and opposite elements.

Words are flat tuples of generator indices.  Generator precedence is the
declaration order reversed: the last declared generator is largest, so
declaring (x1, x2, x3) gives x3 > x2 > x1.  The order is degree-lex on the
total degree (sum of both bidegree components), which lets generators of
higher degree (adjoined normal elements, Ore variables) participate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import PolyRing, Scalar


@dataclass(frozen=True)
class Generator:
    name: str
    bidegree: tuple

    def __post_init__(self):
        d1, d2 = self.bidegree
        if d1 < 0 or d2 < 0 or (d1 == 0 and d2 == 0):
            raise ValueError("bidegree must be nonnegative and not (0,0)")


class FreeAlgebra:
    """Generator list over a coefficient ring."""

    def __init__(self, generators, ring: PolyRing):
        self.generators = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.ring = ring
        self._index = {g.name: i for i, g in enumerate(self.generators)}
        self._degrees = tuple(g.bidegree[0] + g.bidegree[1] for g in self.generators)
        self._bidegrees = tuple(g.bidegree for g in self.generators)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("unknown generator %r" % name) from None

    def word(self, names):
        """Word from an iterable of generator names, or a whitespace/'*'
        separated string like "x3 x1 x3 x1"."""
        if isinstance(names, str):
            names = names.replace("*", " ").split()
        return tuple(self.index(n) for n in names)

    def word_degree(self, w):
        return sum(self._degrees[i] for i in w)

    def word_bidegree(self, w):
        a = b = 0
        for i in w:
            a += self._bidegrees[i][0]
            b += self._bidegrees[i][1]
        return (a, b)

    def word_key(self, w):
        """Sort key for degree-lex; larger key = larger word."""
        return (self.word_degree(w), w)

    def word_str(self, w):
        if not w:
            return "1"
        parts = []
        for i in w:
            name = self.generators[i].name
            if parts and parts[-1][0] == name:
                parts[-1][1] += 1
            else:
                parts.append([name, 1])
        return "*".join(n if e == 1 else "%s^%d" % (n, e) for n, e in parts)

    # -- element constructors ---------------------------------------------
    def zero_poly(self):
        return NcPoly(self, {})

    def one_poly(self):
        return NcPoly(self, {(): self.ring.scalar(1)})

    def gen_poly(self, name):
        return NcPoly(self, {(self.index(name),): self.ring.scalar(1)})

    def monomial(self, word, coeff=1):
        if isinstance(word, str):
            word = self.word(word)
        c = self.ring.scalar(coeff)
        return NcPoly(self, {tuple(word): c} if not c.is_zero() else {})

    def poly(self, terms):
        """Element from [(coeff, word), ...]; words may be strings."""
        out = self.zero_poly()
        for coeff, word in terms:
            out = out + self.monomial(word, coeff)
        return out

    def __repr__(self):
        return "FreeAlgebra(%s)" % ", ".join(
            "%s:%s" % (g.name, g.bidegree) for g in self.generators)


def word_compare(algebra, w1, w2):
    """-1 / 0 / +1 in the degree-lex order (x3 > x2 > x1 for standard
    declarations)."""
    k1, k2 = algebra.word_key(w1), algebra.word_key(w2)
    return (k1 > k2) - (k1 < k2)


class NcPoly:
    """Finite Scalar-linear combination of words."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def words(self):
        return sorted(self.terms, key=self.algebra.word_key)

    def lead_word(self):
        if not self.terms:
            raise ValueError("lead word of zero")
        return max(self.terms, key=self.algebra.word_key)

    def lead_coeff(self):
        return self.terms[self.lead_word()]

    def coeff(self, word):
        if isinstance(word, str):
            word = self.algebra.word(word)
        return self.terms.get(tuple(word), self.algebra.ring.scalar(0))

    def bidegree(self):
        """Common bidegree of all words, or None if inhomogeneous/zero."""
        degs = {self.algebra.word_bidegree(w) for w in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_bihomogeneous(self):
        return self.is_zero() or self.bidegree() is not None

    def total_degree(self):
        return max((self.algebra.word_degree(w) for w in self.terms), default=0)

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("mixed algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                s = out[w] + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
            else:
                out[w] = c
        return NcPoly(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NcPoly(self.algebra, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    if w in out:
                        s = out[w] + c
                        if s.is_zero():
                            del out[w]
                        else:
                            out[w] = s
                    elif not c.is_zero():
                        out[w] = c
            return NcPoly(self.algebra, out)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything; words do not reach here
        return self.scale(other)

    def scale(self, c):
        c = self.algebra.ring.scalar(c)
        if c.is_zero():
            return self.algebra.zero_poly()
        return NcPoly(self.algebra, {w: v * c for w, v in self.terms.items()})

    def monic(self):
        """Divide by the leading coefficient."""
        lc = self.lead_coeff()
        return self if lc.is_one() else self.scale(lc.inverse())

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        return (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=self.algebra.word_key, reverse=True):
            c = self.terms[w]
            cs = repr(c)
            ws = self.algebra.word_str(w)
            if ws == "1":
                bits.append(cs)
            elif cs == "1":
                bits.append(ws)
            elif cs == "-1":
                bits.append("-" + ws)
            else:
                if "+" in cs or (cs.count("-") - cs.startswith("-")) > 0 or "/" in cs:
                    cs = "(%s)" % cs
                bits.append("%s*%s" % (cs, ws))
        return " + ".join(bits).replace("+ -", "- ")


def nc_arith(op, lhs, rhs=None):
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "scale":
        return lhs.scale(rhs)
    raise ValueError("unknown op %r" % op)


# ---------------------------------------------------------------------------
# Linear maps on generators and general generator substitutions.
# ---------------------------------------------------------------------------

class LinearMap:
    """Square Scalar matrix acting on the generator list: generator i maps
    to sum_j matrix[i][j] * x_j."""

    def __init__(self, algebra, matrix):
        n = len(algebra.generators)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix must be %dx%d" % (n, n))
        self.algebra = algebra
        self.matrix = [[algebra.ring.scalar(c) for c in row] for row in matrix]

    @classmethod
    def from_images(cls, algebra, images):
        """Build from {generator name: expression string or NcPoly}; the
        expression grammar is 'coeff*gen + ...' handled via NcPoly parsing
        by the caller; here images are {name: {name: coeff}} dicts."""
        n = len(algebra.generators)
        rows = []
        for g in algebra.generators:
            row = [algebra.ring.scalar(0)] * n
            img = images[g.name]
            for tgt, c in img.items():
                row[algebra.index(tgt)] = algebra.ring.scalar(c)
            rows.append(row)
        return cls(algebra, rows)

    def image_polys(self):
        out = []
        for row in self.matrix:
            terms = {}
            for j, c in enumerate(row):
                if not c.is_zero():
                    terms[(j,)] = c
            out.append(NcPoly(self.algebra, terms))
        return out

    def is_bigraded(self):
        """Entries linking generators of different bidegree vanish."""
        bd = self.algebra._bidegrees
        for i, row in enumerate(self.matrix):
            for j, c in enumerate(row):
                if not c.is_zero() and bd[i] != bd[j]:
                    return False
        return True

    def determinant(self):
        n = len(self.matrix)
        if n == 1:
            return self.matrix[0][0]
        det = self.algebra.ring.scalar(0)
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for row in self.matrix[1:]]
            sub = LinearMap.__new__(LinearMap)
            sub.algebra = self.algebra
            sub.matrix = minor
            term = self.matrix[0][j] * LinearMap.determinant(sub)
            det = det + (term if j % 2 == 0 else -term)
        return det

    def inverse(self):
        n = len(self.matrix)
        det = self.determinant()
        if det.is_zero():
            raise ValueError("singular map")
        cof = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [row[:j] + row[j + 1:] for k, row in enumerate(self.matrix) if k != i]
                sub = LinearMap.__new__(LinearMap)
                sub.algebra = self.algebra
                sub.matrix = minor
                d = LinearMap.determinant(sub) if n > 1 else self.algebra.ring.scalar(1)
                sign = 1 if (i + j) % 2 == 0 else -1
                cof[j][i] = d * sign / det   # transpose for the adjugate
        inv = LinearMap.__new__(LinearMap)
        inv.algebra = self.algebra
        inv.matrix = cof
        return inv

    def __repr__(self):
        gens = self.algebra.generators
        bits = []
        for i, row in enumerate(self.matrix):
            img = " + ".join("%r*%s" % (c, gens[j].name)
                             for j, c in enumerate(row) if not c.is_zero()) or "0"
            bits.append("%s -> %s" % (gens[i].name, img))
        return "LinearMap(%s)" % "; ".join(bits)


def substitute_generators(f, images, target=None):
    """Replace each letter of every word by its image and expand.

    ``images`` is a list indexed by generator with NcPoly values over the
    target algebra (defaults to f's algebra).
    """
    target = target or f.algebra
    out = target.zero_poly()
    one = target.one_poly()
    for w, c in f.terms.items():
        prod = one.scale(c)
        for letter in w:
            prod = prod * images[letter]
        out = out + prod
    return out


def apply_linear_map(f, m: LinearMap):
    return substitute_generators(f, m.image_polys())


def opposite(f):
    """Reverse every word; coefficients unchanged."""
    return NcPoly(f.algebra, {tuple(reversed(w)): c for w, c in f.terms.items()})
