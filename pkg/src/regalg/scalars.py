"""Exact arithmetic in the coefficient field.

Values are rationals (``fractions.Fraction``), multivariate polynomials in
declared parameter symbols (``ParamPoly``), and rational functions
(``Scalar``).  A symbol may carry a monic minimal polynomial; every
polynomial is kept reduced modulo these, which is how algebraic constants
(roots of unity, square roots) are handled exactly.

The commutative term order is graded-reverse-lexicographic with the
declaration order of the symbols.  Scalar normalization extracts rational
content and cancels a polynomial GCD computed by primitive-part
subresultant remainder sequences; equality additionally falls back to
cross-multiplication, so correctness never depends on GCD strength.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class CoefficientError(ValueError):
    """Arithmetic violation in the coefficient field."""


class DivisionByZeroError(CoefficientError):
    pass


class PoleError(CoefficientError):
    pass


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def grevlex_key(mono):
    """Sort key: larger key = larger monomial under grevlex."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


class PolyRing:
    """Ordered parameter symbols plus algebraic-constant constraints.

    ``constraints`` maps a symbol name to the ascending coefficient list of
    its monic minimal polynomial, e.g. ``{"gamma": [1, 1, 1]}`` for
    gamma^2 + gamma + 1 = 0.  Minimal polynomials must be monic of degree
    >= 1 and irreducible over the rationals; irreducibility is checked via
    rational roots for degrees 2 and 3 (all we use), otherwise trusted.
    """

    def __init__(self, symbols=(), constraints=None):
        self.symbols = tuple(symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbol names")
        self._index = {s: i for i, s in enumerate(self.symbols)}
        self.constraints = {}
        for name, coeffs in (constraints or {}).items():
            if name not in self._index:
                raise ValueError("constraint for undeclared symbol %r" % name)
            coeffs = [_frac(c) for c in coeffs]
            if len(coeffs) < 2 or coeffs[-1] != 1:
                raise ValueError("minimal polynomial must be monic of degree >= 1")
            if 3 <= len(coeffs) <= 4 and _has_rational_root(coeffs):
                raise ValueError("minimal polynomial of %r is reducible over Q" % name)
            self.constraints[self._index[name]] = tuple(coeffs)
        self._zero_mono = (0,) * len(self.symbols)
        self.zero = ParamPoly(self, {})
        self.one = ParamPoly(self, {self._zero_mono: Fraction(1)})

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("unknown symbol %r" % name) from None

    def const(self, c):
        c = _frac(c)
        return ParamPoly(self, {self._zero_mono: c} if c else {})

    def sym(self, name):
        mono = list(self._zero_mono)
        mono[self.index(name)] = 1
        return ParamPoly(self, {tuple(mono): Fraction(1)})

    def poly(self, terms):
        """Build a polynomial from a {exponent tuple: coefficient} mapping."""
        return ParamPoly(self, {m: _frac(c) for m, c in terms.items()})

    def scalar(self, x):
        """Coerce an int/Fraction/ParamPoly/Scalar/str into a Scalar."""
        if isinstance(x, Scalar):
            if x.num.ring is not self:
                raise ValueError("scalar from a different ring")
            return x
        if isinstance(x, ParamPoly):
            return Scalar(x, self.one)
        if isinstance(x, str):
            return self.parse(x)
        return Scalar(self.const(x), self.one)

    def parse(self, text):
        return parse_scalar(self, text)

    def extend(self, extra_symbols):
        """New ring with extra symbols appended; constraints carried over."""
        cons = {self.symbols[i]: list(c) for i, c in self.constraints.items()}
        return PolyRing(self.symbols + tuple(extra_symbols), cons)

    def lift(self, poly, target):
        """Re-express a polynomial of this ring in ``target`` (symbols must embed)."""
        pos = [target.index(s) for s in self.symbols]
        out = {}
        for mono, c in poly.terms.items():
            m = [0] * len(target.symbols)
            for i, e in enumerate(mono):
                m[pos[i]] = e
            out[tuple(m)] = c
        return target.poly(out)

    def _reduce_mod_constraints(self, terms):
        if not self.constraints:
            return terms
        work = dict(terms)
        again = True
        while again:
            again = False
            for mono in list(work.keys()):
                for idx, coeffs in self.constraints.items():
                    deg = len(coeffs) - 1
                    if mono[idx] >= deg:
                        c = work.pop(mono)
                        if c == 0:
                            continue
                        base = list(mono)
                        base[idx] -= deg
                        # s^deg = -(c_0 + c_1 s + ... + c_{deg-1} s^{deg-1})
                        for k in range(deg):
                            if coeffs[k] == 0:
                                continue
                            m2 = list(base)
                            m2[idx] += k
                            key = tuple(m2)
                            val = work.get(key, Fraction(0)) - c * coeffs[k]
                            if val:
                                work[key] = val
                            elif key in work:
                                del work[key]
                        again = True
                        break
        return work

    def __repr__(self):
        return "PolyRing(%s)" % ", ".join(self.symbols)


def _has_rational_root(coeffs):
    """Rational-root test for a monic polynomial with rational coefficients."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return True
    cands = set()
    for p in _divisors(abs(a0)):
        for q in _divisors(abs(an)):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    for r in cands:
        if sum(c * r**k for k, c in enumerate(coeffs)) == 0:
            return True
    return False


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return out


class ParamPoly:
    """Multivariate polynomial with Fraction coefficients, reduced modulo
    the ring's minimal-polynomial constraints.  Immutable by discipline."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        clean = {m: c for m, c in terms.items() if c}
        if ring.constraints:
            clean = ring._reduce_mod_constraints(clean)
            clean = {m: c for m, c in clean.items() if c}
        self.terms = clean

    # -- predicates ------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_mono in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        return self.terms[self.ring._zero_mono]

    def is_monomial(self):
        return len(self.terms) == 1

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def degree_in(self, idx):
        return max((m[idx] for m in self.terms), default=0)

    def symbols_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.symbols[i])
        return used

    # -- leading data (grevlex) ------------------------------------------
    def lead_monomial(self):
        return max(self.terms, key=grevlex_key)

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    # -- ring operations --------------------------------------------------
    def _check(self, other):
        if self.ring is not other.ring:
            raise ValueError("mixed polynomial rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return ParamPoly(self.ring, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ParamPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return self.ring.zero
            return ParamPoly(self.ring, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, Fraction(0)) + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return ParamPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- content / primitive part ----------------------------------------
    def content(self):
        """Rational content carrying the sign of the leading coefficient."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = _int_gcd(num, abs(c.numerator))
            den = den * c.denominator // _int_gcd(den, c.denominator)
        cont = Fraction(num, den)
        return -cont if self.lead_coeff() < 0 else cont

    def primitive(self):
        c = self.content()
        if c in (0, 1):
            return self, c
        return self * (1 / c), c

    def substitute(self, mapping):
        """Substitute Scalars/Fractions for symbols; returns a Scalar.

        ``mapping`` maps symbol names to Scalar/Fraction/int over a target
        ring; symbols not mentioned map to themselves when the target ring
        also declares them.
        """
        if not mapping:
            return Scalar(self, self.ring.one)
        target = None
        for v in mapping.values():
            if isinstance(v, Scalar):
                target = v.num.ring
                break
        if target is None:
            target = self.ring
        images = []
        for name in self.ring.symbols:
            if name in mapping:
                images.append(target.scalar(mapping[name]))
            else:
                images.append(target.scalar(target.sym(name)))
        out = target.scalar(0)
        for mono, c in self.terms.items():
            term = target.scalar(c)
            for i, e in enumerate(mono):
                for _ in range(e):
                    term = term * images[i]
            out = out + term
        return out

    def evaluate(self, assignment):
        """Exact value at a rational point {symbol name: Fraction}."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = c
            for i, e in enumerate(mono):
                if e:
                    name = self.ring.symbols[i]
                    if i in self.ring.constraints:
                        raise CoefficientError(
                            "symbol %r carries an algebraic constraint and "
                            "cannot be assigned a rational value" % name)
                    if name not in assignment:
                        raise CoefficientError("unassigned symbol %r" % name)
                    v *= _frac(assignment[name]) ** e
            total += v
        return total

    def __repr__(self):
        return poly_str(self)


def poly_str(p):
    if not p.terms:
        return "0"
    bits = []
    for mono in sorted(p.terms, key=grevlex_key, reverse=True):
        c = p.terms[mono]
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(p.ring.symbols[i])
            elif e > 1:
                factors.append("%s^%d" % (p.ring.symbols[i], e))
        body = "*".join(factors)
        if not body:
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = body
        else:
            piece = "%s*%s" % (abs(c), body)
        bits.append(("- " if c < 0 else "+ ") + piece)
    out = " ".join(bits)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


# ---------------------------------------------------------------------------
# GCD machinery: monomial content + primitive-part subresultant PRS.
# ---------------------------------------------------------------------------

_GCD_SIZE_GUARD = 4000


def monomial_gcd(f, g):
    out = None
    for m in list(f.terms) + list(g.terms):
        out = m if out is None else tuple(min(a, b) for a, b in zip(out, m))
    return out or f.ring._zero_mono


def shift_down(p, mono):
    """Divide by a monomial known to divide every term."""
    if not any(mono):
        return p
    return ParamPoly(p.ring, {tuple(a - b for a, b in zip(m, mono)): c
                              for m, c in p.terms.items()})


def divexact(f, g):
    """Exact division f / g in the free polynomial ring, or None."""
    if g.is_zero():
        raise DivisionByZeroError("polynomial division by zero")
    if f.is_zero():
        return f.ring.zero
    q = {}
    rem = dict(f.terms)
    glm = g.lead_monomial()
    glc = g.terms[glm]
    while rem:
        m = max(rem, key=grevlex_key)
        c = rem[m]
        qm = tuple(a - b for a, b in zip(m, glm))
        if any(e < 0 for e in qm):
            return None
        qc = c / glc
        q[qm] = qc
        for gm, gc in g.terms.items():
            key = tuple(a + b for a, b in zip(qm, gm))
            v = rem.get(key, Fraction(0)) - qc * gc
            if v:
                rem[key] = v
            elif key in rem:
                del rem[key]
    return ParamPoly(f.ring, q)


def _main_variable(f, g):
    n = len(f.ring.symbols)
    for i in range(n - 1, -1, -1):
        if f.degree_in(i) or g.degree_in(i):
            return i
    return None


def _as_univariate(p, idx):
    """View as coefficient dict {exponent in idx: ParamPoly without idx}."""
    coeffs = {}
    for m, c in p.terms.items():
        e = m[idx]
        rest = list(m)
        rest[idx] = 0
        coeffs.setdefault(e, {})[tuple(rest)] = c
    return {e: ParamPoly(p.ring, t) for e, t in coeffs.items()}


def _from_univariate(coeffs, idx, ring):
    out = {}
    for e, poly in coeffs.items():
        for m, c in poly.terms.items():
            mm = list(m)
            mm[idx] += e
            out[tuple(mm)] = c
    return ParamPoly(ring, out)


def _poly_content_in(coeffs):
    cont = None
    for p in coeffs.values():
        cont = p if cont is None else poly_gcd(cont, p)
        if cont.is_constant():
            break
    return cont


def _pseudo_rem(a, b, idx, ring):
    """Pseudo-remainder of a by b, both univariate coefficient dicts in idx."""
    da = max(a)
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r.pop(dr)
        # r := lb * r - lr * x^(dr-db) * b
        new = {}
        for e, p in r.items():
            new[e] = p * lb
        for e, p in b.items():
            if e == db:
                continue
            key = e + dr - db
            q = p * lr
            new[key] = (new[key] - q) if key in new else -q
        r = {e: p for e, p in new.items() if not p.is_zero()}
    return r


def poly_gcd(f, g):
    """A greatest common divisor (best effort but always a true common
    divisor with exact cofactors).  Falls back to the monomial gcd when the
    inputs are large; Scalar equality does not depend on completeness here."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    mg = monomial_gcd(f, g)
    f0 = shift_down(f, mg)
    g0 = shift_down(g, mg)
    ring = f.ring
    mono_part = ParamPoly(ring, {mg: Fraction(1)})
    if f0.is_constant() or g0.is_constant():
        return mono_part
    if len(f0.terms) * len(g0.terms) > _GCD_SIZE_GUARD:
        return mono_part
    idx = _main_variable(f0, g0)
    if idx is None:
        return mono_part
    fu = _as_univariate(f0, idx)
    gu = _as_univariate(g0, idx)
    if max(fu) < max(gu):
        fu, gu = gu, fu
    cont_f = _poly_content_in(fu)
    cont_g = _poly_content_in(gu)
    cont = poly_gcd(cont_f, cont_g)
    a = {e: divexact(p, cont_f) for e, p in fu.items()}
    b = {e: divexact(p, cont_g) for e, p in gu.items()}
    while True:
        r = _pseudo_rem(a, b, idx, ring)
        if not r:
            break
        rc = _poly_content_in(r)
        r = {e: divexact(p, rc) for e, p in r.items()}
        a, b = b, r
        if max(b) == 0:
            return mono_part * cont
    prim = _from_univariate(b, idx, ring)
    prim, _ = prim.primitive()
    return mono_part * cont * prim


# ---------------------------------------------------------------------------
# Scalar: exact rational function, reduced modulo constraints.
# ---------------------------------------------------------------------------

class Scalar:
    """Quotient of two ParamPoly, normalized.

    Zero testing inspects the reduced numerator, which is exact because
    each minimal polynomial is irreducible (the catalog never declares more
    than one algebraic constant per ring, keeping the extension a field).
    Equality falls back to cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if num.ring is not den.ring:
            raise ValueError("mixed rings in scalar")
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        if num.is_zero():
            self.num = num.ring.zero
            self.den = num.ring.one
            return
        # rational contents
        np, nc = num.primitive()
        dp, dc = den.primitive()
        ratio = nc / dc
        # monomial gcd
        mg = monomial_gcd(np, dp)
        if any(mg):
            np = shift_down(np, mg)
            dp = shift_down(dp, mg)
        if dp.is_constant():
            c = dp.constant_value()
            self.num = np * (ratio / c)
            self.den = num.ring.one
            return
        g = poly_gcd(np, dp)
        if not g.is_constant() or g.constant_value() != 1:
            qn = divexact(np, g)
            qd = divexact(dp, g)
            if qn is not None and qd is not None:
                np, dp = qn, qd
                dp, dc2 = dp.primitive()
                ratio = ratio / dc2
        if dp.is_constant():
            self.num = np * (ratio / dp.constant_value())
            self.den = num.ring.one
        else:
            self.num = np * ratio
            self.den = dp

    @property
    def ring(self):
        return self.num.ring

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise CoefficientError("not a constant: %r" % self)
        return self.num.constant_value() / self.den.constant_value()

    def __add__(self, other):
        other = self.ring.scalar(other)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self.ring.scalar(other))

    def __rsub__(self, other):
        return self.ring.scalar(other) + (-self)

    def __neg__(self):
        s = object.__new__(Scalar)
        s.num = -self.num
        s.den = self.den
        return s

    def __mul__(self, other):
        other = self.ring.scalar(other)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.ring.scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.ring.scalar(other) * self.inverse()

    def inverse(self):
        if self.is_zero():
            raise DivisionByZeroError("inverse of zero")
        return Scalar(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        return (self.num * other.den - other.num * self.den).is_zero()

    def __bool__(self):
        return not self.is_zero()

    def evaluate(self, assignment):
        """Exact rational value at the assignment; raises PoleError when the
        denominator vanishes."""
        d = self.den.evaluate(assignment)
        if d == 0:
            raise PoleError("denominator vanishes at %r" % (assignment,))
        return self.num.evaluate(assignment) / d

    def substitute(self, mapping):
        n = self.num.substitute(mapping)
        d = self.den.substitute(mapping)
        if d.is_zero():
            raise PoleError("substitution makes the denominator vanish")
        return n / d

    def __repr__(self):
        if self.den == self.ring.one:
            return poly_str(self.num)
        ns = poly_str(self.num)
        if len(self.num.terms) > 1 or "*" in ns:
            ns = "(%s)" % ns
        ds = poly_str(self.den)
        if len(self.den.terms) > 1 or "*" in ds or "^" in ds:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)


# ---------------------------------------------------------------------------
# Spec-level operation wrappers.
# ---------------------------------------------------------------------------

def scalar_arith(op, lhs, rhs=None):
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "neg":
        return -lhs
    if op == "inv":
        return lhs.inverse()
    raise ValueError("unknown op %r" % op)


def evaluate(s, assignment):
    return s.evaluate(assignment)


# ---------------------------------------------------------------------------
# Expression parser.
#
# Grammar (whitespace insignificant):
#   expr   := term (("+"|"-") term)*
#   term   := factor (("*"|"/") factor)*
#   factor := ("-"|"+")* atom ("^" exponent)?
#   atom   := INTEGER | SYMBOL | "(" expr ")"
#   exponent := ("-")? INTEGER
# ---------------------------------------------------------------------------

def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    toks.append(("END", "", n))
    return toks


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %s, found %r" % (kind, tok[1] or "end of input"), tok[2])
        self.pos += 1
        return tok

    def parse(self):
        v = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError("unexpected %r" % tok[1], tok[2])
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            if op == "*":
                v = v * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", self.toks[self.pos - 1][2])
                v = v / rhs
        return v

    def factor(self):
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        v = self.atom()
        if self.peek()[0] == "^":
            self.take()
            esign = 1
            if self.peek()[0] == "-":
                self.take()
                esign = -1
            tok = self.take("INT")
            e = esign * int(tok[1])
            if e < 0 and v.is_zero():
                raise ParseError("zero to a negative power", tok[2])
            v = v ** e
        return v * sign if sign < 0 else v

    def atom(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return self.ring.scalar(int(tok[1]))
        if tok[0] == "NAME":
            self.take()
            try:
                return self.ring.scalar(self.ring.sym(tok[1]))
            except KeyError:
                raise ParseError("unknown symbol %r" % tok[1], tok[2]) from None
        if tok[0] == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        raise ParseError("expected a value, found %r" % (tok[1] or "end of input"), tok[2])


def parse_scalar(ring, text):
    """Parse an expression in the coefficient grammar into a Scalar."""
    return _Parser(ring, text).parse()


def parse_poly(ring, text):
    """Parse an expression that must be polynomial (denominator 1)."""
    s = parse_scalar(ring, text)
    if not s.den.is_constant():
        raise ParseError("expected a polynomial, got denominator %s" % poly_str(s.den), 0)
    return s.num * (1 / s.den.constant_value())
