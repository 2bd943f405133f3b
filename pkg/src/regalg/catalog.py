"""The algebra families and relation templates as constructible
presentations, plus the structural constructions: graded twists, opposite
presentations, Ore extensions, and degree-1 normal-element search.

Generators are always (x1, x2, x3) with bidegrees (1,0), (1,0), (0,1)
unless a construction adjoins more.  Family parameters may be left
symbolic (default), given as rationals, or given as Scalar expressions
over an ambient ring (used by the isomorphism claims).  Algebraic
constants (the gammas) are always symbolic, carrying their minimal
polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .freealg import FreeAlgebra, Generator, LinearMap, NcPoly, opposite, substitute_generators
from .rewrite import RewriteSystem, complete
from .scalars import PolyRing, Scalar


class InvalidParameterError(ValueError):
    """A family parameter violates a declared constraint."""


DEFAULT_GENERATORS = (Generator("x1", (1, 0)), Generator("x2", (1, 0)),
                      Generator("x3", (0, 1)))


class Presentation:
    """Generators with bidegrees, bihomogeneous relations, parameter
    symbols, algebraic constraints and nonvanishing assumptions."""

    def __init__(self, algebra, relations, nonvanishing=(), label="",
                 family=None, params=None):
        self.algebra = algebra
        self.relations = list(relations)
        self.nonvanishing = list(nonvanishing)
        self.label = label
        self.family = family
        self.params = dict(params) if params else None
        for rel in self.relations:
            if rel.is_zero():
                raise ValueError("zero relation in presentation %r" % label)
            if not rel.is_bihomogeneous():
                raise ValueError("relation not bihomogeneous in %r: %r" % (label, rel))
        self._completions = {}

    @property
    def ring(self):
        return self.algebra.ring

    @property
    def parameters(self):
        return [s for i, s in enumerate(self.ring.symbols)
                if i not in self.ring.constraints]

    @property
    def algebraic_constraints(self):
        return [(self.ring.symbols[i], list(c))
                for i, c in sorted(self.ring.constraints.items())]

    def rewrite_system(self):
        return RewriteSystem.from_relations(self.algebra, self.relations)

    def completed(self, bound):
        """Bounded completion, cached; a deeper completion serves shallower
        queries (same ideal, completed through at least the bound)."""
        best = None
        for b, sys in self._completions.items():
            if b >= bound and (best is None or b < best):
                best = b
        if best is not None:
            return self._completions[best]
        start = self.rewrite_system()
        done, _ = complete(start, bound)
        self._completions[bound] = done
        return done

    def monic_relations(self):
        return sorted((r.monic() for r in self.relations),
                      key=lambda r: self.algebra.word_key(r.lead_word()))

    def with_label(self, label):
        p = Presentation(self.algebra, self.relations, self.nonvanishing,
                         label, self.family, self.params)
        return p

    def substitute_params(self, mapping):
        """Presentation with named symbols replaced by rational values."""
        remaining = [s for s in self.ring.symbols if s not in mapping]
        cons = {self.ring.symbols[i]: list(c) for i, c in self.ring.constraints.items()
                if self.ring.symbols[i] not in mapping}
        ring2 = PolyRing(tuple(remaining), cons)
        subs = {}
        for s in self.ring.symbols:
            if s in mapping:
                subs[s] = ring2.scalar(Fraction(mapping[s]))
            else:
                subs[s] = ring2.scalar(ring2.sym(s))
        algebra2 = FreeAlgebra(self.algebra.generators, ring2)
        rels = []
        for rel in self.relations:
            terms = {w: c.substitute(subs) for w, c in rel.terms.items()}
            rels.append(NcPoly(algebra2, terms))
        nv = []
        for p in self.nonvanishing:
            v = p.substitute(subs)
            if v.is_zero():
                raise InvalidParameterError(
                    "substitution violates nonvanishing condition %r" % p)
            if not v.is_constant():
                nv.append(v.num)
        return Presentation(algebra2, rels, nv, self.label + "|subst",
                            self.family, None)

    def __repr__(self):
        return "Presentation(%s: %d relations over %r)" % (
            self.label or "anonymous", len(self.relations), self.ring)


def presentations_equal(p1, p2):
    """Same generator lists (names + bidegrees) and identical monicized
    relation sets, coefficientwise."""
    if [(g.name, g.bidegree) for g in p1.algebra.generators] != \
       [(g.name, g.bidegree) for g in p2.algebra.generators]:
        return False
    r1, r2 = p1.monic_relations(), p2.monic_relations()
    if len(r1) != len(r2):
        return False
    for a, b in zip(r1, r2):
        if sorted(a.terms) != sorted(b.terms):
            return False
        for w, c in a.terms.items():
            c2 = b.terms[w]
            if not (c.num * c2.den - c2.num * c.den).is_zero():
                return False
    return True


def opposite_presentation(pres):
    """Word-reversed relations; same generators and constraints."""
    rels = [opposite(r) for r in pres.relations]
    return Presentation(pres.algebra, rels, pres.nonvanishing,
                        "op(%s)" % pres.label, None, None)


# ---------------------------------------------------------------------------
# Family and template data.
#
# Relations are stored as (coefficient expression, word) term lists; the
# expressions are parsed over a scratch ring holding every parameter and
# then specialized, so symbolic and numeric construction share one code
# path and substitution commutes with construction.
# ---------------------------------------------------------------------------

@dataclass
class _FamilySpec:
    params: tuple
    constraints: dict
    nonvanishing: tuple
    relations: tuple
    note: str = ""


_A_RELS = (
    (("1", "x2 x1"), ("-1/q", "x1 x2")),
    (("1", "x3 x2"), ("1/(q^2*b)", "x3 x1"), ("-1", "x1 x3"), ("-b", "x2 x3")),
    (("1", "x3 x3 x1"), ("q^3*b^2", "x1 x3 x3"), ("-(q^2+q)*b", "x3 x1 x3")),
    (("1", "x3 x1 x1"), ("q^3*b^2", "x1 x1 x3"), ("-(q^2+q)*b", "x1 x3 x1")),
)

_BCDEG_R2 = (("1", "x3 x2"), ("1/b", "x3 x1"), ("-1", "x1 x3"), ("-b", "x2 x3"))

FAMILIES = {
    "A": _FamilySpec(("b", "q"), {}, ("b", "q", "q-1"), _A_RELS),
    "B": _FamilySpec(("b",), {}, ("b",), (
        (("1", "x2 x1"), ("1", "x1 x2")),
        _BCDEG_R2,
        (("1", "x3 x3 x1"), ("-b^2", "x1 x3 x3")),
        (("1", "x3 x1 x1"), ("b^3", "x1 x2 x3"), ("-b", "x1 x3 x1"), ("-b^2", "x2 x3 x1")),
    )),
    "C": _FamilySpec(("b",), {}, ("b",), (
        (("1", "x2 x1"), ("1", "x1 x2")),
        _BCDEG_R2,
        (("1", "x3 x3 x1"), ("-b^2", "x1 x3 x3")),
        (("1", "x3 x1 x1"), ("-b^3", "x1 x2 x3"), ("-b", "x1 x3 x1"), ("-b^2", "x2 x3 x1")),
    )),
    "D": _FamilySpec(("b", "h"), {}, ("b",), (
        (("1", "x2 x1"), ("1", "x1 x2")),
        _BCDEG_R2,
        (("1", "x3 x3 x1"), ("-b^2", "x1 x3 x3")),
        (("1", "x3 x1 x1"), ("-(h/b^2 - b^2)", "x1 x1 x3"), ("-h", "x2 x2 x3")),
    )),
    "E": _FamilySpec(("b", "gamma"), {"gamma": (1, 0, 1)}, ("b",), (
        (("1", "x2 x1"), ("1", "x1 x2")),
        _BCDEG_R2,
        (("1", "x3 x3 x1"), ("-b^3", "x2 x3 x3")),
        (("1", "x3 x1 x1"), ("-gamma*b^3", "x1 x2 x3"), ("-b", "x1 x3 x1"),
         ("-b^2", "x2 x3 x1")),
    )),
    "F": _FamilySpec(("b", "gamma"), {"gamma": (1, 1, 1)}, ("b",), (
        (("1", "x2 x1"), ("-gamma^2", "x1 x2")),
        (("1", "x3 x2"), ("gamma/b", "x3 x1"), ("-1", "x1 x3"), ("-b", "x2 x3")),
        (("1", "x3 x3 x1"), ("-gamma^2*b^3", "x2 x3 x3"), ("b", "x3 x1 x3")),
        (("1", "x3 x1 x1"), ("-gamma*b^3", "x1 x2 x3"), ("-gamma^2*b^2", "x2 x3 x1")),
    )),
    "Fbar": _FamilySpec(("b", "gamma"), {"gamma": (1, 1, 1)}, ("b",), (
        (("1", "x2 x1"), ("-gamma^2", "x1 x2")),
        (("1", "x3 x2"), ("gamma/b", "x3 x1"), ("-1", "x1 x3"), ("-b", "x2 x3")),
        (("1", "x3 x3 x1"), ("-gamma^2*b^2", "x1 x3 x3"), ("b^3", "x2 x3 x3"),
         ("b", "x3 x1 x3")),
        (("1", "x3 x1 x1"), ("b^4", "x2 x2 x3"), ("-gamma^2*b", "x1 x3 x1"),
         ("b^2", "x2 x3 x1")),
    )),
    "G": _FamilySpec(("b", "gamma"), {"gamma": (Fraction(1, 2), -1, 1)}, ("b",), (
        (("1", "x2 x1"), ("1", "x1 x2")),
        _BCDEG_R2,
        (("1", "x3 x3 x1"), ("-b^3", "x2 x3 x3")),
        (("1", "x3 x1 x1"), ("-b^2/(2*gamma)", "x1 x1 x3"), ("-gamma*b^4", "x2 x2 x3")),
    )),
    "H": _FamilySpec(("b",), {}, ("b",), (
        (("1", "x2 x1"), ("-1", "x1 x2"), ("-1", "x1 x1")),
        (("1", "x3 x2"), ("-2*b", "x1 x3"), ("-b", "x2 x3")),
        (("1", "x3 x3 x1"), ("b^2", "x1 x3 x3"), ("-2*b", "x3 x1 x3")),
        (("1", "x3 x1 x1"), ("b^2", "x1 x1 x3"), ("-2*b", "x1 x3 x1")),
    )),
}

# Case templates with undetermined coefficients.  r5 is carried as a
# defining relation with the tie symbols q and z, so every rule is monic
# with polynomial tails and overlap resolutions stay polynomial; the ties
# p*q = 1 and z = q*a - q*m live in the classify module.
_TEMPLATE_R125 = (
    (("1", "x2 x1"), ("-p", "x1 x2"), ("-m", "x1 x1")),
    (("1", "x3 x2"), ("-a", "x3 x1"), ("-n", "x1 x3"), ("-b", "x2 x3")),
    (("1", "x3 x1 x2"), ("-q*n", "x1 x3 x1"), ("-q*b", "x2 x3 x1"), ("-z", "x3 x1 x1")),
)
_TEMPLATE_R3 = (("1", "x3 x3 x1"), ("-c", "x1 x3 x3"), ("-d", "x2 x3 x3"),
                ("-e", "x3 x1 x3"))

TEMPLATES = {
    # leading term x3*x1^2 (the case where the families live)
    "TL": _FamilySpec(
        ("p", "q", "m", "n", "a", "b", "c", "d", "e", "f", "g", "h", "j", "k", "z"),
        {}, ("p",),
        (_TEMPLATE_R125[0], _TEMPLATE_R125[1], _TEMPLATE_R3,
         (("1", "x3 x1 x1"), ("-f", "x1 x1 x3"), ("-g", "x1 x2 x3"),
          ("-h", "x2 x2 x3"), ("-j", "x1 x3 x1"), ("-k", "x2 x3 x1")),
         _TEMPLATE_R125[2])),
    # leading term x2*x3*x1 (normalized k = -1)
    "TK": _FamilySpec(
        ("p", "q", "m", "n", "a", "b", "c", "d", "e", "f", "g", "h", "j", "z"),
        {}, ("p",),
        (_TEMPLATE_R125[0], _TEMPLATE_R125[1], _TEMPLATE_R3,
         (("1", "x2 x3 x1"), ("-f", "x1 x1 x3"), ("-g", "x1 x2 x3"),
          ("-h", "x2 x2 x3"), ("-j", "x1 x3 x1")),
         _TEMPLATE_R125[2])),
    # leading term x2^2*x3 (normalized h = -1, k = l = 0)
    "TH": _FamilySpec(
        ("p", "q", "m", "n", "a", "b", "c", "d", "e", "f", "g", "j", "z"),
        {}, ("p",),
        (_TEMPLATE_R125[0], _TEMPLATE_R125[1], _TEMPLATE_R3,
         (("1", "x2 x2 x3"), ("-f", "x1 x1 x3"), ("-g", "x1 x2 x3"),
          ("-j", "x1 x3 x1")),
         _TEMPLATE_R125[2])),
    # l = k = h = 0: r4 factors as x1 * (...)
    "THzero": _FamilySpec(
        ("p", "q", "m", "n", "a", "b", "c", "d", "e", "f", "g", "j", "z"),
        {}, ("p",),
        (_TEMPLATE_R125[0], _TEMPLATE_R125[1], _TEMPLATE_R3,
         (("f", "x1 x1 x3"), ("g", "x1 x2 x3"), ("j", "x1 x3 x1")),
         _TEMPLATE_R125[2])),
    # Jordan case: p = m = 1, a = 0, hence q = 1 and z = -1
    "TJ": _FamilySpec(
        ("n", "b", "c", "d", "e", "f", "g", "h", "j", "k"),
        {}, (),
        ((("1", "x2 x1"), ("-1", "x1 x2"), ("-1", "x1 x1")),
         (("1", "x3 x2"), ("-n", "x1 x3"), ("-b", "x2 x3")),
         (("1", "x3 x3 x1"), ("-c", "x1 x3 x3"), ("-d", "x2 x3 x3"), ("-e", "x3 x1 x3")),
         (("1", "x3 x1 x1"), ("-f", "x1 x1 x3"), ("-g", "x1 x2 x3"),
          ("-h", "x2 x2 x3"), ("-j", "x1 x3 x1"), ("-k", "x2 x3 x1")),
         (("1", "x3 x1 x2"), ("-n", "x1 x3 x1"), ("-b", "x2 x3 x1"), ("1", "x3 x1 x1")))),
}


def family_ids():
    return tuple(FAMILIES)


def template_ids():
    return tuple(TEMPLATES)


def _spec_for(fid):
    if fid in FAMILIES:
        return FAMILIES[fid]
    if fid in TEMPLATES:
        return TEMPLATES[fid]
    raise KeyError("unknown family or template id %r" % fid)


def family(fid, params=None, ring=None):
    """Construct a catalog family or case template.

    ``params`` maps parameter names to rationals or Scalars; omitted
    parameters stay symbolic.  ``ring`` fixes the coefficient ring (needed
    when parameter values are Scalars over an ambient ring).  Numeric
    values violating a nonvanishing condition raise InvalidParameterError.
    """
    spec = _spec_for(fid)
    params = dict(params or {})
    unknown = set(params) - set(spec.params)
    if unknown:
        raise InvalidParameterError("unknown parameters %s for %s" % (sorted(unknown), fid))
    if ring is None:
        sym_names = tuple(p for p in spec.params if p not in params)
        cons = {s: list(c) for s, c in spec.constraints.items() if s not in params}
        ring = PolyRing(sym_names, cons)
    scratch = PolyRing(spec.params, {k: list(v) for k, v in spec.constraints.items()})
    values = {}
    for p in spec.params:
        if p in params:
            v = params[p]
            if isinstance(v, Scalar):
                if v.ring is not ring:
                    raise InvalidParameterError("parameter %r over a foreign ring" % p)
                values[p] = v
            else:
                values[p] = ring.scalar(Fraction(v))
        else:
            values[p] = ring.scalar(ring.sym(p))
    # provided values for constrained symbols must satisfy the constraint
    for s, coeffs in spec.constraints.items():
        if s in params:
            acc = ring.scalar(0)
            for k, c in enumerate(coeffs):
                acc = acc + values[s] ** k * ring.scalar(c)
            if not acc.is_zero():
                raise InvalidParameterError(
                    "value for %r does not satisfy its minimal polynomial" % s)
    nonvanishing = []
    for expr in spec.nonvanishing:
        val = scratch.parse(expr).substitute(values)
        if val.is_zero():
            raise InvalidParameterError(
                "parameters violate the condition %s != 0 for %s" % (expr, fid))
        if not val.is_constant():
            nonvanishing.append(val.num.primitive()[0])
    algebra = FreeAlgebra(DEFAULT_GENERATORS, ring)
    relations = []
    for rel_terms in spec.relations:
        terms = {}
        for coeff_expr, word in rel_terms:
            c = scratch.parse(coeff_expr).substitute(values)
            w = algebra.word(word)
            terms[w] = terms.get(w, ring.scalar(0)) + c
        relations.append(NcPoly(algebra, terms))
    shown = ",".join("%s=%s" % (k, v) for k, v in sorted(params.items())) or "symbolic"
    return Presentation(algebra, relations, nonvanishing,
                        "%s(%s)" % (fid, shown), fid, params)


def template_defining_relations(fid):
    """The four defining relations of a template (r5 dropped), for
    completion experiments."""
    pres = family(fid)
    lead5 = pres.algebra.word("x3 x1 x2")
    rels = [r for r in pres.relations if r.monic().lead_word() != lead5]
    return Presentation(pres.algebra, rels, pres.nonvanishing,
                        pres.label + "|defining", fid, None)


# ---------------------------------------------------------------------------
# Graded twists.
# ---------------------------------------------------------------------------

def graded_twist(pres, weights):
    """Twist by the diagonal graded automorphism sending generator g to
    weights[g]*g.

    Convention (fixed once, validated against the catalog): a relation term
    with word w = l_1...l_n and coefficient c becomes c / prod_t
    weight(l_t)^(t-1), i.e. each letter contributes the weight of all
    letters strictly to its left once per step of the twisted product.
    Twisting by the inverse weights undoes the twist.
    """
    A = pres.algebra
    ring = pres.ring
    ws = []
    for g in A.generators:
        w = ring.scalar(weights.get(g.name, 1))
        if w.is_zero():
            raise ValueError("zero twist weight for %s" % g.name)
        ws.append(w)
    rels = []
    for rel in pres.relations:
        terms = {}
        for word, c in rel.terms.items():
            f = ring.scalar(1)
            for t, letter in enumerate(word):
                if t:
                    f = f * ws[letter] ** t
            terms[word] = c / f
        rels.append(NcPoly(A, terms))
    wlabel = ",".join("%s:%r" % (g.name, weights[g.name])
                      for g in A.generators if g.name in weights)
    return Presentation(A, rels, pres.nonvanishing,
                        "twist(%s; %s)" % (pres.label, wlabel), None, None)


def rescale_generators(pres, scales):
    """Substitute generator -> scale * generator in every relation."""
    A = pres.algebra
    images = []
    for i, g in enumerate(A.generators):
        c = pres.ring.scalar(scales.get(g.name, 1))
        images.append(A.monomial((i,), c))
    rels = [substitute_generators(r, images) for r in pres.relations]
    return Presentation(A, rels, pres.nonvanishing,
                        "rescale(%s)" % pres.label, None, None)


# ---------------------------------------------------------------------------
# Ore extensions.
# ---------------------------------------------------------------------------

def ore_extension(base, sigma: LinearMap, delta: dict, new_gen: Generator):
    """Adjoin ``new_gen`` with relations new*g = sigma(g)*new + delta(g).

    ``delta`` maps base generator names to NcPoly over the base algebra
    (missing names mean zero).  The new generator is declared last, hence
    largest in the word order, unless callers rebuild the algebra
    themselves.
    """
    A = base.algebra
    if sigma.determinant().is_zero():
        raise ValueError("sigma is singular")
    ext = FreeAlgebra(A.generators + (new_gen,), A.ring)
    nidx = len(A.generators)

    def lift(poly):
        return NcPoly(ext, dict(poly.terms))

    rels = [lift(r) for r in base.relations]
    images = sigma.image_polys()
    for i, g in enumerate(A.generators):
        lhs = ext.monomial((nidx, i))
        rhs = lift(images[i]) * ext.monomial((nidx,))
        d = delta.get(g.name)
        if d is not None and not d.is_zero():
            want = tuple(x + y for x, y in zip(new_gen.bidegree, g.bidegree))
            if d.bidegree() != want:
                raise ValueError("delta(%s) has bidegree %s, expected %s"
                                 % (g.name, d.bidegree(), want))
            rhs = rhs + lift(d)
        rels.append(lhs - rhs)
    return Presentation(ext, rels, base.nonvanishing,
                        "ore(%s; %s)" % (base.label, new_gen.name), None, None)


# ---------------------------------------------------------------------------
# Degree-1 normal-element search.
# ---------------------------------------------------------------------------

@dataclass
class NormalSearchResult:
    verdict: str                 # "EMPTY" | "FOUND" | "UNKNOWN"
    candidates: list = field(default_factory=list)   # (coeffs, NcPoly)
    complete: bool = True        # False when solutions exist beyond the extracted ones
    detail: str = ""


def degree1_normal_search(pres, budget=None):
    """All z = a*x1 + b*x2 + c*x3 (up to scale) normal in ``pres``.

    Works on numeric presentations (only constrained symbols may remain in
    the ring).  Normality of z is encoded per generator g and side as a
    rank condition: g*z must lie in span{z*x_j}, equivalently every 4x4
    minor of the augmented normal-form coordinate matrix vanishes (always
    necessary; sufficient at full rank).  "Up to scale" is the projective
    split a=1 / a=0,b=1 / a=b=0,c=1.  An EMPTY verdict is certified by
    Buchberger inconsistency of every branch; any extracted candidate is
    re-verified by an exact linear solve before being reported.
    """
    from .groebner import DEFAULT_BUDGET, BudgetExceeded, buchberger

    budget = budget or DEFAULT_BUDGET
    ring = pres.ring
    for i, s in enumerate(ring.symbols):
        if i not in ring.constraints:
            raise ValueError("normal search needs numeric parameters; %r is free" % s)
    sys = pres.completed(3)
    A = pres.algebra
    ngens = len(A.generators)
    from .rewrite import irreducible_words, reduce as nc_reduce
    basis2 = irreducible_words(sys, max_total_degree=2)
    basis2 = [w for w in basis2 if A.word_degree(w) == 2]
    windex = {w: i for i, w in enumerate(basis2)}
    # normal forms of all products x_i * x_j as coordinate vectors
    prod_nf = {}
    for i in range(ngens):
        for j in range(ngens):
            nf, _ = nc_reduce(A.monomial((i, j)), sys)
            vec = [ring.scalar(0)] * len(basis2)
            for w, c in nf.terms.items():
                vec[windex[w]] = c
            prod_nf[(i, j)] = vec

    cons_syms = [ring.symbols[i] for i in sorted(ring.constraints)]
    minpolys = {s: ring.constraints[ring.index(s)] for s in cons_syms}
    unknowns = ["_zc%d" % i for i in range(ngens)]
    branches = []
    for lead in range(ngens):
        fixed = {unknowns[i]: Fraction(0) for i in range(lead)}
        fixed[unknowns[lead]] = Fraction(1)
        branches.append((lead, fixed, unknowns[lead + 1:]))

    solver_ring = PolyRing(tuple(cons_syms) + tuple(unknowns))  # unconstrained
    base_gens = []
    for s in cons_syms:
        coeffs = minpolys[s]
        mono_base = [0] * len(solver_ring.symbols)
        terms = {}
        for k, c in enumerate(coeffs):
            m = list(mono_base)
            m[solver_ring.index(s)] = k
            terms[tuple(m)] = Fraction(c)
        base_gens.append(solver_ring.poly(terms))

    def lift_scalar(c):
        # presentation scalars -> solver ring polynomials (clearing the
        # denominator is safe: denominators are nonzero by construction)
        num = ring.lift(c.num, solver_ring)
        den = ring.lift(c.den, solver_ring)
        return num, den

    coord_polys = []
    for i in range(ngens):
        name = unknowns[i]
        coord_polys.append(solver_ring.sym(name))

    def coordinate_matrix(side, branch_coords):
        """Columns: NF(z*x_j) (or x_j*z); last column NF(g*z) per g handled
        by the caller.  Entries as solver-ring polynomials after clearing
        denominators columnwise."""
        cols = []
        for j in range(ngens):
            col = []
            for row in range(len(basis2)):
                acc_num = solver_ring.zero
                acc_den = solver_ring.one
                for i in range(ngens):
                    key = (i, j) if side == "right" else (j, i)
                    num, den = lift_scalar(prod_nf[key][row])
                    # acc += coord_i * num/den  (common denominator product)
                    acc_num = acc_num * den + num * branch_coords[i] * acc_den
                    acc_den = acc_den * den
                col.append((acc_num, acc_den))
            den_prod = solver_ring.one
            for _, d in col:
                den_prod = den_prod * d
            cleared = []
            for n, d in col:
                other = solver_ring.one
                for n2, d2 in col:
                    if d2 is not d:
                        other = other * d2
                cleared.append(n * other)
            cols.append(cleared)
        return cols

    def det4(mat):
        # cofactor expansion along the first row, 4x4
        def det(rows):
            n = len(rows)
            if n == 1:
                return rows[0][0]
            acc = solver_ring.zero
            for j in range(n):
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                term = rows[0][j] * det(minor)
                acc = acc + term if j % 2 == 0 else acc - term
            return acc
        return det(mat)

    results = []
    all_inconsistent = True
    any_unknown = False
    for lead, fixed, free in branches:
        branch_coords = []
        for i in range(ngens):
            name = unknowns[i]
            if name in fixed:
                branch_coords.append(solver_ring.const(fixed[name]))
            else:
                branch_coords.append(solver_ring.sym(name))
        system = list(base_gens)
        for side in ("right", "left"):
            cols = coordinate_matrix(side, branch_coords)
            for g in range(ngens):
                target = []
                for row in range(len(basis2)):
                    acc_num = solver_ring.zero
                    acc_den = solver_ring.one
                    for i in range(ngens):
                        key = (g, i) if side == "right" else (i, g)
                        num, den = lift_scalar(prod_nf[key][row])
                        acc_num = acc_num * den + num * branch_coords[i] * acc_den
                        acc_den = acc_den * den
                    target.append((acc_num, acc_den))
                tcol = [n for n, _ in target]
                mat = list(zip(*([c for c in cols] + [tcol])))  # rows of 4
                rows = [list(r) for r in mat]
                nrows = len(rows)
                from itertools import combinations
                for combo in combinations(range(nrows), 4):
                    d = det4([rows[r] for r in combo])
                    if not d.is_zero():
                        system.append(d)
        system = _dedupe_polys(system)
        if not any(not p.is_zero() for p in system):
            # trivial branch: everything in this branch is normal
            coords = [fixed.get(unknowns[i], Fraction(0)) if i <= lead else Fraction(0)
                      for i in range(ngens)]
            coords[lead] = Fraction(1)
            if _degree1_probe(pres, coords):
                results.append(coords)
            all_inconsistent = False
            continue
        try:
            gb = buchberger(system, budget=budget)
        except BudgetExceeded:
            any_unknown = True
            all_inconsistent = False
            continue
        if gb.contains_one():
            continue
        all_inconsistent = False
        point = _extract_point(gb, solver_ring, free)
        if point is not None:
            coords = []
            for i in range(ngens):
                name = unknowns[i]
                if name in fixed:
                    coords.append(fixed[name])
                else:
                    coords.append(point[name])
            if _degree1_probe(pres, coords):
                results.append(coords)
        else:
            any_unknown = True

    if all_inconsistent and not results:
        return NormalSearchResult("EMPTY", [], True,
                                  "all branches carry an inconsistency certificate")
    if results:
        A = pres.algebra
        cands = []
        for coords in results:
            terms = {}
            for i, c in enumerate(coords):
                if c:
                    terms[(i,)] = pres.ring.scalar(c)
            cands.append((tuple(coords), NcPoly(A, terms)))
        return NormalSearchResult("FOUND", cands, not any_unknown,
                                  "candidates verified by exact linear solve")
    return NormalSearchResult("UNKNOWN", [], False,
                              "no certificate within budget" if any_unknown
                              else "solutions exist but were not rational points")


def _dedupe_polys(polys):
    seen = []
    out = []
    for p in polys:
        if p.is_zero():
            continue
        prim, _ = p.primitive()
        key = frozenset(prim.terms.items())
        if key in seen:
            continue
        seen.append(key)
        out.append(prim)
    return out


def _extract_point(gb, ring, free_names):
    """Read an affine rational point off a basis of the shape {u - c, ...};
    None when the basis is not of that shape."""
    point = {name: None for name in free_names}
    if not free_names:
        return {} if not gb.polys or all(p.is_zero() for p in gb.polys) else {}
    leftover = []
    for p in gb.polys:
        handled = False
        for name in free_names:
            idx = ring.index(name)
            lin = {m: c for m, c in p.terms.items()}
            mono = [0] * len(ring.symbols)
            mono[idx] = 1
            mono = tuple(mono)
            zero = tuple([0] * len(ring.symbols))
            if set(lin) <= {mono, zero} and mono in lin:
                val = -lin.get(zero, Fraction(0)) / lin[mono]
                if point[name] is None:
                    point[name] = val
                    handled = True
                    break
        if not handled:
            leftover.append(p)
    if any(v is None for v in point.values()):
        # free unknowns left unpinned: take 0 when the basis is empty
        if not gb.polys:
            return {name: Fraction(0) for name in free_names}
        return None
    if leftover:
        # remaining members must vanish at the point
        assignment = {name: point[name] for name in free_names}
        for p in leftover:
            try:
                if p.evaluate(assignment) != 0:
                    return None
            except Exception:
                return None
    return point


def _degree1_probe(pres, coords):
    """Exact check that z with the given rational coordinates is normal:
    each g*z and z*g lies in the span of the z*x_j / x_j*z respectively."""
    from .normal import spans_membership

    A = pres.algebra
    sysm = pres.completed(3)
    terms = {}
    for i, c in enumerate(coords):
        if c:
            terms[(i,)] = pres.ring.scalar(c)
    z = NcPoly(A, terms)
    if z.is_zero():
        return False
    from .rewrite import reduce as nc_reduce
    gens = [A.monomial((i,)) for i in range(len(A.generators))]
    right_basis = [nc_reduce(z * g, sysm)[0] for g in gens]
    left_basis = [nc_reduce(g * z, sysm)[0] for g in gens]
    for g in gens:
        gz, _ = nc_reduce(g * z, sysm)
        if not spans_membership(gz, right_basis, pres):
            return False
        zg, _ = nc_reduce(z * g, sysm)
        if not spans_membership(zg, left_basis, pres):
            return False
    return True
