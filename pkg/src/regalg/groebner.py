"""Small commutative Groebner engine over the rationals.

Used for ideal membership, inconsistency certificates (Rabinowitsch
saturation), and the polynomial systems behind normal-element search and
automorphism signatures.  Buchberger with the product and chain criteria,
graded-reverse-lexicographic order in the declaration order of the ring,
and a configurable pair-reduction budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import ParamPoly, PolyRing, grevlex_key

DEFAULT_BUDGET = 50_000

INCONSISTENT = "INCONSISTENT"
CONSISTENT = "CONSISTENT"
UNKNOWN = "UNKNOWN"


class BudgetExceeded(RuntimeError):
    pass


def _monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _monic(p):
    lc = p.lead_coeff()
    return p if lc == 1 else p * (1 / lc)


def normal_form(f, basis):
    """Complete reduction of f modulo a list of polynomials."""
    ring = f.ring
    rem = dict(f.terms)
    out = {}
    leads = [(g.lead_monomial(), g) for g in basis]
    while rem:
        m = max(rem, key=grevlex_key)
        c = rem.pop(m)
        for lm, g in leads:
            if _monomial_divides(lm, m):
                shift = tuple(x - y for x, y in zip(m, lm))
                factor = c / g.terms[lm]
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    key = _monomial_mul(shift, gm)
                    v = rem.get(key, Fraction(0)) - factor * gc
                    if v:
                        rem[key] = v
                    elif key in rem:
                        del rem[key]
                break
        else:
            out[m] = c
    return ParamPoly(ring, out)


def _spoly(f, g):
    lf, lg = f.lead_monomial(), g.lead_monomial()
    lcm = _monomial_lcm(lf, lg)
    mf = tuple(a - b for a, b in zip(lcm, lf))
    mg = tuple(a - b for a, b in zip(lcm, lg))
    ring = f.ring
    tf = ParamPoly(ring, {mf: 1 / f.terms[lf]})
    tg = ParamPoly(ring, {mg: 1 / g.terms[lg]})
    return tf * f - tg * g


@dataclass
class GroebnerBasis:
    ring: PolyRing
    polys: list
    reductions: int = 0

    def contains_one(self):
        return any(p.is_constant() and not p.is_zero() for p in self.polys)

    def reduce(self, f):
        return normal_form(f, self.polys)

    def contains(self, f):
        """Ideal membership."""
        return self.reduce(f).is_zero()


def buchberger(generators, budget=DEFAULT_BUDGET):
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Raises BudgetExceeded when more than ``budget`` S-pair reductions run.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    basis = []
    for g in gens:
        r = normal_form(g, basis)
        if not r.is_zero():
            basis.append(_monic(r))
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    done = set()
    reductions = 0
    while pairs:
        # normal selection: smallest lcm degree, then grevlex-smallest lcm
        def pair_key(ij):
            i, j = ij
            lcm = _monomial_lcm(basis[i].lead_monomial(), basis[j].lead_monomial())
            return (sum(lcm), grevlex_key(lcm), i, j)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = basis[i].lead_monomial(), basis[j].lead_monomial()
        lcm = _monomial_lcm(li, lj)
        # product criterion
        if lcm == _monomial_mul(li, lj):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _monomial_divides(basis[k].lead_monomial(), lcm):
                kij = (max(i, k), min(i, k))
                kji = (max(j, k), min(j, k))
                if kij in done and kji in done:
                    skip = True
                    break
        if skip:
            continue
        reductions += 1
        if reductions > budget:
            raise BudgetExceeded("Buchberger pair budget (%d) exceeded" % budget)
        r = normal_form(_spoly(basis[i], basis[j]), basis)
        if r.is_zero():
            continue
        r = _monic(r)
        basis.append(r)
        n = len(basis) - 1
        for k in range(n):
            pairs.add((n, k))
        if r.is_constant():
            break
    basis = _interreduce(basis)
    return GroebnerBasis(ring, basis, reductions)


def _interreduce(basis):
    # drop members whose lead is divisible by another lead, then reduce tails
    kept = []
    for i, p in enumerate(basis):
        lm = p.lead_monomial()
        if any(j != i and _monomial_divides(basis[j].lead_monomial(), lm)
               and (basis[j].lead_monomial() != lm or j < i)
               for j in range(len(basis))):
            continue
        kept.append(p)
    out = []
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        r = normal_form(p, others)
        if not r.is_zero():
            out.append(_monic(r))
    out.sort(key=lambda p: grevlex_key(p.lead_monomial()))
    return out


# ---------------------------------------------------------------------------
# Saturated solving and inconsistency certificates.
# ---------------------------------------------------------------------------

@dataclass
class SolveResult:
    verdict: str                  # INCONSISTENT | CONSISTENT | UNKNOWN
    basis: GroebnerBasis | None
    detail: str = ""


def saturated_solve(system, nonvanishing=(), budget=DEFAULT_BUDGET):
    """Solve a polynomial system subject to nonvanishing side conditions.

    Nonvanishing polynomials g_i enter by Rabinowitsch saturation: a fresh
    symbol t_i and the generator t_i*g_i - 1.  INCONSISTENT means 1 lies in
    the saturated ideal (no solutions with all g_i nonzero over the
    algebraic closure); CONSISTENT means the basis completed without a unit.
    """
    system = [p for p in system if not p.is_zero()]
    for g in nonvanishing:
        if g.is_zero():
            return SolveResult(INCONSISTENT, None, "a nonvanishing constraint is identically zero")
    nonvanishing = [g for g in nonvanishing if not g.is_constant()]
    # cheap certificate: a nonzero constant in the system
    for p in system:
        if p.is_constant() and not p.is_zero():
            return SolveResult(INCONSISTENT, None,
                               "system contains the constant %s" % p.constant_value())
    if not system and not nonvanishing:
        return SolveResult(CONSISTENT, None, "empty system")
    ring = (system or nonvanishing)[0].ring
    if nonvanishing:
        tnames = ["_t%d" % i for i in range(len(nonvanishing))]
        ext = ring.extend(tnames)
        gens = [ring.lift(p, ext) for p in system]
        for i, g in enumerate(nonvanishing):
            gens.append(ring.lift(g, ext) * ext.sym(tnames[i]) - ext.one)
    else:
        gens = list(system)
    try:
        gb = buchberger(gens, budget=budget)
    except BudgetExceeded as e:
        return SolveResult(UNKNOWN, None, str(e))
    if gb.contains_one():
        return SolveResult(INCONSISTENT, gb, "1 lies in the saturated ideal")
    return SolveResult(CONSISTENT, gb, "basis completed without a unit")


@dataclass
class Certificate:
    inconsistent: bool
    detail: str
    basis: GroebnerBasis | None = None

    @property
    def verdict(self):
        return INCONSISTENT if self.inconsistent else UNKNOWN


def inconsistency_certificate(system, nonvanishing=(), budget=DEFAULT_BUDGET):
    """Certify that a system with nonvanishing conditions has no solutions.

    Returns a Certificate: ``inconsistent=True`` only when 1 lies in the
    Rabinowitsch-saturated ideal.  Otherwise ``inconsistent=False`` with a
    detail of "budget" (exhausted) or "completed-no-unit"; neither is a
    consistency claim by this operation.
    """
    res = saturated_solve(system, nonvanishing, budget)
    if res.verdict == INCONSISTENT:
        return Certificate(True, res.detail, res.basis)
    if res.verdict == UNKNOWN:
        return Certificate(False, "budget", res.basis)
    return Certificate(False, "completed-no-unit", res.basis)
