"""Verification of normal and central elements, quotient presentations,
normal-element chains, and finite-dimensionality of terminal quotients.

Normality uses the graded criterion for algebras generated in degree 1: z
is normal iff for every generator g both g*z lies in z*A_1 and z*g lies in
A_1*z; per generator these are small exact linear solves on normal-form
coordinates (fraction-free elimination after clearing denominators).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import Presentation
from .freealg import NcPoly
from .rewrite import degree_counts, irreducible_words, reduce as nc_reduce
from .scalars import Scalar


@dataclass
class NormalityWitness:
    ok: bool
    element: NcPoly = None
    left_multipliers: list = None     # g*z = sum_j L[g][j] * (z x_j)
    right_multipliers: list = None    # z*g = sum_j R[g][j] * (x_j z)
    detail: str = ""

    def __bool__(self):
        return self.ok


def _coords(f, basis_words, algebra):
    index = {w: i for i, w in enumerate(basis_words)}
    vec = [algebra.ring.scalar(0)] * len(basis_words)
    for w, c in f.terms.items():
        vec[index[w]] = c
    return vec


def solve_linear(columns, target, ring):
    """Solve sum_j x_j * columns[j] = target exactly over the Scalar field.

    Denominators are cleared rowwise, then fraction-free (Bareiss-style)
    elimination runs on the polynomial matrix.  Returns the coefficient
    list or None when the system is inconsistent.
    """
    ncols = len(columns)
    nrows = len(target)
    rows = []
    for i in range(nrows):
        entries = [col[i] for col in columns] + [target[i]]
        row = []
        for k, e in enumerate(entries):
            other = ring.one
            for k2, e2 in enumerate(entries):
                if k2 != k:
                    other = other * e2.den
            row.append(e.num * other)
        rows.append(row)
    piv_list = []
    used = [False] * nrows
    for col in range(ncols):
        piv = next((r for r in range(nrows)
                    if not used[r] and not rows[r][col].is_zero()), None)
        if piv is None:
            continue
        used[piv] = True
        piv_list.append((col, piv))
        prow = rows[piv]
        for r in range(nrows):
            if r == piv or rows[r][col].is_zero():
                continue
            a, b = prow[col], rows[r][col]
            rows[r] = [pk * (-b) + rk * a for pk, rk in zip(prow, rows[r])]
    for r in range(nrows):
        if not used[r] and all(rows[r][c].is_zero() for c in range(ncols)) \
                and not rows[r][ncols].is_zero():
            return None
    sol = [ring.scalar(0)] * ncols
    for col, piv in reversed(piv_list):
        row = rows[piv]
        acc = Scalar(row[ncols], ring.one)
        for c2 in range(col + 1, ncols):
            if not row[c2].is_zero():
                acc = acc - Scalar(row[c2], ring.one) * sol[c2]
        sol[col] = acc / Scalar(row[col], ring.one)
    # exact verification guards the elimination and the remaining rows
    for i in range(nrows):
        acc = ring.scalar(0)
        for j in range(ncols):
            acc = acc + sol[j] * columns[j][i]
        if not (acc - target[i]).is_zero():
            return None
    return sol


def spans_membership(f, basis_polys, pres):
    """Is f a Scalar combination of the given (already reduced) elements?"""
    words = sorted({w for p in basis_polys for w in p.terms} | set(f.terms),
                   key=pres.algebra.word_key)
    cols = [_coords(p, words, pres.algebra) for p in basis_polys]
    tgt = _coords(f, words, pres.algebra)
    return solve_linear(cols, tgt, pres.ring) is not None


def verify_normal(z: NcPoly, pres: Presentation) -> NormalityWitness:
    """Witness that z is normal: for every generator g, g*z in z*A_1 and
    z*g in A_1*z, with the multipliers solved exactly."""
    if z.is_zero():
        return NormalityWitness(False, z, detail="zero element")
    if not z.is_bihomogeneous():
        return NormalityWitness(False, z, detail="element is not bihomogeneous")
    A = pres.algebra
    sysm = pres.completed(z.total_degree() + 2)
    zr, _ = nc_reduce(z, sysm)
    if zr.is_zero():
        return NormalityWitness(False, z, detail="element reduces to zero")
    ngens = len(A.generators)
    gens = [A.monomial((i,)) for i in range(ngens)]
    zx = [nc_reduce(zr * g, sysm)[0] for g in gens]
    xz = [nc_reduce(g * zr, sysm)[0] for g in gens]
    left = []
    right = []
    zbid = zr.bidegree()
    for gi, g in enumerate(gens):
        gbid = A.word_bidegree((gi,))
        # g*z against z*x_j for x_j of matching bidegree
        cand = [j for j in range(ngens) if A.word_bidegree((j,)) == gbid]
        target_bid = (zbid[0] + gbid[0], zbid[1] + gbid[1])
        words = [w for w in irreducible_words(sysm, bidegree=target_bid)]
        gz = nc_reduce(g * zr, sysm)[0]
        cols = [_coords(zx[j], words, A) for j in cand]
        sol = solve_linear(cols, _coords(gz, words, A), pres.ring)
        if sol is None:
            return NormalityWitness(False, z, detail="g*z not in z*A1 for g=%s"
                                    % A.generators[gi].name)
        row = [pres.ring.scalar(0)] * ngens
        for k, j in enumerate(cand):
            row[j] = sol[k]
        left.append(row)
        zg = nc_reduce(zr * g, sysm)[0]
        cols = [_coords(xz[j], words, A) for j in cand]
        sol = solve_linear(cols, _coords(zg, words, A), pres.ring)
        if sol is None:
            return NormalityWitness(False, z, detail="z*g not in A1*z for g=%s"
                                    % A.generators[gi].name)
        row = [pres.ring.scalar(0)] * ngens
        for k, j in enumerate(cand):
            row[j] = sol[k]
        right.append(row)
    return NormalityWitness(True, zr, left, right)


def verify_central(z: NcPoly, pres: Presentation) -> bool:
    """True iff g*z - z*g reduces to zero for every generator."""
    A = pres.algebra
    sysm = pres.completed(z.total_degree() + 2)
    for i in range(len(A.generators)):
        g = A.monomial((i,))
        d, _ = nc_reduce(g * z - z * g, sysm)
        if not d.is_zero():
            return False
    return True


def quotient(pres: Presentation, elements) -> Presentation:
    """Presentation with the elements appended as relations."""
    for z in elements:
        if not z.is_bihomogeneous():
            raise ValueError("quotient element not bihomogeneous: %r" % z)
    if not elements:
        return pres
    names = "+%d rels" % len(elements)
    return Presentation(pres.algebra, pres.relations + list(elements),
                        pres.nonvanishing, "%s/(%s)" % (pres.label, names),
                        None, None)


# ---------------------------------------------------------------------------
# Finite-dimensionality certificate.
# ---------------------------------------------------------------------------

@dataclass
class FiniteDimResult:
    finite: bool
    basis: list = field(default_factory=list)   # irreducible words
    detail: str = ""

    def __bool__(self):
        return self.finite


def finite_dim_check(pres: Presentation, bound: int) -> FiniteDimResult:
    """FiniteDim iff after completion through ``bound`` there is a window of
    consecutive empty degrees of width = max rule degree.

    An empty window certifies emptiness beyond: any longer word contains a
    reducible subword (in fact one empty degree suffices, since prefixes of
    irreducible words are irreducible; the window is kept as stated).
    """
    from .rewrite import CompletionBudgetExceeded

    maxrel = max(r.total_degree() for r in pres.relations)
    if bound < 2 * maxrel:
        raise ValueError("bound must be at least twice the relation degree")
    try:
        sysm = pres.completed(bound)
    except CompletionBudgetExceeded as e:
        return FiniteDimResult(False, [], "completion budget exceeded: %s" % e)
    counts = degree_counts(sysm, bound)
    w = max(1, sysm.max_rule_degree())
    start = None
    for d in range(0, bound - w + 2):
        if all(counts[d + k] == 0 for k in range(w) if d + k <= bound):
            if d + w - 1 <= bound:
                start = d
                break
    if start is None:
        return FiniteDimResult(False, [], "irreducible words persist through degree %d" % bound)
    basis = [wd for wd in irreducible_words(sysm, max_total_degree=bound)]
    return FiniteDimResult(True, basis,
                           "no irreducible words in degrees %d..%d" % (start, start + w - 1))


# ---------------------------------------------------------------------------
# Normal-element chains (the finite-dimensional quotient route).
# ---------------------------------------------------------------------------

@dataclass
class ChainStep:
    element_terms: tuple     # ((coeff expr, word), ...)
    central: bool = False    # also assert centrality


@dataclass
class ChainReport:
    ok: bool
    lines: list

    def __bool__(self):
        return self.ok


def verify_chain(pres: Presentation, steps, final_bound=12) -> ChainReport:
    """Verify a sequence: each element is normal (or central) in the
    current quotient, then the terminal quotient is finite-dimensional."""
    lines = []
    ok = True
    cur = pres
    for step in steps:
        z = cur.algebra.poly(list(step.element_terms))
        witness = verify_normal(z, cur)
        name = repr(z)
        if not witness.ok:
            ok = False
            lines.append(("normal %s in %s" % (name, cur.label), False, witness.detail))
            break
        lines.append(("normal %s in %s" % (name, cur.label), True, ""))
        if step.central:
            is_c = verify_central(z, cur)
            lines.append(("central %s in %s" % (name, cur.label), is_c, ""))
            ok = ok and is_c
        cur = quotient(cur, [z])
    if ok:
        fin = finite_dim_check(cur, final_bound)
        lines.append(("terminal quotient finite-dimensional (dim %d)" % len(fin.basis)
                      if fin.finite else "terminal quotient finite-dimensional",
                      fin.finite, fin.detail))
        ok = ok and fin.finite
    return ChainReport(ok, lines)


# Chains as stated for the b=1 members; elements in presentation order.
CHAINS = {
    "D": (ChainStep((("1", "x1 x1"), ("1", "x2 x2")), central=True),
          ChainStep((("1", "x3 x3"),), central=True),
          # x1^2 is normal but anti-commutes with x3 in the second quotient
          # (x3*x1^2 = (h-1)x1^2x3 + h*x2^2x3 = -x1^2x3 there); the chain
          # argument needs normality only.
          ChainStep((("1", "x1 x1"),)),
          ChainStep((("1", "x3 x1"), ("-1", "x1 x3")))),
    "E": (ChainStep((("1", "x1 x2"),)),
          ChainStep((("1", "x3 x3"),)),
          ChainStep((("1", "x1 x1"), ("1", "x2 x2"))),
          ChainStep((("1", "x3 x1"), ("-1", "x2 x3")))),
    "F": (ChainStep((("1", "x1 x1 x1"), ("1", "x2 x2 x2"))),
          ChainStep((("1", "x3 x3 x3"),)),
          ChainStep((("1", "x1 x1 x2"),)),
          ChainStep((("1", "x3 x1 x3 x1 x3 x1"),
                     ("1", "x1 x3 x1 x3 x1 x3"),
                     ("-gamma^2", "x2 x3 x1 x3 x1 x3"),
                     ("-1", "x1 x1 x3 x1 x3 x3"),
                     ("-1", "x1 x2 x3 x1 x3 x3")))),
    "G": (ChainStep((("1", "x3 x3"),)),
          ChainStep((("1", "x1 x1"), ("1", "x2 x2"))),
          ChainStep((("1", "x1 x1"),)),
          ChainStep((("1", "x3 x1"), ("-1", "x1 x3"))),
          ChainStep((("1", "x3 x2"), ("-1", "x2 x3")))),
}


def chain_quotient_presentation(fid, upto=None):
    """The quotient reached after the first ``upto`` chain steps of the
    b=1 member of a family (all steps when None)."""
    from .catalog import family

    pres = family(fid, {"b": 1})
    steps = CHAINS[fid][:upto]
    cur = pres
    for step in steps:
        cur = quotient(cur, [cur.algebra.poly(list(step.element_terms))])
    return cur
