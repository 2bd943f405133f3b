"""Diamond-lemma engine: rewrite rules from relations, normal forms,
overlap/inclusion ambiguities, bounded completion, irreducible words.

Reduction strategy (fixed for determinism): repeatedly pick the largest
reducible word of the element, and inside that word the leftmost
occurrence of the lead of the earliest-listed rule.  After completion the
diamond lemma makes the choice immaterial; before completion the fixed
strategy keeps golden outputs stable.

Parametric leading coefficients are not branched on: making a rule monic
records the numerator of the leading coefficient as a nonvanishing side
condition and continues (generic-case semantics).  Specializations re-run
completion at concrete parameter values to validate the side conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import NcPoly
from .scalars import ParamPoly

MAX_NEW_RULES = 200


class CompletionBudgetExceeded(RuntimeError):
    def __init__(self, message, partial=None, added=None):
        super().__init__(message)
        self.partial = partial
        self.added = added or []


@dataclass
class RewriteRule:
    """Monic rule lead -> tail with every tail word strictly below lead."""
    lead: tuple
    tail: NcPoly
    side_conditions: list = field(default_factory=list)

    def as_relation(self, algebra):
        """lead - tail as an element of the free algebra."""
        lead_poly = algebra.monomial(self.lead)
        return lead_poly - self.tail

    def degree(self, algebra):
        return algebra.word_degree(self.lead)


def make_rule(relation: NcPoly) -> RewriteRule:
    """Orient a nonzero bihomogeneous relation by its leading word."""
    if relation.is_zero():
        raise ValueError("cannot orient the zero relation")
    if not relation.is_bihomogeneous():
        raise ValueError("relation is not bihomogeneous: %r" % relation)
    lead = relation.lead_word()
    lc = relation.lead_coeff()
    side = []
    if not lc.is_constant():
        side.append(lc.num.primitive()[0])
    tail = (relation.scale(lc.inverse()) - relation.algebra.monomial(lead)).scale(-1)
    rule = RewriteRule(lead, tail, side)
    for w in tail.terms:
        if relation.algebra.word_key(w) >= relation.algebra.word_key(lead):
            raise ValueError("tail word %s not below lead %s" %
                             (relation.algebra.word_str(w), relation.algebra.word_str(lead)))
    return rule


class RewriteSystem:
    """Ordered rules over one algebra plus the accumulated side conditions."""

    def __init__(self, algebra, rules=(), side_conditions=()):
        self.algebra = algebra
        self.rules = list(rules)
        self.side_conditions = list(side_conditions)
        self.completed_degree = 0

    @classmethod
    def from_relations(cls, algebra, relations):
        sys = cls(algebra)
        for rel in relations:
            sys.add_rule(make_rule(rel))
        return sys

    def add_rule(self, rule):
        self.rules.append(rule)
        for sc in rule.side_conditions:
            self._note_side_condition(sc)

    def _note_side_condition(self, poly):
        if poly.is_constant():
            return
        p, _ = poly.primitive()
        if all(p != q for q in self.side_conditions):
            self.side_conditions.append(p)

    def copy(self):
        sys = RewriteSystem(self.algebra, list(self.rules), list(self.side_conditions))
        sys.completed_degree = self.completed_degree
        return sys

    def max_rule_degree(self):
        return max((r.degree(self.algebra) for r in self.rules), default=0)

    def lead_words(self):
        return [r.lead for r in self.rules]

    def find_redex(self, word):
        """(rule index, position) for the earliest-listed rule with an
        occurrence in ``word``, at its leftmost position; None if irreducible."""
        for idx, rule in enumerate(self.rules):
            k = len(rule.lead)
            if k > len(word):
                continue
            for pos in range(len(word) - k + 1):
                if word[pos:pos + k] == rule.lead:
                    return idx, pos
        return None

    def is_reducible(self, word):
        return self.find_redex(word) is not None

    def __repr__(self):
        A = self.algebra
        lines = ["%s -> %r" % (A.word_str(r.lead), r.tail) for r in self.rules]
        return "RewriteSystem[\n  " + "\n  ".join(lines) + "\n]"


def reduce(f: NcPoly, sys: RewriteSystem):
    """Normal form of f with the fixed strategy; returns (nf, trace)."""
    A = sys.algebra
    trace = []
    cur = f
    while True:
        target = None
        for w in cur.terms:
            if sys.find_redex(w) is not None:
                if target is None or A.word_key(w) > A.word_key(target):
                    target = w
        if target is None:
            return cur, trace
        idx, pos = sys.find_redex(target)
        rule = sys.rules[idx]
        c = cur.terms[target]
        left = target[:pos]
        right = target[pos + len(rule.lead):]
        replacement = {}
        for tw, tc in rule.tail.terms.items():
            replacement[left + tw + right] = tc
        delta = NcPoly(A, replacement).scale(c)
        cur = (cur - A.monomial(target, c)) + delta
        trace.append((target, idx, pos))


@dataclass
class Ambiguity:
    kind: str          # "overlap" | "inclusion"
    left_index: int
    right_index: int
    witness: tuple
    right_pos: int     # left rule always matches at position 0

    def degree(self, algebra):
        return algebra.word_degree(self.witness)


def find_ambiguities(sys: RewriteSystem, max_degree: int):
    """All overlap and inclusion ambiguities with witness degree <= bound,
    sorted by (degree, witness, indices) for determinism."""
    A = sys.algebra
    out = []
    n = len(sys.rules)
    for i in range(n):
        li = sys.rules[i].lead
        for j in range(n):
            lj = sys.rules[j].lead
            # overlaps: proper suffix of li equals proper prefix of lj
            for o in range(1, min(len(li), len(lj))):
                if li[-o:] == lj[:o]:
                    witness = li + lj[o:]
                    if A.word_degree(witness) <= max_degree:
                        out.append(Ambiguity("overlap", i, j, witness, len(li) - o))
            # inclusions: lj a proper subword of li
            if i != j and len(lj) < len(li):
                for pos in range(len(li) - len(lj) + 1):
                    if li[pos:pos + len(lj)] == lj:
                        if A.word_degree(li) <= max_degree:
                            out.append(Ambiguity("inclusion", i, j, li, pos))
    out.sort(key=lambda a: (A.word_degree(a.witness), a.witness,
                            a.left_index, a.right_index, a.right_pos))
    return out


def resolve_ambiguity(amb: Ambiguity, sys: RewriteSystem) -> NcPoly:
    """Difference of the two fully-reduced rewrites of the witness
    (left-rule path minus right-rule path); zero iff the ambiguity resolves."""
    A = sys.algebra
    lrule = sys.rules[amb.left_index]
    rrule = sys.rules[amb.right_index]
    w = amb.witness
    left_path = rule_applied(A, lrule, w, 0)
    right_path = rule_applied(A, rrule, w, amb.right_pos)
    nf_left, _ = reduce(left_path, sys)
    nf_right, _ = reduce(right_path, sys)
    return nf_left - nf_right


def rule_applied(algebra, rule, word, pos):
    """One rewriting step of ``rule`` at ``pos`` inside ``word``."""
    left = word[:pos]
    right = word[pos + len(rule.lead):]
    return NcPoly(algebra, {left + tw + right: tc for tw, tc in rule.tail.terms.items()})


def interreduce(sys: RewriteSystem) -> RewriteSystem:
    """Normalize: no rule's lead reducible by another rule; tails reduced."""
    out = sys.copy()
    changed = True
    passes = 0
    while changed:
        passes += 1
        if passes > 10 * max(1, len(out.rules)):
            raise RuntimeError("interreduction did not stabilize")
        changed = False
        for i in range(len(out.rules)):
            rule = out.rules[i]
            rest = RewriteSystem(out.algebra,
                                 out.rules[:i] + out.rules[i + 1:],
                                 out.side_conditions)
            rel = rule.as_relation(out.algebra)
            nf, trace = reduce(rel, rest)
            if not trace:
                continue
            changed = True
            rules = out.rules[:i] + out.rules[i + 1:]
            if not nf.is_zero():
                new_rule = make_rule(nf)
                rules.insert(i, new_rule)
                for sc in new_rule.side_conditions:
                    out._note_side_condition(sc)
            out.rules = rules
            break
    return out


def complete(sys: RewriteSystem, max_degree: int, max_new_rules=MAX_NEW_RULES):
    """Bounded completion: resolve every ambiguity with witness degree <=
    max_degree, adding oriented rules for nonzero resolutions until stable.

    Returns (completed system, added rules in discovery order).  Raises
    CompletionBudgetExceeded past ``max_new_rules`` with the partial system
    attached.
    """
    if max_degree < sys.max_rule_degree():
        raise ValueError("max_degree below the largest rule degree")
    out = interreduce(sys)
    added = []
    while True:
        ambs = find_ambiguities(out, max_degree)
        progress = False
        for amb in ambs:
            d = resolve_ambiguity(amb, out)
            if d.is_zero():
                continue
            rule = make_rule(d)
            added.append(rule)
            if len(added) > max_new_rules:
                raise CompletionBudgetExceeded(
                    "completion added more than %d rules" % max_new_rules,
                    partial=out, added=added)
            out.add_rule(rule)
            out = interreduce(out)
            progress = True
            break
        if not progress:
            break
    out.completed_degree = max_degree
    return out, added


# ---------------------------------------------------------------------------
# Irreducible words.
# ---------------------------------------------------------------------------

def irreducible_words(sys: RewriteSystem, max_total_degree=None, bidegree=None):
    """Words containing no rule lead, in (degree, word) order.

    With ``bidegree`` set, only words of that exact bidegree are returned
    (bounded by its total degree); otherwise all words of total degree <=
    ``max_total_degree``.
    """
    A = sys.algebra
    if bidegree is not None:
        bound = bidegree[0] + bidegree[1]
    else:
        if max_total_degree is None:
            raise ValueError("need a degree bound or a bidegree")
        bound = max_total_degree
    leads = sys.lead_words()
    ngens = len(A.generators)
    out = []

    def ends_with_lead(word):
        for lead in leads:
            k = len(lead)
            if len(word) >= k and word[-k:] == lead:
                return True
        return False

    def dfs(word, degree):
        if bidegree is None or A.word_bidegree(word) == bidegree:
            if bidegree is not None or degree <= bound:
                out.append(word)
        for g in range(ngens):
            d = degree + A._degrees[g]
            if d > bound:
                continue
            w = word + (g,)
            if ends_with_lead(w):
                continue
            dfs(w, d)

    dfs((), 0)
    if bidegree is not None:
        out = [w for w in out if A.word_bidegree(w) == bidegree]
    out.sort(key=A.word_key)
    return out


def degree_counts(sys: RewriteSystem, bound: int):
    """Irreducible-word count per total degree 0..bound."""
    counts = [0] * (bound + 1)
    for w in irreducible_words(sys, max_total_degree=bound):
        counts[sys.algebra.word_degree(w)] += 1
    return counts


def bidegree_counts(sys: RewriteSystem, bound: int):
    """Irreducible-word count per bidegree with total degree <= bound."""
    counts = {}
    for w in irreducible_words(sys, max_total_degree=bound):
        bd = sys.algebra.word_bidegree(w)
        counts[bd] = counts.get(bd, 0) + 1
    return counts
