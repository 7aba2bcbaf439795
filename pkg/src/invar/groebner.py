"""Buchberger engine with degree truncation, plus the ideal oracles
built on it: normal forms, reduced bases, elimination, dimension, and
ideal/radical/subalgebra membership.

Determinism is a hard requirement: pair selection follows the normal
strategy (lowest lcm degree, ties by the monomial order on the lcm,
then by pair indices), the reducer is always the first basis element
whose leading monomial divides, and queued pairs survive truncation so
a d-truncated basis can be continued to higher degree without
recomputation.  Pair pruning uses the classic Gebauer-Moeller criteria,
which depend only on leading monomials and therefore commute with
truncation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from typing import Optional, Sequence

from .errors import ContextMismatch, TruncatedBasis, TruncationInsufficient
from .polynomials import (
    GREVLEX,
    BlockElimination,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    transport,
)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Classic s-polynomial, with both lead terms scaled to 1."""
    lmf, cf = f.leading(order)
    lmg, cg = g.leading(order)
    lcm = mono_lcm(lmf, lmg)
    return _shift_scale(f, mono_div(lcm, lmf), cf.inverse()) - _shift_scale(
        g, mono_div(lcm, lmg), cg.inverse()
    )


def _shift_scale(p: Polynomial, shift, factor) -> Polynomial:
    return Polynomial(
        p.ring, {mono_mul(m, shift): c * factor for m, c in p.terms.items()}
    )


def _reduce_terms(terms: dict, reducers, order: MonomialOrder) -> dict:
    """Full normal form of a term dict against (lm, lc_inverse, terms)
    reducer triples; first divisible reducer wins."""
    key = order.key
    result = {}
    work = dict(terms)
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        for lm, lcinv, gterms in reducers:
            if mono_divides(lm, t):
                ratio = c * lcinv
                shift = mono_div(t, lm)
                for me, mc in gterms.items():
                    if me == lm:
                        continue
                    m2 = mono_mul(me, shift)
                    cur = work.get(m2)
                    nv = -(ratio * mc) if cur is None else cur - ratio * mc
                    if nv.is_zero():
                        work.pop(m2, None)
                    else:
                        work[m2] = nv
                break
        else:
            result[t] = c
    return result


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolynomialRing
    order: MonomialOrder
    generators: tuple
    truncation_degree: Optional[int] = None
    reduced: bool = False
    _cache: dict = dataclass_field(default_factory=dict, compare=False, repr=False)

    def reducers(self):
        if "reducers" not in self._cache:
            triples = []
            for g in self.generators:
                lm, lc = g.leading(self.order)
                triples.append((lm, lc.inverse(), g.terms))
            self._cache["reducers"] = triples
        return self._cache["reducers"]

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.generators]

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)


class BuchbergerEngine:
    """Incremental Buchberger: generators can be adjoined between
    extension calls, and extension can stop at a degree bound with the
    remaining pairs kept queued."""

    def __init__(self, ring: PolynomialRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        self.basis = []
        self._lms = []
        self._reducers = []
        self._pairs = {}
        self._heap = []
        self.max_processed_degree = 0

    def leading_monomials(self):
        return list(self._lms)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ContextMismatch("polynomial from a different ring")
        return Polynomial(f.ring, _reduce_terms(f.terms, self._reducers, self.order))

    def seed(self, gens: Sequence[Polynomial]):
        """Insert initial generators in order, each in normal form with
        respect to those already present."""
        for g in gens:
            if g.ring != self.ring:
                raise ContextMismatch("generator from a different ring")
            h = self.normal_form(g)
            if not h.is_zero():
                self.add_generator(h)

    def add_generator(self, h: Polynomial):
        """Adjoin a nonzero polynomial assumed to be in normal form with
        respect to the current basis, updating the pair queue with the
        Gebauer-Moeller criteria."""
        t = len(self.basis)
        lm_t, lc_t = h.leading(self.order)
        # chain criterion on queued pairs
        for (i, j), lcm_ij in list(self._pairs.items()):
            if (
                mono_divides(lm_t, lcm_ij)
                and mono_lcm(self._lms[i], lm_t) != lcm_ij
                and mono_lcm(self._lms[j], lm_t) != lcm_ij
            ):
                del self._pairs[(i, j)]
        lcms = [mono_lcm(self._lms[i], lm_t) for i in range(t)]
        coprime = [lcms[i] == mono_mul(self._lms[i], lm_t) for i in range(t)]
        kept = []
        remaining = list(range(t))
        while remaining:
            i = remaining.pop(0)
            li = lcms[i]
            if not coprime[i]:
                if any(mono_divides(lcms[j], li) for j in remaining) or any(
                    mono_divides(lcms[j], li) for j in kept
                ):
                    continue
            kept.append(i)
        for i in kept:
            if coprime[i]:
                continue
            li = lcms[i]
            self._pairs[(i, t)] = li
            heapq.heappush(
                self._heap, (mono_degree(li), self.order.key(li), i, t)
            )
        self.basis.append(h)
        self._lms.append(lm_t)
        self._reducers.append((lm_t, lc_t.inverse(), h.terms))

    def pending_degrees(self):
        return sorted({mono_degree(lcm) for lcm in self._pairs.values()})

    def extend(self, degree_limit: Optional[int] = None):
        """Process queued s-pairs in normal-strategy order; pairs above
        the degree limit stay queued for a later call."""
        while self._heap:
            deg, _, i, j = self._heap[0]
            if degree_limit is not None and deg > degree_limit:
                return
            heapq.heappop(self._heap)
            if self._pairs.pop((i, j), None) is None:
                continue  # pruned since queuing
            s = s_polynomial(self.basis[i], self.basis[j], self.order)
            h = self.normal_form(s)
            if deg > self.max_processed_degree:
                self.max_processed_degree = deg
            if not h.is_zero():
                self.add_generator(h)

    def snapshot(self, truncation_degree: Optional[int] = None) -> GroebnerBasis:
        return GroebnerBasis(
            ring=self.ring,
            order=self.order,
            generators=tuple(self.basis),
            truncation_degree=truncation_degree,
        )


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    truncate: Optional[int] = None,
) -> GroebnerBasis:
    """Groebner basis (or d-truncated basis) of the ideal generated by
    gens.  All-zero input yields the empty basis."""
    gens = list(gens)
    rings = {g.ring for g in gens}
    if len(rings) > 1:
        raise ContextMismatch("generators from different rings")
    if not gens:
        raise ContextMismatch("buchberger needs at least one generator")
    ring = gens[0].ring
    engine = BuchbergerEngine(ring, order)
    engine.seed(gens)
    engine.extend(truncate)
    return engine.snapshot(truncate)


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Unique fully reduced remainder of f modulo the basis."""
    if f.ring != basis.ring:
        raise ContextMismatch("polynomial from a different ring")
    if basis.truncation_degree is not None and f.total_degree() > basis.truncation_degree:
        raise TruncationInsufficient(
            f"degree {f.total_degree()} exceeds truncation "
            f"{basis.truncation_degree}"
        )
    return Polynomial(f.ring, _reduce_terms(f.terms, basis.reducers(), basis.order))


def ideal_membership(f: Polynomial, basis: GroebnerBasis) -> bool:
    return normal_form(f, basis).is_zero()


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """The reduced Groebner basis: inter-reduced, monic, sorted by
    leading monomial; unique for (ideal, order)."""
    if basis.truncation_degree is not None:
        raise TruncatedBasis("cannot reduce a truncated basis")
    order = basis.order
    polys = [g for g in basis.generators if not g.is_zero()]
    if not polys:
        return GroebnerBasis(basis.ring, order, (), None, True)
    polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal = []
    for g in polys:
        lm = g.leading_monomial(order)
        if any(mono_divides(k.leading_monomial(order), lm) for k in minimal):
            continue
        minimal.append(g)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(minimal):
            others = GroebnerBasis(
                basis.ring,
                order,
                tuple(h for j, h in enumerate(minimal) if j != i),
            )
            # leading monomial survives (pairwise non-divisible), tails shrink
            h = normal_form(g, others)
            if h != g:
                minimal[i] = h
                changed = True
    monic = [g.monic(order) for g in minimal]
    monic.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(basis.ring, order, tuple(monic), None, True)


def elimination_ideal(gens: Sequence[Polynomial], eliminate) -> list:
    """Reduced Groebner basis (under the induced grevlex order) of the
    intersection of the ideal with the subring in the kept variables.
    Result polynomials live in a ring over the kept variables only."""
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    elim = list(eliminate)
    for n in elim:
        if n not in ring.names:
            raise ContextMismatch(f"unknown variable {n!r}")
    elim_set = set(elim)
    front = [n for n in ring.names if n in elim_set]
    kept = [n for n in ring.names if n not in elim_set]
    work_ring = PolynomialRing(ring.field, front + kept)
    index_map = [work_ring.names.index(n) for n in ring.names]
    order = BlockElimination(len(front))
    moved = [transport(g, work_ring, index_map) for g in gens]
    basis = reduce_basis(buchberger(moved, order))
    kept_ring = PolynomialRing(ring.field, kept)
    out = []
    nfront = len(front)
    for g in basis.generators:
        if all(all(e == 0 for e in m[:nfront]) for m in g.terms):
            out.append(
                transport(
                    g,
                    kept_ring,
                    [None] * nfront + list(range(len(kept))),
                )
            )
    out.sort(key=lambda g: GREVLEX.key(g.leading_monomial(GREVLEX)))
    return out


def ideal_dimension(basis: GroebnerBasis):
    """Krull dimension of the quotient ring, by leading-term
    combinatorics; None means the ideal is the whole ring."""
    if basis.truncation_degree is not None:
        raise TruncatedBasis("dimension needs a full basis")
    n = basis.ring.nvars
    gens = [g for g in basis.generators if not g.is_zero()]
    if not gens:
        return n
    if basis.contains_one():
        return None
    supports = [
        frozenset(i for i, e in enumerate(g.leading_monomial(basis.order)) if e > 0)
        for g in gens
    ]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(supp <= s for supp in supports):
                return size
    return 0


def radical_membership(f: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """Does f vanish on the variety of gens?  Uses the Rabinowitsch
    trick: 1 is in (gens, 1 - u*f) in one more variable."""
    if f.is_zero():
        return True
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    ring = f.ring
    uname = "u"
    while uname in ring.names:
        uname += "_"
    big = PolynomialRing(ring.field, ring.names + (uname,))
    lift = list(range(ring.nvars))
    moved = [transport(g, big, lift) for g in gens]
    fu = transport(f, big, lift) * big.variable(big.nvars - 1)
    basis = buchberger(moved + [big.one - fu], GREVLEX)
    return normal_form(big.one, basis).is_zero()


class SubalgebraOracle:
    """Membership in K[g_1, ..., g_k] via tag variables: the ideal
    (T_i - g_i) is eliminated of the original variables; f lies in the
    subalgebra iff its normal form uses tag variables only, and that
    normal form is the witness expression."""

    def __init__(self, gens: Sequence[Polynomial]):
        gens = list(gens)
        if not gens:
            raise ContextMismatch("subalgebra oracle needs generators")
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ContextMismatch("generators from different rings")
        prefix = "T"
        while any(f"{prefix}{i + 1}" in ring.names for i in range(len(gens))):
            prefix = "_" + prefix
        tags = tuple(f"{prefix}{i + 1}" for i in range(len(gens)))
        self.ring = ring
        self.tag_ring = PolynomialRing(ring.field, tags)
        self.big_ring = PolynomialRing(ring.field, ring.names + tags)
        self._lift = list(range(ring.nvars))
        ideal = []
        for i, g in enumerate(gens):
            tag = self.big_ring.variable(ring.nvars + i)
            ideal.append(tag - transport(g, self.big_ring, self._lift))
        order = BlockElimination(ring.nvars)
        self.basis = reduce_basis(buchberger(ideal, order))

    def express(self, f: Polynomial) -> Optional[Polynomial]:
        """Witness polynomial in the tag ring, or None."""
        if f.ring != self.ring:
            raise ContextMismatch("polynomial from a different ring")
        nf = normal_form(transport(f, self.big_ring, self._lift), self.basis)
        n = self.ring.nvars
        if any(any(e != 0 for e in m[:n]) for m in nf.terms):
            return None
        return transport(
            nf, self.tag_ring, [None] * n + list(range(self.tag_ring.nvars))
        )

    def contains(self, f: Polynomial) -> bool:
        return self.express(f) is not None


def subalgebra_membership(f: Polynomial, gens: Sequence[Polynomial]):
    """One-shot wrapper; returns the witness polynomial or None."""
    return SubalgebraOracle(gens).express(f)
