"""Invariant theory of finite matrix groups.

Degree-wise invariant bases by exact linear algebra, King's minimal
generating sets driven by truncated Groebner bases, Noether-style
separating sets and their reduction to at most 2n+1 elements, sampled
separation checks, homogeneous systems of parameters, Dade's orbit
product construction of primary invariants, and degree bound reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Sequence

from .errors import (
    FieldTooSmall,
    ModularCase,
    NonHomogeneousInput,
    RetryLimitExceeded,
)
from .groebner import (
    BuchbergerEngine,
    SubalgebraOracle,
    buchberger,
    ideal_dimension,
    ideal_membership,
    reduce_basis,
)
from .groups import FiniteMatrixGroup, apply_element, orbit, point_image, reynolds
from .linalg import nullspace
from .polynomials import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    mono_divides,
    monomials_of_degree,
    transport,
)
from .prng import XorShift


# ---------------------------------------------------------------------------
# invariant spaces degree by degree
# ---------------------------------------------------------------------------

def invariant_basis(group: FiniteMatrixGroup, d: int, ring=None) -> list:
    """Echelonized basis of the homogeneous degree-d invariants, from the
    exact linear system sigma(f) = f over the monomial basis.  Works in
    the modular case as well."""
    ring = ring or group.ring()
    monos = list(reversed(monomials_of_degree(ring, d)))  # descending grevlex
    if not monos:
        return []
    index = {m: i for i, m in enumerate(monos)}
    field = group.field
    zero, one = field.zero, field.one
    rows = []
    for sigma in group.generators:
        # column j holds the coordinates of sigma(m_j)
        cols = []
        for m in monos:
            image = ring.monomial(m).apply_linear_map(sigma.rows)
            col = [zero] * len(monos)
            for mm, c in image.terms.items():
                col[index[mm]] = c
            cols.append(col)
        for i in range(len(monos)):
            row = [cols[j][i] - (one if i == j else zero) for j in range(len(monos))]
            rows.append(row)
    if not rows:  # no generators: trivial group
        return [ring.monomial(m) for m in monos]
    basis = nullspace(rows, field, len(monos))
    out = []
    for vec in basis:
        out.append(
            Polynomial(ring, {m: c for m, c in zip(monos, vec) if not c.is_zero()})
        )
    return out


# ---------------------------------------------------------------------------
# King's algorithm
# ---------------------------------------------------------------------------

@dataclass
class GeneratingSetResult:
    generators: list
    degrees: list
    termination_degree: int
    minimal: bool
    trace: list = dataclass_field(default_factory=list)

    def monic(self, order: MonomialOrder = GREVLEX) -> "GeneratingSetResult":
        return GeneratingSetResult(
            generators=[g.monic(order) for g in self.generators],
            degrees=list(self.degrees),
            termination_degree=self.termination_degree,
            minimal=self.minimal,
            trace=list(self.trace),
        )


def king_generators(
    group: FiniteMatrixGroup,
    order: MonomialOrder = GREVLEX,
    ring=None,
) -> GeneratingSetResult:
    """Minimal generating set of the invariant ring of a nonmodular
    finite group.

    Pass d keeps a d-truncated Groebner basis of the ideal generated by
    the invariants found so far.  The degree-d monomials outside the
    leading term ideal are visited in ascending order; each Reynolds
    image with nonzero normal form h joins the generating set, h joins
    the truncated basis, and the leading monomial of h leaves the
    monomial pool (possibly deleting not-yet-visited monomials).  The
    algorithm stops at the first pass that opens with an empty pool,
    which happens at degree |G| + 1 at the latest."""
    if group.is_modular():
        raise ModularCase(
            f"characteristic {group.field.characteristic()} divides "
            f"group order {group.order}"
        )
    ring = ring or group.ring()
    engine = BuchbergerEngine(ring, order)
    gens = []
    degrees = []
    trace = []
    bound = group.order + 1
    d = 0
    while True:
        d += 1
        if d > bound:
            raise AssertionError("termination bound exceeded")
        engine.extend(d)
        lms = engine.leading_monomials()
        pool = [
            m
            for m in monomials_of_degree(ring, d, order)
            if not any(mono_divides(lm, m) for lm in lms)
        ]
        if not pool:
            return GeneratingSetResult(
                generators=gens,
                degrees=degrees,
                termination_degree=d,
                minimal=True,
                trace=trace,
            )
        alive = set(pool)
        for t in pool:  # ascending in the order
            if t not in alive:
                continue
            f = reynolds(ring.monomial(t), group)
            if f.is_zero():
                continue
            h = engine.normal_form(f)
            if h.is_zero():
                continue
            gens.append(f)
            degrees.append(d)
            lm_h = h.leading_monomial(order)
            engine.add_generator(h)
            alive.discard(lm_h)
            trace.append((d, t, lm_h))


@dataclass
class NoetherHilbertReport:
    max_degree_ok: bool
    hilbert_monomials_ok: bool
    subalgebra_ok: bool
    group_order: int
    termination_degree: int

    @property
    def all_ok(self) -> bool:
        return self.max_degree_ok and self.hilbert_monomials_ok and self.subalgebra_ok


def verify_noether_and_hilbert(
    group: FiniteMatrixGroup, result: GeneratingSetResult
) -> NoetherHilbertReport:
    """Three checks on a generating set: degrees stay within the group
    order, every monomial of degree |G| lies in the generated ideal, and
    the Reynolds image of every monomial up to the termination degree
    lies in the generated subalgebra."""
    if group.is_modular():
        raise ModularCase(
            f"characteristic {group.field.characteristic()} divides "
            f"group order {group.order}"
        )
    gens = result.generators
    ring = gens[0].ring if gens else group.ring()
    g_order = group.order
    max_degree_ok = all(g.total_degree() <= g_order for g in gens)

    hilbert_ok = True
    if gens:
        basis = reduce_basis(buchberger(gens, GREVLEX))
        for m in monomials_of_degree(ring, g_order):
            if not ideal_membership(ring.monomial(m), basis):
                hilbert_ok = False
                break
    else:
        hilbert_ok = g_order == 1 or ring.nvars == 0

    subalgebra_ok = True
    if gens:
        oracle = SubalgebraOracle(gens)
        for d in range(1, result.termination_degree + 1):
            for m in monomials_of_degree(ring, d):
                image = reynolds(ring.monomial(m), group)
                if image.is_zero():
                    continue
                if not oracle.contains(image):
                    subalgebra_ok = False
                    break
            if not subalgebra_ok:
                break
    else:
        subalgebra_ok = all(
            reynolds(ring.monomial(m), group).is_zero()
            for d in range(1, result.termination_degree + 1)
            for m in monomials_of_degree(ring, d)
        )
    return NoetherHilbertReport(
        max_degree_ok=max_degree_ok,
        hilbert_monomials_ok=hilbert_ok,
        subalgebra_ok=subalgebra_ok,
        group_order=g_order,
        termination_degree=result.termination_degree,
    )


# ---------------------------------------------------------------------------
# separating sets
# ---------------------------------------------------------------------------

@dataclass
class SeparatingSetResult:
    invariants: list
    homogeneous: bool
    provenance: str  # noether | reduced
    alphas: list = dataclass_field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.invariants)


def noether_separating_set(group: FiniteMatrixGroup) -> SeparatingSetResult:
    """Coefficients of prod_sigma (y - sum_i sigma(x_i) t^(i-1)) as
    polynomials in the x variables: a homogeneous separating set of
    degrees at most |G|, valid in any characteristic.  Coefficients are
    normalized monic and deduplicated."""
    ring = group.ring()
    n = group.dimension
    names = ring.names + ("t_aux", "y_aux")
    big = PolynomialRing(group.field, names)
    lift = list(range(n))
    t = big.variable(n)
    y = big.variable(n + 1)
    product = big.one
    for sigma in group.elements:
        form = big.zero
        for i in range(n):
            image = transport(
                apply_element(ring.variable(i), sigma), big, lift
            )
            form = form + image * t**i
        product = product * (y - form)
    # split off the coefficient of each (t, y) monomial
    buckets = {}
    for m, c in product.terms.items():
        key = (m[n], m[n + 1])
        xm = m[:n]
        buckets.setdefault(key, {})[xm] = c
    out = []
    seen = set()
    for key in sorted(buckets):
        poly = Polynomial(ring, buckets[key])
        if poly.is_zero() or poly.is_constant():
            continue
        poly = poly.monic(GREVLEX)
        if poly not in seen:
            seen.add(poly)
            out.append(poly)
    return SeparatingSetResult(invariants=out, homogeneous=True, provenance="noether")


def _alpha_candidates(k: int, level: int):
    """Integer tuples of max-norm exactly `level`, lexicographic in the
    value sequence 1, 0, -1, 2, -2, ..., with a nonzero first entry."""
    values = [1, 0, -1]
    for v in range(2, level + 1):
        values.extend((v, -v))
    from itertools import product

    for tup in product(values, repeat=k):
        if max(abs(v) for v in tup) != level:
            continue
        if tup[0] == 0:
            continue
        yield tup


def reduce_separating_set(
    invariants: Sequence[Polynomial], n: int
) -> SeparatingSetResult:
    """Boil a finite separating set down to at most 2n+1 elements.

    While more than 2n+1 invariants remain, the polynomials
    t*(f_i(x) - f_i(y)) acquire an algebraic relation H (least element
    of the reduced basis of their relation ideal); a point alpha with
    H(alpha) != 0 and alpha_1 != 0 is found by enumerating integer
    tuples, and the set is replaced by alpha_1 f_i - alpha_i f_1 for
    i >= 2.  The output consists of linear combinations of the input
    and is almost never homogeneous."""
    invariants = list(invariants)
    if not invariants:
        return SeparatingSetResult([], homogeneous=True, provenance="reduced")
    ring = invariants[0].ring
    field = ring.field
    if field.characteristic() != 0:
        raise FieldTooSmall("reduction needs an infinite (characteristic 0) field")
    if ring.nvars != n:
        raise ValueError("n must match the number of ring variables")
    alphas = []
    target = 2 * n + 1
    while len(invariants) > target:
        k = len(invariants)
        x_names = ring.names
        y_names = tuple(f"{nm}_cp" for nm in x_names)
        tags = tuple(f"T{i + 1}" for i in range(k))
        big = PolynomialRing(field, x_names + y_names + ("t_aux",) + tags)
        t = big.variable(2 * n)
        lift_x = list(range(n))
        lift_y = list(range(n, 2 * n))
        ideal = []
        for i, f in enumerate(invariants):
            fx = transport(f, big, lift_x)
            fy = transport(f, big, lift_y)
            tag = big.variable(2 * n + 1 + i)
            ideal.append(tag - t * (fx - fy))
        relations = _eliminate_to_tags(ideal, big, keep_from=2 * n + 1)
        assert relations, "more than 2n+1 invariants must be dependent"
        relations.sort(key=lambda g: GREVLEX.key(g.leading_monomial(GREVLEX)))
        relation = relations[0]
        alpha = _find_nonvanishing_point(relation, k)
        alphas.append(alpha)
        a = [field.scalar(v) for v in alpha]
        invariants = [
            a[0] * invariants[i] - a[i] * invariants[0] for i in range(1, k)
        ]
    # linear combinations across degrees almost never stay homogeneous
    return SeparatingSetResult(
        invariants=invariants,
        homogeneous=all(p.is_homogeneous() for p in invariants),
        provenance="reduced",
        alphas=alphas,
    )


def _eliminate_to_tags(ideal, big: PolynomialRing, keep_from: int) -> list:
    from .groebner import elimination_ideal

    eliminate = big.names[:keep_from]
    return elimination_ideal(ideal, eliminate)


def _find_nonvanishing_point(relation: Polynomial, k: int):
    level = 1
    while True:
        for tup in _alpha_candidates(k, level):
            if not relation.evaluate(list(tup)).is_zero():
                return tup
        level += 1


@dataclass
class SeparationReport:
    passed: bool
    same_orbit_checked: int
    distinct_orbit_checked: int
    counterexamples: list
    seed: int
    coordinate_bound: int
    note: str = "sampled witness only; equality failures refute, successes do not prove"


def verify_separation_samples(
    invariants: Sequence[Polynomial],
    group: FiniteMatrixGroup,
    pairs: int = 100,
    coordinate_bound: int = 10,
    seed: int = 0,
) -> SeparationReport:
    """Seeded sampling check of the separating property: same-orbit point
    pairs must agree on every candidate invariant, and pairs from
    distinct orbits must differ somewhere (finite groups always separate
    distinct orbits by invariants)."""
    rng = XorShift(seed)
    n = group.dimension
    field = group.field
    counterexamples = []
    same_checked = 0
    distinct_checked = 0

    def random_point():
        return tuple(
            field.scalar(rng.randint(-coordinate_bound, coordinate_bound))
            for _ in range(n)
        )

    for _ in range(pairs):
        # same-orbit pair
        v = random_point()
        sigma = group.elements[rng.next_u64() % group.order]
        w = point_image(sigma, v)
        same_checked += 1
        for g in invariants:
            if g.evaluate(v) != g.evaluate(w):
                counterexamples.append(
                    {"kind": "same-orbit", "invariant": str(g),
                     "v": [str(c) for c in v], "w": [str(c) for c in w]}
                )
                break
        # distinct-orbit pair (resample a few times if we collide)
        for _ in range(20):
            v = random_point()
            w = random_point()
            if w not in set(orbit(group, v)):
                break
        else:
            continue
        distinct_checked += 1
        if all(g.evaluate(v) == g.evaluate(w) for g in invariants):
            counterexamples.append(
                {"kind": "distinct-orbit", "invariant": None,
                 "v": [str(c) for c in v], "w": [str(c) for c in w]}
            )
    return SeparationReport(
        passed=not counterexamples,
        same_orbit_checked=same_checked,
        distinct_orbit_checked=distinct_checked,
        counterexamples=counterexamples,
        seed=seed,
        coordinate_bound=coordinate_bound,
    )


# ---------------------------------------------------------------------------
# systems of parameters and degree bounds
# ---------------------------------------------------------------------------

def is_phsop(polys: Sequence[Polynomial]) -> bool:
    """Partial homogeneous system of parameters: the variety has the
    least possible dimension n - k."""
    polys = list(polys)
    if not polys:
        return True
    for f in polys:
        if f.is_zero() or f.is_constant() or not f.is_homogeneous():
            raise NonHomogeneousInput(
                "phsop test needs nonconstant homogeneous polynomials"
            )
    n = polys[0].ring.nvars
    k = len(polys)
    if k > n:
        return False
    dim = ideal_dimension(buchberger(polys, GREVLEX))
    return dim == n - k


def is_hsop(polys: Sequence[Polynomial], n: int) -> bool:
    polys = list(polys)
    if len(polys) != n:
        return False
    return is_phsop(polys)


def dade_primary_invariants(
    group: FiniteMatrixGroup,
    seed: int = 0,
    retries_per_slot: int = 50,
    coefficient_bound: int = 10,
) -> list:
    """Primary invariants as orbit products of seeded random linear
    forms; each addition is retried with fresh forms until the partial
    system of parameters test passes, and the final list is verified to
    be a homogeneous system of parameters."""
    if group.field.kind == "prime":
        # general-position forms need an infinite ground field
        raise FieldTooSmall("orbit-product construction needs an infinite field")
    rng = XorShift(seed)
    ring = group.ring()
    n = group.dimension
    chosen = []
    for slot in range(n):
        for _ in range(retries_per_slot):
            coeffs = [rng.randint(-coefficient_bound, coefficient_bound) for _ in range(n)]
            if all(c == 0 for c in coeffs):
                continue
            form = ring.zero
            for i, c in enumerate(coeffs):
                form = form + ring.variable(i) * c
            images = []
            seen = set()
            for sigma in group.elements:
                img = apply_element(form, sigma)
                if img not in seen:
                    seen.add(img)
                    images.append(img)
            product = ring.one
            for img in images:
                product = product * img
            if is_phsop(chosen + [product]):
                chosen.append(product)
                break
        else:
            raise RetryLimitExceeded(
                f"no suitable linear form found for slot {slot + 1}"
            )
    assert is_hsop(chosen, n)
    return chosen


@dataclass
class DegreeBoundReport:
    symonds_bound: int
    coarse_bound: int
    noether_bound: int
    noether_applies: bool  # nonmodular only


def degree_bound_report(
    group: FiniteMatrixGroup, primary_degrees: Sequence[int]
) -> DegreeBoundReport:
    """Secondary-invariant bound sum(d_i - 1), the coarse bound
    n(|G| - 1), and the group-order bound (nonmodular only)."""
    n = group.dimension
    return DegreeBoundReport(
        symonds_bound=sum(d - 1 for d in primary_degrees),
        coarse_bound=n * (group.order - 1),
        noether_bound=group.order,
        noether_applies=not group.is_modular(),
    )
