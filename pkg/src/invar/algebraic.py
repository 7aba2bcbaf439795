"""Invariants of linear algebraic groups through the ideal of the
action graph.

A group is specified as an affine variety (vanishing-ideal generators
in the group coordinates z) together with a linear action matrix whose
entries are polynomials in z.  Elimination of the group coordinates
from the graph ideal yields the Derksen ideal; from it come generating
invariants (linearly reductive case), generators of the invariant
field over a rational function field, and separating varieties and
subalgebras for reductive groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from .errors import ContextMismatch, MaxDegreeExceeded, NotDeclaredReductive
from .fields import Field
from .groebner import (
    SubalgebraOracle,
    buchberger,
    elimination_ideal,
    normal_form,
    radical_membership,
    reduce_basis,
)
from .invariants import GeneratingSetResult
from .linalg import nullspace
from .polynomials import (
    GREVLEX,
    Polynomial,
    PolynomialRing,
    monomials_of_degree,
    transport,
)
from .ratfunc import RationalFunctionField


@dataclass
class AlgebraicGroupSpec:
    """Affine algebraic group with a linear action on n coordinates.

    group_vars may be empty (the trivial group); ideal_gens live in the
    ring over group_vars; the action matrix entry a[i][j] (a polynomial
    in the group variables) sends x_i to sum_j a[i][j] x_j.
    """

    field: Field
    group_vars: tuple
    ideal_gens: list
    n: int
    action_matrix: list
    linear_reductive: bool = False
    label: str = ""
    _cache: dict = dataclass_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.group_vars = tuple(self.group_vars)
        if len(self.action_matrix) != self.n or any(
            len(row) != self.n for row in self.action_matrix
        ):
            raise ContextMismatch("action matrix must be n x n")
        zring = self.z_ring()
        for g in self.ideal_gens:
            if g.ring != zring:
                raise ContextMismatch("ideal generators must live in the z ring")
        for row in self.action_matrix:
            for entry in row:
                if entry.ring != zring:
                    raise ContextMismatch("action entries must live in the z ring")
        if self.ideal_gens:
            basis = reduce_basis(buchberger(self.ideal_gens, GREVLEX))
            if basis.contains_one():
                raise ContextMismatch("group ideal is the whole ring")

    def z_ring(self) -> PolynomialRing:
        return PolynomialRing(self.field, self.group_vars)

    def x_names(self) -> tuple:
        return tuple(f"x{i + 1}" for i in range(self.n))

    def y_names(self) -> tuple:
        return tuple(f"y{i + 1}" for i in range(self.n))

    def x_ring(self) -> PolynomialRing:
        return PolynomialRing(self.field, self.x_names())

    def pair_ring(self) -> PolynomialRing:
        """Doubled ring for the action graph; the y block is listed first
        so that image-point monomials lead in the induced order."""
        return PolynomialRing(self.field, self.y_names() + self.x_names())

    def graph_ring(self) -> PolynomialRing:
        return PolynomialRing(
            self.field, self.y_names() + self.x_names() + self.group_vars
        )


def action_graph_generators(spec: AlgebraicGroupSpec) -> list:
    """Generators of the vanishing ideal of the extended action graph
    {(v, sigma v, sigma)}: the group ideal plus f_i - y_i."""
    ring = spec.graph_ring()
    n = spec.n
    z_map = [2 * n + i for i in range(len(spec.group_vars))]
    out = [transport(g, ring, z_map) for g in spec.ideal_gens]
    for i in range(n):
        f_i = ring.zero
        for j in range(n):
            a = transport(spec.action_matrix[i][j], ring, z_map)
            f_i = f_i + a * ring.variable(n + j)  # x_j
        out.append(f_i - ring.variable(i))  # y_i
    return out


@dataclass
class DerksenIdealResult:
    generators: list
    reduced: bool

    def ring(self):
        return self.generators[0].ring if self.generators else None


def derksen_ideal(spec: AlgebraicGroupSpec) -> DerksenIdealResult:
    """Vanishing ideal of the action graph in the doubled variables,
    i.e. the elimination of the group coordinates from the extended
    graph ideal; returned as a reduced basis over the (x, y) ring."""
    if "derksen" not in spec._cache:
        gens = elimination_ideal(action_graph_generators(spec), spec.group_vars)
        spec._cache["derksen"] = DerksenIdealResult(generators=gens, reduced=True)
    return spec._cache["derksen"]


def _specialize_y_to_zero(p: Polynomial, spec: AlgebraicGroupSpec) -> Polynomial:
    """p lives in the pair ring (y block first); keep the pure-x part."""
    xring = spec.x_ring()
    n = spec.n
    terms = {}
    for m, c in p.terms.items():
        if any(e != 0 for e in m[:n]):
            continue
        terms[m[n:]] = c
    return Polynomial(xring, terms)


def hilbert_ideal_generators(spec: AlgebraicGroupSpec) -> list:
    """y = 0 specialization of the homogeneous components of the
    Derksen ideal generators: for a linearly reductive group these
    generate the ideal of all nonconstant homogeneous invariants."""
    out = []
    seen = set()
    for g in derksen_ideal(spec).generators:
        for comp in g.homogeneous_components():
            h = _specialize_y_to_zero(comp, spec)
            if h.is_zero() or h.is_constant():
                continue
            if h not in seen:
                seen.add(h)
                out.append(h)
    return out


def algebraic_invariant_basis(spec: AlgebraicGroupSpec, d: int) -> list:
    """Echelonized basis of the degree-d invariants of the linear
    action: the coefficients of a generic degree-d form are constrained
    by requiring f(A(z) x) - f(x) to vanish modulo the group ideal."""
    xring = spec.x_ring()
    monos = list(reversed(monomials_of_degree(xring, d)))  # descending grevlex
    if not monos:
        return []
    field = spec.field
    zring = spec.z_ring()
    zbasis = (
        reduce_basis(buchberger(spec.ideal_gens, GREVLEX))
        if spec.ideal_gens
        else None
    )
    combined = PolynomialRing(field, spec.x_names() + spec.group_vars)
    z_map = [spec.n + i for i in range(len(spec.group_vars))]
    images = []
    for i in range(spec.n):
        f_i = combined.zero
        for j in range(spec.n):
            a = transport(spec.action_matrix[i][j], combined, z_map)
            f_i = f_i + a * combined.variable(j)
        images.append(f_i)

    # residue[m][x-monomial] = z-polynomial coefficient after reduction
    equations = {}

    def z_part(m):
        return m[spec.n:]

    def x_part(m):
        return m[: spec.n]

    columns = []
    for cidx, m in enumerate(monos):
        image = combined.monomial(tuple(m) + (0,) * len(spec.group_vars))
        image = image.substitute(images + [combined.variable(spec.n + i) for i in range(len(spec.group_vars))])
        buckets = {}
        for mm, c in image.terms.items():
            buckets.setdefault(x_part(mm), {})[z_part(mm)] = c
        # subtract the original monomial
        buckets.setdefault(tuple(m), {})
        own = buckets[tuple(m)]
        zero_z = (0,) * len(spec.group_vars)
        own[zero_z] = own.get(zero_z, field.zero) - field.one
        for xm, zterms in buckets.items():
            zpoly = Polynomial(zring, {zm: c for zm, c in zterms.items() if not c.is_zero()})
            if zbasis is not None:
                zpoly = normal_form(zpoly, zbasis)
            for zm, c in zpoly.terms.items():
                equations.setdefault((xm, zm), {})[cidx] = c
        columns.append(cidx)

    rows = []
    for key in sorted(equations):
        coeffs = equations[key]
        rows.append([coeffs.get(j, field.zero) for j in range(len(monos))])
    if not rows:
        return [xring.monomial(m) for m in monos]
    basis = nullspace(rows, field, len(monos))
    return [
        Polynomial(xring, {m: c for m, c in zip(monos, vec) if not c.is_zero()})
        for vec in basis
    ]


def derksen_generators(spec: AlgebraicGroupSpec) -> GeneratingSetResult:
    """Generating invariants of a linearly reductive group: degrees of
    the Hilbert ideal generators obtained from the Derksen ideal, then
    a fresh invariant basis in each of those degrees.  Usually not
    minimal."""
    if not spec.linear_reductive:
        raise NotDeclaredReductive(
            "spec must declare linear_reductive (safe in characteristic 0 "
            "for reductive groups, tori, and nonmodular finite groups)"
        )
    hilbert = hilbert_ideal_generators(spec)
    degrees = sorted({h.total_degree() for h in hilbert})
    gens = []
    gen_degrees = []
    seen = set()
    for d in degrees:
        for b in algebraic_invariant_basis(spec, d):
            if b not in seen:
                seen.add(b)
                gens.append(b)
                gen_degrees.append(d)
    return GeneratingSetResult(
        generators=gens,
        degrees=gen_degrees,
        termination_degree=max(degrees, default=0),
        minimal=False,
    )


# ---------------------------------------------------------------------------
# invariant fields over a rational function field
# ---------------------------------------------------------------------------

def invariant_field_generators(spec: AlgebraicGroupSpec) -> list:
    """Generators of the invariant field: the nonconstant coefficients
    of the reduced basis of the Derksen ideal computed over
    L = K(x_1, ..., x_n), each normalized to a monic numerator and
    deduplicated.  No reductivity assumption is needed."""
    L = RationalFunctionField(spec.field, spec.x_names())
    ring = PolynomialRing(L, spec.y_names() + spec.group_vars)
    n = spec.n
    z_map = [n + i for i in range(len(spec.group_vars))]

    def lift_z_poly(p: Polynomial) -> Polynomial:
        terms = {}
        for m, c in p.terms.items():
            exps = [0] * ring.nvars
            for i, e in enumerate(m):
                exps[z_map[i]] = e
            terms[tuple(exps)] = L.from_base(c)
        return Polynomial(ring, terms)

    gens = [lift_z_poly(g) for g in spec.ideal_gens]
    for i in range(n):
        f_i = ring.zero
        for j in range(n):
            f_i = f_i + lift_z_poly(spec.action_matrix[i][j]) * L.generator(j)
        gens.append(f_i - ring.variable(i))
    basis = elimination_ideal(gens, spec.group_vars)
    out = []
    seen = set()
    for g in basis:
        for _, c in g.sorted_terms(GREVLEX):
            num, den = c.value
            if num.is_constant() and den.is_constant():
                continue
            lc = num.leading(GREVLEX)[1]
            normalized = c * L.from_base(lc).inverse()
            if normalized not in seen:
                seen.add(normalized)
                out.append(normalized)
    out.sort(key=str)
    return out


def scalar_in_polynomial_subfield(c, generators, L: RationalFunctionField) -> bool:
    """Witness check that a rational function is a polynomial expression
    in the given generators (all with trivial denominators).  Sufficient
    for field membership; a False only means no polynomial witness."""
    num, den = c.value
    if not den.is_constant():
        return False
    gen_polys = []
    for g in generators:
        gn, gd = g.value
        if not gd.is_constant():
            return False
        gen_polys.append(gn * gd.constant_coefficient().inverse())
    oracle = SubalgebraOracle(gen_polys)
    return oracle.contains(num * den.constant_coefficient().inverse())


# ---------------------------------------------------------------------------
# separating varieties for reductive groups
# ---------------------------------------------------------------------------

def separating_variety(spec: AlgebraicGroupSpec) -> list:
    """Ideal of the pairs of points on which all invariants agree
    (orbit closures meet): both points are mapped into a shared target
    by two independent copies of the group, and everything but the pair
    is eliminated."""
    n = spec.n
    r = len(spec.group_vars)
    u_names = tuple(f"u{i + 1}" for i in range(n))
    za_names = tuple(f"{z}_a" for z in spec.group_vars)
    zb_names = tuple(f"{z}_b" for z in spec.group_vars)
    big = PolynomialRing(
        spec.field, spec.y_names() + spec.x_names() + u_names + za_names + zb_names
    )
    za_map = [3 * n + i for i in range(r)]
    zb_map = [3 * n + r + i for i in range(r)]
    gens = []
    for g in spec.ideal_gens:
        gens.append(transport(g, big, za_map))
        gens.append(transport(g, big, zb_map))
    for i in range(n):
        fa = big.zero
        fb = big.zero
        for j in range(n):
            fa = fa + transport(spec.action_matrix[i][j], big, za_map) * big.variable(n + j)
            fb = fb + transport(spec.action_matrix[i][j], big, zb_map) * big.variable(j)
        u = big.variable(2 * n + i)
        gens.append(fa - u)
        gens.append(fb - u)
    return elimination_ideal(gens, u_names + za_names + zb_names)


def separating_subalgebra(spec: AlgebraicGroupSpec, max_degree: int) -> list:
    """Homogeneous invariants of rising degree until their differences
    f(x) - f(y) cut out the separating variety set-theoretically
    (radical membership in both directions)."""
    sep = separating_variety(spec)
    xy = spec.pair_ring()
    n = spec.n
    lift_x = list(range(n, 2 * n))
    lift_y = list(range(n))
    invs = []
    deltas = []
    for d in range(1, max_degree + 1):
        for f in algebraic_invariant_basis(spec, d):
            invs.append(f)
            deltas.append(transport(f, xy, lift_x) - transport(f, xy, lift_y))
        if not deltas:
            continue
        if all(radical_membership(g, deltas) for g in sep):
            for delta in deltas:
                assert radical_membership(delta, sep), (
                    "invariant difference must vanish on the separating variety"
                )
            return invs
    raise MaxDegreeExceeded(
        f"separating subalgebra incomplete at degree {max_degree}", partial=invs
    )
