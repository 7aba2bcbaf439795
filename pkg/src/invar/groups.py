"""Finite matrix groups: closure enumeration, Reynolds averaging,
relative traces, element classification, and the Molien series.

Group elements are exact matrices over the ground field; equality and
hashing go through the canonical scalar forms, so closure enumeration
is a plain breadth-first search keyed by the matrices themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import (
    CapExceeded,
    ModularCase,
    NotASubgroup,
    NotHInvariant,
    PositiveCharacteristic,
    SingularGenerator,
    SingularMatrix,
)
from .fields import Field
from .linalg import Matrix
from .polynomials import Polynomial, PolynomialRing, PowerSeries

DEFAULT_CLOSURE_CAP = 100000


@dataclass(frozen=True)
class FiniteMatrixGroup:
    field: Field
    dimension: int
    generators: tuple
    elements: tuple
    label: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.field, tuple(f"x{i + 1}" for i in range(self.dimension)))

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dimension)

    def contains(self, m: Matrix) -> bool:
        return m in set(self.elements)

    def is_modular(self) -> bool:
        p = self.field.characteristic()
        return p != 0 and self.order % p == 0


def close_group(
    generators: Sequence,
    field: Optional[Field] = None,
    cap: int = DEFAULT_CLOSURE_CAP,
    label: str = "",
) -> FiniteMatrixGroup:
    """Enumerate the group generated by invertible matrices by breadth
    first search from the identity, multiplying by generators on the
    right in the order given.  Raises CapExceeded when more than `cap`
    elements appear (infinite or oversized group)."""
    gens = []
    for g in generators:
        if not isinstance(g, Matrix):
            if field is None:
                raise ValueError("field required for raw matrix input")
            g = Matrix.from_rows(field, g)
        gens.append(g)
    if not gens:
        if field is None:
            raise ValueError("field required for an empty generating set")
        identity = Matrix.identity(field, 0)
        raise ValueError("dimension unknown for an empty generating set")
    field = gens[0].field
    n = gens[0].nrows
    for g in gens:
        if g.nrows != n or g.ncols != n or g.field != field:
            raise ValueError("generators must be square over one field")
        try:
            g.inverse()
        except SingularMatrix:
            raise SingularGenerator("generator matrix is singular") from None
    identity = Matrix.identity(field, n)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                prod = e @ g
                if prod not in seen:
                    if len(elements) >= cap:
                        raise CapExceeded(
                            f"closure exceeded cap {cap}; group infinite or too large"
                        )
                    seen.add(prod)
                    elements.append(prod)
                    nxt.append(prod)
        frontier = nxt
    return FiniteMatrixGroup(
        field=field,
        dimension=n,
        generators=tuple(gens),
        elements=tuple(elements),
        label=label,
    )


def apply_element(p: Polynomial, m: Matrix) -> Polynomial:
    return p.apply_linear_map(m.rows)


def point_image(m: Matrix, point) -> tuple:
    """Image of a point under the element, consistent with the variable
    action: evaluating sigma(f) at v equals evaluating f at sigma(v)."""
    vec = [m.field.scalar(x) for x in point]
    return m.apply(vec)


def orbit(group: FiniteMatrixGroup, point) -> list:
    """Deterministic orbit listing (element order, first occurrence)."""
    seen = []
    seen_set = set()
    for sigma in group.elements:
        img = point_image(sigma, point)
        if img not in seen_set:
            seen_set.add(img)
            seen.append(img)
    return seen


def reynolds(f: Polynomial, group: FiniteMatrixGroup) -> Polynomial:
    """Group average; the projection of f onto the invariant ring."""
    p = group.field.characteristic()
    if p != 0 and group.order % p == 0:
        raise ModularCase(
            f"characteristic {p} divides the group order {group.order}"
        )
    total = f.ring.zero
    for sigma in group.elements:
        total = total + apply_element(f, sigma)
    return total / group.field.scalar(group.order)


def is_invariant(f: Polynomial, group: FiniteMatrixGroup) -> bool:
    return all(apply_element(f, g) == f for g in group.generators)


def _is_subgroup(group: FiniteMatrixGroup, subgroup: Sequence) -> bool:
    sub = set(subgroup)
    if not sub or group.identity() not in sub:
        return False
    full = set(group.elements)
    if not sub <= full:
        return False
    return all(a @ b in sub for a in sub for b in sub)


@dataclass(frozen=True)
class CosetDecomposition:
    subgroup: tuple
    representatives: tuple

    @property
    def index(self) -> int:
        return len(self.representatives)


def coset_decomposition(
    group: FiniteMatrixGroup, subgroup: Sequence
) -> CosetDecomposition:
    """Left coset representatives, greedily in group element order."""
    sub = list(subgroup)
    if not _is_subgroup(group, sub):
        raise NotASubgroup("element list is not a subgroup")
    covered = set()
    reps = []
    for sigma in group.elements:
        if sigma in covered:
            continue
        reps.append(sigma)
        for h in sub:
            covered.add(sigma @ h)
    return CosetDecomposition(subgroup=tuple(sub), representatives=tuple(reps))


def relative_trace(
    f: Polynomial,
    group: FiniteMatrixGroup,
    subgroup: Sequence,
    representatives: Optional[Sequence] = None,
) -> Polynomial:
    """Coset sum from the subgroup invariants up to the full invariants;
    the result does not depend on the representative choice."""
    decomposition = coset_decomposition(group, subgroup)
    for h in decomposition.subgroup:
        if apply_element(f, h) != f:
            raise NotHInvariant("polynomial is not fixed by the subgroup")
    reps = decomposition.representatives
    if representatives is not None:
        reps = tuple(representatives)
        covered = set()
        for r in reps:
            for h in decomposition.subgroup:
                covered.add(r @ h)
        if covered != set(group.elements) or len(reps) != decomposition.index:
            raise NotASubgroup("invalid coset representatives")
    total = f.ring.zero
    for sigma in reps:
        total = total + apply_element(f, sigma)
    return total


@dataclass(frozen=True)
class ElementClassification:
    codimension: int
    label: str  # identity | reflection | bireflection | other


def fixed_space_codimension(m: Matrix) -> int:
    return (m - Matrix.identity(m.field, m.nrows)).rank()


def classify_element(m: Matrix) -> ElementClassification:
    """Codimension of the fixed space with the strongest matching label;
    reflections fix codimension 1, bireflections codimension at most 2."""
    codim = fixed_space_codimension(m)
    if codim == 0:
        label = "identity"
    elif codim == 1:
        label = "reflection"
    elif codim == 2:
        label = "bireflection"
    else:
        label = "other"
    return ElementClassification(codimension=codim, label=label)


def element_order(m: Matrix, cap: int) -> int:
    identity = Matrix.identity(m.field, m.nrows)
    acc = m
    for k in range(1, cap + 1):
        if acc == identity:
            return k
        acc = acc @ m
    raise CapExceeded(f"element order exceeds {cap}")


def generated_by_predicate(
    group: FiniteMatrixGroup, predicate: Callable[[Matrix], bool]
) -> bool:
    """Does the subset satisfying the predicate generate the whole group?"""
    subset = [g for g in group.elements if predicate(g)]
    if not subset:
        return group.order == 1
    closure = close_group(subset, cap=group.order + 1)
    return closure.order == group.order


def is_reflection_group(group: FiniteMatrixGroup) -> bool:
    return generated_by_predicate(group, lambda m: fixed_space_codimension(m) <= 1)


def is_bireflection_group(group: FiniteMatrixGroup) -> bool:
    return generated_by_predicate(group, lambda m: fixed_space_codimension(m) <= 2)


def cohen_macaulay_necessary_condition(group: FiniteMatrixGroup) -> bool:
    """Necessary condition for a Cohen-Macaulay invariant ring: the group
    is generated by elements of order prime to the characteristic
    together with bireflections.  Trivially true in characteristic 0."""
    p = group.field.characteristic()

    def pred(m):
        if fixed_space_codimension(m) <= 2:
            return True
        if p == 0:
            return True
        return element_order(m, group.order) % p != 0

    return generated_by_predicate(group, pred)


def _det_one_minus_t_sigma(m: Matrix, tring: PolynomialRing) -> Polynomial:
    """det(I - t*sigma) as a univariate polynomial, by cofactor expansion."""
    n = m.nrows
    t = tring.variable(0)
    entries = [
        [
            tring.from_int(1 if i == j else 0) - t * m.rows[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(rows):
        k = len(rows)
        if k == 0:
            return tring.one
        if k == 1:
            return rows[0][0]
        total = tring.zero
        sign = 1
        for i in range(k):
            lead = rows[i][0]
            if not lead.is_zero():
                minor = [r[1:] for j, r in enumerate(rows) if j != i]
                term = lead * det(minor)
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return det(entries)


def molien_series(group: FiniteMatrixGroup, truncation: int) -> PowerSeries:
    """Hilbert series of the invariant ring, averaged over the group as
    1/det(1 - t*sigma) expanded to the truncation degree."""
    if group.field.characteristic() != 0:
        raise PositiveCharacteristic("Molien series needs characteristic 0")
    field = group.field
    tring = PolynomialRing(field, ("t",))
    total = PowerSeries(field, [field.zero] * (truncation + 1))
    for sigma in group.elements:
        det = _det_one_minus_t_sigma(sigma, tring)
        coeffs = [det.coefficient_of((k,)) for k in range(det.total_degree() + 1)]
        total = total + PowerSeries.reciprocal(field, coeffs, truncation)
    return total * field.scalar(group.order).inverse()
