import pytest

from invar.errors import (
    FieldTooSmall,
    ModularCase,
    NonHomogeneousInput,
)
from invar.fields import Rationals
from invar.groebner import SubalgebraOracle
from invar.groups import close_group, reynolds
from invar.invariants import (
    dade_primary_invariants,
    degree_bound_report,
    invariant_basis,
    is_hsop,
    is_phsop,
    king_generators,
    noether_separating_set,
    reduce_separating_set,
    verify_noether_and_hilbert,
    verify_separation_samples,
)
from invar.linalg import Matrix
from invar.polynomials import GREVLEX, monomials_of_degree

Q = Rationals()


# ---------------------------------------------------------------------------
# invariant spaces
# ---------------------------------------------------------------------------

def test_invariant_basis_d8(d8):
    ring = d8.ring()
    x, y = ring.variables()
    basis2 = invariant_basis(d8, 2)
    assert len(basis2) == 1
    assert basis2[0].monic(GREVLEX) == x**2 + y**2
    assert invariant_basis(d8, 3) == []


def test_invariant_basis_trivial(trivial2):
    ring = trivial2.ring()
    assert invariant_basis(trivial2, 1) == ring.variables()


def test_invariant_basis_modular_works(c2_swap_gf2):
    # linear algebra path has no Reynolds, so the modular case is fine
    basis = invariant_basis(c2_swap_gf2, 1)
    ring = c2_swap_gf2.ring()
    x1, x2 = ring.variables()
    assert basis == [x1 + x2]


# ---------------------------------------------------------------------------
# King's algorithm
# ---------------------------------------------------------------------------

def test_king_trivial_group(trivial2):
    result = king_generators(trivial2)
    ring = trivial2.ring()
    assert result.generators == [ring.variable(1), ring.variable(0)]
    assert result.degrees == [1, 1]
    assert result.termination_degree == 2
    assert result.minimal


def test_king_c2_swap_against_bruteforce_oracle(c2_swap):
    result = king_generators(c2_swap)
    assert sorted(result.degrees) == [1, 2]
    ring = c2_swap.ring()
    # oracle: Reynolds images of every monomial of degree <= |G|
    images = []
    for d in range(1, c2_swap.order + 1):
        for m in monomials_of_degree(ring, d):
            img = reynolds(ring.monomial(m), c2_swap)
            if not img.is_zero() and img not in images:
                images.append(img)
    king_oracle = SubalgebraOracle(result.generators)
    assert all(king_oracle.contains(f) for f in images)
    assert all(g in images for g in result.generators)


def test_king_modular_case(c2_swap_gf2):
    with pytest.raises(ModularCase):
        king_generators(c2_swap_gf2)


def test_king_d8_pass_trace(d8):
    # documented run: the quadratic average joins at pass 2 (leading
    # monomial x1^2), the degree-8 average at pass 8 with normal form
    # leading monomial x2^8, and nothing else is ever adjoined
    result = king_generators(d8)
    assert result.trace == [
        (2, (0, 2), (2, 0)),
        (8, (0, 8), (0, 8)),
    ]


def test_king_alternative_orders_generate_same_subalgebra(c2_swap):
    from invar.polynomials import GRADEDLEX, LEX

    reference = king_generators(c2_swap, GREVLEX)
    ref_oracle = SubalgebraOracle(reference.generators)
    for order in (LEX, GRADEDLEX):
        result = king_generators(c2_swap, order)
        assert sorted(result.degrees) == sorted(reference.degrees)
        oracle = SubalgebraOracle(result.generators)
        assert all(oracle.contains(g) for g in reference.generators)
        assert all(ref_oracle.contains(g) for g in result.generators)


def test_king_generators_are_invariant(d8, s3, cn3):
    for group in (d8, s3, cn3):
        result = king_generators(group)
        for g in result.generators:
            assert g.is_homogeneous()
            for sigma in group.generators:
                assert g.apply_linear_map(sigma.rows) == g


def test_king_minimality_small_groups(c2_swap, cn3, minus_identity):
    for group in (c2_swap, cn3, minus_identity):
        result = king_generators(group)
        gens = result.generators
        for i in range(len(gens)):
            rest = [g for j, g in enumerate(gens) if j != i]
            if not rest:
                continue
            assert SubalgebraOracle(rest).express(gens[i]) is None


def test_king_on_rational_rotation_groups():
    # small subgroups of GL2(Q) beyond the bundled specs; full verification:
    # degree bound, Hilbert-ideal monomials, and subalgebra closure
    rotations = {
        "C3": [[0, -1], [1, -1]],
        "C4": [[0, -1], [1, 0]],
        "C6": [[0, -1], [1, 1]],
    }
    reflection = [[0, 1], [1, 0]]
    groups = {}
    for name, rot in rotations.items():
        groups[name] = close_group([Matrix.from_rows(Q, rot)], label=name)
    groups["D3"] = close_group(
        [Matrix.from_rows(Q, rotations["C3"]), Matrix.from_rows(Q, reflection)],
        label="D3",
    )
    groups["D4"] = close_group(
        [Matrix.from_rows(Q, rotations["C4"]), Matrix.from_rows(Q, [[1, 0], [0, -1]])],
        label="D4",
    )
    expected_orders = {"C3": 3, "C4": 4, "C6": 6, "D3": 6, "D4": 8}
    for name, group in groups.items():
        assert group.order == expected_orders[name]
        result = king_generators(group)
        assert result.termination_degree <= group.order + 1
        report = verify_noether_and_hilbert(group, result)
        assert report.all_ok, name


def test_verify_noether_and_hilbert(c2_swap, s3):
    for group in (c2_swap, s3):
        result = king_generators(group)
        report = verify_noether_and_hilbert(group, result)
        assert report.all_ok
        # dropping a generator must break the subalgebra check
        dropped = type(result)(
            generators=result.generators[:-1],
            degrees=result.degrees[:-1],
            termination_degree=result.termination_degree,
            minimal=False,
        )
        assert not verify_noether_and_hilbert(group, dropped).subalgebra_ok


# ---------------------------------------------------------------------------
# separating sets
# ---------------------------------------------------------------------------

def test_noether_separating_single_variable():
    group = close_group([Matrix.from_rows(Q, [[1]])])
    result = noether_separating_set(group)
    ring = group.ring()
    assert result.invariants == [ring.variable(0)]
    assert result.homogeneous


def test_noether_separating_c2(c2_swap):
    result = noether_separating_set(c2_swap)
    ring = c2_swap.ring()
    x1, x2 = ring.variables()
    assert x1 + x2 in result.invariants
    assert x1 * x2 in result.invariants
    assert all(p.total_degree() <= c2_swap.order for p in result.invariants)
    assert all(p.is_homogeneous() for p in result.invariants)


def test_noether_separating_degrees_and_invariance(s3, cn4):
    for group in (s3, cn4):
        result = noether_separating_set(group)
        for p in result.invariants:
            assert p.total_degree() <= group.order
            for sigma in group.generators:
                assert p.apply_linear_map(sigma.rows) == p


def test_noether_separating_modular(c2_swap_gf2):
    result = noether_separating_set(c2_swap_gf2)
    assert result.invariants
    report = verify_separation_samples(result.invariants, c2_swap_gf2, pairs=40)
    assert report.passed


def test_cn_scalar_three_invariant_separating_family(cn4):
    # the three monomials x1^n, x1^(n-1) x2, x2^n separate the scalar action
    ring = cn4.ring()
    x1, x2 = ring.variables()
    n = cn4.order
    family = [x1**n, x1 ** (n - 1) * x2, x2**n]
    report = verify_separation_samples(family, cn4, pairs=100)
    assert report.passed


def test_separation_samples_detect_bad_set(c2_swap):
    ring = c2_swap.ring()
    report = verify_separation_samples([ring.variable(0)], c2_swap, pairs=50)
    assert not report.passed
    assert report.counterexamples


def test_reduce_noop_when_small(c2_swap):
    noether = noether_separating_set(c2_swap)
    result = reduce_separating_set(noether.invariants, 2)
    assert result.invariants == noether.invariants
    assert result.alphas == []


def test_reduce_separating_set_c5(cn5):
    noether = noether_separating_set(cn5)
    assert noether.size == 6  # one more than 2n+1
    result = reduce_separating_set(noether.invariants, 2)
    assert result.size <= 5
    # all inputs share degree 5, so the combinations happen to stay homogeneous
    assert result.homogeneous == all(p.is_homogeneous() for p in result.invariants)
    assert len(result.alphas) == 1
    # recorded alpha reconstructs the output as linear combinations
    alpha = [cn5.field.scalar(a) for a in result.alphas[0]]
    rebuilt = [
        alpha[0] * noether.invariants[i] - alpha[i] * noether.invariants[0]
        for i in range(1, noether.size)
    ]
    assert rebuilt == result.invariants
    report = verify_separation_samples(result.invariants, cn5, pairs=60)
    assert report.passed


def test_reduce_mixed_degree_set(c2_swap):
    # inflate the separating set with redundant invariants of other degrees;
    # one reduction round must fire and the output stays separating
    noether = noether_separating_set(c2_swap).invariants
    ring = c2_swap.ring()
    x1, x2 = ring.variables()
    e1 = x1 + x2
    inflated = noether + [e1**3, e1**4, x1 * x2 * e1]
    assert len(inflated) == 6
    result = reduce_separating_set(inflated, 2)
    assert result.size == 5
    assert len(result.alphas) == 1
    assert not result.homogeneous  # combinations now mix degrees
    report = verify_separation_samples(result.invariants, c2_swap, pairs=60)
    assert report.passed


def test_reduce_rejects_finite_fields(c2_swap_gf2):
    noether = noether_separating_set(c2_swap_gf2)
    with pytest.raises(FieldTooSmall):
        reduce_separating_set(noether.invariants, 2)


# ---------------------------------------------------------------------------
# parameter systems and bounds
# ---------------------------------------------------------------------------

def test_hsop_examples(d8):
    ring = d8.ring()
    x, y = ring.variables()
    assert is_hsop([x, y], 2)
    g2 = x**2 + y**2
    g8 = x**2 * y**2 * (x**2 - y**2) ** 2
    assert is_hsop([g2, g8], 2)
    assert is_phsop([x * y])
    assert not is_hsop([x * y, x * y], 2)
    with pytest.raises(NonHomogeneousInput):
        is_phsop([x**2 + x])


def test_dade_trivial(trivial2):
    prim = dade_primary_invariants(trivial2, seed=0)
    assert [p.total_degree() for p in prim] == [1, 1]
    assert is_hsop(prim, 2)


def test_dade_rejects_finite_fields(c2_swap_gf2):
    with pytest.raises(FieldTooSmall):
        dade_primary_invariants(c2_swap_gf2, seed=0)


def test_dade_c2(c2_swap):
    prim = dade_primary_invariants(c2_swap, seed=0)
    assert is_hsop(prim, 2)
    for p in prim:
        assert c2_swap.order % p.total_degree() == 0  # orbit sizes divide |G|


def test_dade_s3_and_d8(s3, d8):
    for group in (s3, d8):
        prim = dade_primary_invariants(group, seed=0)
        assert is_hsop(prim, group.dimension)
        for p in prim:
            assert p.total_degree() <= group.order
            for sigma in group.generators:
                assert p.apply_linear_map(sigma.rows) == p


def test_degree_bound_report(d8, c2_swap):
    rep = degree_bound_report(d8, [2, 8])
    assert (rep.symonds_bound, rep.coarse_bound, rep.noether_bound) == (8, 30, 16)
    assert rep.noether_applies
    assert degree_bound_report(d8, [1, 1]).symonds_bound == 0
    assert degree_bound_report(c2_swap, [1, 2]).coarse_bound == 2
