from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totsym.catalog import (
    induction,
    ncsimplex,
    partition_construction,
    permutation_type,
    simplex_system,
    sporadic4,
    standard,
    suspension_simplex,
    tilde_sigma5_arrangement,
)
from totsym.core import Tss, half_dim_normal_form, realize_permutation
from totsym.field import ONE, ZETA, ZETA_INV, Scalar
from totsym.linalg import Matrix, Subspace
from totsym.spectral import (
    IRREDUCIBLE,
    Incomplete,
    NON_DIAGONALIZABLE,
    NotAnEigenvalue,
    NotCommutative,
    REDUCIBLE,
    FullAlgebra,
    ProperAlgebra,
    classify_commutative,
    depth_profile,
    discover_eigenvalues,
    filtration,
    generalized_eigenspace,
    halfdim_nonexistence_suite,
    irreducibility_certificate,
    jfold,
    rep_obstruction_suite,
)


def diag(*entries):
    n = len(entries)
    return Matrix([[entries[i] if i == j else 0 for j in range(n)]
                   for i in range(n)])


def M(*rows):
    return Matrix(rows)


def line(*coords):
    return Subspace([coords], len(coords))


# --------------------------------------------------------------- filtrations


def test_generalized_eigenspace_eigenline():
    a = diag(ZETA, ZETA_INV)
    assert generalized_eigenspace(a, ZETA, 1) == line(1, 0)


def test_generalized_eigenspace_jordan_block():
    a = suspension_simplex(3, 2).elements[0]
    assert generalized_eigenspace(a, 2, 1).dim == 3
    assert generalized_eigenspace(a, 2, 2) == Subspace.full(4)


def test_generalized_eigenspace_missing_eigenvalue():
    assert generalized_eigenspace(diag(1, 2), 7, 1).dim == 0


def test_generalized_eigenspace_needs_positive_degree():
    with pytest.raises(ValueError):
        generalized_eigenspace(diag(1, 2), 1, 0)


def test_filtration_sporadic_dims():
    f = filtration(sporadic4(1).elements[2], 1)
    assert f.dims == (2, 4)


def test_filtration_diagonalizable_stops_immediately():
    assert filtration(diag(1, 1, 2), 1).dims == (2,)


def test_filtration_nilpotent_full_chain():
    shift = M((0, 1, 0), (0, 0, 1), (0, 0, 0))
    assert filtration(shift, 0).dims == (1, 2, 3)


def test_filtration_empty_for_non_eigenvalue():
    assert filtration(diag(1, 2), 5).spaces == ()


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4),
       st.integers(-2, 2))
def test_filtration_jordan_inequalities(entries, lam):
    # the constructor asserts the chain and quotient laws; feed it arbitrary
    # small matrices to exercise them
    a = Matrix([entries[:2], entries[2:]])
    f = filtration(a, lam)
    dims = (0,) + f.dims
    jumps = [b - c for c, b in zip(dims, dims[1:])]
    assert all(x >= y for x, y in zip(jumps, jumps[1:]))


def test_jfold_single_index_is_plain_eigenspace():
    t = standard(3, 1, 2)
    assert jfold(t, 1, 1, [1]) == generalized_eigenspace(t.elements[1], 1, 1)


def test_jfold_standard_pair():
    t = standard(3, 1, 2)
    assert jfold(t, 1, 1, [0, 1]) == line(0, 0, 1)


def test_jfold_triple_intersection_vanishes():
    t = ncsimplex(3, 2, 1)
    assert jfold(t, 1, 1, [0, 1, 2]).dim == 0


def test_jfold_empty_subset_is_everything():
    t = standard(2, 1, 2)
    assert jfold(t, 1, 1, []) == Subspace.full(2)


# --------------------------------------------------------------------- depth


def test_depth_standard():
    p = depth_profile(standard(3, 1, 2), 1)
    assert p.mu == (2, 1, 0)
    assert p.depth == 2


def test_depth_fresh_induction():
    t = induction(standard(2, 1, 2), 2, 5)
    assert depth_profile(t, 5).depth == 2


def test_depth_of_degenerate_set_is_k():
    t = Tss([diag(2, 2)] * 3)
    assert depth_profile(t, 2).depth == 3


def test_depth_rejects_non_eigenvalue():
    with pytest.raises(NotAnEigenvalue):
        depth_profile(standard(3, 1, 2), 9)


def test_depth_below_cardinality_on_irreducible_sets():
    for t in (standard(4, 2, 1), partition_construction([1, 1, 2])):
        for lam in set(t.params):
            assert depth_profile(t, lam).depth < t.k


def test_eigenspace_transport():
    # realizations carry j-fold eigenspaces onto the permuted subsets
    t = partition_construction([1, 2, 3])
    for sigma, s in [((1, 0, 2), (0,)), ((2, 0, 1), (0, 2)), ((1, 2, 0), (1,))]:
        r = realize_permutation(t.witness, list(sigma))
        moved = jfold(t, 1, 1, s).apply(r)
        assert moved == jfold(t, 1, 1, [sigma[i] for i in s])


# ----------------------------------------------------------------- discovery


def test_discover_rational_spectrum():
    expected = [Scalar.rational(v) for v in (1, 2, 2)]
    assert discover_eigenvalues(diag(1, 2, 2)) == expected


def test_discover_quadratic_residual():
    _, t = half_dim_normal_form(tilde_sigma5_arrangement())
    roots = discover_eigenvalues(t.elements[1])
    assert roots == sorted([ZETA, ZETA_INV], key=Scalar.sort_key)


def test_discover_incomplete_outside_field():
    out = discover_eigenvalues(M((0, 5), (1, 0)))
    assert isinstance(out, Incomplete)
    assert out.residual.degree == 2


def test_discover_needs_pool_for_larger_rationals():
    a = diag(4, 4, 4)
    assert isinstance(discover_eigenvalues(a), Incomplete)
    assert discover_eigenvalues(a, (4,)) == [Scalar.rational(4)] * 3


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=4))
def test_discover_diagonal_matrices(entries):
    assert discover_eigenvalues(diag(*entries)) == sorted(
        (Scalar.rational(e) for e in entries), key=Scalar.sort_key)


# ------------------------------------------------------------ classification


PARTITION_DIMS = {
    (1, 2): 2,
    (1, 1, 2): 3,
    (1, 2, 3): 6,
    (1, 1, 1, 2): 4,
    (1, 1, 2, 2): 6,
    (1, 1, 2, 3): 12,
    (1, 2, 3, 4): 24,
}


@pytest.mark.parametrize("values", sorted(PARTITION_DIMS))
def test_classification_round_trip(values):
    t = partition_construction(list(values))
    assert t.n == PARTITION_DIMS[values]
    res = classify_commutative(t)
    assert res.verdict == IRREDUCIBLE
    assert res.weight.values == tuple(Scalar.rational(v) for v in values)


def test_classification_weight_is_canonical():
    res = classify_commutative(permutation_type([3, 1, 2]))
    assert res.weight.values == (ONE, Scalar.rational(2), Scalar.rational(3))
    assert res.partition == (1, 1, 1)


def test_classification_suspension_is_not_diagonalizable():
    assert classify_commutative(suspension_simplex(3, 2)).verdict == (
        NON_DIAGONALIZABLE)


def test_classification_rejects_noncommutative():
    with pytest.raises(NotCommutative):
        classify_commutative(ncsimplex(3, 2, 1))


def test_classification_reducible_witness():
    t = Tss([diag(1, 1, 2), diag(1, 2, 1)])
    res = classify_commutative(t)
    assert res.verdict == REDUCIBLE
    assert 0 < res.subspace.dim < 3
    assert all(res.subspace.is_invariant_under(a) for a in t.elements)


def test_classification_degenerate_plane_is_reducible():
    res = classify_commutative(Tss([Matrix.identity(2)] * 2))
    assert res.verdict == REDUCIBLE
    assert res.subspace.dim == 1


def test_classification_matches_model():
    from totsym.core import isomorphic

    for values in ([1, 2], [1, 1, 2], [1, 2, 3]):
        t = partition_construction(values)
        res = classify_commutative(t)
        model = partition_construction(list(res.weight.values))
        assert isomorphic(t, model) is not None


# -------------------------------------------------------------- certificates


def test_certificate_standard_full():
    cert = irreducibility_certificate(standard(3, 1, 2))
    assert isinstance(cert, FullAlgebra)
    assert cert.dim == 9


def test_certificate_permutation_type_full():
    cert = irreducibility_certificate(permutation_type([1, 2, 3]))
    assert isinstance(cert, FullAlgebra)
    assert cert.dim == 36


def test_certificate_suspension_proper():
    cert = irreducibility_certificate(suspension_simplex(3, 2))
    assert isinstance(cert, ProperAlgebra)
    assert cert.invariant_subspace == Subspace(
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 4)


def test_certificate_degenerate_scalar():
    cert = irreducibility_certificate(Tss([diag(3, 3)]))
    assert isinstance(cert, ProperAlgebra)
    assert cert.dim == 1
    assert cert.invariant_subspace == line(1, 0)


def test_certificate_needs_witness():
    with pytest.raises(ValueError):
        irreducibility_certificate(Tss([diag(1, 2), diag(2, 1)]))


@pytest.mark.parametrize("k,p", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_induction_preserves_full_algebra(k, p):
    base = standard(k, 1, 2) if k > 1 else Tss([M((2,))])
    assert isinstance(irreducibility_certificate(base), FullAlgebra)
    out = induction(base, p, 5)
    assert isinstance(irreducibility_certificate(out), FullAlgebra)


# -------------------------------------------------------------------- suites


def test_rep_obstruction_suite_passes():
    checks = rep_obstruction_suite()
    assert len(checks) == 6
    assert all(c["passed"] for c in checks), [
        c["name"] for c in checks if not c["passed"]]


def test_halfdim_nonexistence_suite_passes():
    checks = halfdim_nonexistence_suite()
    assert len(checks) == 4
    assert all(c["passed"] for c in checks), [
        c["name"] for c in checks if not c["passed"]]


def test_suite_names_are_stable():
    names = [c["name"] for c in rep_obstruction_suite()]
    assert names == [
        "obstruction.braid.3",
        "obstruction.braid.4",
        "obstruction.braid.5",
        "obstruction.braid.6",
        "obstruction.spin.involution_pair",
        "obstruction.spin.braid_power",
    ]
    names = [c["name"] for c in halfdim_nonexistence_suite()]
    assert names == [
        "halfdim.block_identity",
        "halfdim.transport_clash",
        "halfdim.top_row_coefficients",
        "halfdim.system_rank",
    ]
