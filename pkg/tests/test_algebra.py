"""Structure constants of so(1,m) and the generic reductive-split container."""

import numpy as np
import pytest
from scipy.linalg import expm

from cosetrep.clifford import CliffordSpace, Multivector, commutator, multivector_matrix
from cosetrep.errors import ClosureError, DimensionError
from cosetrep.lie import (
    AlgebraElement,
    CosetPoint,
    ReductiveAlgebra,
    algebra_from_json_dict,
    algebra_to_json_dict,
    bracket,
    defining_rep_so1m,
    h_pairs,
    jacobi_residual,
    project_f,
    project_h,
    so1m_algebra,
)


def test_h_pairs_order():
    assert h_pairs(3) == ((1, 2), (1, 3), (2, 3))
    assert h_pairs(4) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert h_pairs(1) == ()


def test_dimensions():
    for m in (2, 3, 4):
        alg = so1m_algebra(m)
        assert alg.dim_f == m
        assert alg.dim_h == m * (m - 1) // 2
        assert alg.dim == alg.dim_h + alg.dim_f


def test_jacobi_residual_zero():
    for m in (2, 3, 4):
        assert jacobi_residual(so1m_algebra(m)) == 0.0


def test_boost_bracket_lands_on_minus_four_rotation():
    """[F_i, F_k] = -4 H_(i,k) in the normalization F_k = gamma_k."""
    for m in (2, 3):
        alg = so1m_algebra(m)
        pairs = h_pairs(m)
        for a, (i, k) in enumerate(pairs):
            got = bracket(alg.f_basis(i - 1), alg.f_basis(k - 1))
            want = -4.0 * alg.h_basis(a)
            assert (got - want).max_abs() == 0.0


def test_boost_rotation_bracket():
    """[F_j, H_(i,k)] = d_jk F_i - d_ji F_k."""
    m = 3
    alg = so1m_algebra(m)
    pairs = h_pairs(m)
    for j in range(1, m + 1):
        for a, (i, k) in enumerate(pairs):
            got = bracket(alg.f_basis(j - 1), alg.h_basis(a))
            want = alg.zero()
            if j == k:
                want = want + alg.f_basis(i - 1)
            if j == i:
                want = want - alg.f_basis(k - 1)
            assert (got - want).max_abs() == 0.0


def test_rotation_brackets_close_as_angular_momenta():
    """[H_(1,2), H_(1,3)] = +H_(2,3): gamma_1 contracts, the 2-3 plane remains."""
    alg = so1m_algebra(3)
    got = bracket(alg.h_basis(0), alg.h_basis(1))
    want = alg.h_basis(2)
    assert (got - want).max_abs() == 0.0


def test_structure_constants_from_clifford_match_matrices():
    """The same brackets computed in the Clifford matrix images."""
    for m in (2, 3, 4):
        sp = CliffordSpace(m)
        gammas = [Multivector.blade(sp, (j,)) for j in range(1, m + 1)]
        f_imgs = [multivector_matrix(g) for g in gammas]
        h_imgs = [
            multivector_matrix(0.25 * commutator(gammas[k - 1], gammas[i - 1]))
            for (i, k) in h_pairs(m)
        ]
        alg = so1m_algebra(m)
        stack = h_imgs + f_imgs
        C = np.zeros((alg.dim, alg.dim, alg.dim))
        C[: alg.dim_h, : alg.dim_h, : alg.dim_h] = alg.c_hh
        C[alg.dim_h :, alg.dim_h :, : alg.dim_h] = alg.c_ff
        C[alg.dim_h :, : alg.dim_h, alg.dim_h :] = alg.c_fh
        C[: alg.dim_h, alg.dim_h :, alg.dim_h :] = -np.swapaxes(alg.c_fh, 0, 1)
        for a in range(alg.dim):
            for b in range(alg.dim):
                comm = stack[a] @ stack[b] - stack[b] @ stack[a]
                lin = sum(C[a, b, c] * stack[c] for c in range(alg.dim))
                np.testing.assert_allclose(comm, lin, atol=1e-12)


def test_defining_rep_matches_algebra():
    """Brackets of the (m+1)x(m+1) matrices reproduce every structure constant."""
    for m in (2, 3, 4):
        alg = so1m_algebra(m)
        rep = defining_rep_so1m(m)
        basis = [alg.h_basis(a) for a in range(alg.dim_h)] + [
            alg.f_basis(al) for al in range(alg.dim_f)
        ]
        mats = [rep.matrix(x) for x in basis]
        for a in range(alg.dim):
            for b in range(alg.dim):
                comm = mats[a] @ mats[b] - mats[b] @ mats[a]
                want = rep.matrix(bracket(basis[a], basis[b]))
                np.testing.assert_allclose(comm, want, atol=1e-12)


def test_defining_rep_preserves_form():
    for m in (2, 3):
        rep = defining_rep_so1m(m)
        for x in list(rep.h_gens) + list(rep.f_gens):
            np.testing.assert_allclose(x.T @ rep.eta + rep.eta @ x, 0.0, atol=0.0)


def test_defining_rep_boost_rapidity_doubles():
    """exp(s rep(F_1)) is a boost of rapidity 2s."""
    rep = defining_rep_so1m(3)
    s = 0.37
    g = expm(s * rep.f_gens[0])
    assert g[0, 0] == pytest.approx(np.cosh(2 * s), abs=1e-12)
    assert g[0, 1] == pytest.approx(np.sinh(2 * s), abs=1e-12)
    assert g[2, 2] == 1.0 and g[3, 3] == 1.0


def test_element_arithmetic_and_projections():
    alg = so1m_algebra(3)
    x = alg.element(h=[1.0, -2.0, 0.5], f=[0.0, 3.0, 0.0])
    y = alg.element(h=[0.5, 0.0, 0.0], f=[1.0, 0.0, -1.0])
    s = x + y
    np.testing.assert_array_equal(s.h, [1.5, -2.0, 0.5])
    np.testing.assert_array_equal(s.f, [1.0, 3.0, -1.0])
    np.testing.assert_array_equal((2.0 * x).f, [0.0, 6.0, 0.0])
    np.testing.assert_array_equal((-x).h, [-1.0, 2.0, -0.5])
    assert project_h(x).is_h() and project_h(x).f.max() == 0.0
    assert project_f(x).is_f()
    assert x.max_abs() == 3.0


def test_bracket_antisymmetric_on_random_elements():
    rng = np.random.default_rng(11)
    alg = so1m_algebra(3)
    for _ in range(20):
        x = alg.element(h=rng.uniform(-1, 1, 3), f=rng.uniform(-1, 1, 3))
        y = alg.element(h=rng.uniform(-1, 1, 3), f=rng.uniform(-1, 1, 3))
        assert (bracket(x, y) + bracket(y, x)).max_abs() == 0.0
        assert bracket(x, x).max_abs() == 0.0


def test_elements_of_different_algebras_do_not_mix():
    a2, a3 = so1m_algebra(2), so1m_algebra(3)
    with pytest.raises(DimensionError):
        bracket(a2.f_basis(0), a3.f_basis(0))


def test_constructor_rejects_bad_tensors():
    alg = so1m_algebra(2)
    with pytest.raises(ClosureError):
        ReductiveAlgebra(np.zeros((1, 1)), alg.c_ff, alg.c_fh)
    # breaking antisymmetry of [F,F] must be caught
    c_ff = alg.c_ff.copy()
    c_ff[0, 1, 0] += 1.0
    with pytest.raises(ClosureError):
        ReductiveAlgebra(alg.c_hh, c_ff, alg.c_fh)
    # breaking Jacobi must be caught
    alg3 = so1m_algebra(3)
    c_fh = alg3.c_fh.copy()
    c_fh[0, 0, 1] += 0.5
    with pytest.raises(ClosureError):
        ReductiveAlgebra(alg3.c_hh, alg3.c_ff, c_fh)


def test_coset_point_validation():
    p = CosetPoint(np.array([0.3, -0.1]))
    assert p.m == 2
    assert p.norm == pytest.approx(np.hypot(0.3, 0.1))
    with pytest.raises(DimensionError):
        CosetPoint(np.zeros((2, 2)))
    with pytest.raises(DimensionError):
        CosetPoint(np.array([np.nan, 0.0]))


def test_so1m_needs_rotations():
    with pytest.raises(DimensionError):
        so1m_algebra(1)


def test_algebra_json_round_trip():
    alg = so1m_algebra(3)
    back = algebra_from_json_dict(algebra_to_json_dict(alg))
    np.testing.assert_array_equal(back.c_hh, alg.c_hh)
    np.testing.assert_array_equal(back.c_ff, alg.c_ff)
    np.testing.assert_array_equal(back.c_fh, alg.c_fh)


def test_algebra_json_rejects_malformed():
    alg = so1m_algebra(2)
    doc = algebra_to_json_dict(alg)
    with pytest.raises(ClosureError):
        algebra_from_json_dict({})
    bad = dict(doc)
    bad["dim_f"] = 5
    with pytest.raises(ClosureError):
        algebra_from_json_dict(bad)
