"""The iterated-bracket realization against hand values, finite differences,
and its own resummed closed form."""

import numpy as np
import pytest

from cosetrep.errors import DomainError
from cosetrep.lie import CosetPoint, bracket, h_pairs, so1m_algebra
from cosetrep.series import (
    coset_element,
    even_bracket_weights,
    f_prime_series,
    h_action_series,
    i_prime_series,
    odd_bracket_weights,
    realize,
    so1m_closed_field,
    so1m_closed_field_variant,
)
from cosetrep.verify import fd_action_derivative


def test_weights_are_the_taylor_coefficients():
    """z coth z = 1 + z^2/3 - z^4/45 + 2 z^6/945, tanh(z/2) = z/2 - z^3/24 + z^5/240."""
    even = dict(even_bracket_weights(7))
    assert even[2] == pytest.approx(1.0 / 3.0, abs=0.0)
    assert even[4] == pytest.approx(-1.0 / 45.0, abs=0.0)
    assert even[6] == pytest.approx(2.0 / 945.0, abs=0.0)
    odd = dict(odd_bracket_weights(5))
    assert odd[1] == 0.5
    assert odd[3] == pytest.approx(-1.0 / 24.0, abs=0.0)
    assert odd[5] == pytest.approx(1.0 / 240.0, abs=0.0)


def test_order_must_be_positive():
    alg = so1m_algebra(2)
    with pytest.raises(DomainError):
        f_prime_series(alg, alg.f_basis(0), CosetPoint(np.zeros(2)), order=0)


def test_actor_grade_is_enforced():
    alg = so1m_algebra(2)
    point = CosetPoint(np.array([0.1, 0.2]))
    with pytest.raises(DomainError):
        f_prime_series(alg, alg.h_basis(0), point)
    with pytest.raises(DomainError):
        i_prime_series(alg, alg.h_basis(0), point)
    with pytest.raises(DomainError):
        h_action_series(alg, alg.f_basis(0), point)


def test_origin_is_trivial():
    alg = so1m_algebra(3)
    origin = CosetPoint(np.zeros(3))
    x = alg.f_basis(1)
    assert np.array_equal(f_prime_series(alg, x, origin).f, x.f)
    assert i_prime_series(alg, x, origin).max_abs() == 0.0


def test_collinear_actor_moves_freely():
    """An actor parallel to sigma commutes with the base, so nothing bends."""
    alg = so1m_algebra(3)
    sig = np.array([0.2, -0.4, 0.1])
    point = CosetPoint(sig)
    x = alg.element(f=3.0 * sig)
    assert np.array_equal(f_prime_series(alg, x, point).f, x.f)
    assert i_prime_series(alg, x, point).max_abs() == 0.0


def test_first_order_compensator_hand_value():
    """At order 1 the compensator is (1/2)[X, F]; for X = F_1, F = s F_2 that
    is -2s H_(1,2)."""
    alg = so1m_algebra(2)
    s = 0.3
    point = CosetPoint(np.array([0.0, s]))
    x = alg.f_basis(0)
    got = i_prime_series(alg, x, point, order=1)
    half = 0.5 * bracket(x, coset_element(alg, point))
    assert (got - half).max_abs() == 0.0
    np.testing.assert_allclose(got.h, [-2.0 * s], atol=0.0)


def test_matches_factorization_derivative():
    """Series truncated at order 21 against finite differences of the matrix
    factorization, mixed actors, |sigma| <= 0.5."""
    rng = np.random.default_rng(2)
    for m in (2, 3):
        alg = so1m_algebra(m)
        for _ in range(5):
            sig = rng.uniform(-1.0, 1.0, m)
            sig *= rng.uniform(0.05, 0.5) / np.linalg.norm(sig)
            point = CosetPoint(sig)
            coords = rng.uniform(-1.0, 1.0, alg.dim)
            xi = alg.element(h=coords[: alg.dim_h], f=coords[alg.dim_h :])
            act = realize(alg, xi, point, order=21)
            fd_sigma, fd_comp = fd_action_derivative(alg, xi, point)
            np.testing.assert_allclose(act.dF, fd_sigma, atol=1e-8)
            np.testing.assert_allclose(act.dI, fd_comp, atol=1e-8)


def test_stabilizer_action_is_exactly_linear():
    """Every odd coefficient beyond the first vanishes, so the partial sum
    collapses to [X, F] with no float residue."""
    rng = np.random.default_rng(4)
    for m in (2, 3, 4):
        alg = so1m_algebra(m)
        for _ in range(5):
            sig = rng.uniform(-1.0, 1.0, m)
            point = CosetPoint(sig)
            coords = rng.uniform(-1.0, 1.0, alg.dim_h)
            actor = alg.element(h=coords)
            act = h_action_series(alg, actor, point, order=9)
            lin = bracket(actor, coset_element(alg, point))
            assert np.array_equal(act.dF, lin.f)
            assert np.array_equal(act.dI, actor.h)


def test_stabilizer_field_formula():
    """dF for H_(i,k) rotates the (i,k) plane: component k gains sigma^i,
    component i loses sigma^k."""
    m = 3
    alg = so1m_algebra(m)
    sig = np.array([0.31, -0.12, 0.21])
    point = CosetPoint(sig)
    for a, (i, k) in enumerate(h_pairs(m)):
        act = h_action_series(alg, alg.h_basis(a), point)
        want = np.zeros(m)
        want[k - 1] += sig[i - 1]
        want[i - 1] -= sig[k - 1]
        np.testing.assert_allclose(act.dF, want, atol=1e-15)


def test_realize_splits_by_grade():
    alg = so1m_algebra(3)
    point = CosetPoint(np.array([0.2, 0.1, -0.3]))
    h_coords = np.array([0.5, -1.0, 0.25])
    f_coords = np.array([1.0, 0.0, -2.0])
    xi = alg.element(h=h_coords, f=f_coords)
    whole = realize(alg, xi, point, order=13)
    f_part = realize(alg, alg.element(f=f_coords), point, order=13)
    h_part = realize(alg, alg.element(h=h_coords), point, order=13)
    np.testing.assert_allclose(whole.dF, f_part.dF + h_part.dF, atol=1e-15)
    np.testing.assert_allclose(whole.dI, f_part.dI + h_part.dI, atol=1e-15)


def test_field_brackets_reverse_the_algebra():
    """[u_X, u_Y] = -u_[X,Y] on the coordinate fields: the realization is a
    left action.  Jacobians by central differences."""
    m = 3
    alg = so1m_algebra(m)
    sig = np.array([0.25, -0.15, 0.05])

    def field(xi, s):
        return realize(alg, xi, CosetPoint(s), order=25).dF

    def jacobian(xi, s, h=1e-5):
        out = np.zeros((m, m))
        for j in range(m):
            e = np.zeros(m)
            e[j] = h
            out[:, j] = (field(xi, s + e) - field(xi, s - e)) / (2.0 * h)
        return out

    x = alg.f_basis(0)
    y = alg.f_basis(1)
    lie = jacobian(y, sig) @ field(x, sig) - jacobian(x, sig) @ field(y, sig)
    want = -field(bracket(x, y), sig)
    np.testing.assert_allclose(lie, want, atol=1e-6)


def test_closed_field_matches_series():
    rng = np.random.default_rng(9)
    for m in (2, 3):
        alg = so1m_algebra(m)
        for _ in range(4):
            sig = rng.uniform(-1.0, 1.0, m)
            sig *= rng.uniform(0.05, 0.7) / np.linalg.norm(sig)
            point = CosetPoint(sig)
            u, w = so1m_closed_field(point)
            for j in range(m):
                actor = alg.f_basis(j)
                np.testing.assert_allclose(
                    f_prime_series(alg, actor, point, order=41).f, u[:, j], atol=1e-12
                )
                np.testing.assert_allclose(
                    i_prime_series(alg, actor, point, order=41).h, w[:, j], atol=1e-12
                )


def test_closed_field_regular_at_origin():
    for m in (2, 3):
        u, w = so1m_closed_field(CosetPoint(np.zeros(m)))
        np.testing.assert_array_equal(u, np.eye(m))
        np.testing.assert_array_equal(w, np.zeros_like(w))
        # just off the origin the small-norm branch must agree with the series
        alg = so1m_algebra(m)
        point = CosetPoint(np.full(m, 1e-8))
        u, w = so1m_closed_field(point)
        for j in range(m):
            actor = alg.f_basis(j)
            np.testing.assert_allclose(
                f_prime_series(alg, actor, point, order=5).f, u[:, j], atol=1e-15
            )
            np.testing.assert_allclose(
                i_prime_series(alg, actor, point, order=5).h, w[:, j], atol=1e-15
            )


def test_variant_profile_shapes_and_origin():
    """The alternative closed-form profile reports through the same contract:
    same shapes, regularized origin.  Away from the origin it is a genuinely
    different profile; the verify suite records the deviation."""
    for m in (2, 3):
        point = CosetPoint(np.zeros(m))
        u, w = so1m_closed_field_variant(point)
        np.testing.assert_array_equal(u, np.eye(m))
        np.testing.assert_array_equal(w, np.zeros((m * (m - 1) // 2, m)))
        generic = CosetPoint(0.4 * np.ones(m) / np.sqrt(m))
        u_v, w_v = so1m_closed_field_variant(generic)
        u_c, w_c = so1m_closed_field(generic)
        assert u_v.shape == u_c.shape and w_v.shape == w_c.shape
        assert max(abs(u_v - u_c).max(), abs(w_v - w_c).max()) > 1e-3


def test_action_arrays_read_only():
    alg = so1m_algebra(2)
    act = realize(alg, alg.f_basis(0), CosetPoint(np.array([0.1, 0.3])))
    with pytest.raises(ValueError):
        act.dF[0] = 1.0
    with pytest.raises(ValueError):
        act.dI[0] = 1.0
