"""Infinitesimal coset transformation laws as iterated-bracket series.

A group generator xi acts on the coset coordinates sigma (the point
exp(sigma^al F_al) H) through a vector field dF and an h-valued compensator
dI.  Writing F = sigma^al F_al, ad_F(x) = [F, x] and T_n(x) for the n-fold
right-iterated bracket [...[[x, F], F], ..., F], the laws are

  actor X in f:   dF = X + sum_k 4^k l_{2k} T_2k(X)          (z coth z profile)
                  dI = sum_k 2 (4^k - 1) l_{2k} T_{2k-1}(X)  (tanh(z/2) profile)

  actor X in h:   dF = 2 sum_k l_{2k-1} T_{2k-1}(X)  ( = [X, F], exactly linear)
                  dI = X

with the rational table l_n of :mod:`cosetrep.coeffs`.  The weights are the
Taylor coefficients of z coth z = 1 + sum 4^k l_{2k} z^{2k} and
tanh(z/2) = sum 2 (4^k - 1) l_{2k} z^{2k-1}; on a split with [f,f] in h these
resum the factorization of a group flow through a coset slice, which is what
the matrix factorization of :mod:`cosetrep.induced` computes independently.

For so(1,m) the resummed field has the closed form of
:func:`so1m_closed_field`.  :func:`so1m_closed_field_variant` evaluates an
alternative closed-form coefficient profile; it deviates from the
factorization route away from the origin, and the verify suite reports the
deviation without asserting on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coeffs import CoeffTable, l_coeffs
from .errors import DimensionError, DomainError
from .lie import (
    AlgebraElement,
    CosetPoint,
    ReductiveAlgebra,
    bracket,
    h_pairs,
    project_f,
    project_h,
)

__all__ = [
    "DEFAULT_ORDER",
    "InfinitesimalAction",
    "coset_element",
    "even_bracket_weights",
    "odd_bracket_weights",
    "i_prime_series",
    "f_prime_series",
    "h_action_series",
    "realize",
    "so1m_closed_field",
    "so1m_closed_field_variant",
]

DEFAULT_ORDER = 11

_SMALL = 1e-6


@dataclass(frozen=True, eq=False)
class InfinitesimalAction:
    """First-order action on a coset point: coordinate variation + compensator.

    dF holds the f coordinates of the variation of sigma, dI the h coordinates
    of the compensating stabilizer generator acting on attached vectors.
    """

    dF: np.ndarray
    dI: np.ndarray

    def __post_init__(self) -> None:
        for name in ("dF", "dI"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def coset_element(alg: ReductiveAlgebra, point: CosetPoint) -> AlgebraElement:
    """The base element F = sigma^al F_al of the algebra."""
    if point.m != alg.dim_f:
        raise DimensionError(f"point has {point.m} coordinates, algebra dim_f {alg.dim_f}")
    return alg.element(f=point.sigma)


def _check_order(order: int) -> None:
    if order < 1:
        raise DomainError(f"truncation order must be >= 1, got {order}")


def even_bracket_weights(order: int, table: CoeffTable | None = None) -> list[tuple[int, float]]:
    """Pairs (2k, w) with w = 4^k l_{2k} for all 2k <= order.

    These are the coefficients of z coth z - 1 = sum_k 4^k l_{2k} z^{2k}.
    """
    _check_order(order)
    table = table if table is not None and len(table) >= order else l_coeffs(max(order, 2))
    return [
        (2 * k, float(Fraction(4**k) * table.l(2 * k)))
        for k in range(1, order // 2 + 1)
    ]


def odd_bracket_weights(order: int, table: CoeffTable | None = None) -> list[tuple[int, float]]:
    """Pairs (2k-1, w) with w = 2 (4^k - 1) l_{2k} for all 2k-1 <= order.

    These are the coefficients of tanh(z/2) = sum_k 2 (4^k - 1) l_{2k} z^{2k-1}.
    """
    _check_order(order)
    need = order + 1
    table = table if table is not None and len(table) >= need else l_coeffs(need)
    return [
        (2 * k - 1, float(Fraction(2 * (4**k - 1)) * table.l(2 * k)))
        for k in range(1, (order + 1) // 2 + 1)
    ]


def _bracket_tower(x: AlgebraElement, base: AlgebraElement, depth: int) -> list[AlgebraElement]:
    """T_1 .. T_depth with T_1 = [x, base], T_{n+1} = [T_n, base]."""
    out = []
    t = x
    for _ in range(depth):
        t = bracket(t, base)
        out.append(t)
    return out


def i_prime_series(
    alg: ReductiveAlgebra,
    actor: AlgebraElement,
    point: CosetPoint,
    order: int = DEFAULT_ORDER,
) -> AlgebraElement:
    """Compensator of an f actor, truncated at bracket count `order`.

    Returns sum over 2k-1 <= order of 2 (4^k - 1) l_{2k} T_{2k-1}(actor),
    an h element by the closure [f, f] in h.
    """
    if not actor.is_f():
        raise DomainError("actor must lie in the f subspace")
    base = coset_element(alg, point)
    weights = odd_bracket_weights(order)
    tower = _bracket_tower(actor, base, weights[-1][0]) if weights else []
    out = alg.zero()
    for n, w in weights:
        out = out + w * tower[n - 1]
    if not out.is_h(tol=0.0):
        raise DomainError("odd bracket iterates left the h subspace")
    return out


def f_prime_series(
    alg: ReductiveAlgebra,
    actor: AlgebraElement,
    point: CosetPoint,
    order: int = DEFAULT_ORDER,
) -> AlgebraElement:
    """Coordinate variation of an f actor, truncated at bracket count `order`.

    Returns actor + sum over 2k <= order of 4^k l_{2k} T_2k(actor), an f
    element; at sigma = 0 this is the actor itself.
    """
    if not actor.is_f():
        raise DomainError("actor must lie in the f subspace")
    base = coset_element(alg, point)
    weights = even_bracket_weights(order)
    tower = _bracket_tower(actor, base, weights[-1][0]) if weights else []
    out = actor
    for n, w in weights:
        out = out + w * tower[n - 1]
    if not out.is_f(tol=0.0):
        raise DomainError("even bracket iterates left the f subspace")
    return out


def h_action_series(
    alg: ReductiveAlgebra,
    actor: AlgebraElement,
    point: CosetPoint,
    order: int = DEFAULT_ORDER,
) -> InfinitesimalAction:
    """Action of a stabilizer generator: dF = 2 sum l_{2k-1} T_{2k-1}, dI = actor.

    Every l_{2k-1} with k >= 2 vanishes, so the partial sum equals [actor, F]
    at any order: the stabilizer acts linearly on sigma.  dI returns the
    actor's own h coordinates unchanged.
    """
    if not actor.is_h():
        raise DomainError("actor must lie in the h subspace")
    _check_order(order)
    base = coset_element(alg, point)
    table = l_coeffs(order)
    depth = order if order % 2 else order - 1
    tower = _bracket_tower(actor, base, depth)
    out = alg.zero()
    for k in range(1, (order + 1) // 2 + 1):
        n = 2 * k - 1
        w = 2.0 * float(table.l(n))
        if w != 0.0:
            out = out + w * tower[n - 1]
    if not out.is_f(tol=0.0):
        raise DomainError("stabilizer bracket iterates left the f subspace")
    return InfinitesimalAction(dF=out.f, dI=actor.h)


def realize(
    alg: ReductiveAlgebra,
    xi: AlgebraElement,
    point: CosetPoint,
    order: int = DEFAULT_ORDER,
) -> InfinitesimalAction:
    """Infinitesimal action of a general generator xi = xi_h + xi_f."""
    dF = np.zeros(alg.dim_f)
    dI = np.zeros(alg.dim_h)
    if xi.f.size and abs(xi.f).max() > 0.0:
        xf = project_f(xi)
        dF += f_prime_series(alg, xf, point, order).f
        dI += i_prime_series(alg, xf, point, order).h
    if xi.h.size and abs(xi.h).max() > 0.0:
        act = h_action_series(alg, project_h(xi), point, order)
        dF += act.dF
        dI += act.dI
    return InfinitesimalAction(dF=dF, dI=dI)


# ---------------------------------------------------------------------------
# closed forms for so(1,m)
# ---------------------------------------------------------------------------

def _two_s_coth(s: float) -> float:
    """2s coth(2s), regular at s = 0."""
    if s < _SMALL:
        z2 = (2.0 * s) ** 2
        return 1.0 + z2 / 3.0 - z2 * z2 / 45.0
    return 2.0 * s / np.tanh(2.0 * s)


def _tanh_over(s: float) -> float:
    """tanh(s)/s, regular at s = 0."""
    if s < _SMALL:
        s2 = s * s
        return 1.0 - s2 / 3.0 + 2.0 * s2 * s2 / 15.0
    return np.tanh(s) / s


def _compensator_rows(point: CosetPoint, coeff: float) -> np.ndarray:
    """W[a, j] = coeff * (sigma^i d_jk - sigma^k d_ji) over pairs a = (i,k)."""
    m = point.m
    pairs = h_pairs(m)
    W = np.zeros((len(pairs), m))
    for a, (i, k) in enumerate(pairs):
        W[a, k - 1] += coeff * point.sigma[i - 1]
        W[a, i - 1] -= coeff * point.sigma[k - 1]
    return W


def so1m_closed_field(point: CosetPoint) -> tuple[np.ndarray, np.ndarray]:
    """Closed form of the boost action on so(1,m) coset coordinates.

    For the actor F_j at sigma with s = |sigma|:

        dF^k = 2s coth(2s) d_kj + (sigma^k sigma^j / s^2) (1 - 2s coth(2s))
        dI   = (2 tanh(s)/s) sigma^i H_(i,j)-pattern

    Returns
    -------
    (U, W)
        U[k, j] is the k-th component of dF for actor F_{j+1}; W[a, j] the
        a-th h coordinate (pairs lexicographic) for the same actor.  Both are
        smooth at sigma = 0 where U = identity, W = 0.
    """
    m = point.m
    s = point.norm
    a = _two_s_coth(s)
    U = a * np.eye(m)
    if s > 0.0:
        U += np.outer(point.sigma, point.sigma) / (s * s) * (1.0 - a)
    W = _compensator_rows(point, 2.0 * _tanh_over(s))
    return U, W


def so1m_closed_field_variant(point: CosetPoint) -> tuple[np.ndarray, np.ndarray]:
    """Alternative closed-form coefficient profile for the boost action.

    Same shape contract as :func:`so1m_closed_field` but with the profile

        dF^k = (sigma^k sigma^j / s^2)(1 - 2s cosh(2s)/sinh(s))
               + (2s cosh(2s)/sinh(2s)) d_kj
        dI   = (2 / (s tanh(s))) sigma^i H_(i,j)-pattern

    which deviates from the factorization route away from sigma = 0.  The
    verify suite prints the measured deviation; nothing asserts on it.  At
    sigma = 0 exactly, the regularized values U = identity, W = 0 are
    returned.
    """
    m = point.m
    s = point.norm
    if s == 0.0:
        return np.eye(m), np.zeros((len(h_pairs(m)), m))
    diag = 2.0 * s * np.cosh(2.0 * s) / np.sinh(2.0 * s)
    off = 1.0 - 2.0 * s * np.cosh(2.0 * s) / np.sinh(s)
    U = diag * np.eye(m) + np.outer(point.sigma, point.sigma) / (s * s) * off
    W = _compensator_rows(point, 2.0 / (s * np.tanh(s)))
    return U, W
