"""Euclidean Clifford algebra Cl(m) on an exact blade basis.

Generators gamma_1 .. gamma_m satisfy

    gamma_i gamma_k + gamma_k gamma_i = 2 delta_ik,

i.e. every generator squares to +1.  A multivector is stored sparsely as a
map from a strictly increasing index tuple (the blade gamma_{i1}...gamma_{ik},
i1 < ... < ik) to its real coefficient.  The empty tuple is the scalar blade.

The matrix representation returned by :func:`matrix_rep` is an independent
check on the symbolic product: it is built from fixed 2x2 seeds by tensor
doubling, never from :func:`blade_product`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import DimensionError

__all__ = [
    "CliffordSpace",
    "Multivector",
    "blade_product",
    "commutator",
    "matrix_rep",
    "multivector_matrix",
    "exp_vector",
]

Blade = tuple[int, ...]

# below this norm the sinh(s)/s factor of exp_vector switches to its Taylor
# polynomial; the degree-4 truncation is exact to well under 1e-12 there
_SMALL_NORM = 1e-6


@dataclass(frozen=True)
class CliffordSpace:
    """The algebra Cl(m) over R^m with a positive definite form."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DimensionError(f"need m >= 1, got {self.m}")

    @property
    def dim(self) -> int:
        """Number of basis blades, 2**m."""
        return 2**self.m

    def blades(self) -> Iterator[Blade]:
        """All index tuples, ordered by grade then lexicographically."""
        for r in range(self.m + 1):
            yield from itertools.combinations(range(1, self.m + 1), r)

    def check_blade(self, idx: Iterable[int]) -> Blade:
        t = tuple(idx)
        if list(t) != sorted(set(t)):
            raise DimensionError(f"blade indices must be strictly increasing: {t}")
        if t and (t[0] < 1 or t[-1] > self.m):
            raise DimensionError(f"blade indices must lie in 1..{self.m}: {t}")
        return t


def _mul_blades(ea: Blade, eb: Blade) -> tuple[Blade, int]:
    """Product of two basis blades: resulting blade and sign.

    Indices of eb are merged into ea one at a time; each transposition past a
    larger index flips the sign, and a repeated index contracts to +1.
    """
    sign = 1
    out = list(ea)
    for x in eb:
        pos = len(out)
        while pos > 0 and out[pos - 1] > x:
            pos -= 1
        if (len(out) - pos) % 2:
            sign = -sign
        if pos > 0 and out[pos - 1] == x:
            out.pop(pos - 1)
        else:
            out.insert(pos, x)
    return tuple(out), sign


class Multivector:
    """Sparse real multivector of Cl(m).

    Parameters
    ----------
    space : CliffordSpace
    coeffs : mapping from index tuple to float, optional
        Entries with coefficient exactly 0.0 are dropped.
    """

    __slots__ = ("space", "_c")

    def __init__(self, space: CliffordSpace, coeffs: Mapping[Blade, float] | None = None):
        self.space = space
        c: dict[Blade, float] = {}
        if coeffs:
            for idx, val in coeffs.items():
                t = space.check_blade(idx)
                v = float(val)
                if v != 0.0:
                    c[t] = c.get(t, 0.0) + v
                    if c[t] == 0.0:
                        del c[t]
        self._c = c

    # ------------------------------------------------------------- factories
    @classmethod
    def scalar(cls, space: CliffordSpace, a: float) -> "Multivector":
        return cls(space, {(): a})

    @classmethod
    def vector(cls, space: CliffordSpace, sigma) -> "Multivector":
        """The grade-1 element sigma^k gamma_k."""
        sigma = np.asarray(sigma, dtype=float)
        if sigma.shape != (space.m,):
            raise DimensionError(f"vector needs length {space.m}, got {sigma.shape}")
        return cls(space, {(k,): sigma[k - 1] for k in range(1, space.m + 1)})

    @classmethod
    def blade(cls, space: CliffordSpace, idx: Iterable[int], coeff: float = 1.0) -> "Multivector":
        return cls(space, {tuple(idx): coeff})

    # ------------------------------------------------------------- inspection
    def coeff(self, idx: Iterable[int]) -> float:
        return self._c.get(self.space.check_blade(idx), 0.0)

    def items(self) -> Iterator[tuple[Blade, float]]:
        yield from sorted(self._c.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def grade(self, k: int) -> "Multivector":
        return Multivector(self.space, {t: v for t, v in self._c.items() if len(t) == k})

    def grades(self) -> set[int]:
        return {len(t) for t in self._c}

    def vector_part(self) -> np.ndarray:
        out = np.zeros(self.space.m)
        for k in range(1, self.space.m + 1):
            out[k - 1] = self._c.get((k,), 0.0)
        return out

    def max_abs(self) -> float:
        return max((abs(v) for v in self._c.values()), default=0.0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        if not self._c:
            return "Multivector(0)"
        parts = [f"{v:+g}*e{''.join(map(str, t)) if t else '0'}" for t, v in self.items()]
        return f"Multivector({' '.join(parts)})"

    # ------------------------------------------------------------- arithmetic
    def _merge(self, other: "Multivector", s: float) -> "Multivector":
        if other.space != self.space:
            raise DimensionError("multivectors live in different spaces")
        c = dict(self._c)
        for t, v in other._c.items():
            c[t] = c.get(t, 0.0) + s * v
            if c[t] == 0.0:
                del c[t]
        out = Multivector(self.space)
        out._c.update(c)
        return out

    def __add__(self, other: "Multivector") -> "Multivector":
        return self._merge(other, 1.0)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self._merge(other, -1.0)

    def __neg__(self) -> "Multivector":
        return self.scale(-1.0)

    def scale(self, a: float) -> "Multivector":
        out = Multivector(self.space)
        if a != 0.0:
            out._c.update({t: a * v for t, v in self._c.items()})
        return out

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return blade_product(self, other)
        return self.scale(float(other))

    def __rmul__(self, other):
        return self.scale(float(other))

    def allclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= tol

    # ------------------------------------------------------------- io
    def to_json_dict(self) -> dict:
        """Serialize as {"blades": [{"indices": [...], "coeff": c}, ...]}."""
        return {
            "blades": [
                {"indices": list(t), "coeff": v} for t, v in self.items()
            ]
        }

    @classmethod
    def from_json_dict(cls, space: CliffordSpace, data: Mapping) -> "Multivector":
        try:
            entries = data["blades"]
        except (KeyError, TypeError):
            raise DimensionError("multivector JSON needs a 'blades' list") from None
        seen: set[Blade] = set()
        c: dict[Blade, float] = {}
        for e in entries:
            idx = e["indices"]
            if list(idx) != sorted(idx):
                raise DimensionError(f"unsorted blade index list: {idx}")
            t = space.check_blade(idx)
            if t in seen:
                raise DimensionError(f"duplicate blade entry: {list(t)}")
            seen.add(t)
            c[t] = float(e["coeff"])
        return cls(space, c)


def blade_product(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product of two multivectors of the same space."""
    if a.space != b.space:
        raise DimensionError("multivectors live in different spaces")
    c: dict[Blade, float] = {}
    for ta, va in a._c.items():
        for tb, vb in b._c.items():
            t, s = _mul_blades(ta, tb)
            c[t] = c.get(t, 0.0) + s * va * vb
    out = Multivector(a.space)
    out._c.update({t: v for t, v in c.items() if v != 0.0})
    return out


def commutator(a: Multivector, b: Multivector) -> Multivector:
    """[a, b] = a*b - b*a."""
    return blade_product(a, b) - blade_product(b, a)


# ---------------------------------------------------------------------------
# matrix representation (independent product oracle)
# ---------------------------------------------------------------------------

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])


@lru_cache(maxsize=None)
def _gamma_family(m: int) -> tuple[np.ndarray, ...]:
    if m == 1:
        fam = [_SZ]
    elif m == 2:
        fam = [_SX, _SZ]
    else:
        prev = _gamma_family(m - 1)
        n = prev[0].shape[0]
        fam = [np.kron(_SX, g) for g in prev]
        fam.append(np.kron(_SZ, np.eye(n)))
    for g in fam:
        g.setflags(write=False)
    return tuple(fam)


def matrix_rep(space: CliffordSpace) -> tuple[np.ndarray, ...]:
    """Real faithful generator matrices with entries in {0, -1, +1}.

    Sizes are 2 for m <= 2 and 2**(m-1) for larger m; a representation of Cl(m)
    with all generators squaring to +1 cannot be smaller over the reals once
    m >= 4, and these sizes keep it faithful for every m (checked by the rank
    of the blade images in the test suite).

    Returns
    -------
    tuple of (d, d) ndarrays, read-only
        matrices G_1 .. G_m with G_i G_k + G_k G_i = 2 delta_ik exactly.
    """
    return _gamma_family(space.m)


@lru_cache(maxsize=None)
def _blade_matrices(m: int) -> dict[Blade, np.ndarray]:
    fam = _gamma_family(m)
    n = fam[0].shape[0]
    out: dict[Blade, np.ndarray] = {}
    for t in CliffordSpace(m).blades():
        P = np.eye(n)
        for i in t:
            P = P @ fam[i - 1]
        P.setflags(write=False)
        out[t] = P
    return out


def multivector_matrix(a: Multivector) -> np.ndarray:
    """Image of a multivector under the matrix representation."""
    table = _blade_matrices(a.space.m)
    n = next(iter(table.values())).shape[0]
    out = np.zeros((n, n))
    for t, v in a._c.items():
        out += v * table[t]
    return out


# ---------------------------------------------------------------------------
# closed-form exponential of a grade-1 element
# ---------------------------------------------------------------------------

def exp_vector(space: CliffordSpace, sigma) -> Multivector:
    """exp(sigma^k gamma_k) = cosh(s) + (sinh(s)/s) sigma^k gamma_k, s = |sigma|.

    A grade-1 element squares to the scalar s^2, so the exponential closes on
    the scalar + vector subspace.  The sinh(s)/s factor is evaluated by a
    Taylor polynomial below s = 1e-6, which makes s = 0 regular.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (space.m,):
        raise DimensionError(f"sigma needs length {space.m}, got {sigma.shape}")
    s = float(np.linalg.norm(sigma))
    if s < _SMALL_NORM:
        s2 = s * s
        c = 1.0 + s2 / 2.0 + s2 * s2 / 24.0
        sh = 1.0 + s2 / 6.0 + s2 * s2 / 120.0
    else:
        c = np.cosh(s)
        sh = np.sinh(s) / s
    out = Multivector.scalar(space, c)
    return out + Multivector.vector(space, sh * sigma)
