"""Exact rational coefficient table for the iterated-bracket expansions.

The numbers l_1, l_2, ... are defined by the triangular recursion

    n / (n+1)!  =  sum_{i=1}^{n}  l_i / (n+1-i)!

solved top-down in exact rational arithmetic.  They satisfy l_n * n! = B_n,
the Bernoulli numbers in the convention with B_1 = +1/2, which is what the
independent Akiyama-Tanigawa routine below computes as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["CoeffTable", "l_coeffs", "bernoulli_numbers", "recursion_residuals"]


@dataclass(frozen=True)
class CoeffTable:
    """Table of the rational coefficients l_1 .. l_N."""

    values: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def l(self, n: int) -> Fraction:
        """Return l_n (1-based)."""
        if not 1 <= n <= len(self.values):
            raise IndexError(f"l_{n} not tabulated (have 1..{len(self.values)})")
        return self.values[n - 1]

    def as_floats(self) -> list[float]:
        return [float(v) for v in self.values]


def l_coeffs(N: int) -> CoeffTable:
    """Solve the recursion for l_1 .. l_N exactly.

    Parameters
    ----------
    N : int
        Number of coefficients, N >= 1.

    Returns
    -------
    CoeffTable
        l_1 = 1/2, l_2 = 1/12, l_3 = 0, l_4 = -1/720, ...
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    out: list[Fraction] = []
    for n in range(1, N + 1):
        s = Fraction(n, math.factorial(n + 1))
        for i in range(1, n):
            s -= out[i - 1] / math.factorial(n + 1 - i)
        out.append(s)
    return CoeffTable(tuple(out))


def recursion_residuals(table: CoeffTable) -> list[Fraction]:
    """Re-substitute the table into its recursion; every entry must be 0."""
    res = []
    for n in range(1, len(table) + 1):
        s = sum(
            (table.l(i) / math.factorial(n + 1 - i) for i in range(1, n + 1)),
            Fraction(0),
        )
        res.append(s - Fraction(n, math.factorial(n + 1)))
    return res


def bernoulli_numbers(N: int) -> list[Fraction]:
    """Bernoulli numbers B_0 .. B_N with B_1 = +1/2, by Akiyama-Tanigawa.

    Independent of l_coeffs: works row-wise on the sequence 1/(j+1) and never
    touches the triangular recursion above.
    """
    if N < 0:
        raise ValueError(f"need N >= 0, got {N}")
    out: list[Fraction] = []
    row: list[Fraction] = []
    for n in range(N + 1):
        row.append(Fraction(1, n + 1))
        for j in range(n, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out
