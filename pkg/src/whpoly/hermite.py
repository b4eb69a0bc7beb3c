"""Hermite polynomials and their Wronskian determinants.

This module is the ground-truth side of the package: polynomials indexed by
a degree sequence are built as literal Wronskian determinants (columns
differentiated term by term, determinant evaluated exactly) so that they
share no logic with the partition recurrence in engine.py beyond basic
polynomial arithmetic.

Two Hermite families appear.  ``hermite_prob`` is the monic family
orthogonal for the standard normal weight; ``hermite_classical`` is the
physicists' family with leading coefficient 2**n.  The printed three-term
recurrence for the classical family circulates in an inconsistent form; the
one used here is fixed by requiring the exact rescaling
H_n(x) = 2**(n/2) * He_n(sqrt(2) x), which gives
H_n = 2x*H_{n-1} - 2(n-1)*H_{n-2}.
"""

from fractions import Fraction
from math import factorial

from . import polynomials as poly
from .partitions import vandermonde

__all__ = [
    "hermite_prob",
    "hermite_classical",
    "wronskian_he",
    "wronskian_h",
    "a_value",
    "lower_entry",
    "phi",
    "phi_reduce_zero",
    "phi_recurrence_check",
]

_he_table = [(1,), (0, 1)]
_h_table = [(1,), (0, 2)]


def hermite_prob(n):
    """Monic Hermite polynomial of degree n; zero for negative n.

    He_0 = 1, He_1 = x, He_n = x*He_{n-1} - (n-1)*He_{n-2}.  The table is
    append-only, so concurrent readers always see finished values.
    """
    if n < 0:
        return poly.ZERO
    while len(_he_table) <= n:
        m = len(_he_table)
        _he_table.append(
            poly.sub(poly.mul_x(_he_table[m - 1]), poly.scale(_he_table[m - 2], m - 1))
        )
    return _he_table[n]


def hermite_classical(n):
    """Physicists' Hermite polynomial of degree n; zero for negative n."""
    if n < 0:
        return poly.ZERO
    while len(_h_table) <= n:
        m = len(_h_table)
        _h_table.append(
            poly.sub(
                poly.scale(poly.mul_x(_h_table[m - 1]), 2),
                poly.scale(_h_table[m - 2], 2 * (m - 1)),
            )
        )
    return _h_table[n]


def _check_degree_sequence(entries):
    for i, n in enumerate(entries):
        if n < 1:
            raise ValueError(f"degree sequence entries must be >= 1: {entries!r}")
        if i and entries[i - 1] <= n:
            raise ValueError(f"degree sequence must strictly decrease: {entries!r}")


def wronskian_he(entries):
    """Monic Wronskian Hermite polynomial for a degree sequence.

    The Wronskian of the monic Hermite polynomials at the given degrees is
    divided by the Vandermonde product of the degrees; the division must be
    coefficientwise exact, anything else raises DivisibilityError.
    """
    entries = tuple(entries)
    _check_degree_sequence(entries)
    w = poly.wronskian([hermite_prob(n) for n in entries])
    return poly.exact_div(w, vandermonde(entries))


def wronskian_h(entries):
    """Wronskian Hermite polynomial in the classical basis.

    Leading coefficient is 2**(weight + r(r-1)/2) where weight is the sum of
    the underlying partition and r its length.
    """
    entries = tuple(entries)
    _check_degree_sequence(entries)
    w = poly.wronskian([hermite_classical(n) for n in entries])
    return poly.exact_div(w, vandermonde(entries))


def a_value(entries):
    """Sum of the entries minus r(r-1)/2; the weight when the input is a
    degree sequence."""
    r = len(entries)
    return sum(entries) - r * (r - 1) // 2


def lower_entry(entries, j):
    """Copy of the sequence with entry j decreased by one."""
    return entries[:j] + (entries[j] - 1,) + entries[j + 1:]


def phi(entries):
    """Tableau-count-weighted Wronskian Hermite extension to integer tuples.

    For the degree sequence of a partition this equals the tableau count
    times the monic Wronskian Hermite polynomial; for arbitrary integer
    tuples it is antisymmetric, vanishes when entries repeat or go negative,
    and is only defined when a_value(entries) >= 0.
    """
    entries = tuple(entries)
    r = len(entries)
    a = a_value(entries)
    if a < 0:
        raise ValueError(f"a_value must be >= 0, got {a} for {entries!r}")
    if any(n < 0 for n in entries):
        return poly.ZERO
    w = poly.wronskian([hermite_prob(n) for n in entries])
    if not w:
        return poly.ZERO
    den = 1
    for n in entries:
        den *= factorial(n)
    prefactor = Fraction((-1) ** (r * (r - 1) // 2) * factorial(a), den)
    return poly.scale(w, prefactor)


def phi_reduce_zero(entries):
    """Drop a trailing zero entry and shift the rest down by one.

    phi of the input equals phi of the output; the equality is exercised in
    the test suite rather than assumed here.
    """
    entries = tuple(entries)
    if not entries or entries[-1] != 0:
        raise ValueError(f"last entry must be 0, got {entries!r}")
    return tuple(n - 1 for n in entries[:-1])


def phi_recurrence_check(entries):
    """Exact check of the one-and-two-step recurrence for phi.

    phi[n] = x * sum_j phi[n with entry j lowered]
             - (a-1) * sum_j phi[n with entry j lowered twice]
    Requires a_value(entries) >= 2 so every term on the right is defined.
    """
    entries = tuple(entries)
    a = a_value(entries)
    if a < 2:
        raise ValueError(f"a_value must be >= 2, got {a} for {entries!r}")
    once = poly.ZERO
    twice = poly.ZERO
    for j in range(len(entries)):
        nj = lower_entry(entries, j)
        once = poly.add(once, phi(nj))
        twice = poly.add(twice, phi(lower_entry(nj, j)))
    rhs = poly.sub(poly.mul_x(once), poly.scale(twice, a - 1))
    return phi(entries) == rhs
