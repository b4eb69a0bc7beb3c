"""Integer partitions and the Young-lattice combinatorics built on them.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the partition of 0.  Plain tuples keep equality, hashing and
JSON round trips trivial, so every function here takes and returns tuples.

Cell removals and cell additions are enumerated by ascending row index of
the touched cell, which fixes a deterministic output order; any operation
that would produce a zero-length row drops it.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

__all__ = [
    "as_partition",
    "conjugate",
    "degree_sequence",
    "vandermonde",
    "count_syt",
    "count_syt_hook",
    "remove_cell",
    "remove_horizontal_domino",
    "remove_vertical_domino",
    "two_cell_removals",
    "removal_sign",
    "add_cell",
    "add_horizontal_domino",
    "add_vertical_domino",
    "siblings",
    "plancherel_weight",
    "partitions_of",
    "partitions_up_to",
    "ascii_diagram",
]


def as_partition(parts):
    """Canonicalise an iterable of row lengths into a partition tuple.

    Trailing zeros are dropped; anything else that is not weakly decreasing
    and positive raises ValueError.
    """
    lam = []
    for p in parts:
        q = int(p)
        if q != p:
            raise ValueError(f"parts must be integers, got {parts!r}")
        lam.append(q)
    while lam and lam[-1] == 0:
        lam.pop()
    for i, part in enumerate(lam):
        if part <= 0:
            raise ValueError(f"parts must be positive, got {parts!r}")
        if i and lam[i - 1] < part:
            raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
    return tuple(lam)


def conjugate(lam):
    """Reflect the Young diagram across its main diagonal."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def degree_sequence(lam):
    """Strictly decreasing tuple with entry i equal to lam[i] + len(lam) - 1 - i."""
    r = len(lam)
    return tuple(p + r - 1 - i for i, p in enumerate(lam))


def vandermonde(entries):
    """Product of all pairwise differences, later entry minus earlier one."""
    entries = tuple(entries)
    out = 1
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            out *= entries[j] - entries[i]
    return out


@lru_cache(maxsize=None)
def count_syt(lam):
    """Number of standard Young tableaux, by the factorial-Vandermonde formula."""
    seq = degree_sequence(lam)
    r = len(seq)
    num = (-1) ** (r * (r - 1) // 2) * factorial(sum(lam)) * vandermonde(seq)
    den = 1
    for n in seq:
        den *= factorial(n)
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"tableau count is not an integer for {lam!r}")
    return q


@lru_cache(maxsize=None)
def count_syt_hook(lam):
    """Number of standard Young tableaux by the hook-length product.

    Independent of count_syt; kept as a second code path for cross-checks.
    """
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(sum(lam)) // hooks


def remove_cell(lam):
    """Partitions reachable by deleting one corner cell, by ascending row."""
    out = []
    r = len(lam)
    for i in range(r):
        below = lam[i + 1] if i + 1 < r else 0
        if lam[i] - 1 >= below:
            mu = lam[:i] + (lam[i] - 1,) + lam[i + 1:]
            out.append(mu if mu[-1] else mu[:-1])
    return tuple(out)


def remove_horizontal_domino(lam):
    """Partitions reachable by deleting two adjacent cells from one row."""
    out = []
    r = len(lam)
    for i in range(r):
        below = lam[i + 1] if i + 1 < r else 0
        if lam[i] - 2 >= below:
            rho = lam[:i] + (lam[i] - 2,) + lam[i + 1:]
            out.append(rho if rho[-1] else rho[:-1])
    return tuple(out)


def remove_vertical_domino(lam):
    """Partitions reachable by deleting two vertically adjacent cells."""
    out = []
    r = len(lam)
    for i in range(r - 1):
        if lam[i] != lam[i + 1]:
            continue
        below = lam[i + 2] if i + 2 < r else 0
        if lam[i + 1] - 1 >= below:
            rho = list(lam)
            rho[i] -= 1
            rho[i + 1] -= 1
            out.append(tuple(p for p in rho if p))
    return tuple(out)


def two_cell_removals(lam):
    """Horizontal then vertical domino removals, each in row order."""
    return remove_horizontal_domino(lam) + remove_vertical_domino(lam)


def removal_sign(rho, lam):
    """-1 if rho is a horizontal domino removal of lam, +1 if vertical.

    Raises ValueError when rho is not a domino removal of lam at all.
    """
    if rho in remove_horizontal_domino(lam):
        return -1
    if rho in remove_vertical_domino(lam):
        return 1
    raise ValueError(f"{rho!r} is not a two-cell removal of {lam!r}")


def add_cell(lam):
    """Partitions covering lam in the Young lattice, by ascending row."""
    out = []
    r = len(lam)
    for i in range(r):
        if i == 0 or lam[i] + 1 <= lam[i - 1]:
            out.append(lam[:i] + (lam[i] + 1,) + lam[i + 1:])
    out.append(lam + (1,))
    return tuple(out)


def add_horizontal_domino(lam):
    """Partitions from which lam is a horizontal domino removal."""
    out = []
    r = len(lam)
    for i in range(r):
        if i == 0 or lam[i] + 2 <= lam[i - 1]:
            out.append(lam[:i] + (lam[i] + 2,) + lam[i + 1:])
    if r == 0 or lam[-1] >= 2:
        out.append(lam + (2,))
    return tuple(out)


def add_vertical_domino(lam):
    """Partitions from which lam is a vertical domino removal."""
    out = []
    r = len(lam)
    for i in range(r - 1):
        if lam[i] != lam[i + 1]:
            continue
        if i and lam[i] + 1 > lam[i - 1]:
            continue
        gam = list(lam)
        gam[i] += 1
        gam[i + 1] += 1
        out.append(tuple(gam))
    out.append(lam + (1, 1))
    return tuple(out)


def siblings(lam):
    """Same-weight partitions other than lam that share a one-cell removal."""
    out = set()
    for mu in remove_cell(lam):
        for gam in add_cell(mu):
            if gam != lam:
                out.add(gam)
    return tuple(sorted(out, reverse=True))


def plancherel_weight(lam):
    """Exact probability of lam under the Plancherel measure on its weight."""
    return Fraction(count_syt(lam) ** 2, factorial(sum(lam)))


def partitions_of(n, max_part=None):
    """Yield all partitions of n in reverse-lexicographic order."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for k in range(max_part, 0, -1):
        for rest in partitions_of(n - k, k):
            yield (k,) + rest


def partitions_up_to(n):
    """Yield all partitions of every weight from 0 through n."""
    for w in range(n + 1):
        yield from partitions_of(w)


def ascii_diagram(lam, cell="#"):
    """Young diagram of lam, one text line per row."""
    return "\n".join(cell * p for p in lam)
