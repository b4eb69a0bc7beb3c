"""Recurrence engine for Wronskian Hermite polynomials.

The generating recurrence walks the Young lattice: the polynomial for a
partition is assembled from the polynomials of its one-cell removals and its
domino removals, weighted by standard-tableau counts, and the final division
by the partition's own tableau count must be coefficientwise exact.  Results
are memoised in a MemoCache and are always identical to the determinant
construction in hermite.py, which the benchmark and the test suite verify.

Everything here evaluates bottom-up by increasing weight, so no recursion
depth is ever an issue and a cache snapshot never depends on the order in
which partitions were requested.
"""

import json
import os
import random
import tempfile
import time
from fractions import Fraction
from math import factorial

from . import polynomials as poly
from .hermite import hermite_classical, wronskian_h, wronskian_he
from .partitions import (
    add_cell,
    as_partition,
    conjugate,
    count_syt,
    degree_sequence,
    partitions_of,
    remove_cell,
    remove_horizontal_domino,
    remove_vertical_domino,
    two_cell_removals,
)

__all__ = [
    "IntegrityError",
    "MemoCache",
    "he_lambda",
    "h_hat_lambda",
    "h_lambda",
    "top_down_check",
    "plancherel_average",
    "derivative_formula_check",
    "conjugate_relation_check",
    "rectangular_recurrence_check",
    "linear_independence_check",
    "extend_partition",
    "exceptional_index_set",
    "exceptional_hermite",
    "exceptional_hermite_monic",
    "exceptional_recurrence_check",
    "run_bench",
    "bench_csv",
    "atomic_write_text",
]


class IntegrityError(RuntimeError):
    """Two code paths that must agree exactly did not."""


def _canonical_key(lam):
    # weight first, then reverse-lexicographic within a weight
    return (sum(lam), [-p for p in lam])


def atomic_write_text(path, text):
    """Write text to path via a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".whpoly-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class MemoCache:
    """Partition -> integer polynomial table with hit/miss counters.

    Contents are a pure function of which partitions have been computed,
    never of the order they were computed in.  Inserting a value for a
    partition that is already present is allowed only when the values agree.
    """

    def __init__(self):
        self.table = {(): poly.ONE, (1,): poly.X}
        self.hits = 0
        self.misses = 0

    def __contains__(self, lam):
        return lam in self.table

    def __len__(self):
        return len(self.table)

    def get(self, lam):
        value = self.table.get(lam)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, lam, value):
        old = self.table.get(lam)
        if old is not None:
            if old != value:
                raise IntegrityError(f"conflicting cache values for {lam!r}")
            return
        self.table[lam] = value

    def records(self):
        """Entries sorted by (weight, reverse-lexicographic partition)."""
        return sorted(self.table.items(), key=lambda kv: _canonical_key(kv[0]))

    def dumps(self):
        lines = []
        for lam, coeffs in self.records():
            lines.append(
                json.dumps(
                    {"partition": list(lam), "coeffs": [str(c) for c in coeffs]},
                    separators=(",", ":"),
                )
            )
        return "\n".join(lines) + "\n"

    def save(self, path):
        atomic_write_text(path, self.dumps())

    def load(self, path, spot_check=0, seed=0):
        """Merge a saved cache file, optionally re-deriving a random sample
        of entries through the determinant construction."""
        with open(path, "r", encoding="utf-8") as handle:
            loaded = []
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                record = json.loads(line)
                lam = as_partition(record["partition"])
                coeffs = poly.normalize([int(c) for c in record["coeffs"]])
                loaded.append((lam, coeffs))
        for lam, coeffs in loaded:
            self.put(lam, coeffs)
        if spot_check and loaded:
            rng = random.Random(seed)
            sample = rng.sample(sorted(loaded, key=lambda kv: _canonical_key(kv[0])),
                                min(spot_check, len(loaded)))
            for lam, coeffs in sample:
                if wronskian_he(degree_sequence(lam)) != coeffs:
                    raise IntegrityError(f"cache entry for {lam!r} fails re-derivation")
        return len(loaded)


def _recurrence_value(mu, table):
    weight = sum(mu)
    if weight == 0:
        return poly.ONE
    if weight == 1:
        return poly.X
    ones = poly.ZERO
    for nu in remove_cell(mu):
        ones = poly.add(ones, poly.scale(table[nu], count_syt(nu)))
    dominoes = poly.ZERO
    for rho in remove_horizontal_domino(mu):
        dominoes = poly.sub(dominoes, poly.scale(table[rho], count_syt(rho)))
    for rho in remove_vertical_domino(mu):
        dominoes = poly.add(dominoes, poly.scale(table[rho], count_syt(rho)))
    rhs = poly.add(poly.mul_x(ones), poly.scale(dominoes, weight - 1))
    return poly.exact_div(rhs, count_syt(mu))


def he_lambda(lam, cache=None):
    """Monic Wronskian Hermite polynomial of lam via the recurrence.

    Missing dependencies are collected first and evaluated in increasing
    weight, so all one-cell and domino removals are present when needed.
    """
    if cache is None:
        cache = MemoCache()
    lam = as_partition(lam)
    value = cache.get(lam)
    if value is not None:
        return value
    todo = set()
    stack = [lam]
    while stack:
        mu = stack.pop()
        if mu in todo or mu in cache.table:
            continue
        todo.add(mu)
        if sum(mu) >= 2:
            stack.extend(remove_cell(mu))
            stack.extend(two_cell_removals(mu))
    for mu in sorted(todo, key=_canonical_key):
        cache.put(mu, _recurrence_value(mu, cache.table))
    return cache.table[lam]


def h_hat_lambda(lam, cache=None):
    """Monic classical-basis polynomial: 2**(-w/2) * He_lam(sqrt(2) x)."""
    lam = as_partition(lam)
    return poly.dilate_sqrt2(he_lambda(lam, cache), sum(lam))


def h_lambda(lam, cache=None):
    """Classical-basis polynomial with leading coefficient 2**(w + r(r-1)/2).

    Integrality of the result is asserted, not assumed.
    """
    lam = as_partition(lam)
    r = len(lam)
    scaled = poly.scale(h_hat_lambda(lam, cache), 2 ** (sum(lam) + r * (r - 1) // 2))
    return poly.to_int_poly(scaled)


def top_down_check(lam, cache=None):
    """Exact check that x*(w+1)*F*He equals the tableau-weighted sum of the
    polynomials of all partitions covering lam."""
    lam = as_partition(lam)
    lhs = poly.scale(poly.mul_x(he_lambda(lam, cache)), (sum(lam) + 1) * count_syt(lam))
    rhs = poly.ZERO
    for gam in add_cell(lam):
        rhs = poly.add(rhs, poly.scale(he_lambda(gam, cache), count_syt(gam)))
    return lhs == rhs


def plancherel_average(n, cache=None):
    """Plancherel-weighted average of all weight-n polynomials.

    Computed as an exact integer sum divided by n!; the division failing
    would mean the averaging identity itself failed.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    total = poly.ZERO
    for lam in partitions_of(n):
        total = poly.add(total, poly.scale(he_lambda(lam, cache), count_syt(lam) ** 2))
    return poly.exact_div(total, factorial(n))


def derivative_formula_check(lam, cache=None):
    """Exact check of (F*He_lam)' == w * sum of F_mu*He_mu over one-cell
    removals."""
    lam = as_partition(lam)
    lhs = poly.derivative(poly.scale(he_lambda(lam, cache), count_syt(lam)))
    rhs = poly.ZERO
    for mu in remove_cell(lam):
        rhs = poly.add(rhs, poly.scale(he_lambda(mu, cache), count_syt(mu)))
    return lhs == poly.scale(rhs, sum(lam))


def conjugate_relation_check(lam, cache=None):
    """Sign-pattern form of the conjugation relation, no complex numbers.

    Coefficient k of lam must equal (-1)**((w-k)/2) times coefficient k of
    the conjugate, and coefficients off the weight's parity must vanish.
    """
    lam = as_partition(lam)
    w = sum(lam)
    p = he_lambda(lam, cache)
    q = he_lambda(conjugate(lam), cache)
    for k in range(max(len(p), len(q))):
        a = p[k] if k < len(p) else 0
        b = q[k] if k < len(q) else 0
        if (w - k) % 2:
            if a or b:
                return False
        elif a != (-1) ** ((w - k) // 2) * b:
            return False
    return True


def rectangular_recurrence_check(n, r, cache=None):
    """Exact check of the three-term relation for the r-by-n rectangle."""
    if r < 1 or n < 3:
        raise ValueError("need r >= 1 and n >= 3")
    lam = (n,) * r
    rhs = poly.mul_x(he_lambda((n,) * (r - 1) + (n - 1,), cache))
    if r >= 2:
        vert = (n,) * (r - 2) + (n - 1, n - 1)
        rhs = poly.add(
            rhs, poly.scale(he_lambda(vert, cache), Fraction((r - 1) * (n + 1), 2))
        )
    horiz = (n,) * (r - 1) + (n - 2,)
    rhs = poly.sub(
        rhs, poly.scale(he_lambda(horiz, cache), Fraction((r + 1) * (n - 1), 2))
    )
    return he_lambda(lam, cache) == rhs


def linear_independence_check(lam, cache=None):
    """Exact rational rank test for the polynomials of the one-cell removals."""
    lam = as_partition(lam)
    if sum(lam) < 1:
        raise ValueError("need a non-empty partition")
    rows = [he_lambda(mu, cache) for mu in remove_cell(lam)]
    ncols = max(len(row) for row in rows)
    matrix = [
        [Fraction(row[j]) if j < len(row) else Fraction(0) for j in range(ncols)]
        for row in rows
    ]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for i in range(rank + 1, len(matrix)):
            if matrix[i][col]:
                factor = matrix[i][col] / matrix[rank][col]
                for j in range(col, ncols):
                    matrix[i][j] -= factor * matrix[rank][j]
        rank += 1
    return rank == len(rows)


def extend_partition(lam, n):
    """Prepend the row n - weight(lam), the partition indexing the degree-n
    member of lam's exceptional family."""
    lam = as_partition(lam)
    first = n - sum(lam)
    if first < (lam[0] if lam else 0):
        raise ValueError(f"{n} does not extend {lam!r} to a partition")
    if first == 0:
        return lam
    return (first,) + lam


def _in_exceptional_set(lam, n):
    if n < 0 or n < sum(lam) - len(lam):
        return False
    return n - sum(lam) + len(lam) not in set(degree_sequence(lam))


def exceptional_index_set(lam, n_max):
    """All admissible degrees up to n_max for lam's exceptional family.

    The complement within the naturals is finite: at most len(lam) degrees
    are excluded beyond the initial segment.
    """
    lam = as_partition(lam)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return tuple(n for n in range(n_max + 1) if _in_exceptional_set(lam, n))


def exceptional_hermite(lam, n):
    """Exceptional Hermite polynomial of degree n for the family of lam.

    A Wronskian of classical Hermite polynomials at degree n - w + r
    together with the degree sequence of lam; not normalised.
    """
    lam = as_partition(lam)
    if not _in_exceptional_set(lam, n):
        raise ValueError(f"degree {n} is not admissible for {lam!r}")
    m = n - sum(lam) + len(lam)
    polys = [hermite_classical(m)] + [hermite_classical(k) for k in degree_sequence(lam)]
    w = poly.wronskian(polys)
    if poly.degree(w) != n:
        raise IntegrityError(f"exceptional polynomial for {lam!r}, {n} has wrong degree")
    return w


def exceptional_hermite_monic(lam, n):
    """Monic version of exceptional_hermite, with rational coefficients."""
    w = exceptional_hermite(lam, n)
    return poly.scale(w, Fraction(1, poly.leading(w)))


def exceptional_recurrence_check(lam, n):
    """Exact check of the mixed-family recurrence for exceptional Hermite
    polynomials, every term built from the determinant construction.

    Valid when n is admissible for lam and n - weight(lam) >= lam_1 + 2, so
    that degrees n-1 and n-2 are admissible for every family involved.
    """
    lam = as_partition(lam)
    w = sum(lam)
    first = lam[0] if lam else 0
    if not _in_exceptional_set(lam, n) or n - w < first + 2:
        raise ValueError(f"recurrence needs n admissible and n - {w} >= {first} + 2")

    def term(par, deg):
        return poly.scale(
            exceptional_hermite_monic(par, deg), count_syt(extend_partition(par, deg))
        )

    lhs = term(lam, n)
    rhs = poly.mul_x(term(lam, n - 1))
    rhs = poly.sub(rhs, poly.scale(term(lam, n - 2), Fraction(n - 1, 2)))
    ones = poly.ZERO
    for mu in remove_cell(lam):
        ones = poly.add(ones, term(mu, n - 1))
    rhs = poly.add(rhs, poly.mul_x(ones))
    dominoes = poly.ZERO
    for rho in remove_horizontal_domino(lam):
        dominoes = poly.sub(dominoes, term(rho, n - 2))
    for rho in remove_vertical_domino(lam):
        dominoes = poly.add(dominoes, term(rho, n - 2))
    rhs = poly.add(rhs, poly.scale(dominoes, Fraction(n - 1, 2)))
    return lhs == rhs


def _fanout(lam):
    return len(remove_cell(lam)) + len(two_cell_removals(lam))


def _fanout_bound(lam):
    return 2 * min(len(lam), lam[0]) if lam else 0


def run_bench(max_weight):
    """Time the memoised recurrence against the determinant construction.

    One row per weight from 1 through max_weight.  The polynomials from the
    two strategies are compared exactly before any timing is reported, and
    the recurrence fan-out of every partition is checked against the
    2*min(length, first part) bound.
    """
    if max_weight < 2:
        raise ValueError("max_weight must be >= 2")
    rows = []
    cache = MemoCache()
    for weight in range(1, max_weight + 1):
        lams = list(partitions_of(weight))
        hits_before = cache.hits
        start = time.perf_counter()
        recurrence = [he_lambda(lam, cache) for lam in lams]
        mid = time.perf_counter()
        determinant = [wronskian_he(degree_sequence(lam)) for lam in lams]
        end = time.perf_counter()
        for lam, left, right in zip(lams, recurrence, determinant):
            if left != right:
                raise IntegrityError(f"strategies disagree for {lam!r}")
        max_fanout = 0
        for lam in lams:
            fan = _fanout(lam)
            if fan > _fanout_bound(lam):
                raise IntegrityError(f"fan-out bound violated for {lam!r}")
            max_fanout = max(max_fanout, fan)
        rows.append(
            {
                "weight": weight,
                "partitions": len(lams),
                "recurrence_ms": (mid - start) * 1000.0,
                "determinant_ms": (end - mid) * 1000.0,
                "cache_hits": cache.hits - hits_before,
                "max_fanout": max_fanout,
            }
        )
    return rows


def bench_csv(rows):
    lines = ["weight,partitions,recurrence_ms,determinant_ms,cache_hits,max_fanout"]
    for row in rows:
        lines.append(
            f"{row['weight']},{row['partitions']},{row['recurrence_ms']:.3f},"
            f"{row['determinant_ms']:.3f},{row['cache_hits']},{row['max_fanout']}"
        )
    return "\n".join(lines) + "\n"
