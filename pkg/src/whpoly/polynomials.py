"""Dense exact univariate polynomial arithmetic.

A polynomial is a tuple of coefficients in ascending degree with no trailing
zero; the zero polynomial is the empty tuple.  Coefficients are plain Python
ints for integer polynomials and fractions.Fraction for rational ones, and
every operation below works for either because it only uses ring arithmetic.

Nothing here ever rounds: divisions that must be exact raise
DivisibilityError when they are not, which turns upstream bugs into loud
failures instead of corrupted values.
"""

from fractions import Fraction

ZERO = ()
ONE = (1,)
X = (0, 1)


class DivisibilityError(ArithmeticError):
    """An exact division left a remainder."""


def normalize(coeffs):
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def degree(p):
    """Degree of p, with the zero polynomial reported as -1."""
    return len(p) - 1


def leading(p):
    return p[-1] if p else 0


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    """Multiply every coefficient by the scalar c."""
    if not c:
        return ZERO
    return tuple(a * c for a in p)


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def mul_x(p):
    """Multiply by the variable: shift all coefficients up one degree."""
    return (0,) + p if p else ZERO


def derivative(p):
    return tuple(i * c for i, c in enumerate(p))[1:]


def evaluate(p, x):
    """Evaluate at a scalar (exact for int or Fraction arguments)."""
    out = 0
    for c in reversed(p):
        out = out * x + c
    return out


def exact_div(p, d):
    """Divide every coefficient by the scalar d, requiring exactness."""
    if not d:
        raise ZeroDivisionError("exact_div by zero")
    out = []
    for c in p:
        q, rem = divmod(c, d)
        if rem:
            raise DivisibilityError(f"coefficient {c} is not divisible by {d}")
        out.append(q)
    return tuple(out)


def exact_div_poly(num, den):
    """Polynomial long division when den divides num exactly in the ring."""
    if not den:
        raise ZeroDivisionError("exact_div_poly by the zero polynomial")
    if not num:
        return ZERO
    if len(num) < len(den):
        raise DivisibilityError("quotient would not be a polynomial")
    rem = list(num)
    dlead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(den) - 1]
        if not c:
            continue
        qc, r = divmod(c, dlead)
        if r:
            raise DivisibilityError("leading coefficient does not divide")
        quot[k] = qc
        for i, dc in enumerate(den):
            rem[k + i] -= qc * dc
    if any(rem):
        raise DivisibilityError("division left a remainder")
    return normalize(quot)


def parity(p):
    """'even', 'odd', or 'neither'; the zero polynomial counts as even."""
    if all(not c for c in p[1::2]):
        return "even"
    if all(not c for c in p[0::2]):
        return "odd"
    return "neither"


def dilate_sqrt2(p, weight):
    """Map p(x) to 2**(-weight/2) * p(sqrt(2)*x), exactly.

    Requires every nonzero coefficient to sit at a degree of the same parity
    as weight, so each coefficient picks up an integer power of two and the
    result is a dyadic rational polynomial.
    """
    out = []
    for k, c in enumerate(p):
        if not c:
            out.append(Fraction(0))
            continue
        if (k - weight) % 2:
            raise ValueError(f"degree-{k} coefficient breaks parity {weight % 2}")
        out.append(Fraction(c) * Fraction(2) ** ((k - weight) // 2))
    return normalize(out)


def undilate_sqrt2(p, weight):
    """Inverse of dilate_sqrt2; returns an integer polynomial."""
    out = []
    for k, c in enumerate(p):
        if not c:
            out.append(0)
            continue
        if (k - weight) % 2:
            raise ValueError(f"degree-{k} coefficient breaks parity {weight % 2}")
        out.append(Fraction(c) * Fraction(2) ** ((weight - k) // 2))
    return to_int_poly(out)


def to_int_poly(p):
    """Convert rational coefficients to ints, requiring all denominators 1."""
    out = []
    for c in p:
        frac = Fraction(c)
        if frac.denominator != 1:
            raise DivisibilityError(f"coefficient {c} is not an integer")
        out.append(frac.numerator)
    return normalize(out)


def det_cofactor(mat):
    """Determinant by first-row cofactor expansion."""
    n = len(mat)
    if n == 0:
        return ONE
    if n == 1:
        return normalize(mat[0][0])
    total = ZERO
    for j in range(n):
        c = normalize(mat[0][j])
        if not c:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mul(c, det_cofactor(minor))
        total = add(total, term) if j % 2 == 0 else sub(total, term)
    return total


def det_bareiss(mat):
    """Determinant by fraction-free elimination with exact division."""
    n = len(mat)
    if n == 0:
        return ONE
    m = [[normalize(entry) for entry in row] for row in mat]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(pivot, m[i][j]), mul(m[i][k], m[k][j]))
                m[i][j] = exact_div_poly(num, prev) if num else ZERO
            m[i][k] = ZERO
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign > 0 else neg(result)


def determinant(mat):
    """Exact determinant of a square matrix of polynomials.

    Small matrices are expanded by cofactors; larger ones go through the
    fraction-free elimination.  Both paths give identical results.
    """
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n <= 4:
        return det_cofactor(mat)
    return det_bareiss(mat)


def _permutation_sign(order):
    sign = 1
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                sign = -sign
    return sign


def wronskian(polys):
    """Wronskian determinant of a list of polynomials.

    Row i of the underlying matrix holds the i-th derivatives, computed by
    repeated differentiation of each input.  Columns are internally sorted
    by ascending degree (determinants alternate under column swaps, so only
    a sign is tracked); this keeps the elimination intermediates small.
    """
    r = len(polys)
    if r == 0:
        return ONE
    polys = [normalize(p) for p in polys]
    order = sorted(range(r), key=lambda j: len(polys[j]))
    cols = []
    for j in order:
        col = [polys[j]]
        for _ in range(r - 1):
            col.append(derivative(col[-1]))
        cols.append(col)
    rows = [[cols[j][i] for j in range(r)] for i in range(r)]
    det = determinant(rows)
    return det if _permutation_sign(order) > 0 else neg(det)


def coeff_to_str(c):
    """Decimal string for integers, 'num/den' for non-integer rationals."""
    frac = Fraction(c)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def coeff_from_str(s):
    if "/" in s:
        return Fraction(s)
    return int(s)


def coeffs_to_json(p):
    return [coeff_to_str(c) for c in p]


def coeffs_from_json(items):
    return normalize([coeff_from_str(s) for s in items])


def format_poly(p, var="x"):
    """Human-readable rendering, highest degree first."""
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = coeff_to_str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{coeff_to_str(mag)}*{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms)
