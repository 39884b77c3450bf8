"""Exact arithmetic in the ring of Laurent polynomials in t^(1/2).

Everything here is exact: coefficients are rational numbers
(``fractions.Fraction``, aliased ``Rational``), exponents are half-integers
stored by their numerator over the fixed denominator 2, and no floating
point is allowed anywhere.  The ring houses the symmetrized Seifert
determinant ``det(t^(1/2) V - t^(-1/2) V^T)``, the element
``z = t^(1/2) - t^(-1/2)`` and its powers.

>>> print(Z * Z)
t - 2 + t^-1
>>> HalfLaurent({2: 1, 0: -1, -2: 1}).eval_at_one()
Fraction(1, 1)
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


class NonSquareError(ValueError):
    """Determinant of a non-square matrix was requested."""


def _coeff(value):
    """Coerce a coefficient to int or Fraction; floats are rejected."""
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, int):  # bool and int subclasses
        return int(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


def _coeff_div(a, b):
    """Exact a / b for int/Fraction coefficients."""
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
    q = Fraction(a) / Fraction(b)
    return int(q) if q.denominator == 1 else q


class HalfLaurent:
    """A Laurent polynomial in t with half-integer exponents.

    Terms are stored as a map from the exponent numerator k (meaning
    t^(k/2)) to a nonzero rational coefficient.  Two values are equal
    iff their term maps are equal; the zero polynomial is the empty map.

    >>> p = HalfLaurent({1: 1, -1: -1})   # t^(1/2) - t^(-1/2)
    >>> p == Z
    True
    >>> p.eval_at_one()
    Fraction(0, 1)
    >>> p.derivative().eval_at_one()
    Fraction(1, 1)
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if type(k) is not int:
                    raise TypeError("exponent numerators must be int")
                c = _coeff(c)
                if c:
                    clean[k] = c
        # kept in descending exponent order so printing and serialization
        # are deterministic
        self._terms = {k: clean[k] for k in sorted(clean, reverse=True)}

    @classmethod
    def monomial(cls, k, coeff=1):
        """coeff * t^(k/2)."""
        return cls({k: coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, HalfLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: _coeff(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HalfLaurent({0: other})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return HalfLaurent(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HalfLaurent({0: other})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return ZERO
            return HalfLaurent({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = ka + kb
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if type(n) is not int or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval_at_one(self):
        """Sum of all coefficients, since t^(k/2) = 1 at t = 1."""
        return Fraction(sum(self._terms.values()))

    def derivative(self):
        """Formal d/dt: c * t^(k/2) maps to c*(k/2) * t^(k/2 - 1)."""
        out = {}
        for k, c in self._terms.items():
            nc = c * Fraction(k, 2)
            if nc:
                out[k - 2] = _coeff(nc)
        return HalfLaurent(out)

    def second_derivative_at_one(self):
        """Sum of c * (k/2) * (k/2 - 1) over all terms."""
        total = Fraction(0)
        for k, c in self._terms.items():
            total += c * Fraction(k, 2) * Fraction(k - 2, 2)
        return total

    def involution(self):
        """The substitution t -> t^(-1), negating every exponent."""
        return HalfLaurent({-k: c for k, c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms.items():
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 2 else f"t^{exponent_str(k)}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"HalfLaurent({self._terms!r})"


def exponent_str(k):
    """Render the exponent k/2 in lowest terms ('2', '-1', '3/2', ...)."""
    return str(k // 2) if k % 2 == 0 else f"{k}/2"


ZERO = HalfLaurent()
ONE = HalfLaurent({0: 1})
T = HalfLaurent({2: 1})
Z = HalfLaurent({1: 1, -1: -1})  # t^(1/2) - t^(-1/2)


def z_power(k):
    """z^k with z = t^(1/2) - t^(-1/2)."""
    return Z ** k


def _poly_div_exact(a, b):
    """Exact division of dicts with non-negative integer keys, or None.

    Both arguments are coefficient maps of ordinary polynomials in
    u = t^(1/2) with nonzero constant term on b's side not required;
    b must be non-empty.
    """
    rem = dict(a)
    quo = {}
    db = max(b)
    lead = b[db]
    while rem:
        da = max(rem)
        if da < db:
            return None
        c = _coeff_div(rem[da], lead)
        e = da - db
        quo[e] = c
        for k, v in b.items():
            kk = e + k
            s = rem.get(kk, 0) - c * v
            if s:
                rem[kk] = s
            else:
                rem.pop(kk, None)
    return quo


def _laurent_div_exact(a, b):
    """Exact quotient a / b in the half-Laurent ring, or None.

    Units u^k are invertible, so a = q * b is solvable iff the shifted
    honest polynomials divide exactly.
    """
    if b.is_zero():
        raise ZeroDivisionError("division of a polynomial by zero")
    if a.is_zero():
        return ZERO
    va = min(a._terms)
    vb = min(b._terms)
    quo = _poly_div_exact(
        {k - va: c for k, c in a._terms.items()},
        {k - vb: c for k, c in b._terms.items()},
    )
    if quo is None:
        return None
    return HalfLaurent({k + va - vb: c for k, c in quo.items()})


def z_power_quotient(p, k):
    """The exact q with p = z^k * q, or None when z^k does not divide p."""
    if type(k) is not int or k < 0:
        raise ValueError("k must be a non-negative integer")
    if k == 0:
        return p
    if p.is_zero():
        return ZERO
    return _laurent_div_exact(p, z_power(k))


def divides_z_power(p, k):
    """Whether p lies in the ideal generated by z^k.

    >>> divides_z_power(z_power(3) * (T + 3), 3)
    True
    >>> divides_z_power(HalfLaurent({2: 1, 0: -1, -2: 1}), 1)
    False
    """
    return z_power_quotient(p, k) is not None


def _as_poly(x):
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, (int, Fraction)):
        return HalfLaurent({0: x})
    raise TypeError(f"matrix entries must be exact, got {type(x).__name__}")


class RingMatrix:
    """Dense matrix over the half-Laurent ring."""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("all rows must have the same length")
            entries.extend(_as_poly(x) for x in r)
        self._rows = nrows
        self._cols = ncols
        self._entries = tuple(entries)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    def entry(self, i, j):
        return self._entries[i * self._cols + j]

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self._rows, self._cols, self._entries) == (
            other._rows,
            other._cols,
            other._entries,
        )

    def __mul__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise ValueError("inner dimensions do not match")
        out = []
        for i in range(self._rows):
            row = []
            for j in range(other._cols):
                acc = ZERO
                for k in range(self._cols):
                    acc = acc + self.entry(i, k) * other.entry(k, j)
                row.append(acc)
            out.append(row)
        return RingMatrix(out)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self._cols))
            for i in range(self._rows)
        )
        return f"RingMatrix[{self._rows}x{self._cols}]({body})"


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination.

    The 0x0 matrix has determinant 1 by the empty-product convention.
    Intermediate divisions are exact in the half-Laurent ring, which keeps
    coefficient growth polynomial instead of exponential.

    >>> print(determinant(RingMatrix.identity(3)))
    1
    >>> print(determinant(RingMatrix([])))
    1
    """
    if m.rows != m.cols:
        raise NonSquareError(f"matrix is {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return ONE
    a = [[m.entry(i, j) for j in range(n)] for i in range(n)]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return ZERO
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                q = _laurent_div_exact(num, prev)
                if q is None:
                    raise ArithmeticError("inexact division in Bareiss elimination")
                a[i][j] = q
            a[i][k] = ZERO
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det
