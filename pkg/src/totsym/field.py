"""Exact scalar arithmetic in the degree-8 number field Q(i, sqrt2, sqrt3).

Every scalar is stored as an 8-tuple of rationals over the fixed ordered
basis

    1, sqrt2, sqrt3, sqrt6, i, i*sqrt2, i*sqrt3, i*sqrt6

and all operations are exact.  This field is closed under every operation
the rest of the package performs (the sixth root of unity zeta, the
quadratic root mu of 3x^2 + 2x + 3, and all matrix entries that appear in
the catalog live here), so no floating point ever enters.
"""

from __future__ import annotations

from fractions import Fraction

BASIS_LABELS = ("1", "sqrt2", "sqrt3", "sqrt6", "i", "i*sqrt2", "i*sqrt3", "i*sqrt6")

_F0 = Fraction(0)
_F1 = Fraction(1)

# Basis index = 4*imag + r with r indexing (1, sqrt2, sqrt3, sqrt6).  The
# real part of the table: sqrt2^a * sqrt3^b with exponents mod 2, carrying
# 2s and 3s out as integer coefficients.
_SQ_EXP = ((0, 0), (1, 0), (0, 1), (1, 1))
_SQ_IDX = {v: k for k, v in enumerate(_SQ_EXP)}


def _build_mul_table():
    table = [[None] * 8 for _ in range(8)]
    for i in range(8):
        im1, r1 = divmod(i, 4)
        a1, b1 = _SQ_EXP[r1]
        for j in range(8):
            im2, r2 = divmod(j, 4)
            a2, b2 = _SQ_EXP[r2]
            coef = (2 ** ((a1 + a2) // 2)) * (3 ** ((b1 + b2) // 2))
            if im1 and im2:
                coef = -coef
            idx = 4 * ((im1 + im2) % 2) + _SQ_IDX[((a1 + a2) % 2, (b1 + b2) % 2)]
            table[i][j] = (coef, idx)
    return tuple(tuple(row) for row in table)


_MUL = _build_mul_table()


class NotRepresentable(ValueError):
    """A requested square root does not exist inside the field."""


class Scalar:
    """An element of Q(i, sqrt2, sqrt3), kept as 8 exact rational coordinates."""

    __slots__ = ("c",)

    def __init__(self, coords):
        c = tuple(x if isinstance(x, Fraction) else Fraction(x) for x in coords)
        if len(c) != 8:
            raise ValueError(f"expected 8 coordinates, got {len(c)}")
        self.c = c

    @classmethod
    def rational(cls, p, q=1):
        return cls((Fraction(p, q), _F0, _F0, _F0, _F0, _F0, _F0, _F0))

    @classmethod
    def basis_element(cls, idx):
        return cls(tuple(_F1 if t == idx else _F0 for t in range(8)))

    def is_zero(self):
        return all(x == 0 for x in self.c)

    def is_rational(self):
        return all(x == 0 for x in self.c[1:])

    def rational_value(self):
        """The value as a Fraction; raises if the scalar is irrational."""
        if not self.is_rational():
            raise NotRepresentable(f"{self!r} is not rational")
        return self.c[0]

    def __add__(self, other):
        return Scalar(tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other):
        return Scalar(tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return Scalar(tuple(-a for a in self.c))

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        out = [_F0] * 8
        for i, x in enumerate(self.c):
            if not x:
                continue
            row = _MUL[i]
            for j, y in enumerate(other.c):
                if not y:
                    continue
                coef, idx = row[j]
                out[idx] += x * y * coef
        return Scalar(out)

    def inverse(self):
        """Multiplicative inverse, via the 8x8 rational multiplication-by-self system.

        The columns of the system matrix are the coordinates of self*b_j for
        each basis element b_j; solving M v = e_0 yields the coordinates of
        the inverse.  Purely rational scalars short-circuit.
        """
        if self.is_zero():
            raise ZeroDivisionError("scalar is zero")
        if self.is_rational():
            return Scalar.rational(1 / self.c[0])
        # M[i][j] = coordinate i of self * basis_j
        m = [[_F0] * 9 for _ in range(8)]
        for j in range(8):
            col = self * Scalar.basis_element(j)
            for i in range(8):
                m[i][j] = col.c[i]
        m[0][8] = _F1
        # Gaussian elimination over Q
        for col in range(8):
            piv = next(r for r in range(col, 8) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            inv_p = 1 / m[col][col]
            m[col] = [x * inv_p for x in m[col]]
            for r in range(8):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return Scalar(tuple(m[r][8] for r in range(8)))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Scalar) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def sort_key(self):
        """A deterministic total order on scalars (layout order, not magnitude)."""
        return tuple((x.numerator, x.denominator) for x in self.c)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for x, label in zip(self.c, BASIS_LABELS):
            if x == 0:
                continue
            if label == "1":
                parts.append(str(x))
            elif x == 1:
                parts.append(label)
            elif x == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{x}*{label}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _squarefree_split(m):
    """m = f*f*s with s squarefree; returns (f, s)."""
    f, s, p = 1, m, 2
    while p * p <= s:
        while s % (p * p) == 0:
            s //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return f, s


def sqrt_restricted(q):
    """Exact square root of a rational whose squarefree part lies in {1, 2, 3, 6}.

    Negative inputs pick up a factor of i.  The branch is fixed by requiring
    the leading (first nonzero) surd coordinate to be nonnegative.  Raises
    NotRepresentable for any other rational.
    """
    q = Fraction(q)
    if q == 0:
        return ZERO
    mag = abs(q)
    m = mag.numerator * mag.denominator
    f, s = _squarefree_split(m)
    if s not in (1, 2, 3, 6):
        raise NotRepresentable(f"sqrt({q}) is outside the field (squarefree part {s})")
    coeff = Fraction(f, mag.denominator)
    idx = {1: 0, 2: 1, 3: 2, 6: 3}[s]
    if q < 0:
        idx += 4
    coords = [_F0] * 8
    coords[idx] = coeff
    return Scalar(coords)


ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)
TWO = Scalar.rational(2)
HALF = Scalar.rational(1, 2)
I_UNIT = Scalar.basis_element(4)
SQRT2 = Scalar.basis_element(1)
SQRT3 = Scalar.basis_element(2)
SQRT6 = Scalar.basis_element(3)

# zeta = exp(i*pi/3) = 1/2 + (sqrt3/2) i, a primitive sixth root of unity;
# it satisfies x^2 - x + 1 = 0 and 1 - zeta = zeta^{-1}.
ZETA = Scalar((Fraction(1, 2), _F0, _F0, _F0, _F0, _F0, Fraction(1, 2), _F0))
ZETA_INV = Scalar((Fraction(1, 2), _F0, _F0, _F0, _F0, _F0, Fraction(-1, 2), _F0))

# mu = (-1 + 2*sqrt2*i)/3, the root of 3x^2 + 2x + 3 with positive imaginary
# part; the parameter of the four-element suspension family that no product
# construction reaches.
MU_SPORADIC = Scalar((Fraction(-1, 3), _F0, _F0, _F0, _F0, Fraction(2, 3), _F0, _F0))
# alpha = (mu - mu^{-1})/2 = (2*sqrt2/3) i
ALPHA_SPORADIC = Scalar((_F0, _F0, _F0, _F0, _F0, Fraction(2, 3), _F0, _F0))


def constants():
    """The named field constants used by the catalog, keyed by name."""
    return {
        "zeta": ZETA,
        "zeta_inv": ZETA_INV,
        "sqrt2": SQRT2,
        "sqrt3": SQRT3,
        "sqrt6": SQRT6,
        "i_unit": I_UNIT,
        "mu_sporadic": MU_SPORADIC,
        "alpha_sporadic": ALPHA_SPORADIC,
    }
