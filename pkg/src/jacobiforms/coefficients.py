"""Exact coefficient rings for two-variable Fourier expansions.

Three rings live here, all built on arbitrary-precision rationals:

* ``YLaurent`` -- sparse Laurent polynomials in y with exponents in (1/2)Z,
  the coefficient ring of theta-type expansions;
* ``YRational`` -- quotients of YLaurent polynomials in canonical form,
  needed for logarithmic derivatives and Weierstrass jets whose
  coefficients have poles at y = 1;
* ``Cyclotomic`` -- Z[zeta_N]-style values for N in {1, 2, 3, 4, 6}, the
  targets of torsion-point substitutions y -> zeta_N.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


HALF = Fraction(1, 2)

CYCLOTOMIC_ORDERS = (1, 2, 3, 4, 6)


class NonUnitError(ArithmeticError):
    """Raised when inverting an element that is not a unit in its ring."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


def _check_half_integer(e: Fraction) -> Fraction:
    if e.denominator not in (1, 2):
        raise ValueError(f"y-exponent {e} does not lie in (1/2)Z")
    return e


class YLaurent:
    """Sparse Laurent polynomial in y, exponents in (1/2)Z, Fraction coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                e = _check_half_integer(as_fraction(e))
                v = as_fraction(v)
                if v:
                    c[e] = v
        self._c = c

    @classmethod
    def zero(cls) -> "YLaurent":
        return cls()

    @classmethod
    def one(cls) -> "YLaurent":
        return cls({Fraction(0): Fraction(1)})

    @classmethod
    def from_int(cls, n) -> "YLaurent":
        return cls({Fraction(0): as_fraction(n)})

    @classmethod
    def term(cls, coeff, exp) -> "YLaurent":
        return cls({as_fraction(exp): as_fraction(coeff)})

    @classmethod
    def y_power(cls, exp) -> "YLaurent":
        return cls.term(1, exp)

    def items(self):
        """Term list sorted by ascending exponent."""
        return sorted(self._c.items())

    def coeff(self, exp) -> Fraction:
        return self._c.get(as_fraction(exp), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_one(self) -> bool:
        return self._c == {Fraction(0): Fraction(1)}

    @property
    def is_monomial(self) -> bool:
        return len(self._c) == 1

    @property
    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and Fraction(0) in self._c)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant in y")
        return self._c.get(Fraction(0), Fraction(0))

    def min_exp(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def max_exp(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, YLaurent):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == YLaurent.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, Fraction(0)) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = YLaurent.__new__(YLaurent)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = YLaurent.__new__(YLaurent)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = as_fraction(other)
            out = YLaurent.__new__(YLaurent)
            out._c = {} if not k else {e: v * k for e, v in self._c.items()}
            return out
        if not isinstance(other, YLaurent):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, Fraction(0)) + v1 * v2
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        out = YLaurent.__new__(YLaurent)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = YLaurent.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, YLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return YLaurent.from_int(other)
        return NotImplemented

    def inv(self) -> "YLaurent":
        """Inverse of a monomial; anything else is not a unit here."""
        if not self.is_monomial:
            raise NonUnitError("only monomials are units in the Laurent ring")
        ((e, v),) = self._c.items()
        return YLaurent({-e: 1 / v})

    def y_ddy(self) -> "YLaurent":
        """Apply the derivation y d/dy termwise."""
        return YLaurent({e: v * e for e, v in self._c.items()})

    def subst_power(self, h: int) -> "YLaurent":
        """Substitute y -> y^h for a nonzero integer h."""
        if h == 0:
            raise ValueError("y -> y^0 collapses the variable")
        return YLaurent({e * h: v for e, v in self._c.items()})

    def flip(self) -> "YLaurent":
        """Substitute y -> 1/y."""
        return self.subst_power(-1)

    @property
    def is_symmetric(self) -> bool:
        return self._c == self.flip()._c

    def eval_one(self) -> Fraction:
        """Value at y = 1."""
        return sum(self._c.values(), Fraction(0))

    def shifted(self, exp) -> "YLaurent":
        """Multiply by the monomial y^exp."""
        exp = as_fraction(exp)
        return YLaurent({e + exp: v for e, v in self._c.items()})

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-primitive (0 for the zero poly)."""
        if not self._c:
            return Fraction(0)
        num = 0
        den = 1
        for v in self._c.values():
            num = gcd(num, v.numerator)
            den = den * v.denominator // gcd(den, v.denominator)
        return Fraction(num, den)

    def exact_div(self, other: "YLaurent") -> "YLaurent":
        """Divide exactly by ``other``; raises ValueError if the division has a remainder."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return YLaurent.zero()
        q, r = _laurent_divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact Laurent division")
        return q

    def __str__(self):
        return format_ylaurent(self)

    __repr__ = __str__


def _to_dense(p: YLaurent):
    """Dense (coeffs, shift) picture in t = y^(1/2): p = t^shift * sum coeffs[i] t^i."""
    if p.is_zero:
        return [], 0
    exps = sorted(2 * e for e in p._c)
    lo, hi = int(exps[0]), int(exps[-1])
    coeffs = [Fraction(0)] * (hi - lo + 1)
    for e, v in p._c.items():
        coeffs[int(2 * e) - lo] = v
    return coeffs, lo

def _from_dense(coeffs, shift) -> YLaurent:
    return YLaurent({Fraction(i + shift, 2): v for i, v in enumerate(coeffs) if v})

def _poly_divmod(a, b):
    """Dense polynomial division over Q; a, b lists with b nonempty, b[-1] != 0."""
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    while a and not a[-1]:
        a.pop()
    return q, a

def _poly_gcd(a, b):
    """Monic gcd over Q of dense polynomials (lists of Fraction)."""
    a = list(a)
    b = list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a

def _laurent_divmod(a: YLaurent, b: YLaurent):
    da, sa = _to_dense(a)
    db, sb = _to_dense(b)
    q, r = _poly_divmod(da, db)
    return _from_dense(q, sa - sb), _from_dense(r, sa)


class YRational:
    """Fraction of YLaurent polynomials in canonical form.

    Canonical form: numerator/denominator gcd removed, denominator shifted to
    valuation 0, made integer-primitive with positive lowest coefficient.
    Equality is then plain structural comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = YLaurent.from_int(num)
        if den is None:
            den = YLaurent.one()
        elif isinstance(den, (int, Fraction)):
            den = YLaurent.from_int(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _yr_canonical(num, den)

    @classmethod
    def from_laurent(cls, p: YLaurent) -> "YRational":
        return cls(p)

    @classmethod
    def zero(cls) -> "YRational":
        return cls(YLaurent.zero())

    @classmethod
    def one(cls) -> "YRational":
        return cls(YLaurent.one())

    @classmethod
    def from_int(cls, n) -> "YRational":
        return cls(YLaurent.from_int(n))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    @property
    def is_laurent(self) -> bool:
        return self.den.is_one

    def to_laurent(self) -> YLaurent:
        if not self.den.is_one:
            raise ValueError(f"{self} has a nontrivial denominator")
        return self.num

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        other = _yr_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _yr_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = YRational.__new__(YRational)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = _yr_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _yr_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _yr_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _yr_coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = YRational.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> "YRational":
        if self.is_zero:
            raise NonUnitError("zero is not invertible")
        return YRational(self.den, self.num)

    def y_ddy(self) -> "YRational":
        """Quotient-rule derivation y d/dy."""
        return YRational(
            self.num.y_ddy() * self.den - self.num * self.den.y_ddy(),
            self.den * self.den,
        )

    def subst_power(self, h: int) -> "YRational":
        return YRational(self.num.subst_power(h), self.den.subst_power(h))

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _yr_coerce(x):
    if isinstance(x, YRational):
        return x
    if isinstance(x, YLaurent):
        return YRational(x)
    if isinstance(x, (int, Fraction)):
        return YRational.from_int(x)
    return NotImplemented

def _yr_canonical(num: YLaurent, den: YLaurent):
    if num.is_zero:
        return YLaurent.zero(), YLaurent.one()
    dn, sn = _to_dense(num)
    dd, sd = _to_dense(den)
    g = _poly_gcd(dn, dd)
    if len(g) > 1:
        dn, _ = _poly_divmod(dn, g)
        dd, _ = _poly_divmod(dd, g)
    num = _from_dense(dn, sn)
    den = _from_dense(dd, 0)  # denominator valuation folded into the numerator
    num = num.shifted(Fraction(-sd, 2))
    scale = den.content()
    if den._c[den.min_exp()] < 0:
        scale = -scale
    return num * (1 / scale), den * (1 / scale)


# Multiplication of a + b*zeta in the power basis, per cyclotomic order.
_CYC_MUL = {
    3: lambda a, b, c, d: (a * c - b * d, a * d + b * c - b * d),
    4: lambda a, b, c, d: (a * c - b * d, a * d + b * c),
    6: lambda a, b, c, d: (a * c - b * d, a * d + b * c + b * d),
}


class Cyclotomic:
    """Element of Q(zeta_N) for N in {1,2,3,4,6}, coordinates in the power basis."""

    __slots__ = ("N", "coords")

    def __init__(self, N: int, coords):
        if N not in CYCLOTOMIC_ORDERS:
            raise ValueError(f"unsupported cyclotomic order {N}")
        deg = 1 if N in (1, 2) else 2
        coords = tuple(as_fraction(c) for c in coords)
        if len(coords) != deg:
            raise ValueError(f"order {N} needs {deg} coordinates, got {len(coords)}")
        self.N = N
        self.coords = coords

    @classmethod
    def zero(cls, N: int) -> "Cyclotomic":
        return cls(N, (0,) if N in (1, 2) else (0, 0))

    @classmethod
    def one(cls, N: int) -> "Cyclotomic":
        return cls(N, (1,) if N in (1, 2) else (1, 0))

    @classmethod
    def from_rational(cls, N: int, x) -> "Cyclotomic":
        x = as_fraction(x)
        return cls(N, (x,) if N in (1, 2) else (x, 0))

    @classmethod
    def root_power(cls, N: int, k: int) -> "Cyclotomic":
        """zeta_N^k in the power basis."""
        k %= N
        if N == 1:
            return cls(1, (1,))
        if N == 2:
            return cls(2, (1 if k == 0 else -1,))
        table = {
            3: {0: (1, 0), 1: (0, 1), 2: (-1, -1)},
            4: {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)},
            6: {0: (1, 0), 1: (0, 1), 2: (-1, 1), 3: (-1, 0), 4: (0, -1), 5: (1, -1)},
        }
        return cls(N, table[N][k])

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def is_rational(self) -> bool:
        return self.N in (1, 2) or self.coords[1] == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def conjugate(self) -> "Cyclotomic":
        """Image under complex conjugation zeta -> zeta^(N-1)."""
        if self.N in (1, 2):
            return self
        a, b = self.coords
        if self.N == 3:
            return Cyclotomic(3, (a - b, -b))
        if self.N == 4:
            return Cyclotomic(4, (a, -b))
        return Cyclotomic(6, (a + b, -b))

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.N, self.coords))

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.N != self.N:
                raise ValueError(f"mixed cyclotomic orders {self.N} and {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.N, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.N, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.N in (1, 2):
            return Cyclotomic(self.N, (self.coords[0] * other.coords[0],))
        a, b = self.coords
        c, d = other.coords
        return Cyclotomic(self.N, _CYC_MUL[self.N](a, b, c, d))

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        if self.is_zero:
            raise NonUnitError("zero is not invertible")
        if self.N in (1, 2):
            return Cyclotomic(self.N, (1 / self.coords[0],))
        conj = self.conjugate()
        norm = (self * conj).coords[0]
        return Cyclotomic(self.N, tuple(c / norm for c in conj.coords))

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = Cyclotomic.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self):
        if self.N in (1, 2) or self.coords[1] == 0:
            return str(self.coords[0])
        a, b = self.coords
        zeta = f"zeta{self.N}"
        if a == 0:
            return f"{b}*{zeta}"
        return f"{a} + {b}*{zeta}" if b > 0 else f"{a} - {-b}*{zeta}"

    __repr__ = __str__


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_ylaurent(p: YLaurent) -> str:
    """Human-readable form with descending y-exponents, e.g. '10y^2 - 88y - 132'."""
    if p.is_zero:
        return "0"
    parts = []
    for e, v in sorted(p._c.items(), reverse=True):
        if e == 0:
            body = format_fraction(abs(v))
        else:
            mag = abs(v)
            coeff = "" if mag == 1 else format_fraction(mag)
            power = "y" if e == 1 else f"y^{format_fraction(e)}"
            body = coeff + power
        if not parts:
            parts.append(body if v > 0 else "-" + body)
        else:
            parts.append(("+ " if v > 0 else "- ") + body)
    return " ".join(parts)
