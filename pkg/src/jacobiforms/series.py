"""Truncated Fourier series in q over pluggable exact coefficient rings.

A ``FourierSeries`` is a sparse map from q-exponents (rationals with
denominator dividing 24) to coefficients in one of the rings RAT, YLAURENT,
YRATIONAL or CYC(N), together with an explicit truncation order ``cap``:
terms with exponent > cap are unknown, never silently assumed zero.
``cap = None`` marks an exactly known (polynomial) series such as a constant.

All operations are pure; results carry the tightest cap that is actually
justified, so identity checks compare only coefficients both sides know.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .coefficients import (
    Cyclotomic,
    NonUnitError,
    YLaurent,
    YRational,
    as_fraction,
    format_fraction,
)


Q_DENOMINATOR = 24


class CapError(ArithmeticError):
    """Raised when an operation cannot deliver any known coefficients."""


class RingMismatchError(TypeError):
    """Raised when combining series over different coefficient rings."""


class Ring:
    """Descriptor for a coefficient ring: constants, zero tests, inversion."""

    def __init__(self, name, zero, one, from_int, is_zero, inv, coerce):
        self.name = name
        self.zero = zero
        self.one = one
        self.from_int = from_int
        self.is_zero = is_zero
        self.inv = inv
        self.coerce = coerce

    def __repr__(self):
        return f"Ring({self.name})"


def _rat_inv(x: Fraction) -> Fraction:
    if x == 0:
        raise NonUnitError("zero is not invertible")
    return 1 / x


RAT = Ring(
    "rat",
    zero=Fraction(0),
    one=Fraction(1),
    from_int=as_fraction,
    is_zero=lambda x: x == 0,
    inv=_rat_inv,
    coerce=as_fraction,
)

YLAURENT = Ring(
    "ylaurent",
    zero=YLaurent.zero(),
    one=YLaurent.one(),
    from_int=YLaurent.from_int,
    is_zero=lambda x: x.is_zero,
    inv=lambda x: x.inv(),
    coerce=lambda x: x if isinstance(x, YLaurent) else YLaurent.from_int(x),
)

YRATIONAL = Ring(
    "yrational",
    zero=YRational.zero(),
    one=YRational.one(),
    from_int=YRational.from_int,
    is_zero=lambda x: x.is_zero,
    inv=lambda x: x.inv(),
    coerce=lambda x: x
    if isinstance(x, YRational)
    else (YRational(x) if isinstance(x, YLaurent) else YRational.from_int(x)),
)

_CYC_RINGS = {}


def CYC(N: int) -> Ring:
    """Ring descriptor for Q(zeta_N) coefficients."""
    if N not in _CYC_RINGS:
        _CYC_RINGS[N] = Ring(
            f"cyc{N}",
            zero=Cyclotomic.zero(N),
            one=Cyclotomic.one(N),
            from_int=lambda x, N=N: Cyclotomic.from_rational(N, x),
            is_zero=lambda x: x.is_zero,
            inv=lambda x: x.inv(),
            coerce=lambda x, N=N: x
            if isinstance(x, Cyclotomic)
            else Cyclotomic.from_rational(N, x),
        )
    return _CYC_RINGS[N]


def _check_q_exponent(e: Fraction) -> Fraction:
    if Q_DENOMINATOR % e.denominator != 0:
        raise ValueError(f"q-exponent {e} has denominator not dividing {Q_DENOMINATOR}")
    return e


def _min_cap(*caps):
    known = [c for c in caps if c is not None]
    return min(known) if known else None


class FourierSeries:
    """Sparse truncated series sum_e c_e q^e with exact coefficients."""

    __slots__ = ("ring", "_c", "cap")

    def __init__(self, ring: Ring, coeffs=None, cap=None):
        self.ring = ring
        cap = None if cap is None else as_fraction(cap)
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                e = _check_q_exponent(as_fraction(e))
                if cap is not None and e > cap:
                    continue
                if not ring.is_zero(v):
                    c[e] = v
        self._c = c
        self.cap = cap

    @classmethod
    def zero(cls, ring: Ring, cap=None) -> "FourierSeries":
        return cls(ring, {}, cap)

    @classmethod
    def constant(cls, ring: Ring, value, cap=None) -> "FourierSeries":
        return cls(ring, {Fraction(0): ring.coerce(value)}, cap)

    @classmethod
    def one(cls, ring: Ring, cap=None) -> "FourierSeries":
        return cls.constant(ring, ring.one, cap)

    @classmethod
    def monomial(cls, ring: Ring, exp, value=1, cap=None) -> "FourierSeries":
        return cls(ring, {as_fraction(exp): ring.coerce(value)}, cap)

    # -- basic queries ----------------------------------------------------

    def items(self):
        """Term list sorted by ascending q-exponent."""
        return sorted(self._c.items())

    def exponents(self):
        return sorted(self._c)

    def coeff(self, exp):
        return self._c.get(as_fraction(exp), self.ring.zero)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def valuation(self):
        """Lowest stored exponent; None for a series with no known terms."""
        return min(self._c) if self._c else None

    def valuation_bound(self):
        """Sound lower bound for the true valuation (cap for an all-zero truncation)."""
        if self._c:
            return min(self._c)
        return self.cap  # everything known is zero; true valuation exceeds cap

    def __eq__(self, other):
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self.ring is other.ring and self.cap == other.cap and self._c == other._c

    def __hash__(self):
        return hash((self.ring.name, self.cap, tuple(self.items())))

    def agrees_with(self, other: "FourierSeries", through=None) -> bool:
        """Coefficientwise equality through the stated order (default: both caps)."""
        bound = _min_cap(self.cap, other.cap, None if through is None else as_fraction(through))
        if bound is None:
            bound = max(
                [e for e in list(self._c) + list(other._c)] or [Fraction(0)]
            )
        for e in set(self._c) | set(other._c):
            if e > bound:
                continue
            if self.coeff(e) != other.coeff(e):
                return False
        return True

    def first_difference(self, other: "FourierSeries", through=None):
        """Lowest exponent where the series disagree within the compared range, or None."""
        bound = _min_cap(self.cap, other.cap, None if through is None else as_fraction(through))
        exps = sorted(set(self._c) | set(other._c))
        for e in exps:
            if bound is not None and e > bound:
                break
            if self.coeff(e) != other.coeff(e):
                return e
        return None

    # -- arithmetic --------------------------------------------------------

    def _require_same_ring(self, other: "FourierSeries"):
        if self.ring is not other.ring:
            raise RingMismatchError(
                f"cannot combine series over {self.ring.name} and {other.ring.name}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FourierSeries.constant(self.ring, other)
        if not isinstance(other, FourierSeries):
            return NotImplemented
        self._require_same_ring(other)
        cap = _min_cap(self.cap, other.cap)
        c = dict(self._c)
        for e, v in other._c.items():
            w = c[e] + v if e in c else v
            if self.ring.is_zero(w):
                c.pop(e, None)
            else:
                c[e] = w
        if cap is not None:
            c = {e: v for e, v in c.items() if e <= cap}
        out = FourierSeries.__new__(FourierSeries)
        out.ring, out._c, out.cap = self.ring, c, cap
        return out

    __radd__ = __add__

    def __neg__(self):
        out = FourierSeries.__new__(FourierSeries)
        out.ring = self.ring
        out._c = {e: -v for e, v in self._c.items()}
        out.cap = self.cap
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FourierSeries.constant(self.ring, other)
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, scalar) -> "FourierSeries":
        """Multiply every coefficient by a ring element or integer/Fraction."""
        s = self.ring.coerce(scalar)
        c = {}
        for e, v in self._c.items():
            w = v * s
            if not self.ring.is_zero(w):
                c[e] = w
        out = FourierSeries.__new__(FourierSeries)
        out.ring, out._c, out.cap = self.ring, c, self.cap
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, FourierSeries):
            return NotImplemented
        self._require_same_ring(other)
        # knowledge bound: unknown terms of one factor meet the other's valuation
        va, vb = self.valuation_bound(), other.valuation_bound()
        if self.cap is None and other.cap is None:
            cap = None
        elif self.is_zero and self.cap is None:
            cap = None  # exact zero annihilates
        elif other.is_zero and other.cap is None:
            cap = None
        else:
            parts = []
            if self.cap is not None:
                parts.append(self.cap + (vb if vb is not None else 0))
            if other.cap is not None:
                parts.append(other.cap + (va if va is not None else 0))
            cap = min(parts) if parts else None
        a = self.items()
        b = other.items()
        c = {}
        is_zero = self.ring.is_zero
        for ea, vaa in a:
            if cap is not None and b and ea + b[0][0] > cap:
                break
            for eb, vbb in b:
                e = ea + eb
                if cap is not None and e > cap:
                    break
                w = c[e] + vaa * vbb if e in c else vaa * vbb
                if is_zero(w):
                    c.pop(e, None)
                else:
                    c[e] = w
        out = FourierSeries.__new__(FourierSeries)
        out.ring, out._c, out.cap = self.ring, c, cap
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        result = FourierSeries.one(self.ring, None)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        if result.cap is None and self.cap is not None:
            result = result.truncated(self.cap)  # k == 0 keeps the operand's honesty
        return result

    def truncated(self, cap) -> "FourierSeries":
        cap = as_fraction(cap)
        if self.cap is not None and self.cap < cap:
            raise CapError(f"cannot extend knowledge from cap {self.cap} to {cap}")
        return FourierSeries(self.ring, {e: v for e, v in self._c.items() if e <= cap}, cap)

    def shifted(self, exp) -> "FourierSeries":
        """Multiply by the exact monomial q^exp."""
        exp = as_fraction(exp)
        cap = None if self.cap is None else self.cap + exp
        return FourierSeries(self.ring, {e + exp: v for e, v in self._c.items()}, cap)

    def _lattice_step(self) -> Fraction:
        den = 1
        for e in self._c:
            den = den * e.denominator // gcd(den, e.denominator)
        return Fraction(1, den)

    def invert(self) -> "FourierSeries":
        """Multiplicative inverse, valid through cap - 2*valuation."""
        if self.cap is None:
            raise CapError("inversion needs a finite cap; call .truncated(cap) first")
        v = self.valuation()
        if v is None:
            raise NonUnitError("cannot invert a series with no known nonzero term")
        lead = self._c[v]
        lead_inv = self.ring.inv(lead)  # raises NonUnitError if not a unit
        span = self.cap - v  # relative orders known for the shifted unit series
        step = self._lattice_step()
        # A = self shifted to valuation 0; B = A^{-1} computed term by term
        a = {e - v: w for e, w in self._c.items()}
        b = {Fraction(0): lead_inv}
        a_items = sorted(a.items())
        e = step
        while e <= span:
            acc = None
            for f, w in a_items:
                if f == 0 or f > e:
                    continue
                bb = b.get(e - f)
                if bb is None:
                    continue
                term = w * bb
                acc = term if acc is None else acc + term
            if acc is not None and not self.ring.is_zero(acc):
                b[e] = -(lead_inv * acc) if self.ring.name != "rat" else -(acc * lead_inv)
            e += step
        coeffs = {e - v: w for e, w in b.items()}
        return FourierSeries(self.ring, coeffs, self.cap - 2 * v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(Fraction(1, 1) / as_fraction(other))
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self * other.invert()

    def exp(self) -> "FourierSeries":
        """exp of a series with positive valuation (zero constant term)."""
        if self.cap is None:
            raise CapError("exp needs a finite cap")
        v = self.valuation_bound()
        if v is None or v <= 0:
            if self.is_zero:
                return FourierSeries.one(self.ring, self.cap)
            raise ValueError("exp requires zero constant term and no negative exponents")
        result = FourierSeries.one(self.ring, self.cap)
        term = FourierSeries.one(self.ring, self.cap)
        k = 1
        while k * v <= self.cap:
            term = (term * self).scaled(Fraction(1, k))
            result = result + term
            if term.is_zero:
                break
            k += 1
        return result

    def log(self) -> "FourierSeries":
        """log of a series with constant term 1."""
        if self.cap is None:
            raise CapError("log needs a finite cap")
        if self.coeff(0) != self.ring.one:
            raise ValueError("log requires constant term 1")
        x = self - FourierSeries.one(self.ring)
        v = x.valuation_bound()
        if v is None:
            return FourierSeries.zero(self.ring, self.cap)
        if v <= 0:
            raise ValueError("log requires the q^0 coefficient to be exactly 1")
        result = FourierSeries.zero(self.ring, self.cap)
        term = FourierSeries.one(self.ring, self.cap)
        k = 1
        while k * v <= self.cap:
            term = term * x
            result = result + term.scaled(Fraction((-1) ** (k + 1), k))
            if term.is_zero:
                break
            k += 1
        return result

    def sqrt(self) -> "FourierSeries":
        """Square root of a rational-coefficient series whose leading term is a square."""
        if self.ring is not RAT:
            raise TypeError("sqrt is implemented for rational-coefficient series only")
        if self.cap is None:
            raise CapError("sqrt needs a finite cap")
        v = self.valuation()
        if v is None:
            raise ValueError("sqrt of an all-zero truncation is ambiguous")
        if (v / 2).denominator > Q_DENOMINATOR:
            raise ValueError(f"valuation {v} is not even on the exponent lattice")
        lead = self._c[v]
        root_num = _isqrt_exact(lead.numerator)
        root_den = _isqrt_exact(lead.denominator)
        if root_num is None or root_den is None:
            raise ValueError(f"leading coefficient {lead} is not a perfect square")
        lead_root = Fraction(root_num, root_den)
        span = self.cap - v
        step = self._lattice_step()
        a = {e - v: w / lead for e, w in self._c.items()}
        b = {Fraction(0): Fraction(1)}
        e = step
        while e <= span:
            acc = Fraction(0)
            f = step
            while f < e:
                bf = b.get(f)
                if bf is not None:
                    bg = b.get(e - f)
                    if bg is not None:
                        acc += bf * bg
                f += step
            val = (a.get(e, Fraction(0)) - acc) / 2
            if val:
                b[e] = val
            e += step
        coeffs = {e + v / 2: w * lead_root for e, w in b.items()}
        return FourierSeries(RAT, coeffs, self.cap - v / 2)

    # -- derivations -------------------------------------------------------

    def q_ddq(self) -> "FourierSeries":
        """Apply q d/dq termwise."""
        c = {}
        for e, v in self._c.items():
            if self.ring is RAT:
                w = v * e
            else:
                w = v * e  # YLaurent/YRational/Cyclotomic support Fraction scaling
            if not self.ring.is_zero(w):
                c[e] = w
        return FourierSeries(self.ring, c, self.cap)

    def y_ddy(self) -> "FourierSeries":
        """Apply y d/dy to every coefficient (YLaurent/YRational series only)."""
        if self.ring not in (YLAURENT, YRATIONAL):
            raise TypeError("y d/dy needs y-dependent coefficients")
        return self.map_coeffs(lambda v: v.y_ddy(), self.ring)

    def map_coeffs(self, fn, ring: Ring) -> "FourierSeries":
        c = {}
        for e, v in self._c.items():
            w = fn(v)
            if not ring.is_zero(w):
                c[e] = w
        return FourierSeries(ring, c, self.cap)

    # -- ring promotions ---------------------------------------------------

    def to_yrational(self) -> "FourierSeries":
        if self.ring is YRATIONAL:
            return self
        if self.ring is YLAURENT:
            return self.map_coeffs(YRational.from_laurent, YRATIONAL)
        if self.ring is RAT:
            return self.map_coeffs(YRational.from_int, YRATIONAL)
        raise TypeError(f"cannot promote {self.ring.name} to yrational")

    def to_ylaurent(self) -> "FourierSeries":
        if self.ring is YLAURENT:
            return self
        if self.ring is RAT:
            return self.map_coeffs(YLaurent.from_int, YLAURENT)
        if self.ring is YRATIONAL:
            return self.map_coeffs(lambda v: v.to_laurent(), YLAURENT)
        raise TypeError(f"cannot demote {self.ring.name} to ylaurent")

    def to_rat(self) -> "FourierSeries":
        if self.ring is RAT:
            return self
        if self.ring is YLAURENT:
            return self.map_coeffs(lambda v: v.constant_value(), RAT)
        if self.ring.name.startswith("cyc"):
            return self.map_coeffs(lambda v: v.to_fraction(), RAT)
        raise TypeError(f"cannot demote {self.ring.name} to rat")

    # -- substitutions -----------------------------------------------------

    def subst_q_power(self, n: int) -> "FourierSeries":
        """q -> q^n for a positive integer n (e.g. Delta(n tau))."""
        if n < 1:
            raise ValueError("q -> q^n needs n >= 1")
        cap = None if self.cap is None else self.cap * n
        return FourierSeries(self.ring, {e * n: v for e, v in self._c.items()}, cap)

    def subst_y_power(self, h: int) -> "FourierSeries":
        """y -> y^h termwise on the coefficients."""
        if self.ring not in (YLAURENT, YRATIONAL):
            raise TypeError("y -> y^h needs y-dependent coefficients")
        return self.map_coeffs(lambda v: v.subst_power(h), self.ring)

    def subst_y_one(self) -> "FourierSeries":
        """y -> 1, collapsing YLaurent coefficients to rationals."""
        if self.ring is not YLAURENT:
            raise TypeError("y -> 1 needs YLaurent coefficients")
        return self.map_coeffs(lambda v: v.eval_one(), RAT)

    def subst_y_root(self, N: int, j: int = 1) -> "FourierSeries":
        """y -> zeta_N^j, yielding Cyclotomic(M) coefficients.

        M is the smallest order in {1,2,3,4,6} containing all phases j*l/N;
        an unsupported phase denominator raises ValueError.
        """
        if self.ring is not YLAURENT:
            raise TypeError("y -> zeta needs YLaurent coefficients")
        phases = {}
        den = 1
        for _, poly in self._c.items():
            for l, _ in poly.items():
                ph = Fraction(j * l, N) % 1
                phases[l] = ph
                den = den * ph.denominator // gcd(den, ph.denominator)
        M = den
        if M not in (1, 2, 3, 4, 6):
            raise ValueError(f"substitution needs a root of unsupported order {M}")
        ring = CYC(M)
        c = {}
        for e, poly in self._c.items():
            acc = Cyclotomic.zero(M)
            for l, coeff in poly.items():
                ph = phases[l]
                acc = acc + Cyclotomic.root_power(M, int(ph * M)) * coeff
            if not acc.is_zero:
                c[e] = acc
        return FourierSeries(ring, c, self.cap)

    def subst_y_signed_qpower(self, eps: int, s, new_cap) -> "FourierSeries":
        """y -> eps * q^s with eps in {+1, -1}; the caller supplies the sound cap.

        Negative s moves high-q knowledge downward, so the resulting cap
        depends on the y-support growth of the source; series-level code
        cannot bound it and the caller (which knows the index) must.
        """
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if self.ring is not YLAURENT:
            raise TypeError("y -> eps*q^s needs YLaurent coefficients")
        s = as_fraction(s)
        new_cap = None if new_cap is None else as_fraction(new_cap)
        c = {}
        for e, poly in self._c.items():
            for l, coeff in poly.items():
                if eps == -1 and l.denominator != 1:
                    raise ValueError("y -> -q^s needs integer y-exponents")
                exp = e + l * s
                sign = 1 if eps == 1 or l % 2 == 0 else -1
                if new_cap is not None and exp > new_cap:
                    continue
                w = c.get(exp, Fraction(0)) + sign * coeff
                if w:
                    c[exp] = w
                else:
                    c.pop(exp, None)
        return FourierSeries(RAT, c, new_cap)

    def subst_y_exp_jet(self, order: int) -> "UJet":
        """y -> e^w as a jet in w: coefficient of w^k is sum c(n,l) l^k/k! q^n."""
        if self.ring is not YLAURENT:
            raise TypeError("y -> e^w needs YLaurent coefficients")
        fact = [Fraction(1)] * (order + 1)
        for k in range(1, order + 1):
            fact[k] = fact[k - 1] * k
        jets = [dict() for _ in range(order + 1)]
        for e, poly in self._c.items():
            for l, coeff in poly.items():
                power = Fraction(1)
                for k in range(order + 1):
                    w = jets[k].get(e, Fraction(0)) + coeff * power / fact[k]
                    if w:
                        jets[k][e] = w
                    else:
                        jets[k].pop(e, None)
                    power *= l
        return UJet([FourierSeries(RAT, jc, self.cap) for jc in jets])

    def __str__(self):
        if not self._c:
            return "0" + ("" if self.cap is None else f" + O(q^{format_fraction(self.cap + 1)})")
        parts = []
        for e, v in self.items():
            sv = str(v)
            if e == 0:
                parts.append(f"({sv})")
            else:
                parts.append(f"({sv})*q^{format_fraction(e)}")
        tail = "" if self.cap is None else f" + O(q^>{format_fraction(self.cap)})"
        return " + ".join(parts) + tail

    __repr__ = __str__


def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = int(isqrt(n))
    return r if r * r == n else None


class UJet:
    """Polynomial jet in a formal variable u with FourierSeries coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a jet needs at least the order-0 coefficient")
        ring = coeffs[0].ring
        for c in coeffs:
            if c.ring is not ring:
                raise RingMismatchError("jet coefficients must share a ring")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring(self) -> Ring:
        return self.coeffs[0].ring

    @classmethod
    def zero(cls, ring: Ring, order: int, cap=None) -> "UJet":
        return cls([FourierSeries.zero(ring, cap) for _ in range(order + 1)])

    @classmethod
    def one(cls, ring: Ring, order: int, cap=None) -> "UJet":
        out = cls.zero(ring, order, cap)
        out.coeffs[0] = FourierSeries.one(ring, cap)
        return out

    def __eq__(self, other):
        if not isinstance(other, UJet):
            return NotImplemented
        return self.coeffs == other.coeffs

    def agrees_with(self, other: "UJet", through=None) -> bool:
        if self.order != other.order:
            return False
        return all(
            a.agrees_with(b, through) for a, b in zip(self.coeffs, other.coeffs)
        )

    def __add__(self, other):
        if not isinstance(other, UJet):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("jet orders differ")
        return UJet([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return UJet([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UJet([a.scaled(other) for a in self.coeffs])
        if not isinstance(other, UJet):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("jet orders differ")
        n = self.order
        out = [None] * (n + 1)
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                term = self.coeffs[i] * other.coeffs[k - i]
                acc = term if acc is None else acc + term
            out[k] = acc
        return UJet(out)

    __rmul__ = __mul__

    def scale_series(self, s: FourierSeries) -> "UJet":
        return UJet([c * s for c in self.coeffs])

    def exp(self) -> "UJet":
        """exp of a jet with zero order-0 coefficient (nilpotent argument)."""
        if not self.coeffs[0].is_zero:
            raise ValueError("jet exp needs a zero u^0 coefficient")
        result = UJet.one(self.ring, self.order, self.coeffs[0].cap)
        term = result
        for k in range(1, self.order + 1):
            term = term * self
            term = term * Fraction(1, k)
            result = result + term
        return result

    def truncated(self, cap) -> "UJet":
        return UJet([c.truncated(cap) for c in self.coeffs])

    def __str__(self):
        lines = [f"u^{k}: {c}" for k, c in enumerate(self.coeffs)]
        return "\n".join(lines)

    __repr__ = __str__
