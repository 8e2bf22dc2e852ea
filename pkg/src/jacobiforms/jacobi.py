"""Weak Jacobi forms as tagged Fourier series, with the formal index check.

A ``JacobiForm`` couples a two-variable expansion (q-series with YLaurent
coefficients) to its weight, index and eta-multiplier exponent.  The index
governs the elliptic transformation y -> qy; ``elliptic_check`` verifies it
as a termwise coefficient pairing, which stays exact under truncation:

    f(n, l) = (-1)^(2 t lam) * f(n + lam*l + lam^2*t, l + 2*lam*t)

Only pairs whose both q-orders lie within the cap are compared, so the
check never reports spurious mismatches from unknown territory.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .coefficients import YLaurent, as_fraction
from .series import RAT, YLAURENT, YRATIONAL, FourierSeries


@dataclass(frozen=True)
class JacobiForm:
    weight: Fraction
    index: Fraction
    eta_character: int
    series: FourierSeries
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "weight", as_fraction(self.weight))
        object.__setattr__(self, "index", as_fraction(self.index))
        object.__setattr__(self, "eta_character", self.eta_character % 24)

    @classmethod
    def from_series(cls, weight, index, series, eta_character=0, name=None):
        if series.ring is RAT:
            series = series.to_ylaurent()
        return cls(as_fraction(weight), as_fraction(index), eta_character, series, name)

    @property
    def cap(self):
        return self.series.cap

    def named(self, name: str) -> "JacobiForm":
        return replace(self, name=name)

    def q0_term(self) -> YLaurent:
        return self.series.coeff(0)

    def coefficient(self, n, l) -> Fraction:
        c = self.series.coeff(n)
        return c.coeff(l) if isinstance(c, YLaurent) else c

    def check_support(self) -> bool:
        """y-exponents lie in index + Z; trivial-character integer-index forms
        have integer q-exponents >= 0."""
        for e, poly in self.series.items():
            for l, _ in poly.items():
                if (l - self.index).denominator != 1:
                    return False
            if self.eta_character == 0 and self.index.denominator == 1:
                if e.denominator != 1 or e < 0:
                    return False
        return True

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return replace(self, series=self.series.scaled(other), name=None)
        if not isinstance(other, JacobiForm):
            return NotImplemented
        return JacobiForm(
            self.weight + other.weight,
            self.index + other.index,
            self.eta_character + other.eta_character,
            self.series * other.series,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers need an explicit division")
        return JacobiForm(
            self.weight * k, self.index * k, self.eta_character * k, self.series**k
        )

    def __add__(self, other):
        if not isinstance(other, JacobiForm):
            return NotImplemented
        if (self.weight, self.index, self.eta_character) != (
            other.weight,
            other.index,
            other.eta_character,
        ):
            raise ValueError("can only add forms of equal weight, index and character")
        return JacobiForm(
            self.weight, self.index, self.eta_character, self.series + other.series
        )

    def __neg__(self):
        return replace(self, series=-self.series, name=None)

    def __sub__(self, other):
        if not isinstance(other, JacobiForm):
            return NotImplemented
        return self + (-other)

    def __truediv__(self, other):
        """Division through YRational coefficients; result demoted to YLaurent."""
        if isinstance(other, (int, Fraction)):
            return replace(self, series=self.series.scaled(Fraction(1) / as_fraction(other)), name=None)
        if not isinstance(other, JacobiForm):
            return NotImplemented
        num = self.series.to_yrational()
        den = other.series.to_yrational()
        quotient = (num * den.invert()).to_ylaurent()
        return JacobiForm(
            self.weight - other.weight,
            self.index - other.index,
            self.eta_character - other.eta_character,
            quotient,
        )

    def hecke_rescale(self, h: int) -> "JacobiForm":
        """z -> hz: substitute y -> y^h; the index becomes h^2 * index."""
        if h < 1:
            raise ValueError("the index rescale needs h >= 1")
        return JacobiForm(
            self.weight,
            self.index * h * h,
            self.eta_character,
            self.series.subst_y_power(h),
        )

    def __str__(self):
        tag = self.name or "jacobi form"
        return (
            f"{tag} (weight {self.weight}, index {self.index}, "
            f"eta character {self.eta_character}):\n{self.series}"
        )

    __repr__ = __str__


def jf_mul(a: JacobiForm, b: JacobiForm) -> JacobiForm:
    """Graded product: weights and indices add, characters add mod 24."""
    return a * b


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    description: str
    witness: str | None = None
    pairs_checked: int = 0

    def __bool__(self):
        return self.passed


def elliptic_check(form: JacobiForm, lam: int = 1) -> CheckResult:
    """Verify the formal y -> q^lam y transformation law at the form's index.

    Compares every stored coefficient with its transform partner whenever the
    partner's q-order is also inside the cap; reports the first mismatch.
    """
    t = form.index
    series = form.series
    if series.ring is not YLAURENT:
        raise TypeError("the elliptic check needs YLaurent coefficients")
    cap = series.cap
    if cap is None:
        cap = max(series.exponents(), default=Fraction(0))
    if cap < 2 * t + 2:
        raise ValueError(f"cap {cap} too small for an index-{t} check (needs >= {2 * t + 2})")
    sign = -1 if (2 * t * lam) % 2 else 1
    shift_q = lam * lam * t
    shift_l = 2 * lam * t
    table = {}
    for e, poly in series.items():
        for l, v in poly.items():
            table[(e, l)] = v
    checked = 0
    mismatches = []
    for (n, l), v in table.items():
        partner = (n + lam * l + shift_q, l + shift_l)
        if partner[0] <= cap:
            checked += 1
            w = table.get(partner, Fraction(0))
            if v != sign * w:
                mismatches.append(((n, l), v, partner, w))
        pre = (n - lam * l + shift_q, l - shift_l)
        if pre[0] <= cap and pre not in table:
            # partner exists but source coefficient is zero: 0 must equal sign * v
            checked += 1
            if v != 0:
                mismatches.append((pre, Fraction(0), (n, l), v))
    desc = f"elliptic transformation (lambda={lam}) at index {t}"
    if mismatches:
        (src, v, dst, w) = min(mismatches)
        witness = (
            f"coefficient at q^{src[0]} y^{src[1]} is {v} but "
            f"{'-' if sign < 0 else ''}f{dst} = {sign * w}"
        )
        return CheckResult(False, desc, witness, checked)
    if checked == 0:
        return CheckResult(False, desc, "no coefficient pairs lie inside the cap", 0)
    return CheckResult(True, desc, None, checked)
