"""Constructors for the named building-block expansions.

Everything is generated to an explicit q-order: the odd Jacobi theta series
(as a sum over odd integers and as a triple product), the Dedekind eta
product, the discriminant, Eisenstein series G_2k and their normalized
variants, the logarithmic derivative D(theta)/theta, normalized Weierstrass
jets, the level-two theta quotients, the quintuple product, and the weak
Jacobi forms of small index that generate the weight-0 ring.

Constructors are memoized per (name, qcap); all outputs are immutable.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .coefficients import YLaurent, YRational
from .jacobi import JacobiForm
from .series import CYC, RAT, YLAURENT, YRATIONAL, FourierSeries

HALF = Fraction(1, 2)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (B_1 = -1/2), by the defining recurrence."""
    if m == 0:
        return Fraction(1)
    row = [Fraction(1)]
    for n in range(1, m + 1):
        binom = 1
        acc = Fraction(0)
        for j in range(n):
            acc += binom * row[j]
            binom = binom * (n + 1 - j) // (j + 1)
        row.append(-acc / (n + 1))
    return row[m]


def sigma(n: int, k: int = 1) -> int:
    """Divisor power sum sigma_k(n)."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += d**k
    return total


# ---------------------------------------------------------------------------
# one-variable series (rational coefficients)
# ---------------------------------------------------------------------------


def eta_series(qcap) -> FourierSeries:
    """eta = q^(1/24) prod (1 - q^n)."""
    qcap = Fraction(qcap)
    acc = FourierSeries.one(RAT, qcap)
    n = 1
    while n <= qcap:
        acc = acc * FourierSeries(RAT, {0: Fraction(1), n: Fraction(-1)})
        n += 1
    return acc.shifted(Fraction(1, 24)).truncated(qcap)


def delta_series(qcap) -> FourierSeries:
    """Delta = q prod (1 - q^n)^24."""
    qcap = Fraction(qcap)
    acc = FourierSeries.one(RAT, qcap)
    n = 1
    while n <= qcap:
        acc = acc * FourierSeries(RAT, {0: Fraction(1), n: Fraction(-1)}) ** 24
        n += 1
    return acc.shifted(1).truncated(qcap)


def g_series(k: int, qcap) -> FourierSeries:
    """G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n for even k >= 2."""
    if k < 2 or k % 2:
        raise ValueError("Eisenstein weight must be even and >= 2")
    qcap = Fraction(qcap)
    coeffs = {Fraction(0): -bernoulli(k) / (2 * k)}
    n = 1
    while n <= qcap:
        coeffs[Fraction(n)] = Fraction(sigma(n, k - 1))
        n += 1
    return FourierSeries(RAT, coeffs, qcap)


def e_series(k: int, qcap) -> FourierSeries:
    """E_k = G_k normalized to constant term 1 (k >= 4; E_2 is not modular)."""
    if k == 2:
        raise ValueError("weight 2 is quasi-modular; use g_series(2, ...)")
    g = g_series(k, qcap)
    return g.scaled(1 / g.coeff(0))


def theta00_const(qcap) -> FourierSeries:
    """theta_00(tau, 0) = sum q^(n^2 / 2)."""
    qcap = Fraction(qcap)
    coeffs = {Fraction(0): Fraction(1)}
    n = 1
    while Fraction(n * n, 2) <= qcap:
        coeffs[Fraction(n * n, 2)] = Fraction(2)
        n += 1
    return FourierSeries(RAT, coeffs, qcap)


def theta01_const(qcap) -> FourierSeries:
    """theta_01(tau, 0) = sum (-1)^n q^(n^2 / 2)."""
    qcap = Fraction(qcap)
    coeffs = {Fraction(0): Fraction(1)}
    n = 1
    while Fraction(n * n, 2) <= qcap:
        coeffs[Fraction(n * n, 2)] = Fraction(2 * (-1) ** n)
        n += 1
    return FourierSeries(RAT, coeffs, qcap)


def theta10_const(qcap) -> FourierSeries:
    """theta_10(tau, 0) = 2 sum q^((2n+1)^2 / 8)."""
    qcap = Fraction(qcap)
    coeffs = {}
    n = 0
    while Fraction((2 * n + 1) ** 2, 8) <= qcap:
        coeffs[Fraction((2 * n + 1) ** 2, 8)] = Fraction(2)
        n += 1
    return FourierSeries(RAT, coeffs, qcap)


# ---------------------------------------------------------------------------
# two-variable theta series
# ---------------------------------------------------------------------------


def theta_sum(qcap) -> FourierSeries:
    """theta = sum over odd n of (-1)^((n-1)/2) q^(n^2/8) y^(n/2)."""
    qcap = Fraction(qcap)
    coeffs = {}
    n = 1
    while Fraction(n * n, 8) <= qcap:
        e = Fraction(n * n, 8)
        poly = coeffs.setdefault(e, {})
        poly[Fraction(n, 2)] = Fraction((-1) ** ((n - 1) // 2))
        poly[Fraction(-n, 2)] = Fraction(-((-1) ** ((n - 1) // 2)))
        n += 2
    return FourierSeries(
        YLAURENT, {e: YLaurent(p) for e, p in coeffs.items()}, qcap
    )


def _product_factor(qexp, ypoly: YLaurent) -> FourierSeries:
    """The factor 1 + q^qexp * ypoly, exact as a polynomial."""
    one = YLaurent.one()
    if qexp == 0:
        return FourierSeries(YLAURENT, {0: one + ypoly})
    return FourierSeries(YLAURENT, {0: one, qexp: ypoly})


def theta_product(qcap) -> FourierSeries:
    """theta = -q^(1/8) y^(-1/2) prod (1-q^(n-1) y)(1-q^n y^(-1))(1-q^n)."""
    qcap = Fraction(qcap)
    acc = FourierSeries.one(YLAURENT, qcap)
    n = 1
    while n - 1 <= qcap:
        acc = acc * _product_factor(n - 1, YLaurent.term(-1, 1))
        if n <= qcap:
            acc = acc * _product_factor(n, YLaurent.term(-1, -1))
            acc = acc * _product_factor(n, YLaurent.from_int(-1))
        n += 1
    prefactor = FourierSeries(
        YLAURENT, {Fraction(1, 8): YLaurent.term(-1, -HALF)}
    )
    return (acc * prefactor).truncated(qcap)


def theta_series(qcap, mode: str = "sum") -> FourierSeries:
    if mode == "sum":
        return theta_sum(qcap)
    if mode == "product":
        return theta_product(qcap)
    raise ValueError(f"unknown theta mode {mode!r}")


def theta00_series(qcap) -> FourierSeries:
    """theta_00(tau, z) = sum q^(n^2/2) y^n."""
    qcap = Fraction(qcap)
    coeffs = {Fraction(0): YLaurent.one()}
    n = 1
    while Fraction(n * n, 2) <= qcap:
        coeffs[Fraction(n * n, 2)] = YLaurent({n: 1, -n: 1})
        n += 1
    return FourierSeries(YLAURENT, coeffs, qcap)


def theta01_series(qcap) -> FourierSeries:
    """theta_01(tau, z) = sum (-1)^n q^(n^2/2) y^n."""
    qcap = Fraction(qcap)
    coeffs = {Fraction(0): YLaurent.one()}
    n = 1
    while Fraction(n * n, 2) <= qcap:
        s = (-1) ** n
        coeffs[Fraction(n * n, 2)] = YLaurent({n: s, -n: s})
        n += 1
    return FourierSeries(YLAURENT, coeffs, qcap)


def theta10_series(qcap) -> FourierSeries:
    """theta_10(tau, z) = sum q^((2n+1)^2/8) y^((2n+1)/2)."""
    qcap = Fraction(qcap)
    coeffs = {}
    n = 0
    while Fraction((2 * n + 1) ** 2, 8) <= qcap:
        e = Fraction((2 * n + 1) ** 2, 8)
        coeffs[e] = YLaurent({Fraction(2 * n + 1, 2): 1, Fraction(-(2 * n + 1), 2): 1})
        n += 1
    return FourierSeries(YLAURENT, coeffs, qcap)


def theta_3half_product(qcap) -> FourierSeries:
    """Quintuple product
    q^(1/24) y^(-1/2) prod (1+q^(n-1)y)(1+q^n/y)(1-q^(2n-1)y^2)(1-q^(2n-1)/y^2)(1-q^n).
    """
    qcap = Fraction(qcap)
    acc = FourierSeries.one(YLAURENT, qcap)
    n = 1
    while n - 1 <= qcap:
        acc = acc * _product_factor(n - 1, YLaurent.term(1, 1))
        if n <= qcap:
            acc = acc * _product_factor(n, YLaurent.term(1, -1))
            acc = acc * _product_factor(n, YLaurent.from_int(-1))
        if 2 * n - 1 <= qcap:
            acc = acc * _product_factor(2 * n - 1, YLaurent.term(-1, 2))
            acc = acc * _product_factor(2 * n - 1, YLaurent.term(-1, -2))
        n += 1
    prefactor = FourierSeries(YLAURENT, {Fraction(1, 24): YLaurent.term(1, -HALF)})
    return (acc * prefactor).truncated(qcap)


# ---------------------------------------------------------------------------
# logarithmic derivative and Weierstrass jets
# ---------------------------------------------------------------------------


def dlog_theta_series(qcap) -> FourierSeries:
    """D(theta)/theta with D = y d/dy, from the triple product:

    q^0 term (y+1)/(2(y-1)); q^m term -sum_{k | m} (y^k - y^-k) for m >= 1.
    """
    qcap = Fraction(qcap)
    coeffs = {
        Fraction(0): YRational(
            YLaurent({1: HALF, 0: HALF}), YLaurent({1: 1, 0: -1})
        )
    }
    m = 1
    while m <= qcap:
        poly = {}
        for k in range(1, m + 1):
            if m % k == 0:
                poly[Fraction(k)] = poly.get(Fraction(k), Fraction(0)) - 1
                poly[Fraction(-k)] = poly.get(Fraction(-k), Fraction(0)) + 1
        coeffs[Fraction(m)] = YRational(YLaurent(poly))
        m += 1
    return FourierSeries(YRATIONAL, coeffs, qcap)


def wp_jets(nmax: int, qcap) -> list[FourierSeries]:
    """Normalized Weierstrass jets [P_2, ..., P_nmax].

    P_2 = -D^2 log theta - 2 G_2 and P_{n+1} = D P_n, with D = y d/dy; the
    coefficients are rational functions of y with poles only at y = 1.
    """
    if nmax < 2:
        raise ValueError("jets start at order 2")
    qcap = Fraction(qcap)
    dlog = dlog_theta_series(qcap)
    g2 = g_series(2, qcap).map_coeffs(YRational.from_int, YRATIONAL)
    p = -(dlog.y_ddy()) - g2.scaled(2)
    jets = [p]
    for _ in range(nmax - 2):
        p = p.y_ddy()
        jets.append(p)
    return jets


# ---------------------------------------------------------------------------
# named weak Jacobi forms
# ---------------------------------------------------------------------------

_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def _cached(name: str, qcap, builder):
    key = (name, Fraction(qcap))
    with _CACHE_LOCK:
        hit = _CACHE.get(key)
    if hit is not None:
        return hit
    value = builder(Fraction(qcap))
    with _CACHE_LOCK:
        _CACHE[key] = value
    return value


def theta(qcap, mode: str = "sum") -> JacobiForm:
    series = _cached(f"theta:{mode}", qcap, lambda c: theta_series(c, mode))
    return JacobiForm(HALF, HALF, 3, series, "theta")


def eta(qcap) -> JacobiForm:
    series = _cached("eta", qcap, eta_series)
    return JacobiForm(HALF, 0, 1, series.to_ylaurent(), "eta")


def delta(qcap) -> JacobiForm:
    series = _cached("delta", qcap, delta_series)
    return JacobiForm(12, 0, 0, series.to_ylaurent(), "delta")


def g2k(k: int, qcap) -> JacobiForm:
    series = _cached(f"G{k}", qcap, lambda c: g_series(k, c))
    return JacobiForm(k, 0, 0, series.to_ylaurent(), f"G{k}")


def ek(k: int, qcap) -> JacobiForm:
    series = _cached(f"E{k}", qcap, lambda c: e_series(k, c))
    return JacobiForm(k, 0, 0, series.to_ylaurent(), f"E{k}")


def phi_m1_half(qcap) -> JacobiForm:
    def build(c):
        th = theta_series(c + 1)
        eta3_inv = (eta_series(c + 1) ** 3).invert().to_ylaurent()
        return (th * eta3_inv).truncated(c)

    return JacobiForm(-1, HALF, 0, _cached("phi_m1_half", qcap, build), "phi_m1_half")


def phi_m2_1(qcap) -> JacobiForm:
    def build(c):
        s = phi_m1_half(c).series
        return s * s

    return JacobiForm(-2, 1, 0, _cached("phi_m2_1", qcap, build), "phi_m2_1")


def phi_0_1(qcap) -> JacobiForm:
    """12 * P_2 * theta^2/eta^6: the weight-0 index-1 generator, q^0 = y+10+1/y."""

    def build(c):
        p2 = wp_jets(2, c + 1)[0]
        base = phi_m2_1(c + 1).series.to_yrational()
        return (p2 * base).scaled(12).to_ylaurent().truncated(c)

    return JacobiForm(0, 1, 0, _cached("phi_0_1", qcap, build), "phi_0_1")


def phi_0_2(qcap) -> JacobiForm:
    """Weight-0 index-2 generator via its level-12 theta sum, q^0 = y+4+1/y."""

    def build(c):
        work = c + Fraction(1, 3)
        coeffs = {}
        bound = 24 * work + 4
        m = 1
        while 3 * m * m <= bound:
            for sm in (m, -m):
                if sm % 2 == 0:
                    continue
                chi4 = 1 if sm % 4 == 1 else -1
                n = 1
                while 3 * m * m + n * n <= bound:
                    for sn in (n, -n):
                        r = sn % 12
                        if r in (1, 11):
                            chi12 = 1
                        elif r in (5, 7):
                            chi12 = -1
                        else:
                            continue
                        e = Fraction(3 * sm * sm + sn * sn, 24)
                        poly = coeffs.setdefault(e, {})
                        le = Fraction(sm + sn, 2)
                        poly[le] = poly.get(le, Fraction(0)) + Fraction(
                            chi4 * chi12 * (3 * sm - sn), 2
                        )
                    n += 2
            m += 2
        series = FourierSeries(
            YLAURENT, {e: YLaurent(p) for e, p in coeffs.items()}, work
        )
        eta4_inv = (eta_series(work) ** 4).invert().to_ylaurent()
        return (series * eta4_inv).truncated(c)

    return JacobiForm(0, 2, 0, _cached("phi_0_2", qcap, build), "phi_0_2")


def phi_0_3half(qcap) -> JacobiForm:
    """theta(tau, 2z)/theta(tau, z), weight 0, index 3/2."""

    def build(c):
        th = theta(c + 1)
        return (th.hecke_rescale(2) / th).series.truncated(c)

    return JacobiForm(0, Fraction(3, 2), 0, _cached("phi_0_3half", qcap, build), "phi_0_3half")


def phi_0_3(qcap) -> JacobiForm:
    def build(c):
        s = phi_0_3half(c).series
        return s * s

    return JacobiForm(0, 3, 0, _cached("phi_0_3", qcap, build), "phi_0_3")


def phi_0_4(qcap) -> JacobiForm:
    """theta(tau, 3z)/theta(tau, z), weight 0, index 4."""

    def build(c):
        th = theta(c + 1)
        return (th.hecke_rescale(3) / th).series.truncated(c)

    return JacobiForm(0, 4, 0, _cached("phi_0_4", qcap, build), "phi_0_4")


def xi_0_6(qcap) -> JacobiForm:
    """(theta/eta)^12 = Delta * (theta/eta^3)^12, the weight-0 index-6 cusp-like form."""

    def build(c):
        th = theta_series(c + 2)
        eta_inv = eta_series(c + 2).invert().to_ylaurent()
        return ((th * eta_inv) ** 12).truncated(c)

    return JacobiForm(0, 6, 0, _cached("xi_0_6", qcap, build), "xi_0_6")


def theta_3half(qcap) -> JacobiForm:
    series = _cached("theta_3half", qcap, theta_3half_product)
    return JacobiForm(HALF, Fraction(3, 2), 1, series, "theta_3half")


def theta00(qcap) -> JacobiForm:
    return JacobiForm(HALF, HALF, 0, _cached("theta00", qcap, theta00_series), "theta00")


def theta01(qcap) -> JacobiForm:
    return JacobiForm(HALF, HALF, 0, _cached("theta01", qcap, theta01_series), "theta01")


def theta10(qcap) -> JacobiForm:
    return JacobiForm(HALF, HALF, 0, _cached("theta10", qcap, theta10_series), "theta10")


class Level2Thetas:
    """The two-variable level-2 thetas, their z = 0 normalizations and gamma."""

    __slots__ = ("theta00", "theta01", "theta10", "xi00", "xi01", "xi10", "gamma")

    def __init__(self, qcap):
        qcap = Fraction(qcap)
        if qcap < HALF:
            raise ValueError("level-2 thetas need qcap >= 1/2")
        work = qcap + 1
        self.theta00 = theta00_series(work).truncated(qcap)
        self.theta01 = theta01_series(work).truncated(qcap)
        self.theta10 = theta10_series(work).truncated(qcap)
        inv00 = theta00_const(work).invert().to_ylaurent()
        inv01 = theta01_const(work).invert().to_ylaurent()
        inv10 = theta10_const(work).invert().to_ylaurent()
        self.xi00 = (theta00_series(work) * inv00).truncated(qcap)
        self.xi01 = (theta01_series(work) * inv01).truncated(qcap)
        self.xi10 = (theta10_series(work) * inv10).truncated(qcap)
        num = theta00_const(work).subst_q_power(2)
        den = theta01_const(work).subst_q_power(2)
        self.gamma = (num.truncated(work) * den.truncated(work).invert()).truncated(qcap)


def level2_thetas(qcap) -> Level2Thetas:
    return _cached("level2", qcap, Level2Thetas)


def gamma_series(qcap) -> FourierSeries:
    """gamma = theta_00(2 tau)/theta_01(2 tau), constant term 1."""
    return level2_thetas(qcap).gamma


_STANDARD = {
    "theta": theta,
    "theta00": theta00,
    "theta01": theta01,
    "theta10": theta10,
    "eta": eta,
    "delta": delta,
    "phi_m1_half": phi_m1_half,
    "phi_m2_1": phi_m2_1,
    "phi_0_1": phi_0_1,
    "phi_0_3half": phi_0_3half,
    "phi_0_2": phi_0_2,
    "phi_0_3": phi_0_3,
    "phi_0_4": phi_0_4,
    "xi_0_6": xi_0_6,
    "theta_3half": theta_3half,
}


def form_names() -> list[str]:
    names = sorted(_STANDARD)
    names += [f"G{k}" for k in (2, 4, 6, 8, 10, 12)]
    names += [f"E{k}" for k in (4, 6)]
    names += ["dlog_theta"] + [f"wp_jet_{n}" for n in range(2, 7)]
    return names


def standard_forms(name: str, qcap) -> JacobiForm:
    """Look up a named expansion; raises KeyError for unknown names."""
    if name in _STANDARD:
        return _STANDARD[name](qcap)
    if name.startswith("G") and name[1:].isdigit():
        return g2k(int(name[1:]), qcap)
    if name.startswith("E") and name[1:].isdigit():
        return ek(int(name[1:]), qcap)
    if name == "dlog_theta":
        series = _cached("dlog_theta", qcap, dlog_theta_series)
        return JacobiForm(1, 0, 0, series, "dlog_theta")
    if name.startswith("wp_jet_") and name[7:].isdigit():
        n = int(name[7:])
        series = _cached(f"wp_jet_{n}", qcap, lambda c: wp_jets(n, c)[n - 2])
        return JacobiForm(n, 0, 0, series, name)
    raise KeyError(f"unknown form name {name!r}")


WEIGHT0_GENERATORS = ("phi_0_1", "phi_0_2", "phi_0_3", "phi_0_4")
