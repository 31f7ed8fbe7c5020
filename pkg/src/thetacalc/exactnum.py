"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A CycNum is an element of Q[x]/(Phi_n(x)) stored as a dense coefficient
vector of length phi(n) over exact rationals, in the power basis
1, zeta, ..., zeta^{phi(n)-1}.  Working modulo the cyclotomic polynomial
Phi_n (irreducible) rather than x^n - 1 keeps the quotient a field, so
elements can be inverted; negative powers are needed because the sine
products carry the exponent 1 - g, which is negative for genus g >= 2.

The quantities of interest are the sine squares

    |2 sin(pi d / n)|^2 = 2 - zeta_n^d - zeta_n^{-d},

so everything stays inside the conductor-n field; no half-angle roots of
unity ever appear.

A floating cross-check mode (embed) evaluates a CycNum at e^{2 pi i / n}
with mpmath at a configurable precision.  It is never authoritative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

Rational = Fraction

DEFAULT_EMBED_PREC = 80  # bits of mantissa for the floating cross-check


class HypothesisError(ValueError):
    """An input lies outside the hypothesis under which a formula holds."""


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold failed: an implementation bug."""


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as ((p, exponent), ...).

    >>> factorize(360)
    ((2, 3), (3, 2), (5, 1))
    >>> factorize(1)
    ()
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    """Euler's totient.

    >>> [euler_phi(n) for n in (1, 2, 6, 12, 45)]
    [1, 1, 2, 4, 24]
    """
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def _int_poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _int_poly_div_exact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    # Exact division of integer polynomials; den must be monic and divide num.
    num_l = list(num)
    d = len(den) - 1
    q = [0] * (len(num) - d)
    for i in range(len(q) - 1, -1, -1):
        c = num_l[i + d]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num_l[i + j] -= c * dj
    if any(num_l):
        raise ArithmeticError("division was not exact")
    return tuple(q)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n(x), ascending degree.

    Computed by exact division of x^n - 1 by the Phi_d for proper
    divisors d of n.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError(f"no cyclotomic polynomial for {n}")
    num = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_div_exact(num, cyclotomic_polynomial(d))
    return num


def _reduce_mod_phi(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    # Reduce an arbitrary-degree polynomial in zeta_n modulo Phi_n and pad
    # to length phi(n).  Phi_n is monic, so this is exact.
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for j in range(deg + 1):
                work[i - deg + j] -= c * phi[j]
    work = work[:deg]
    work += [Fraction(0)] * (deg - len(work))
    return tuple(Fraction(c) for c in work)


@dataclass(frozen=True)
class CycNum:
    """An element of Q(zeta_n), coefficients in the basis 1..zeta^{phi(n)-1}."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.conductor < 1:
            raise ValueError(f"conductor must be positive, got {self.conductor}")
        if len(self.coeffs) != euler_phi(self.conductor):
            raise ValueError(
                f"need {euler_phi(self.conductor)} coefficients for conductor "
                f"{self.conductor}, got {len(self.coeffs)}"
            )

    @classmethod
    def from_poly(cls, n: int, coeffs: list[Fraction]) -> CycNum:
        return cls(n, _reduce_mod_phi(coeffs, n))

    @classmethod
    def from_rational(cls, n: int, value: Fraction | int) -> CycNum:
        return cls.from_poly(n, [Fraction(value)])

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> CycNum:
        """zeta_n^power, any integer power."""
        power %= n
        return cls.from_poly(n, [Fraction(0)] * power + [Fraction(1)])

    def _check_same_field(self, other: CycNum) -> None:
        if self.conductor != other.conductor:
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )

    def _coerce(self, other: CycNum | Fraction | int) -> CycNum:
        if isinstance(other, CycNum):
            self._check_same_field(other)
            return other
        return CycNum.from_rational(self.conductor, other)

    def __add__(self, other: CycNum | Fraction | int) -> CycNum:
        o = self._coerce(other)
        return CycNum(self.conductor, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CycNum | Fraction | int) -> CycNum:
        return self + (-self._coerce(other))

    def __rsub__(self, other: CycNum | Fraction | int) -> CycNum:
        return (-self) + other

    def __mul__(self, other: CycNum | Fraction | int) -> CycNum:
        if not isinstance(other, CycNum):
            q = Fraction(other)
            return CycNum(self.conductor, tuple(a * q for a in self.coeffs))
        self._check_same_field(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycNum.from_poly(self.conductor, prod)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Multiplicative inverse via extended gcd with Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert zero")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        g, s = _poly_half_xgcd(list(self.coeffs), phi)
        # Phi_n is irreducible over Q, so the gcd is a nonzero constant.
        if len(g) != 1:
            raise ConsistencyError("gcd with the cyclotomic polynomial is not constant")
        inv_c = 1 / g[0]
        return CycNum.from_poly(self.conductor, [c * inv_c for c in s])

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.from_rational(self.conductor, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other: CycNum | Fraction | int) -> CycNum:
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def galois(self, t: int) -> CycNum:
        """Image under zeta -> zeta^t; t must be a unit mod the conductor."""
        n = self.conductor
        if math.gcd(t, n) != 1:
            raise ValueError(f"{t} is not a unit mod {n}")
        out = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            out[(j * t) % n] += c
        return CycNum.from_poly(n, out)

    def conjugate(self) -> CycNum:
        """Complex conjugation, zeta -> zeta^{-1}."""
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def lift(self, new_conductor: int) -> CycNum:
        """Rewrite in Q(zeta_m) for a multiple m of the conductor."""
        n = self.conductor
        if new_conductor % n != 0:
            raise ValueError(f"{new_conductor} is not a multiple of {n}")
        step = new_conductor // n
        out = [Fraction(0)] * (len(self.coeffs) * step - step + 1 or 1)
        for j, c in enumerate(self.coeffs):
            out[j * step] += c
        return CycNum.from_poly(new_conductor, out)

    def embed(self, prec_bits: int = DEFAULT_EMBED_PREC) -> "mpmath.mpc":
        """Numeric value at zeta_n = e^{2 pi i / n}; cross-check only."""
        with mpmath.workprec(prec_bits):
            z = mpmath.exp(2j * mpmath.pi / self.conductor)
            total = mpmath.mpc(0)
            for j in range(len(self.coeffs) - 1, -1, -1):
                c = self.coeffs[j]
                total = total * z + mpmath.mpf(c.numerator) / c.denominator
            return total


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        d = len(a) - len(b)
        q[d] = c
        for j in range(len(b)):
            a[d + j] -= c * b[j]
        _poly_trim(a)
    return q, a


def _poly_half_xgcd(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Return (g, s) with s*a = g mod b and g = gcd(a, b)."""
    r0, r1 = _poly_trim(list(a)), _poly_trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        prod = _int_like_poly_mul(q, s1)
        s0, s1 = s1, _poly_sub(s0, prod)
    return r0, s0


def _int_like_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_inv(a: CycNum) -> CycNum:
    return a.inverse()


def extract_rational(a: CycNum) -> Fraction:
    """The value of a rational CycNum as a Fraction.

    A non-rational input signals a bug in a formula (all the sums this
    library computes are provably rational), so the error carries the
    largest residual coefficient.
    """
    residual = [abs(c) for c in a.coeffs[1:]]
    if any(residual):
        worst = max(residual)
        raise ConsistencyError(
            f"expected a rational value; max residual coefficient {worst} "
            f"(~{float(worst):.3g}) at conductor {a.conductor}"
        )
    return a.coeffs[0]


def sine_square(n: int, d: int) -> CycNum:
    """|2 sin(pi d / n)|^2 = 2 - zeta_n^d - zeta_n^{-d} as a CycNum."""
    if d % n == 0:
        raise ValueError("angle is a multiple of pi; the sine vanishes")
    return CycNum.from_rational(n, 2) - CycNum.zeta(n, d) - CycNum.zeta(n, -d)
