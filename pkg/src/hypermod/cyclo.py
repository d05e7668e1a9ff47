"""Exact arithmetic in Q(zeta_M): power-basis elements modulo the M-th
cyclotomic polynomial, Galois automorphisms, and a diagnostic complex
embedding with interval enclosures."""

from __future__ import annotations

import math
import threading
from fractions import Fraction

_PHI_CACHE: dict[int, tuple[int, ...]] = {}
_PHI_LOCK = threading.Lock()


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of Phi_m, computed by exact division of x^m - 1
    by the product of the lower cyclotomic polynomials.  Cached per conductor;
    the cache is write-once per key and safe for concurrent readers."""
    if m < 1:
        raise ValueError("conductor must be positive")
    cached = _PHI_CACHE.get(m)
    if cached is not None:
        return cached
    with _PHI_LOCK:
        cached = _PHI_CACHE.get(m)
        if cached is not None:
            return cached
        if m == 1:
            poly = (-1, 1)
        else:
            num = [0] * (m + 1)
            num[0], num[m] = -1, 1
            den = [1]
            for d in range(1, m):
                if m % d == 0:
                    phi_d = list(cyclotomic_poly(d))
                    new = [0] * (len(den) + len(phi_d) - 1)
                    for i, a in enumerate(den):
                        if a:
                            for j, b in enumerate(phi_d):
                                new[i + j] += a * b
                    den = new
            poly = tuple(_poly_divmod_exact(num, den))
        _PHI_CACHE[m] = poly
        return poly


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


class CycloElement:
    """Element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^{phi(M)-1}."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        d = len(cyclotomic_poly(m)) - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > d:
            coeffs = _reduce_mod_phi(m, coeffs)
        coeffs += [Fraction(0)] * (d - len(coeffs))
        self.coeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, m: int, value) -> "CycloElement":
        return cls(m, [Fraction(value)])

    @classmethod
    def zeta_pow(cls, m: int, j: int) -> "CycloElement":
        j %= m
        coeffs = [Fraction(0)] * (j + 1)
        coeffs[j] = Fraction(1)
        return cls(m, coeffs)

    @classmethod
    def from_exponent_vector(cls, m: int, vec) -> "CycloElement":
        """(c_0, ..., c_{M-1}) meaning sum c_j * zeta^j."""
        return cls(m, list(vec))

    # -- plumbing ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycloElement):
            if other.m == self.m:
                return other
            if other.is_rational():
                return CycloElement.from_rational(self.m, other.as_rational())
            if self.is_rational():
                return None  # caller retries reflected
            raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")
        if isinstance(other, (int, Fraction)):
            return CycloElement.from_rational(self.m, other)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElement.from_rational(self.m, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        if other.m != self.m:
            if self.is_rational() and other.is_rational():
                return self.as_rational() == other.as_rational()
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash((self.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElement(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloElement(self.m, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "CycloElement":
        """Multiply by the product of the nontrivial conjugates over the norm."""
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        conj = CycloElement.from_rational(self.m, 1)
        for c in range(2, self.m + 1):
            if math.gcd(c, self.m) == 1 and c % self.m != 1:
                conj = conj * self.aut(c)
        norm = self * conj
        if not norm.is_rational():
            raise ArithmeticError("norm failed to be rational")
        return conj * (Fraction(1) / norm.as_rational())

    def aut(self, c: int) -> "CycloElement":
        """Image under zeta -> zeta^c, gcd(c, M) = 1."""
        if math.gcd(c, self.m) != 1:
            raise ValueError(f"c={c} not coprime to {self.m}")
        vec = [Fraction(0)] * self.m
        for j, a in enumerate(self.coeffs):
            if a:
                vec[(j * c) % self.m] += a
        return CycloElement.from_exponent_vector(self.m, vec)

    def conj(self) -> "CycloElement":
        return self.aut(self.m - 1) if self.m > 2 else self

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def embed_complex(self, precision: int = 64):
        """Enclosure of the image under zeta -> exp(2*pi*i/M).

        Returns an (re, im) pair of mpmath interval numbers.  Diagnostic only;
        nothing exact depends on it.
        """
        from mpmath import iv

        old = iv.prec
        try:
            iv.prec = precision + 10
            re = iv.mpf(0)
            im = iv.mpf(0)
            for j, a in enumerate(self.coeffs):
                if a:
                    af = iv.mpf(a.numerator) / a.denominator
                    ang = 2 * iv.pi * j / self.m
                    re += af * iv.cos(ang)
                    im += af * iv.sin(ang)
            return re, im
        finally:
            iv.prec = old

    def to_json(self) -> dict:
        return {"M": self.m, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycloElement":
        return cls(int(data["M"]), [Fraction(c) for c in data["coeffs"]])

    def __repr__(self):
        return f"CycloElement(M={self.m}, {list(map(str, self.coeffs))})"


def _reduce_mod_phi(m: int, coeffs: list[Fraction]) -> list[Fraction]:
    phi = cyclotomic_poly(m)
    d = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(d + 1):
                coeffs[i - d + j] -= c * phi[j]
    return coeffs[:d]
