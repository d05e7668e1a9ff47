"""Hypergeometric data: parameter multisets, conjugation, and the (r,s) family.

Rationals are `fractions.Fraction` throughout; no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Parse CLI datum syntax like ``1/2, 1/2, 1/4`` (whitespace tolerated)."""
    parts = [s for s in text.replace(";", ",").split(",") if s.strip()]
    if not parts:
        raise ValueError(f"empty parameter list: {text!r}")
    return tuple(parse_rational(s) for s in parts)


def frac_part(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def lcd(values) -> int:
    out = 1
    for v in values:
        out = out * v.denominator // math.gcd(out, v.denominator)
    return out


@dataclass(frozen=True)
class HyperDatum:
    """A pair of rational parameter tuples (alpha, beta).

    The user-given pairing order is retained: the inductive character sum
    depends on it, while the normalized H does not.  Entries of alpha lie in
    (0,1), entries of beta in (0,1].
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        beta = tuple(Fraction(b) for b in self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if len(alpha) != len(beta) or not alpha:
            raise ValueError("alpha and beta must be nonempty of equal length")
        if not all(0 < a < 1 for a in alpha):
            raise ValueError("alpha entries must lie in (0,1)")
        if not all(0 < b <= 1 for b in beta):
            raise ValueError("beta entries must lie in (0,1]")

    @classmethod
    def parse(cls, alpha_text: str, beta_text: str) -> "HyperDatum":
        return cls(parse_rational_list(alpha_text), parse_rational_list(beta_text))

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def m(self) -> int:
        """Least positive common denominator of all parameters."""
        return lcd(self.alpha + self.beta)

    @property
    def gamma(self) -> Fraction:
        return -1 + sum(q - r for r, q in zip(self.alpha, self.beta))

    def is_primitive(self) -> bool:
        return all(
            (r - q).denominator != 1 for r in self.alpha for q in self.beta
        )

    def conjugate(self, c: int) -> "HyperDatum":
        """Parameter-wise x -> {c*x}, keeping beta entries equal to 1 at 1."""
        m = self.m
        if math.gcd(c, m) != 1:
            raise ValueError(f"c={c} not coprime to M={m}")
        alpha = tuple(frac_part(c * r) for r in self.alpha)
        beta = tuple(ONE if q == 1 else frac_part(c * q) for q in self.beta)
        return HyperDatum(alpha, beta)

    def is_defined_over_q(self) -> bool:
        """True iff both parameter multisets are stable under all conjugations."""
        m = self.m
        a0 = sorted(self.alpha)
        b0 = sorted(self.beta)
        for c in range(2, m):
            if math.gcd(c, m) != 1:
                continue
            hd = self.conjugate(c)
            if sorted(hd.alpha) != a0 or sorted(hd.beta) != b0:
                return False
        return True

    def sorted_star(self) -> "HyperDatum":
        """Both tuples ascending: the ordering the supercongruence engine uses."""
        return HyperDatum(tuple(sorted(self.alpha)), tuple(sorted(self.beta)))

    def thm21_split(self):
        """(alpha_flat, r_n, q_n): the last pair is the distinguished one."""
        return self.alpha[:-1], self.alpha[-1], self.beta[-1]

    @property
    def n_hat(self) -> int:
        """Number of beta entries not equal to 1."""
        return sum(1 for q in self.beta if q != 1)

    def __str__(self):
        return "{{%s},{%s}}" % (
            ",".join(map(str, self.alpha)),
            ",".join(map(str, self.beta)),
        )


@dataclass(frozen=True)
class ShapeReport:
    thm21_shape: bool
    thm24_ordering: bool
    beta_ones: int
    n_hat: int


def validate_theorem_shapes(hd: HyperDatum) -> ShapeReport:
    """Check both theorem orderings without picking a canonical one.

    thm21_shape treats the last (alpha, beta) pair as distinguished and asks
    the remaining beta entries to be 1; thm24_ordering sorts both tuples
    ascending and checks q_i > r_{i+2} with at least two trailing 1s.
    """
    n = hd.n
    flat, r_n, q_n = hd.thm21_split()
    sflat = sorted(flat)
    thm21 = (
        all(q == 1 for q in hd.beta[:-1])
        and 0 < r_n < q_n <= 1
        and all(0 < r < 1 for r in sflat)
        and (n < 3 or sflat[1] < q_n)
    )
    a = sorted(hd.alpha)
    b = sorted(hd.beta)
    thm24 = (
        n >= 2
        and b[-1] == 1
        and b[-2] == 1
        and all(b[i] > a[i + 2] for i in range(n - 2))
    )
    return ShapeReport(
        thm21_shape=thm21,
        thm24_ordering=thm24,
        beta_ones=sum(1 for q in hd.beta if q == 1),
        n_hat=hd.n_hat,
    )


@dataclass(frozen=True)
class S2Pair:
    r: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))

    @property
    def m(self) -> int:
        return lcd((Fraction(1, 2), self.r, self.s))


def s2_membership(pair: S2Pair) -> bool:
    """The two-parameter family condition: 0<r<s<3/2, r!=1, s!=1/2, 24s and 8(r+s) integral."""
    r, s = pair.r, pair.s
    return (
        0 < r < s < Fraction(3, 2)
        and r != 1
        and s != Fraction(1, 2)
        and (24 * s).denominator == 1
        and (8 * (r + s)).denominator == 1
    )


def conjugate_pair(pair: S2Pair, c: int) -> S2Pair:
    """r_c = {cr}; s_c = {cs}, bumped by 1 when {cr} > {cs}.  Stays in the family."""
    if not s2_membership(pair):
        raise ValueError(f"{pair} not in the (r,s) family")
    if math.gcd(c, pair.m) != 1:
        raise ValueError(f"c={c} not coprime to {pair.m}")
    rc = frac_part(c * pair.r)
    sc = frac_part(c * pair.s)
    if rc > sc:
        sc += 1
    out = S2Pair(rc, sc)
    assert s2_membership(out)
    return out


def level_multiplier(r: Fraction) -> int:
    """N(r) = 48/gcd(24r, 24): the rescaling that makes the family level-integral."""
    r = Fraction(r)
    t = 24 * r
    if t.denominator != 1:
        raise ValueError(f"24*{r} is not an integer")
    return 48 // math.gcd(int(t), 24)
