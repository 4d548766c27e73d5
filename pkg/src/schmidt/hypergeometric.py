"""Terminating hypergeometric sums at unit argument, evaluated exactly.

A series here is the finite sum over l = 0..m of

    prod_i (p_i)_l / ( l! * prod_j (q_j)_l ),

with some numerator parameter equal to -m so that every later term is
zero; the argument is always 1 and stays implicit. Pole policy: a
denominator Pochhammer that vanishes at an index whose numerator product
is still nonzero raises PoleError, while a vanishing numerator merely
truncates the sum early. Nothing is regularized.

The classical evaluations checked against these series are Dougall's
very-well-poised 5F4 summation, Whipple's 7F6-to-4F3 transformation, and
Andrews's terminating multiple-series generalization of the latter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import DivisibilityError, binomial, factorial, pochhammer

Rational = Fraction | int


class PoleError(ArithmeticError):
    """A denominator Pochhammer vanished before the series terminated."""


def _fractions(params) -> tuple[Fraction, ...]:
    return tuple(Fraction(p) for p in params)


@dataclass(frozen=True)
class HypSeries:
    """Numerator and denominator parameter lists plus the termination index m."""

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", _fractions(self.numerator))
        object.__setattr__(self, "denominator", _fractions(self.denominator))
        if self.m < 0:
            raise ValueError(f"termination index must be >= 0, got {self.m}")
        if -self.m not in self.numerator:
            raise ValueError(f"no numerator parameter equals -m = {-self.m}")


@dataclass(frozen=True)
class WellPoisedSpec:
    """Very-well-poised parameter set: base a, the (b_i, c_i) pairs, and m.

    Expansion inserts the (1 + a/2, a/2) special pair and the terminating
    column itself; callers never supply them. a = 0 would put a zero
    parameter in the denominator and is rejected outright.
    """

    a: Fraction
    pairs: tuple[tuple[Fraction, Fraction], ...]
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(
            self, "pairs", tuple((Fraction(b), Fraction(c)) for b, c in self.pairs)
        )
        if not self.pairs:
            raise ValueError("need at least one (b, c) pair")
        if self.m < 0:
            raise ValueError(f"termination index must be >= 0, got {self.m}")
        if self.a == 0:
            raise ValueError("a = 0 would put a zero parameter in the denominator")

    @property
    def s(self) -> int:
        return len(self.pairs)

    def expand(self) -> HypSeries:
        """The full series: every numerator/denominator pair sums to 1 + a."""
        a = self.a
        numerator = [a, 1 + a / 2]
        denominator = [a / 2]
        for b, c in self.pairs:
            numerator += [b, c]
            denominator += [1 + a - b, 1 + a - c]
        numerator.append(Fraction(-self.m))
        denominator.append(1 + a + self.m)
        return HypSeries(tuple(numerator), tuple(denominator), self.m)


def eval_terminating(series: HypSeries) -> Fraction:
    """Sum the series exactly, term by term via consecutive-term ratios.

    Each step multiplies the previous term by
    prod(p_i + l) / ((l + 1) prod(q_j + l)), one rational operation per
    parameter per term. A zero numerator factor zeroes every later term
    and stops the loop; a zero denominator factor met while the numerator
    side is still nonzero is a pole.
    """
    total = term = Fraction(1)
    for l in range(series.m):
        num = Fraction(1)
        for p in series.numerator:
            num *= p + l
        if num == 0:
            break
        den = Fraction(l + 1)
        for q in series.denominator:
            den *= q + l
        if den == 0:
            raise PoleError(f"denominator parameter hit zero at term {l + 1}")
        term = term * num / den
        total += term
    return total


def dougall_rhs(a: Rational, c: Rational, d: Rational, m: int) -> Fraction:
    """Dougall's evaluation (1+a)_m (1+a-c-d)_m / ((1+a-c)_m (1+a-d)_m)."""
    a, c, d = Fraction(a), Fraction(c), Fraction(d)
    den = pochhammer(1 + a - c, m) * pochhammer(1 + a - d, m)
    if den == 0:
        raise PoleError("denominator Pochhammer of the closed form vanishes")
    return pochhammer(1 + a, m) * pochhammer(1 + a - c - d, m) / den


def check_dougall(a: Rational, c: Rational, d: Rational, m: int) -> bool:
    """Does the very-well-poised 5F4 sum to Dougall's closed form?"""
    series = WellPoisedSpec(Fraction(a), ((Fraction(c), Fraction(d)),), m).expand()
    return eval_terminating(series) == dougall_rhs(a, c, d, m)


def whipple_rhs(
    a: Rational, b: Rational, c: Rational, d: Rational, e: Rational, m: int
) -> Fraction:
    """Whipple's transform: a Dougall-style prefactor in (d, e) times the
    balanced 4F3 with parameters (1+a-b-c, d, e, -m; 1+a-b, 1+a-c, d+e-a-m)."""
    a, b, c, d, e = (Fraction(x) for x in (a, b, c, d, e))
    den = pochhammer(1 + a - d, m) * pochhammer(1 + a - e, m)
    if den == 0:
        raise PoleError("denominator Pochhammer of the prefactor vanishes")
    prefactor = pochhammer(1 + a, m) * pochhammer(1 + a - d - e, m) / den
    series = HypSeries(
        (1 + a - b - c, d, e, Fraction(-m)),
        (1 + a - b, 1 + a - c, d + e - a - m),
        m,
    )
    return prefactor * eval_terminating(series)


def check_whipple(
    a: Rational, b: Rational, c: Rational, d: Rational, e: Rational, m: int
) -> bool:
    """Does the very-well-poised 7F6 equal Whipple's prefactor times 4F3?"""
    pairs = ((Fraction(b), Fraction(c)), (Fraction(d), Fraction(e)))
    series = WellPoisedSpec(Fraction(a), pairs, m).expand()
    return eval_terminating(series) == whipple_rhs(a, b, c, d, e, m)


def _nest(spec: WellPoisedSpec, level: int, partial: int) -> Fraction:
    # partial = l_1 + ... + l_{level-1}. Each level i keeps its own local
    # Pochhammer (1+a-b_i-c_i)_{l_i} but raises the next pair and its own
    # denominators to the cumulative index. Beyond partial = m the trailing
    # (-m) Pochhammer kills every continuation, which bounds each loop.
    a, m, pairs = spec.a, spec.m, spec.pairs
    if level == len(pairs):
        b_last, c_last = pairs[-1]
        num = pochhammer(Fraction(-m), partial)
        den = pochhammer(b_last + c_last - a - m, partial)
        if den == 0:
            if num == 0:
                return Fraction(0)
            raise PoleError("trailing denominator Pochhammer vanished in the nest")
        return num / den
    b_i, c_i = pairs[level - 1]
    b_next, c_next = pairs[level]
    total = Fraction(0)
    for l in range(m - partial + 1):
        cum = partial + l
        num = (
            pochhammer(1 + a - b_i - c_i, l)
            * pochhammer(b_next, cum)
            * pochhammer(c_next, cum)
        )
        den = factorial(l) * pochhammer(1 + a - b_i, cum) * pochhammer(1 + a - c_i, cum)
        if den == 0:
            if num == 0:
                continue
            raise PoleError(f"denominator Pochhammer vanished in the nest at level {level}")
        if num == 0:
            continue
        total += num / den * _nest(spec, level + 1, cum)
    return total


def andrews_rhs(spec: WellPoisedSpec) -> Fraction:
    """Andrews's multiple-series value for the expanded spec.

    A Dougall-style prefactor in the last pair multiplies an (s-1)-fold
    nested sum; the nest collapses to 1 for s = 1 and reproduces Whipple's
    4F3 parameter for parameter at s = 2.
    """
    a, m = spec.a, spec.m
    b_last, c_last = spec.pairs[-1]
    den = pochhammer(1 + a - b_last, m) * pochhammer(1 + a - c_last, m)
    if den == 0:
        raise PoleError("denominator Pochhammer of the prefactor vanishes")
    prefactor = pochhammer(1 + a, m) * pochhammer(1 + a - b_last - c_last, m) / den
    return prefactor * _nest(spec, level=1, partial=0)


def check_andrews(spec: WellPoisedSpec) -> bool:
    """Does the expanded very-well-poised series equal the multiple-sum value?"""
    return eval_terminating(spec.expand()) == andrews_rhs(spec)


def t_as_hypergeometric(n: int, j: int, r: int) -> int:
    """t(n, j, r) as C(n+j,n-j)^r times a terminating (r+2)F(r+1) at unit argument.

    Numerator parameters are (-(2n+1), -(2n-1)/2) plus r copies of -(n-j);
    denominators are (-(2n+1)/2) plus r copies of -(n+j). Termination at
    m = n - j strictly precedes the first possible denominator zero at
    index n + j + 1, so the evaluation can never pole; the halved
    parameters are never integers at integer offsets. The result is
    asserted integral before being returned.
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got n={n}, j={j}")
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got r={r}")
    a = Fraction(-(2 * n + 1))
    series = HypSeries(
        (a, 1 + a / 2) + (Fraction(-(n - j)),) * r,
        (a / 2,) + (Fraction(-(n + j)),) * r,
        n - j,
    )
    value = binomial(n + j, n - j) ** r * eval_terminating(series)
    if value.denominator != 1:
        raise DivisibilityError(value.numerator, value.denominator)
    return value.numerator


def pochhammer_vanishes(x: Rational, m: int) -> bool:
    """(x)_m == 0, i.e. x is an integer in {0, -1, ..., -(m-1)}."""
    x = Fraction(x)
    return x.denominator == 1 and -m < x <= 0


def spec_pole_free(spec: WellPoisedSpec) -> bool:
    """No denominator Pochhammer of the series, the prefactor, or the nested
    sums can vanish at or before the termination index."""
    a, m = spec.a, spec.m
    b_last, c_last = spec.pairs[-1]
    candidates = [a / 2, 1 + a + m, b_last + c_last - a - m]
    for b, c in spec.pairs:
        candidates += [1 + a - b, 1 + a - c]
    return not any(pochhammer_vanishes(x, m) for x in candidates)


def sample_rational(rng: random.Random) -> Fraction:
    """Numerator uniform in [-6, 6], denominator uniform in [1, 6]."""
    return Fraction(rng.randint(-6, 6), rng.randint(1, 6))


def sample_well_poised(rng: random.Random, s: int, m_max: int) -> WellPoisedSpec:
    """Rejection-sample a pole-free spec with s pairs and m <= m_max.

    Deterministic for a given generator state: candidates with a = 0 or a
    vanishing denominator Pochhammer are discarded and the draw repeats.
    """
    if s < 1:
        raise ValueError(f"need at least one pair, got s={s}")
    if m_max < 0:
        raise ValueError(f"m_max must be >= 0, got {m_max}")
    while True:
        a = sample_rational(rng)
        pairs = tuple((sample_rational(rng), sample_rational(rng)) for _ in range(s))
        m = rng.randint(0, m_max)
        if a == 0:
            continue
        spec = WellPoisedSpec(a, pairs, m)
        if spec_pole_free(spec):
            return spec


def sample_dougall(rng: random.Random, m_max: int) -> tuple[Fraction, Fraction, Fraction, int]:
    """A pole-free (a, c, d, m) tuple for Dougall's summation."""
    spec = sample_well_poised(rng, 1, m_max)
    ((c, d),) = spec.pairs
    return spec.a, c, d, spec.m


def sample_whipple(
    rng: random.Random, m_max: int
) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction, int]:
    """A pole-free (a, b, c, d, e, m) tuple for Whipple's transformation."""
    spec = sample_well_poised(rng, 2, m_max)
    (b, c), (d, e) = spec.pairs
    return spec.a, b, c, d, e, spec.m
