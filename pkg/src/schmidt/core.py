"""The Schmidt numbers c(n, r) and their inner companions t(n, j, r).

For an exponent r >= 1 the family c(., r) is pinned down by requiring

    sum_k C(n,k)^r C(n+k,k)^r  =  sum_k C(n,k) C(n+k,k) c(k, r)

to hold at every order n simultaneously; c_by_definition solves that
triangular system exactly and is the oracle for every other route here.
The inner numbers

    t(n, j, r) = sum_{k=j..n} (-1)^(n-k) D(n,k) C(k+j,k-j)^r

regroup the inversion so that C(2n,n) c(n, r) = sum_j C(2j,j)^r t(n, j, r),
and they admit closed binomial multi-sums for every r. Two integrality
statements are exposed for verification rather than assumed: every
c(n, r) is an integer, and so is every C(2j,j) t(n, j, r) / C(2n,n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    DivisibilityError,
    binomial,
    central_binomial,
    exact_divide,
    factorial,
)
from .legendre import legendre_coefficient, triangular_solve


def _require_order(n: int, j: int) -> None:
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got n={n}, j={j}")


def _require_exponent(r: int) -> None:
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got r={r}")


def lhs_sum(n: int, r: int) -> int:
    """sum_k C(n,k)^r C(n+k,k)^r, the power-sum side of the defining identity."""
    _require_exponent(r)
    if n < 0:
        raise ValueError(f"order must be >= 0, got n={n}")
    return sum(binomial(n, k) ** r * binomial(n + k, k) ** r for k in range(n + 1))


def c_by_definition(r: int, n_max: int) -> list[int]:
    """c(0, r)..c(n_max, r) by solving the defining system directly.

    Propagates DivisibilityError from the solver; such an error would
    falsify the integrality statement, so it is never swallowed.
    """
    _require_exponent(r)
    return triangular_solve([lhs_sum(n, r) for n in range(n_max + 1)])


def t_sum(n: int, j: int, r: int) -> int:
    """Defining alternating sum for t(n, j, r); the oracle for the closed forms."""
    _require_order(n, j)
    _require_exponent(r)
    return sum(
        (-1) ** (n - k) * legendre_coefficient(n, k) * binomial(k + j, k - j) ** r
        for k in range(j, n + 1)
    )


def integrality_ratio(n: int, j: int, r: int) -> int:
    """C(2j,j) t(n, j, r) / C(2n,n), divided out exactly.

    Integrality of this ratio is the strong form of the integrality
    statement; a DivisibilityError here is a counterexample witness.
    """
    return exact_divide(central_binomial(j) * t_sum(n, j, r), central_binomial(n))


def c_from_t(n: int, r: int) -> int:
    """c(n, r) = [sum_j C(2j,j)^r t(n, j, r)] / C(2n,n), divided out exactly."""
    _require_exponent(r)
    acc = sum(central_binomial(j) ** r * t_sum(n, j, r) for j in range(n + 1))
    return exact_divide(acc, central_binomial(n))


def reciprocal_factorial(m: int) -> Fraction:
    """1/m! for m >= 0 and 0 for m < 0.

    The m < 0 branch encodes the convention that makes closed forms with
    factorials of possibly-negative integers vanish instead of exploding.
    """
    if m < 0:
        return Fraction(0)
    return Fraction(1, factorial(m))


def _as_integer(value: Fraction) -> int:
    if value.denominator != 1:
        raise DivisibilityError(value.numerator, value.denominator)
    return value.numerator


def t3_closed(n: int, j: int) -> int:
    """t(n, j, 3) = (2n)! / ((3j-n)! (n-j)!^3); zero exactly when 3j < n."""
    _require_order(n, j)
    value = factorial(2 * n) * reciprocal_factorial(3 * j - n) * reciprocal_factorial(n - j) ** 3
    return _as_integer(value)


def c2_closed(n: int) -> int:
    """c(n, 2) = sum_j C(n,j)^3, cross-checked against sum_j C(n,j)^2 C(2j,n).

    Both printed forms are computed; they provably agree, and the check is
    kept as a tripwire against regressions in the binomial conventions.
    """
    cubes = sum(binomial(n, j) ** 3 for j in range(n + 1))
    alt = sum(binomial(n, j) ** 2 * binomial(2 * j, n) for j in range(n + 1))
    if cubes != alt:
        raise ArithmeticError(f"equivalent forms disagree at n={n}: {cubes} != {alt}")
    return cubes


def c3_closed(n: int) -> int:
    """c(n, 3) = sum_j C(2j,j)^2 C(2j,n-j) C(n,j)^2."""
    return sum(
        central_binomial(j) ** 2 * binomial(2 * j, n - j) * binomial(n, j) ** 2
        for j in range(n + 1)
    )


def t4_closed(n: int, j: int) -> int:
    """t(n, j, 4) = (2n)! j! / (n! (n-j)! (2j)!) * sum_k C(k+j,k-j) C(j,n-k) C(k,j) C(2j,k-j).

    The rational prefactor need not be an integer on its own, so the inner
    sum is accumulated first and the product is divided out exactly.
    """
    _require_order(n, j)
    inner = sum(
        binomial(k + j, k - j) * binomial(j, n - k) * binomial(k, j) * binomial(2 * j, k - j)
        for k in range(j, n + 1)
    )
    return exact_divide(
        factorial(2 * n) * factorial(j) * inner,
        factorial(n) * factorial(n - j) * factorial(2 * j),
    )


def t5_closed(n: int, j: int) -> int:
    """t(n, j, 5) = (2n)! / ((2j)! (n-j)!^2) * sum_k C(k+j,k-j)^2 C(2j,n-k) C(2j,k-j)."""
    _require_order(n, j)
    inner = sum(
        binomial(k + j, k - j) ** 2 * binomial(2 * j, n - k) * binomial(2 * j, k - j)
        for k in range(j, n + 1)
    )
    return exact_divide(factorial(2 * n) * inner, factorial(2 * j) * factorial(n - j) ** 2)


def c4_closed(n: int) -> int:
    """c(n, 4) = sum_j C(2j,j)^3 C(n,j) sum_k C(k+j,k-j) C(j,n-k) C(k,j) C(2j,k-j)."""
    total = 0
    for j in range(n + 1):
        inner = sum(
            binomial(k + j, k - j) * binomial(j, n - k) * binomial(k, j) * binomial(2 * j, k - j)
            for k in range(j, n + 1)
        )
        total += central_binomial(j) ** 3 * binomial(n, j) * inner
    return total


def c5_closed(n: int) -> int:
    """c(n, 5) = sum_j C(2j,j)^4 C(n,j)^2 sum_k C(k+j,k-j)^2 C(2j,n-k) C(2j,k-j)."""
    total = 0
    for j in range(n + 1):
        inner = sum(
            binomial(k + j, k - j) ** 2 * binomial(2 * j, n - k) * binomial(2 * j, k - j)
            for k in range(j, n + 1)
        )
        total += central_binomial(j) ** 4 * binomial(n, j) ** 2 * inner
    return total


def _t_nest(n: int, j: int, s: int, odd: bool, level: int, offset: int) -> int:
    # Levels 1..s-1 each contribute one bounded sum over an offset l;
    # past the last one a single trailing binomial closes the chain.
    # Offsets are capped at n - j - offset: beyond that every remaining
    # factor vanishes, and the cap also keeps all upper indices >= 0.
    if level == s:
        return binomial(2 * j, n - offset - j)
    first_even = level == 1 and not odd
    width = j if first_even else 2 * j
    total = 0
    for l in range(min(width, n - j - offset) + 1):
        rest = n - offset - l
        if first_even:
            factor = binomial(j, l) * binomial(rest, j) * binomial(rest + j, rest - j)
        else:
            factor = binomial(2 * j, l) * binomial(rest + j, rest - j) ** 2
        if factor:
            total += factor * _t_nest(n, j, s, odd, level + 1, offset + l)
    return total


def t_general(n: int, j: int, r: int) -> int:
    """t(n, j, r) by the nested multi-sum route.

    For r = 2s or r = 2s + 1 with s >= 2 the value is a rational prefactor
    times an (s-1)-fold nested binomial sum; the inner integer sum is
    computed first and the prefactor divided out exactly. r = 3 delegates
    to t3_closed and r = 2 to the defining sum, which has no closed form.
    """
    _require_order(n, j)
    if r == 3:
        return t3_closed(n, j)
    if r == 2:
        return t_sum(n, j, 2)
    if r < 2:
        raise ValueError(f"no closed route below r=2, got r={r}")
    s, odd = divmod(r, 2)
    inner = _t_nest(n, j, s, bool(odd), level=1, offset=0)
    if odd:
        return exact_divide(factorial(2 * n) * inner, factorial(2 * j) * factorial(n - j) ** 2)
    return exact_divide(
        factorial(2 * n) * factorial(j) * inner,
        factorial(n) * factorial(n - j) * factorial(2 * j),
    )


def _c_nest(n: int, j: int, s: int, odd: bool, level: int, k_prev: int) -> int:
    # Chained indices j <= k_{level} <= k_{level-1} <= ... <= k_1 <= n;
    # the trailing binomial attaches inside the innermost sum.
    total = 0
    for k in range(j, k_prev + 1):
        if level > 1:
            factor = binomial(2 * j, k_prev - k) * binomial(k + j, k - j) ** 2
        elif odd:
            factor = binomial(2 * j, n - k) * binomial(k + j, k - j) ** 2
        else:
            factor = binomial(j, n - k) * binomial(k, j) * binomial(k + j, k - j)
        if not factor:
            continue
        if level == s - 1:
            factor *= binomial(2 * j, k - j)
        else:
            factor = factor * _c_nest(n, j, s, odd, level + 1, k)
        total += factor
    return total


def c_general(n: int, r: int) -> int:
    """c(n, r) by the closed multi-sum route; r = 1, 2, 3 delegate.

    For r = 2s or r = 2s + 1 with s >= 2 this is a pure integer multi-sum
    (no division at all): an outer sum over j weights an (s-1)-fold chain
    of descending indices. r <= 3 delegates to the dedicated forms.
    """
    if n < 0:
        raise ValueError(f"order must be >= 0, got n={n}")
    if r == 1:
        return 1
    if r == 2:
        return c2_closed(n)
    if r == 3:
        return c3_closed(n)
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got r={r}")
    s, odd = divmod(r, 2)
    total = 0
    for j in range(n + 1):
        weight = binomial(n, j) ** 2 if odd else binomial(n, j)
        if weight:
            total += central_binomial(j) ** (r - 1) * weight * _c_nest(n, j, s, bool(odd), 1, n)
    return total


@dataclass(frozen=True)
class TnjValue:
    """Inner number at (n, j) with its scaled ratio; C(2n,n) ratio == C(2j,j) value."""

    n: int
    j: int
    r: int
    value: int
    ratio: int


def t_table(r: int, n_max: int) -> list[TnjValue]:
    """Every inner number and scaled ratio for 0 <= j <= n <= n_max, row by row."""
    _require_exponent(r)
    out: list[TnjValue] = []
    for n in range(n_max + 1):
        for j in range(n + 1):
            value = t_sum(n, j, r)
            ratio = exact_divide(central_binomial(j) * value, central_binomial(n))
            out.append(TnjValue(n, j, r, value, ratio))
    return out
