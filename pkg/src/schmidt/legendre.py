"""Forward and inverse Legendre transforms of integer sequences.

The forward transform of a sequence c is

    a_n = sum_k C(n,k) C(n+k,k) c_k = sum_k C(2k,k) C(n+k,n-k) c_k,

and it is inverted through the coefficients

    D(n,k) = C(2n,n-k) - C(2n,n-k-1),

which also satisfy the integer identity (n+k+1) D(n,k) = (2k+1) C(2n,n-k):

    C(2n,n) c_n = sum_k (-1)^(n-k) D(n,k) a_k.

Sequences are dense prefixes, plain lists indexed 0..N.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .combinatorics import binomial, central_binomial, exact_divide


def _check_prefix(seq: Sequence[int], n: int) -> None:
    if n >= len(seq):
        raise IndexError(f"sequence prefix ends at index {len(seq) - 1}, needed {n}")


def legendre_forward(c: Sequence[int], n: int) -> int:
    """a_n = sum_k C(n,k) C(n+k,k) c_k."""
    _check_prefix(c, n)
    return sum(binomial(n, k) * binomial(n + k, k) * c[k] for k in range(n + 1))


def legendre_forward_central(c: Sequence[int], n: int) -> int:
    """The same transform via the equivalent form sum_k C(2k,k) C(n+k,n-k) c_k."""
    _check_prefix(c, n)
    return sum(central_binomial(k) * binomial(n + k, n - k) * c[k] for k in range(n + 1))


def legendre_coefficient(n: int, k: int) -> int:
    """Inversion coefficient D(n,k) = C(2n,n-k) - C(2n,n-k-1)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return binomial(2 * n, n - k) - binomial(2 * n, n - k - 1)


def legendre_inverse(a: Sequence[int], n: int) -> Fraction:
    """c_n = [sum_k (-1)^(n-k) D(n,k) a_k] / C(2n,n), as an exact rational.

    Defined for arbitrary integer input. Integrality of particular families
    is a statement to verify downstream, not a precondition, so no
    divisibility is enforced here.
    """
    _check_prefix(a, n)
    acc = sum((-1) ** (n - k) * legendre_coefficient(n, k) * a[k] for k in range(n + 1))
    return Fraction(acc, central_binomial(n))


def triangular_solve(a: Sequence[int]) -> list[int]:
    """Solve a_n = sum_k C(n,k) C(n+k,k) c_k for integer c, index by index.

    The diagonal coefficient is C(n,n) C(2n,n), so step n subtracts the
    already-known part and divides by C(2n,n) exactly. A remainder raises
    DivisibilityError, meaning the input is not the forward transform of
    any integer sequence. This solver is deliberately brute force: it is
    the oracle everything faster is measured against.
    """
    c: list[int] = []
    for n, a_n in enumerate(a):
        partial = sum(binomial(n, k) * binomial(n + k, k) * c[k] for k in range(n))
        c.append(exact_divide(a_n - partial, central_binomial(n)))
    return c
