"""Multiplicative number theory helpers: Möbius function, divisor lists,
and the generalized binomial coefficient.

Everything here is exact integer arithmetic.  Factorization is plain trial
division, which is more than fast enough at the scales this package works
at (n up to ~10^6).
"""

from math import factorial, isqrt


def mobius(n: int) -> int:
    """Möbius function: (-1)^k for a product of k distinct primes, 0 otherwise.

    mu(1) = 1 (empty product, even number of prime factors).
    """
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n, including 1 and n."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def gen_binom(a: int, k: int) -> int:
    """Binomial coefficient binom(a, k) for any integer a, k >= 0.

    Falling-factorial convention: a (a-1) ... (a-k+1) / k!, which is
    integer-valued for every integer a and satisfies the Pascal recurrence
    binom(a, k) = binom(a-1, k-1) + binom(a-1, k).  In particular
    binom(-1, k) = (-1)^k.
    """
    if k < 0:
        raise ValueError(f"gen_binom requires k >= 0, got {k}")
    falling = 1
    for i in range(k):
        falling *= a - i
    # k consecutive integers always divide by k!, so // is exact
    return falling // factorial(k)
