"""Deterministic primality testing and prime search on arbitrary-size integers."""

from __future__ import annotations

from math import isqrt

# Below this threshold primality is settled by trial division; above it by
# Miller-Rabin with a fixed witness set that is deterministic for all
# integers below 3.3 * 10^24.
_TRIAL_DIVISION_LIMIT = 10**6
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime_trial(x: int) -> bool:
    if x < 2:
        return False
    if x < 4:
        return True
    if x % 2 == 0:
        return False
    f = 3
    top = isqrt(x)
    while f <= top:
        if x % f == 0:
            return False
        f += 2
    return True


def _miller_rabin(x: int) -> bool:
    d = x - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % x == 0:
            continue
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(r - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def is_prime(x: int) -> bool:
    """Deterministic primality test for nonnegative integers of any size."""
    if x < _TRIAL_DIVISION_LIMIT:
        return _is_prime_trial(x)
    if x % 2 == 0:
        return False
    return _miller_rabin(x)


def next_prime_above(x: int) -> int:
    """Smallest prime strictly greater than ``x``."""
    c = max(x, 1) + 1
    if c <= 2:
        return 2
    if c % 2 == 0:
        c += 1
    while not is_prime(c):
        c += 2
    return c
