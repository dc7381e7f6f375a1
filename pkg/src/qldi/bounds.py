"""Cutoff bounds on the local dimension needed to preserve code distance.

All comparisons are exact: integer formulas are evaluated in plain Python
integers, and the expressions with half-integer exponents are evaluated
symbolically and rounded upward with an exact ceiling, so any prime strictly
above a reported cutoff still satisfies the corresponding theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_FLOOR
from math import comb

import mpmath
import sympy

from .primes import next_prime_above

__all__ = [
    "BoundsReport",
    "NotApplicableError",
    "p_star_original",
    "p_star_alternative",
    "p_star_alternative_reduced_q2",
    "p_d_star",
    "p_double_star",
    "hamming_bound_holds",
    "compute_bounds",
]


class NotApplicableError(ValueError):
    """A bound's precondition does not hold for these parameters."""


def p_star_original(B: int, d: int) -> int:
    """Original cutoff B^(2(d-1)) * (2(d-1))^(d-1); empty products give 1."""
    if d < 1:
        raise ValueError("distance must be at least 1")
    if d == 1:
        return 1
    return B ** (2 * (d - 1)) * (2 * (d - 1)) ** (d - 1)


def _half_power(base: int, num: int) -> sympy.Expr:
    """Exact base^(num/2) with the 0^0 = 1 empty-product convention."""
    if num == 0:
        return sympy.Integer(1)
    return sympy.Integer(base) ** sympy.Rational(num, 2)


def p_star_alternative(B: int, d: int, q: int) -> int:
    """Alternative cutoff, exact ceiling of
    (B(q-1)(d-1)(1 + (d-1)^2 (q-1)^(d-1) (d-2)^((d-2)/2)))^(d-1).
    """
    if d < 1:
        raise ValueError("distance must be at least 1")
    if d == 1:
        return 1
    factor = _half_power(d - 2, d - 2)
    inner = B * (q - 1) * (d - 1) * (1 + (d - 1) ** 2 * (q - 1) ** (d - 1) * factor)
    return int(sympy.ceiling(inner ** (d - 1)))


def p_star_alternative_reduced_q2(B: int, d: int) -> int:
    """The q=2 reduction (B(d-1)(1 + (d-1)^2 (d-2)^((d-2)/2)))^(d-1)."""
    if d < 1:
        raise ValueError("distance must be at least 1")
    if d == 1:
        return 1
    factor = _half_power(d - 2, d - 2)
    inner = B * (d - 1) * (1 + (d - 1) ** 2 * factor)
    return int(sympy.ceiling(inner ** (d - 1)))


def p_d_star(B: int, d: int, q: int, alternate_reading: bool = False) -> int:
    """Degenerate-code cutoff: the smaller of the two 2(d-1)-size bounds.

    Term (a) is the doubled-parameter original bound B^(4(d-1))(4(d-1))^(2(d-1)).
    Term (b) is the 2(d-1)-size analogue of the alternative bound with cofactor
    bound C = ((q-1)^2 (2d-3))^(d - 3/2).  The source expression for term (b)
    is ambiguous; ``alternate_reading`` switches to the reading with exponent
    (d-3)/2 on C and the outer power applied only to the B(...) factor.
    """
    if d < 1:
        raise ValueError("distance must be at least 1")
    if d == 1:
        return 1
    term_a = B ** (4 * (d - 1)) * (4 * (d - 1)) ** (2 * (d - 1))
    base = (q - 1) ** 2 * (2 * d - 3)
    if alternate_reading:
        cofactor = _half_power(base, d - 3)
        term_b_expr = (
            (q - 1) * 2 * (d - 1)
            * (B * (1 + (q - 1) * cofactor * (2 * (d - 1)) ** 2)) ** (2 * (d - 1))
        )
    else:
        cofactor = _half_power(base, 2 * d - 3)
        inner = (q - 1) * 2 * (d - 1) * B * (1 + (q - 1) * cofactor * (2 * (d - 1)) ** 2)
        term_b_expr = inner ** (2 * (d - 1))
    term_b = int(sympy.ceiling(term_b_expr))
    return min(term_a, term_b)


_PDS_DIGITS = 15
_FLOOR_CTX = Context(prec=_PDS_DIGITS, rounding=ROUND_FLOOR)


def p_double_star(n: int, k: int, d: int) -> Decimal:
    """sqrt(1 + C(n,t)^(1/((n-k)-t))) with t = floor((d-1)/2), rounded down.

    Below this value the distance of a Hamming-bound-obeying code must strictly
    decrease, so downward rounding keeps the caller's ``p < p**`` test
    conservative.  Reported to 15 significant digits.
    """
    t = (d - 1) // 2
    if (n - k) <= t:
        raise NotApplicableError(
            f"p** needs (n-k) > t, got n-k={n - k}, t={t}"
        )
    with mpmath.workdps(50):
        val = mpmath.sqrt(1 + mpmath.mpf(comb(n, t)) ** (mpmath.mpf(1) / ((n - k) - t)))
        text = mpmath.nstr(val, 30)
    return _FLOOR_CTX.plus(Decimal(text))


def hamming_bound_holds(n: int, k: int, d: int, q: int) -> bool:
    """Generalized quantum Hamming bound, checked in exact integers."""
    t = (d - 1) // 2
    lhs = q**k * sum(comb(n, j) * (q**2 - 1) ** j for j in range(t + 1))
    return lhs <= q**n


@dataclass(frozen=True)
class BoundsReport:
    """Every cutoff for one code, evaluated at one LDI form's B."""

    B: int
    q: int
    n: int
    k: int
    d: int
    degenerate: bool
    p_star_original: int
    p_star_alternative: int
    p_star_effective: int
    p_d_star: int | None
    p_double_star: Decimal | None
    hamming_applicable: bool
    first_safe_prime: int
    reading: str

    def __post_init__(self) -> None:
        if self.p_star_effective != min(self.p_star_original, self.p_star_alternative):
            raise ValueError("p_star_effective must be the exact minimum")
        if self.p_double_star is not None and not self.hamming_applicable:
            raise ValueError("p** may only be reported when the Hamming bound applies")


def compute_bounds(
    *,
    B: int,
    q: int,
    n: int,
    k: int,
    d: int,
    degenerate: bool,
    alternate_reading: bool = False,
) -> BoundsReport:
    """Evaluate every cutoff for one code.

    ``degenerate`` gates both the degenerate cutoff (folded into the safe
    prime via p > max{p*, p_D*}) and the Hamming-bound machinery behind p**,
    which holds for non-degenerate codes only.
    """
    orig = p_star_original(B, d)
    alt = p_star_alternative(B, d, q)
    effective = min(orig, alt)
    pds = p_d_star(B, d, q, alternate_reading) if degenerate else None
    hamming_ok = not degenerate
    pdd: Decimal | None = None
    if hamming_ok:
        try:
            pdd = p_double_star(n, k, d)
        except NotApplicableError:
            pdd = None
    threshold = max(effective, pds) if pds is not None else effective
    return BoundsReport(
        B=B,
        q=q,
        n=n,
        k=k,
        d=d,
        degenerate=degenerate,
        p_star_original=orig,
        p_star_alternative=alt,
        p_star_effective=effective,
        p_d_star=pds,
        p_double_star=pdd,
        hamming_applicable=hamming_ok,
        first_safe_prime=next_prime_above(threshold),
        reading="alternate" if alternate_reading else "default",
    )
