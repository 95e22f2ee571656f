"""Exact evaluation of the lower-bound families.

Every bound is an exact integer: products of prime powers with rational
exponents are floored once, at the outermost level, via integer k-th
roots.  Tables therefore stay honest lower bounds even when exponents
are not integral.  The lower-order slack term defaults to 0, which is
the conservative choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import ParameterError
from .field import is_prime

SlackLike = Union[int, float, str, Fraction]

TAG_CLASSICAL_2COLOR = "classical-2color"
TAG_CLASSICAL_3COLOR = "classical-3color"
TAG_LEFMANN_COMPOSITE = "lefmann-composite"
TAG_FIELD_DIRECT = "field-direct"
TAG_NEW_COMPOSITE = "new-composite"


def as_slack(value: SlackLike) -> Fraction:
    """Exact rational slack; floats are read through their decimal repr."""
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def integer_root(n: int, k: int) -> int:
    """floor(n^(1/k)) for n >= 0, k >= 1, computed exactly."""
    if k < 1:
        raise ParameterError("root index must be positive")
    if n < 0:
        raise ParameterError("radicand must be non-negative")
    if k == 1 or n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def floor_power_product(factors: Iterable[tuple[int, Fraction]]) -> int:
    """floor of a product of integer bases raised to rational exponents."""
    fs = [(int(b), Fraction(e)) for b, e in factors]
    for b, _ in fs:
        if b < 1:
            raise ParameterError("bases must be positive")
    d = 1
    for _, e in fs:
        d = math.lcm(d, e.denominator)
    num = 1
    den = 1
    for b, e in fs:
        k = int(e * d)
        if k >= 0:
            num *= b**k
        else:
            den *= b ** (-k)
    if den == 1:
        return integer_root(num, d)
    m = integer_root(num // den, d)
    while (m + 1) ** d * den <= num:
        m += 1
    while m > 0 and m**d * den > num:
        m -= 1
    return m


@dataclass(frozen=True)
class BoundRecord:
    """One evaluated lower bound: exact integer value plus its log2."""

    t: int
    colors: int
    tag: str
    value: int
    log2_value: float


def _record(t: int, colors: int, tag: str, factors: list[tuple[int, Fraction]]) -> BoundRecord:
    value = max(1, floor_power_product(factors))
    return BoundRecord(t, colors, tag, value, math.log2(value))


def baseline_bound(t: int, colors: int) -> BoundRecord:
    """Classical bound for the given color count, composed per colors mod 3."""
    if t < 1:
        raise ParameterError("t must be positive")
    if colors < 2:
        raise ParameterError("need at least two colors")
    k, rem = divmod(colors, 3)
    half_t = Fraction(t, 2)
    if rem == 0:
        factors = [(3, k * half_t)]
        tag = TAG_CLASSICAL_3COLOR if colors == 3 else TAG_LEFMANN_COMPOSITE
    elif rem == 1:
        factors = [(2, Fraction(t)), (3, (k - 1) * half_t)]
        tag = TAG_LEFMANN_COMPOSITE
    else:
        factors = [(2, half_t), (3, k * half_t)]
        tag = TAG_CLASSICAL_2COLOR if colors == 2 else TAG_LEFMANN_COMPOSITE
    return _record(t, colors, tag, factors)


def new_bound(t: int, colors: int, slack: SlackLike = 0) -> BoundRecord:
    """Improved bound family; slack stands in for the lower-order term."""
    if t < 1:
        raise ParameterError("t must be positive")
    if colors < 3:
        raise ParameterError("the improved family starts at three colors")
    s = as_slack(slack)
    k, rem = divmod(colors, 3)
    eighth = Fraction(t, 8)
    if rem == 0:
        factors = [(2, 7 * k * eighth + s)]
    elif rem == 1:
        factors = [(2, 7 * (k - 1) * eighth + Fraction(t, 2)), (3, 3 * eighth + s)]
    else:
        factors = [(2, 7 * k * eighth + Fraction(t, 2) + s)]
    tag = TAG_FIELD_DIRECT if colors in (3, 4) else TAG_NEW_COMPOSITE
    return _record(t, colors, tag, factors)


def field_bound(t: int, q: int, slack: SlackLike = 0) -> BoundRecord:
    """Direct bound 2^(t/2) q^(3t/8 + slack) for q+1 colors, q prime."""
    if not is_prime(q):
        raise ParameterError(f"{q} is not prime")
    if t < 1:
        raise ParameterError("t must be positive")
    s = as_slack(slack)
    factors = [(2, Fraction(t, 2)), (q, Fraction(3 * t, 8) + s)]
    return _record(t, q + 1, TAG_FIELD_DIRECT, factors)


def growth_rate(record: BoundRecord) -> float:
    """Per-t growth factor value^(1/t)."""
    if record.t < 1:
        raise ParameterError("growth rate needs t >= 1")
    return 2.0 ** (record.log2_value / record.t)


def baseline_crossover(colors: int, t_max: int = 128, slack: SlackLike = 0) -> int | None:
    """Smallest t0 with new_bound >= baseline_bound for all t in [t0, t_max].

    Found by scanning, not assumed; None when even t_max fails.
    """
    t0 = None
    for t in range(t_max, 0, -1):
        if new_bound(t, colors, slack).value >= baseline_bound(t, colors).value:
            t0 = t
        else:
            break
    return t0
