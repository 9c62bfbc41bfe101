"""
Elementary helpers
Trigonometry at multiples of pi and small integer utilities
"""

import math

from ..errors import DomainError


def require_finite(name: str, value: float) -> float:
    """Return value as float, raising DomainError when it is not finite"""
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value}")
    return value


def cos_pi(x: float) -> float:
    """
    cos(pi * x) with exact values at integers and half-integers.

    The second spherical solution and the interference factors need
    cos((a+1)pi) to vanish exactly at half-integer a; math.cos(math.pi * 1.5)
    does not.
    """
    x = require_finite("x", x)
    r = math.fmod(abs(x), 2.0)
    if r == 0.0:
        return 1.0
    if r == 1.0:
        return -1.0
    if r == 0.5 or r == 1.5:
        return 0.0
    return math.cos(math.pi * r)


def sin_pi(x: float) -> float:
    """sin(pi * x) with exact values at integers and half-integers"""
    x = require_finite("x", x)
    sign = -1.0 if x < 0 else 1.0
    r = math.fmod(abs(x), 2.0)
    if r == 0.0 or r == 1.0:
        return 0.0
    if r == 0.5:
        return sign
    if r == 1.5:
        return -sign
    return sign * math.sin(math.pi * r)


def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1"""
    if n < -1:
        raise DomainError(f"double factorial needs n >= -1, got {n}")
    return math.prod(range(n, 0, -2)) if n > 0 else 1
