"""Exact dynamics of y -> n·y mod 1 on rationals in [0,1)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction


def as_point(x) -> Fraction:
    """Coerce to a Fraction in [0,1); strings may be "p/q" or an integer."""
    if isinstance(x, str):
        return parse_point(x)
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"{x} is outside [0,1)")
    return x


def parse_point(text: str) -> Fraction:
    s = text.strip()
    try:
        if "/" in s:
            p, q = s.split("/")
            x = Fraction(int(p), int(q))
        else:
            x = Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad point {text!r}; expected p/q") from None
    if not 0 <= x < 1:
        raise ValueError(f"point {text!r} is outside [0,1)")
    return x


def format_point(x: Fraction) -> str:
    return str(Fraction(x))


def forward(x: Fraction, n: int) -> Fraction:
    y = n * x
    return y - (y.numerator // y.denominator)


def preimages(x: Fraction, n: int) -> list[Fraction]:
    return [(x + i) / n for i in range(n)]


@dataclass(frozen=True)
class OrbitDescriptor:
    base: Fraction
    n: int
    preperiod: tuple[Fraction, ...]
    cycle: tuple[Fraction, ...]

    @property
    def closure(self) -> tuple[Fraction, ...]:
        return self.preperiod + self.cycle


def cycle_of(x: Fraction, n: int) -> OrbitDescriptor:
    return _cycle_of(as_point(x), n)


@lru_cache(maxsize=8192)
def _cycle_of(x: Fraction, n: int) -> OrbitDescriptor:
    seen: dict[Fraction, int] = {}
    path = []
    y = x
    while y not in seen:
        seen[y] = len(path)
        path.append(y)
        y = forward(y, n)
    start = seen[y]
    return OrbitDescriptor(x, n, tuple(path[:start]), tuple(path[start:]))


def equivalent(x: Fraction, y: Fraction, n: int) -> bool:
    # two eventual cycles are either equal or disjoint
    return cycle_of(y, n).cycle[0] in set(cycle_of(x, n).cycle)


def enumerate_orbit(x: Fraction, n: int, depth: int) -> list[Fraction]:
    """Forward closure of x plus every preimage chain of length <= depth from it."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    points = set(cycle_of(x, n).closure)
    layer = set(points)
    for _ in range(depth):
        layer = {z for y in layer for z in preimages(y, n)} - points
        points |= layer
    return sorted(points)
