"""Half-open n-adic intervals and their correspondence with words."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .words import PrefixCode, Word, AdmissibilityError


@dataclass(frozen=True)
class NadicInterval:
    """The interval [num/base^depth, (num+1)/base^depth)."""

    num: int
    depth: int
    base: int

    def __post_init__(self):
        if self.base < 2 or self.depth < 0 or not 0 <= self.num < self.base ** self.depth:
            raise ValueError(f"invalid n-adic interval ({self.num}, {self.depth}, {self.base})")

    @property
    def left(self) -> Fraction:
        return Fraction(self.num, self.base ** self.depth)

    @property
    def right(self) -> Fraction:
        return Fraction(self.num + 1, self.base ** self.depth)

    @property
    def length(self) -> Fraction:
        return Fraction(1, self.base ** self.depth)

    def __contains__(self, x) -> bool:
        return self.left <= x < self.right

    def issubset(self, other: "NadicInterval") -> bool:
        return other.left <= self.left and self.right <= other.right

    def __str__(self):
        return f"[{self.left}, {self.right})"

    def to_json(self) -> dict:
        return {"num": self.num, "depth": self.depth, "base": self.base}

    @classmethod
    def from_json(cls, d: dict, base: int | None = None) -> "NadicInterval":
        return cls(int(d["num"]), int(d["depth"]), int(d.get("base", base)))


def phi(u: Word, n: int) -> NadicInterval:
    num = 0
    for letter in u:
        num = num * n + (letter - 1)
    return NadicInterval(num, len(u), n)


def phi_inv(interval: NadicInterval) -> Word:
    n, a = interval.base, interval.num
    digits = []
    for _ in range(interval.depth):
        a, d = divmod(a, n)
        digits.append(d + 1)
    return tuple(reversed(digits))


def check_partition(intervals: Iterable[NadicInterval]) -> str | None:
    """Diagnostic if the intervals do not partition [0,1), else None."""
    blocks = sorted(intervals, key=lambda I: (I.left, I.right))
    if not blocks:
        return "empty partition"
    if len({I.base for I in blocks}) != 1:
        return "mixed bases"
    cursor = Fraction(0)
    for I in blocks:
        if I.left < cursor:
            return f"{I} overlaps an earlier block"
        if I.left > cursor:
            return f"gap [{cursor}, {I.left}) is not covered"
        cursor = I.right
    if cursor != 1:
        return f"gap [{cursor}, 1) is not covered"
    return None


def partition_to_code(intervals: Iterable[NadicInterval]) -> PrefixCode:
    blocks = list(intervals)
    problem = check_partition(blocks)
    if problem is not None:
        raise AdmissibilityError(f"not a partition of [0,1): {problem}")
    return PrefixCode(tuple(phi_inv(I) for I in blocks), blocks[0].base)


def code_to_partition(code: PrefixCode) -> list[NadicInterval]:
    return sorted((phi(w, code.n) for w in code.words), key=lambda I: I.left)


def parse_interval(text: str, n: int) -> NadicInterval:
    """Parse ``"a/n^k"``, the interval [a/n^k, (a+1)/n^k)."""
    s = text.strip()
    try:
        num, rest = s.split("/")
        base, depth = rest.split("^")
        base, depth, num = int(base), int(depth), int(num)
    except ValueError:
        raise ValueError(f"bad interval {text!r}; expected a/n^k") from None
    if base != n:
        raise ValueError(f"interval {text!r} has base {base}, expected {n}")
    return NadicInterval(num, depth, base)
