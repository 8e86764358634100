"""Piecewise linear realization of V_n with exact rational evaluation."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

from .intervals import NadicInterval, check_partition, phi, phi_inv
from .tables import Table, reduce, validate

Piece = tuple[NadicInterval, NadicInterval]


@dataclass(frozen=True)
class PLMap:
    """Pieces ``(dom, ran)`` ordered by the left end of ``dom``.

    On a piece, x -> ran.left + n^(dom.depth - ran.depth) * (x - dom.left).
    """

    n: int
    pieces: tuple[Piece, ...]
    _lefts: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pieces = tuple(sorted(self.pieces, key=lambda p: p[0].left))
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "_lefts", tuple(p[0].left for p in pieces))

    def piece_at(self, x: Fraction) -> Piece:
        i = bisect.bisect_right(self._lefts, x) - 1
        if i < 0 or x not in self.pieces[i][0]:
            raise ValueError(f"{x} is not in the domain of any piece")
        return self.pieces[i]

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"base": self.n,
                "pieces": [{"dom": {"num": d.num, "depth": d.depth},
                            "ran": {"num": r.num, "depth": r.depth}} for d, r in self.pieces]}

    @classmethod
    def from_json(cls, d: dict) -> "PLMap":
        n = int(d["base"])
        return cls(n, tuple((NadicInterval.from_json(p["dom"], n), NadicInterval.from_json(p["ran"], n))
                            for p in d["pieces"]))


def table_to_plmap(g: Table) -> PLMap:
    return PLMap(g.n, tuple((phi(b, g.n), phi(a, g.n)) for a, b in g.rows))


def slope(piece: Piece) -> Fraction:
    dom, ran = piece
    return Fraction(dom.base) ** (dom.depth - ran.depth)


def evaluate(m: PLMap, x) -> Fraction:
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"{x} is outside [0,1)")
    dom, ran = piece = m.piece_at(x)
    return ran.left + slope(piece) * (x - dom.left)


@dataclass
class VTFReport:
    ok: bool
    problems: list[str]

    def __bool__(self):
        return self.ok


def check_vtf_conditions(m: PLMap) -> VTFReport:
    """Check the defining conditions of V_n on the finite piece data."""
    problems = []
    doms = [d for d, _ in m.pieces]
    rans = [r for _, r in m.pieces]
    if any(I.base != m.n for I in doms + rans):
        problems.append("interval base differs from the map's base")
    if (p := check_partition(doms)) is not None:
        problems.append(f"domains do not partition [0,1): {p}")
    if (p := check_partition(rans)) is not None:
        problems.append(f"not bijective: {p}")
    # slopes are n^(dom.depth - ran.depth) by construction; what remains is
    # that breakpoints and their images lie in M
    for piece in m.pieces:
        for end in (piece[0].left, piece[1].left, piece[1].right):
            if not is_nadic(end, m.n):
                problems.append(f"endpoint {end} is not {m.n}-adic")
    return VTFReport(not problems, problems)


def is_nadic(x: Fraction, n: int) -> bool:
    """True when the reduced denominator of x divides a power of n."""
    q = Fraction(x).denominator
    for p in _prime_factors(n):
        while q % p == 0:
            q //= p
    return q == 1


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def plmap_to_table(m: PLMap) -> Table:
    report = check_vtf_conditions(m)
    if not report:
        raise ValueError("; ".join(report.problems))
    return reduce(validate(((phi_inv(r), phi_inv(d)) for d, r in m.pieces), m.n))


def discontinuities(m: PLMap) -> list[Fraction]:
    """Interior points of [0,1) where the map jumps (0 and 1 not identified)."""
    out = []
    for (d0, r0), (d1, r1) in zip(m.pieces, m.pieces[1:]):
        if r0.right != r1.left:
            out.append(d1.left)
    return out
