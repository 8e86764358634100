"""Permutative representations on formal vectors indexed by orbit points.

S_i δ_y = δ_{(y+i-1)/n}, and the representation of V_n is obtained by
substituting these operators into Ψ(g).  Everything acts exactly on
finitely supported vectors; truncation happens only in ``matrix_section``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .cuntz import CuntzSum, Monomial, psi
from .embeddings import EmbeddingParams, embed_table, gamma
from .intervals import phi
from .orbits import as_point, cycle_of, enumerate_orbit, equivalent, forward, format_point
from .plmaps import evaluate, table_to_plmap
from .tables import Table
from .words import Word


class TransportError(RuntimeError):
    """Transporting δ_x along a path produced something other than a basis vector."""


@dataclass(frozen=True)
class FormalVector:
    n: int
    entries: Mapping[Fraction, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           {as_point(y): Fraction(c) for y, c in self.entries.items() if c != 0})

    @classmethod
    def delta(cls, y, n: int) -> "FormalVector":
        return cls(n, {as_point(y): Fraction(1)})

    def __eq__(self, other):
        return isinstance(other, FormalVector) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __add__(self, other: "FormalVector") -> "FormalVector":
        out = dict(self.entries)
        for y, c in other.entries.items():
            out[y] = out.get(y, Fraction(0)) + c
        return FormalVector(self.n, out)

    def __rmul__(self, c) -> "FormalVector":
        return FormalVector(self.n, {y: c * v for y, v in self.entries.items()})

    def __bool__(self):
        return bool(self.entries)

    def unit_point(self) -> Fraction | None:
        """y when the vector is exactly δ_y, else None."""
        if len(self.entries) == 1:
            (y, c), = self.entries.items()
            if c == 1:
                return y
        return None

    def __str__(self):
        if not self.entries:
            return "0"
        return " + ".join(f"{c}*δ[{format_point(y)}]" if c != 1 else f"δ[{format_point(y)}]"
                          for y, c in sorted(self.entries.items()))


def apply_generator(i: int, v: FormalVector) -> FormalVector:
    n = v.n
    return FormalVector(n, {(y + i - 1) / n: c for y, c in v.entries.items()})


def apply_generator_adjoint(i: int, v: FormalVector) -> FormalVector:
    n = v.n
    lo, hi = Fraction(i - 1, n), Fraction(i, n)
    return FormalVector(n, {n * y - (i - 1): c for y, c in v.entries.items() if lo <= y < hi})


def word_image(u: Word, y: Fraction, n: int) -> Fraction:
    """S_u δ_y = δ_a with a = y n^-|u| + left end of phi(u)."""
    I = phi(u, n)
    return y * I.length + I.left


def word_adjoint_image(v: Word, y: Fraction, n: int) -> Fraction | None:
    """S_v* δ_y = δ_b with b = n^|v| (y - left end of phi(v)), or None (zero)."""
    I = phi(v, n)
    if y not in I:
        return None
    return (y - I.left) / I.length


def apply_monomial(t: Monomial, y: Fraction, n: int) -> Fraction | None:
    z = word_adjoint_image(t.b, y, n)
    return None if z is None else word_image(t.a, z, n)


def apply_sum(x: CuntzSum, v: FormalVector) -> FormalVector:
    if x.n != v.n:
        raise ValueError(f"alphabet mismatch: {x.n} vs {v.n}")
    out: dict[Fraction, Fraction] = {}
    for y, c in v.entries.items():
        for t in x.terms:
            z = apply_monomial(t, y, x.n)
            if z is not None:
                out[z] = out.get(z, Fraction(0)) + c * t.coeff
    return FormalVector(x.n, out)


def contributing_terms(x: CuntzSum, y) -> list[Monomial]:
    y = as_point(y)
    return [t for t in x.terms if word_adjoint_image(t.b, y, x.n) is not None]


def act(g: Table, y) -> Fraction:
    return evaluate(table_to_plmap(g), as_point(y))


def check_action_consistency(g: Table, y) -> bool:
    y = as_point(y)
    return apply_sum(psi(g), FormalVector.delta(y, g.n)) == FormalVector.delta(act(g, y), g.n)


# The intertwiner between the base-m and base-n orbit spaces.

Step = tuple[int, bool]  # (generator letter, is_adjoint)


def _forward_set(z: Fraction, m: int) -> set[Fraction]:
    return set(cycle_of(z, m).closure)


def orbit_path(x, y, m: int, max_steps: int = 256, rng: random.Random | None = None) -> list[Step]:
    """Shortest generator path with T_t ... T_1 δ_x = δ_y, listed in the order applied.

    Breadth-first search in the orbit graph.  Edges from z are tried forward
    step first (the unique adjoint generator not killing δ_z), then the
    preimage generators in increasing order; ``rng`` shuffles that order.
    A preimage step followed by a forward step returns to its start, so a
    shortest path is forward steps from x followed by preimage steps that
    retrace y's forward orbit; the search is confined to those points.
    """
    x, y = as_point(x), as_point(y)
    if not equivalent(x, y, m):
        raise ValueError(f"{y} is not in the base-{m} orbit of {x}")
    relevant = _forward_set(x, m) | _forward_set(y, m)
    parent: dict[Fraction, tuple[Fraction, Step] | None] = {x: None}
    frontier = deque([(x, 0)])
    while frontier:
        z, dist = frontier.popleft()
        if z == y:
            break
        if dist >= max_steps:
            continue
        edges: list[tuple[Fraction, Step]] = [(forward(z, m), (int(m * z) + 1, True))]
        edges += [((z + i - 1) / m, (i, False)) for i in range(1, m + 1)]
        if rng is not None:
            rng.shuffle(edges)
        for w, step in edges:
            if w in relevant and w not in parent:
                parent[w] = (z, step)
                frontier.append((w, dist + 1))
    if y not in parent:
        raise ValueError(f"no path from {x} to {y} within {max_steps} steps")
    steps = []
    z = y
    while parent[z] is not None:
        z, step = parent[z]
        steps.append(step)
    return steps[::-1]


def transport(steps: Iterable[Step], start: Fraction, p: EmbeddingParams) -> Fraction:
    """Apply the base-n images S_gamma(i), S*_gamma(i) of the steps to δ_start."""
    w = start
    for i, adj in steps:
        word = gamma(i, p)
        if adj:
            nxt = word_adjoint_image(word, w, p.n)
            if nxt is None:
                raise TransportError(
                    f"S*[{''.join(map(str, word))}] annihilates δ_{w}: U is not defined here")
            w = nxt
        else:
            w = word_image(word, w, p.n)
    return w


def coding_image(x, p: EmbeddingParams) -> Fraction:
    """The point whose base-n digits are f applied to the base-m digits of x."""
    d = cycle_of(as_point(x), p.m)
    letters = [int(p.m * z) + 1 for z in d.closure]
    pre = [c for y in letters[: len(d.preperiod)] for c in gamma(y, p)]
    per = [c for y in letters[len(d.preperiod):] for c in gamma(y, p)]
    n = p.n
    head = phi(tuple(pre), n)
    repeat = 0
    for c in per:
        repeat = repeat * n + (c - 1)
    return head.left + head.length * Fraction(repeat, n ** len(per) - 1)


def u_image(y, x, p: EmbeddingParams, max_steps: int = 256, anchor=None,
            rng: random.Random | None = None) -> Fraction:
    """U δ_y, where U δ_x = δ_anchor (anchor defaults to x itself)."""
    x = as_point(x)
    start = x if anchor is None else as_point(anchor)
    return transport(orbit_path(x, y, p.m, max_steps, rng), start, p)


def orbit_prime(x, p: EmbeddingParams, depth: int, anchor=None) -> list[Fraction]:
    x = as_point(x)
    return sorted({u_image(y, x, p, anchor=anchor) for y in enumerate_orbit(x, p.m, depth)})


def intertwine_failures(g: Table, x, p: EmbeddingParams, ys: Iterable, anchor=None) -> list:
    """Points y where U(g·y) differs from E(g)·U(y), with the offending values."""
    eg = embed_table(g, p)
    x = as_point(x)
    bad = []
    for y in ys:
        y = as_point(y)
        try:
            lhs = u_image(act(g, y), x, p, anchor=anchor)
            rhs = act(eg, u_image(y, x, p, anchor=anchor))
        except TransportError as exc:
            bad.append((y, str(exc), None))
            continue
        if lhs != rhs:
            bad.append((y, lhs, rhs))
    return bad


def check_intertwine(g: Table, x, p: EmbeddingParams, depth: int, anchor=None) -> bool:
    return not intertwine_failures(g, x, p, enumerate_orbit(as_point(x), p.m, depth), anchor)


@dataclass
class MatrixSection:
    basis: list[Fraction]
    entries: dict[tuple[int, int], Fraction]
    overflow: list[tuple[Fraction, Fraction, Fraction]]

    def to_json(self) -> dict:
        return {"basis": [format_point(y) for y in self.basis],
                "entries": [[r, c, str(v)] for (r, c), v in sorted(self.entries.items())],
                "overflow": [{"from": format_point(a), "to": format_point(b), "coeff": str(v)}
                             for a, b, v in self.overflow]}


def matrix_section(x: CuntzSum, basis: Iterable) -> MatrixSection:
    basis = [as_point(y) for y in basis]
    index = {y: r for r, y in enumerate(basis)}
    if len(index) != len(basis):
        raise ValueError("basis has duplicates")
    entries: dict[tuple[int, int], Fraction] = {}
    overflow = []
    for c, y in enumerate(basis):
        image = apply_sum(x, FormalVector.delta(y, x.n))
        for z, v in sorted(image.entries.items()):
            if z in index:
                entries[(index[z], c)] = v
            else:
                overflow.append((y, z, v))
    return MatrixSection(basis, entries, overflow)
