"""Randomized and exhaustive property suites behind ``htcuntz verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import tables
from .cuntz import CuntzSum, adjoint, is_identity, psi
from .embeddings import EmbeddingParams, embed_table, f_morphism, iota_sum
from .orbits import as_point, enumerate_orbit, equivalent, format_point
from .representation import check_action_consistency, coding_image, intertwine_failures, act, u_image
from .tables import Table, classify, compose, equal, format_table, identity, invert, random_table
from .words import Ordering, all_words, is_prefix, lex_compare


@dataclass
class Failure:
    size: int
    description: str


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, size: int, describe: Callable[[], str]):
        self.cases += 1
        if not passed:
            self.failures.append(Failure(size, describe()))

    def minimal_failure(self) -> Failure | None:
        return min(self.failures, key=lambda f: f.size) if self.failures else None

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: pass ({self.cases} cases)"
        worst = self.minimal_failure()
        return (f"{self.name}: FAIL ({len(self.failures)} of {self.cases} cases); "
                f"minimal failing input: {worst.description}")


def _size(*gs: Table) -> int:
    return sum(sum(len(a) + len(b) for a, b in g.rows) for g in gs)


def group_suite(n: int, samples: int, seed: int = 0, depth: int = 4) -> SuiteReport:
    rep = SuiteReport(f"group n={n}")
    rng = random.Random(seed)
    e = identity(n)
    for _ in range(samples):
        g, h, u = (random_table(n, depth, rng) for _ in range(3))
        show = lambda: f"g={format_table(g)}; h={format_table(h)}; u={format_table(u)}"
        rep.check(equal(compose(compose(g, h), u), compose(g, compose(h, u))), _size(g, h, u), show)
        rep.check(equal(compose(g, e), g) and equal(compose(e, g), g), _size(g), show)
        rep.check(tables.is_identity(compose(g, invert(g))) and tables.is_identity(compose(invert(g), g)),
                  _size(g), show)
    return rep


def psi_suite(n: int, samples: int, seed: int = 0, depth: int = 4) -> SuiteReport:
    rep = SuiteReport(f"psi n={n}")
    rng = random.Random(seed)
    for _ in range(samples):
        g, h = random_table(n, depth, rng), random_table(n, depth, rng)
        pg = psi(g)
        show = lambda: f"g={format_table(g)}; h={format_table(h)}"
        rep.check(is_identity(pg * adjoint(pg)) and is_identity(adjoint(pg) * pg), _size(g), show)
        rep.check(psi(compose(g, h)) == pg * psi(h), _size(g, h), show)
    return rep


def iota_suite(n: int, k: int) -> SuiteReport:
    p = EmbeddingParams(n, k)
    rep = SuiteReport(f"iota n={n} k={k}")
    m = p.m
    gens = [CuntzSum.monomial(m, (y,)) for y in range(1, m + 1)]
    images = [iota_sum(s, p) for s in gens]
    total = CuntzSum.zero(n)
    for s in images:
        total = total + s * adjoint(s)
    rep.check(is_identity(total), 0, lambda: f"sum of range projections = {total}")
    one, zero = CuntzSum.one(n), CuntzSum.zero(n)
    for y in range(m):
        for z in range(m):
            prod = adjoint(images[y]) * images[z]
            want = one if y == z else zero
            rep.check(prod == want, 0, lambda: f"iota(s_{y + 1})* iota(s_{z + 1}) = {prod}")
    return rep


def action_suite(n: int, x, samples: int, seed: int = 0, depth: int = 5,
                 table_depth: int = 4) -> SuiteReport:
    x = as_point(x)
    rep = SuiteReport(f"action n={n} x={format_point(x)}")
    rng = random.Random(seed)
    orbit = enumerate_orbit(x, n, depth)
    for _ in range(samples):
        g = random_table(n, table_depth, rng)
        y = rng.choice(orbit)
        show = lambda: f"g={format_table(g)}; y={format_point(y)}"
        rep.check(check_action_consistency(g, y), _size(g), show)
        rep.check(equivalent(x, act(g, y), n), _size(g), show)
    return rep


def embedding_suite(n: int, k: int, samples: int, seed: int = 0, depth: int = 3,
                    word_length: int = 4) -> SuiteReport:
    p = EmbeddingParams(n, k)
    m = p.m
    rep = SuiteReport(f"embedding n={n} k={k}")
    rng = random.Random(seed)
    for _ in range(samples):
        g, h = random_table(m, depth, rng), random_table(m, depth, rng)
        eg, eh = embed_table(g, p), embed_table(h, p)
        show = lambda: f"g={format_table(g)}; h={format_table(h)}"
        rep.check(equal(embed_table(compose(g, h), p), compose(eg, eh)), _size(g, h), show)
        rep.check(equal(eg, eh) == equal(g, h), _size(g, h), show)
        rep.check((classify(eg) == "F") == (classify(g) == "F")
                  and (classify(eg) in "FT") == (classify(g) in "FT"), _size(g), show)
    words = list(all_words(m, word_length))
    images = {w: f_morphism(w, p) for w in words}
    rep.check(len(set(images.values())) == len(words), 0, lambda: "f is not injective")
    for a in words:
        fa = images[a]
        for b in words:
            fb = images[b]
            if is_prefix(fa, fb) and not is_prefix(a, b):
                rep.check(False, len(a) + len(b), lambda: f"f({a}) prefixes f({b})")
            if lex_compare(a, b) is Ordering.LESS and lex_compare(fa, fb) is not Ordering.LESS:
                rep.check(False, len(a) + len(b), lambda: f"order not kept on {a} < {b}")
    rep.cases += len(words) ** 2
    return rep


def intertwine_suite(n: int, k: int, x, samples: int, seed: int = 0, depth: int = 3,
                     table_depth: int = 3, anchor: str = "literal", rerandomized: int = 100) -> SuiteReport:
    """U∘ρ(g) = ρ(E(g))∘U on random basis vectors, plus path independence of U.

    ``anchor="literal"`` sends δ_x to δ_x; ``anchor="coding"`` sends it to the
    point with recoded digits (see ``coding_image``).
    """
    p = EmbeddingParams(n, k)
    x = as_point(x)
    start = None if anchor == "literal" else coding_image(x, p)
    rep = SuiteReport(f"intertwine n={n} k={k} x={format_point(x)} anchor={anchor}")
    rng = random.Random(seed)
    orbit = enumerate_orbit(x, p.m, depth)
    for _ in range(samples):
        g = random_table(p.m, table_depth, rng)
        y = rng.choice(orbit)
        bad = intertwine_failures(g, x, p, [y], anchor=start)
        rep.check(not bad, _size(g), lambda: f"g={format_table(g)}; y={format_point(y)}: {_mismatch(bad[0])}")
    for _ in range(rerandomized):
        y = rng.choice(orbit)
        try:
            same = u_image(y, x, p, anchor=start) == u_image(y, x, p, anchor=start,
                                                              rng=random.Random(rng.random()))
        except RuntimeError as exc:
            same, reason = False, str(exc)
        else:
            reason = "two searches disagree"
        rep.check(same, 0, lambda: f"U at y={format_point(y)}: {reason}")
    return rep


def _mismatch(entry) -> str:
    _, lhs, rhs = entry
    if rhs is None:
        return lhs
    return f"U(g.y) = {format_point(lhs)} but E(g).U(y) = {format_point(rhs)}"


def crho_suite(n: int) -> SuiteReport:
    """Operator identities turning ρ(V_n) into the Cuntz generators."""
    rep = SuiteReport(f"crho n={n}")
    for i in range(1, n + 1):
        lhs = psi(tables.subtree_swap(n, i)) * CuntzSum.monomial(n, (n,))
        rep.check(lhs == CuntzSum.monomial(n, (i,)), 0, lambda: f"i={i}: Ψ(g)s_n = {lhs}")
        proj = CuntzSum.monomial(n, (i,), (i,))
        lhs2 = psi(tables.split_letter(n, i)) * proj
        rep.check(lhs2 == CuntzSum.monomial(n, (i, i), (i,)), 0, lambda: f"i={i}: Ψ(k)s_is_i* = {lhs2}")
        lhs3 = psi(tables.letter_transposition(n, i)) * CuntzSum.monomial(n, (i, i), (i,))
        rep.check(lhs3 == CuntzSum.monomial(n, (n, i), (i,)), 0, lambda: f"i={i}: Ψ(l)s_is_is_i* = {lhs3}")
    return rep


SUITES = ("group", "psi", "iota", "action", "embedding", "intertwine", "crho")
