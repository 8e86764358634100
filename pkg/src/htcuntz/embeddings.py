"""The embedding of V_{k(n-1)+1} into V_n induced by a Cuntz algebra embedding.

Letters y of the big alphabet Y = {1..m}, m = k(n-1)+1, are sent to words
over X = {1..n}:

    gamma(1) = 1^k,    gamma((i-1)(n-1) + j) = 1^(k-i) j   (1 <= i <= k, 2 <= j <= n)

The images form a maximal prefix code, listed in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cuntz import CuntzSum, Monomial
from .tables import Table, reduce, validate
from .words import Word


@dataclass(frozen=True)
class EmbeddingParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.k < 1:
            raise ValueError(f"need n >= 2 and k >= 1, got n={self.n}, k={self.k}")

    @property
    def m(self) -> int:
        return self.k * (self.n - 1) + 1

    @cached_property
    def codewords(self) -> tuple[Word, ...]:
        """gamma(1), ..., gamma(m)."""
        n, k = self.n, self.k
        out = [(1,) * k]
        for i in range(1, k + 1):
            for j in range(2, n + 1):
                out.append((1,) * (k - i) + (j,))
        return tuple(out)


def gamma(y: int, p: EmbeddingParams) -> Word:
    if not 1 <= y <= p.m:
        raise ValueError(f"letter {y} outside 1..{p.m}")
    return p.codewords[y - 1]


def f_morphism(u: Word, p: EmbeddingParams) -> Word:
    out: list[int] = []
    for y in u:
        out.extend(gamma(y, p))
    return tuple(out)


def iota_monomial(t: Monomial, p: EmbeddingParams) -> Monomial:
    return Monomial(t.coeff, f_morphism(t.a, p), f_morphism(t.b, p))


def iota_sum(x: CuntzSum, p: EmbeddingParams) -> CuntzSum:
    if x.n != p.m:
        raise ValueError(f"sum is over {x.n} letters, expected {p.m}")
    return CuntzSum.from_terms(p.n, [iota_monomial(t, p) for t in x.terms])


def embed_table(g: Table, p: EmbeddingParams) -> Table:
    if g.n != p.m:
        raise ValueError(f"table is over {g.n} letters, but k(n-1)+1 = {p.m}")
    return reduce(validate([(f_morphism(a, p), f_morphism(b, p)) for a, b in g.rows], p.n))
