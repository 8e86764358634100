"""Finite sums of Cuntz monomials c·s_a s_b* with exact rational coefficients.

The relations s_i* s_j = δ_ij and Σ_j s_j s_j* = 1 are used as rewrite
rules: the first collapses products of monomials, the second merges a full
sibling family c·s_{a·j} s_{b·j}* (j = 1..n) into c·s_a s_b*.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .tables import Table
from .words import EMPTY, Word, format_word, parse_word


class Monomial(NamedTuple):
    coeff: Fraction
    a: Word
    b: Word


def multiply(m1: Monomial, m2: Monomial) -> Monomial | None:
    """Product of two monomials, or None when it vanishes."""
    c = m1.coeff * m2.coeff
    b, d = m1.b, m2.a
    if d[: len(b)] == b:
        return Monomial(c, m1.a + d[len(b):], m2.b)
    if b[: len(d)] == d:
        return Monomial(c, m1.a, m2.b + b[len(d):])
    return None


@dataclass(frozen=True)
class CuntzSum:
    """Terms are kept sorted by (a, b) with nonzero coefficients."""

    n: int
    terms: tuple[Monomial, ...]

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Monomial] | Mapping[tuple[Word, Word], Fraction]):
        return normalize(cls(n, _collected(_items(terms))))

    @classmethod
    def one(cls, n: int) -> "CuntzSum":
        return cls(n, (Monomial(Fraction(1), EMPTY, EMPTY),))

    @classmethod
    def zero(cls, n: int) -> "CuntzSum":
        return cls(n, ())

    @classmethod
    def monomial(cls, n: int, a: Word, b: Word = EMPTY, coeff=1) -> "CuntzSum":
        return cls.from_terms(n, [Monomial(Fraction(coeff), tuple(a), tuple(b))])

    def __add__(self, other: "CuntzSum") -> "CuntzSum":
        _same_base(self, other)
        return CuntzSum.from_terms(self.n, self.terms + other.terms)

    def __neg__(self) -> "CuntzSum":
        return CuntzSum(self.n, tuple(Monomial(-t.coeff, t.a, t.b) for t in self.terms))

    def __sub__(self, other: "CuntzSum") -> "CuntzSum":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CuntzSum):
            return multiply_sums(self, other)
        c = Fraction(other)
        return CuntzSum.from_terms(self.n, [Monomial(c * t.coeff, t.a, t.b) for t in self.terms])

    __rmul__ = __mul__

    def __str__(self):
        return format_sum(self)

    def to_json(self) -> dict:
        return {"base": self.n,
                "terms": [{"coeff": str(t.coeff), "a": format_word(t.a, self.n),
                           "b": format_word(t.b, self.n)} for t in self.terms]}

    @classmethod
    def from_json(cls, d: dict) -> "CuntzSum":
        n = int(d["base"])
        return cls.from_terms(n, [Monomial(Fraction(t["coeff"]), parse_word(t["a"], n),
                                           parse_word(t["b"], n)) for t in d["terms"]])


def _items(terms) -> Iterable[tuple[tuple[Word, Word], Fraction]]:
    if isinstance(terms, Mapping):
        return terms.items()
    return (((t.a, t.b), t.coeff) for t in terms)


def _collected(items) -> tuple[Monomial, ...]:
    acc: dict[tuple[Word, Word], Fraction] = {}
    for key, c in items:
        acc[key] = acc.get(key, Fraction(0)) + c
    return _canonical(acc)


def _canonical(acc: Mapping[tuple[Word, Word], Fraction]) -> tuple[Monomial, ...]:
    return tuple(Monomial(c, a, b) for (a, b), c in sorted(acc.items()) if c != 0)


def _same_base(x: CuntzSum, y: CuntzSum):
    if x.n != y.n:
        raise ValueError(f"alphabet mismatch: {x.n} vs {y.n}")


def normalize(x: CuntzSum) -> CuntzSum:
    n = x.n
    acc: dict[tuple[Word, Word], Fraction] = {}
    for t in x.terms:
        acc[(t.a, t.b)] = acc.get((t.a, t.b), Fraction(0)) + t.coeff
    acc = {k: c for k, c in acc.items() if c != 0}
    changed = True
    while changed:
        changed = False
        families: dict[tuple[Word, Word, Fraction], list[tuple[Word, Word]]] = {}
        for (a, b), c in acc.items():
            if a and b and a[-1] == b[-1]:
                families.setdefault((a[:-1], b[:-1], c), []).append((a, b))
        for (sa, sb, c), members in families.items():
            # an earlier merge in this pass may have touched a member
            if len(members) != n or any(acc.get(k) != c for k in members):
                continue
            for k in members:
                del acc[k]
            total = acc.get((sa, sb), Fraction(0)) + c
            if total:
                acc[(sa, sb)] = total
            else:
                acc.pop((sa, sb), None)
            changed = True
    return CuntzSum(n, _canonical(acc))


def multiply_sums(x: CuntzSum, y: CuntzSum) -> CuntzSum:
    _same_base(x, y)
    products = (multiply(s, t) for s in x.terms for t in y.terms)
    return CuntzSum.from_terms(x.n, [p for p in products if p is not None])


def adjoint(x: CuntzSum) -> CuntzSum:
    # rational coefficients are self-conjugate
    return CuntzSum.from_terms(x.n, [Monomial(t.coeff, t.b, t.a) for t in x.terms])


def is_identity(x: CuntzSum) -> bool:
    return normalize(x).terms == ((Fraction(1), EMPTY, EMPTY),)


def psi(g: Table) -> CuntzSum:
    """Σ s_a s_b* over the rows of the table."""
    return CuntzSum.from_terms(g.n, [Monomial(Fraction(1), a, b) for a, b in g.rows])


def format_sum(x: CuntzSum) -> str:
    if not x.terms:
        return "0"
    out = []
    for i, t in enumerate(x.terms):
        c = t.coeff
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if t.a == EMPTY and t.b == EMPTY:
            body = str(c)
        else:
            mono = f"S[{format_word(t.a, x.n)}]S*[{format_word(t.b, x.n)}]"
            body = mono if c == 1 else f"{c}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_COEFF = re.compile(r"\d+(?:/\d+)?")
_MONO = re.compile(r"S\[([^\]]*)\]\s*S\*\[([^\]]*)\]")


def parse_sum(text: str, n: int) -> CuntzSum:
    """Parse the text form, e.g. ``"S[21]S*[1] + 1/2*S[1]S*[ε] - 1"``."""
    s = text
    pos = 0
    terms = []
    first = True

    def skip(p):
        while p < len(s) and s[p].isspace():
            p += 1
        return p

    pos = skip(pos)
    if s[pos:].strip() == "0":
        return CuntzSum.zero(n)
    while True:
        pos = skip(pos)
        if pos >= len(s):
            break
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise ValueError(f"expected '+' or '-' at position {pos} of {text!r}")
        start = pos
        coeff = Fraction(1)
        m = _COEFF.match(s, pos)
        if m:
            coeff = Fraction(m.group())
            pos = skip(m.end())
            if pos < len(s) and s[pos] == "*":
                pos = skip(pos + 1)
                if not _MONO.match(s, pos):
                    raise ValueError(f"expected a monomial at position {pos} of {text!r}")
        mono = _MONO.match(s, pos)
        if mono:
            try:
                a = parse_word(mono.group(1), n)
                b = parse_word(mono.group(2), n)
            except ValueError as exc:
                raise ValueError(f"at position {pos}: {exc}") from None
            pos = mono.end()
        elif m:
            a = b = EMPTY
        else:
            raise ValueError(f"expected a term at position {start} of {text!r}")
        terms.append(Monomial(sign * coeff, a, b))
        first = False
    if not terms:
        raise ValueError("empty sum")
    return CuntzSum.from_terms(n, terms)
