"""Elements of V_n as tables of two maximal prefix codes.

A table is a list of rows ``(a, b)`` meaning the prefix substitution
``b·w -> a·w``.  Rows are kept sorted by ``b``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import (
    EMPTY,
    AdmissibilityError,
    PrefixCode,
    Word,
    common_refinement,
    explain_code,
    format_word,
    parse_word,
)

Row = tuple[Word, Word]


@dataclass(frozen=True)
class Table:
    """Use ``validate`` to build one from untrusted pairs."""

    n: int
    rows: tuple[Row, ...]

    @property
    def a_column(self) -> tuple[Word, ...]:
        return tuple(a for a, _ in self.rows)

    @property
    def b_column(self) -> tuple[Word, ...]:
        return tuple(b for _, b in self.rows)

    def __len__(self):
        return len(self.rows)

    def max_length(self) -> int:
        return max(max(len(a), len(b)) for a, b in self.rows)

    def apply(self, w: Word) -> Word:
        """Image of a finite word that has some b-word as prefix."""
        for a, b in self.rows:
            if w[: len(b)] == b:
                return a + w[len(b):]
        raise ValueError(f"{format_word(w, self.n)} has no prefix in the b-column")

    def __str__(self):
        return format_table(self)


def _sorted_table(n: int, rows: Iterable[Row]) -> Table:
    return Table(n, tuple(sorted(rows, key=lambda r: r[1])))


def validate(pairs: Iterable[tuple[Sequence[int], Sequence[int]]], n: int) -> Table:
    rows = [(tuple(a), tuple(b)) for a, b in pairs]
    if not rows:
        raise AdmissibilityError("a table needs at least one row")
    for label, column in (("a", [r[0] for r in rows]), ("b", [r[1] for r in rows])):
        problem = explain_code(column, n)
        if problem is not None:
            raise AdmissibilityError(f"{label}-column: {problem}")
    return _sorted_table(n, rows)


def identity(n: int) -> Table:
    return Table(n, ((EMPTY, EMPTY),))


def reduce(g: Table) -> Table:
    """Merge complete sibling families {(a·j, b·j)} until none is left."""
    n = g.n
    rows = set(g.rows)
    changed = True
    while changed:
        changed = False
        families: dict[Row, list[Row]] = {}
        for a, b in rows:
            if a and b and a[-1] == b[-1]:
                families.setdefault((a[:-1], b[:-1]), []).append((a, b))
        for stem, members in families.items():
            if len(members) == n:
                rows.difference_update(members)
                rows.add(stem)
                changed = True
    return _sorted_table(n, rows)


def invert(g: Table) -> Table:
    return reduce(_sorted_table(g.n, ((b, a) for a, b in g.rows)))


def compose(g: Table, h: Table) -> Table:
    """The element g∘h: apply h first, then g."""
    if g.n != h.n:
        raise ValueError(f"alphabet mismatch: {g.n} vs {h.n}")
    n = g.n
    h_out = PrefixCode(h.a_column, n)
    g_in = PrefixCode(g.b_column, n)
    C, to_h, to_g = common_refinement(h_out, g_in)
    h_src = dict(h.rows)
    g_dst = {b: a for a, b in g.rows}
    rows = []
    for c in C.words:
        ah, bg = to_h[c], to_g[c]
        rows.append((g_dst[bg] + c[len(bg):], h_src[ah] + c[len(ah):]))
    return reduce(_sorted_table(n, rows))


def equal(g: Table, h: Table) -> bool:
    if g.n != h.n:
        raise ValueError(f"alphabet mismatch: {g.n} vs {h.n}")
    return reduce(g).rows == reduce(h).rows


def is_identity(g: Table) -> bool:
    return reduce(g).rows == ((EMPTY, EMPTY),)


def classify(g: Table) -> str:
    """'F', 'T' or 'V' from the cyclic order of the a-column."""
    a = list(reduce(g).a_column)
    ordered = sorted(a)
    if a == ordered:
        return "F"
    for i in range(1, len(a)):
        if a[i:] + a[:i] == ordered:
            return "T"
    return "V"


def random_code(n: int, size_expansions: int, max_depth: int, rng: random.Random) -> list[Word]:
    words = [(j,) for j in range(1, n + 1)]
    for _ in range(size_expansions):
        open_words = [w for w in words if len(w) < max_depth]
        w = rng.choice(open_words)
        words.remove(w)
        words.extend(w + (j,) for j in range(1, n + 1))
    return words


def random_table(n: int, max_depth: int, seed=None, max_expansions: int | None = None) -> Table:
    """Deterministic in ``seed`` (an int or a ``random.Random``)."""
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    capacity = (n ** max_depth - n) // (n - 1)
    if max_expansions is None:
        max_expansions = 3 * max_depth
    e = rng.randint(0, min(capacity, max_expansions))
    a_words = random_code(n, e, max_depth, rng)
    b_words = random_code(n, e, max_depth, rng)
    rng.shuffle(a_words)
    return _sorted_table(n, zip(a_words, b_words))


def expand_row(g: Table, index: int) -> Table:
    """Split row ``index`` into n rows with the same map."""
    a, b = g.rows[index]
    rows = list(g.rows[:index]) + list(g.rows[index + 1:])
    rows.extend((a + (j,), b + (j,)) for j in range(1, g.n + 1))
    return _sorted_table(g.n, rows)


# Tables used to move between generators of the Cuntz algebra.

def subtree_swap(n: int, i: int) -> Table:
    """Exchange the subtrees below letters i and n, fixing the other letters."""
    if not 1 <= i <= n:
        raise ValueError(f"letter {i} outside 1..{n}")
    if i == n:
        return validate([((j,), (j,)) for j in range(1, n + 1)], n)
    rows = [((j,), (j,)) for j in range(1, n + 1) if j not in (i, n)]
    for j in range(1, n + 1):
        rows.append(((i, j), (n, j)))
        rows.append(((n, j), (i, j)))
    return validate(rows, n)


def split_letter(n: int, i: int) -> Table:
    """Send the word i to ii, borrowing the subtree of a spare letter.

    The spare letter is 1, or 2 when i = 1.
    """
    if not 1 <= i <= n:
        raise ValueError(f"letter {i} outside 1..{n}")
    spare = 1 if i != 1 else 2
    rows = [((j,), (j,)) for j in range(1, n + 1) if j not in (i, spare)]
    rows.append(((spare,), (spare, 1)))
    rows.append(((i, i), (i,)))
    others = [(i, j) for j in range(1, n + 1) if j != i]
    rows.extend(zip(others, [(spare, j) for j in range(2, n + 1)]))
    return validate(rows, n)


def letter_transposition(n: int, i: int) -> Table:
    """Exchange the letters i and n at the first position."""
    if not 1 <= i <= n:
        raise ValueError(f"letter {i} outside 1..{n}")
    swap = {i: n, n: i}
    return validate([((swap.get(j, j),), (j,)) for j in range(1, n + 1)], n)


def format_table(g: Table) -> str:
    a = " ".join(format_word(w, g.n) for w in g.a_column)
    b = " ".join(format_word(w, g.n) for w in g.b_column)
    return f"{a} -> {b}"


def parse_table(text: str, n: int) -> Table:
    """Parse ``"a_1 ... a_m -> b_1 ... b_m"``."""
    if text.count("->") != 1:
        raise ValueError(f"expected exactly one '->' in table {text!r}")
    left, right = text.split("->")
    columns = []
    for label, part in (("a", left), ("b", right)):
        words = []
        for pos, token in enumerate(part.split()):
            try:
                words.append(parse_word(token, n))
            except ValueError as exc:
                raise ValueError(f"{label}-row token {pos + 1}: {exc}") from None
        columns.append(words)
    if len(columns[0]) != len(columns[1]):
        raise AdmissibilityError(
            f"size mismatch: {len(columns[0])} a-words but {len(columns[1])} b-words")
    return validate(zip(*columns), n)


def table_to_json(g: Table) -> dict:
    return {"base": g.n, "rows": [{"a": format_word(a, g.n), "b": format_word(b, g.n)}
                                   for a, b in g.rows]}


def table_from_json(d: dict) -> Table:
    n = int(d["base"])
    return validate([(parse_word(r["a"], n), parse_word(r["b"], n)) for r in d["rows"]], n)
