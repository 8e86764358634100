"""Words over {1..n}, the positional lexicographic order, and maximal prefix codes.

A word is a plain tuple of ints.  The empty tuple is the empty word.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    PREFIX_INCOMPARABLE = "PrefixIncomparable"


class AdmissibilityError(ValueError):
    """A set of words fails to be a maximal prefix code."""


def check_word(w: Sequence[int], n: int) -> Word:
    w = tuple(w)
    for pos, letter in enumerate(w):
        if not isinstance(letter, int) or not 1 <= letter <= n:
            raise ValueError(f"letter {letter!r} at position {pos} outside 1..{n}")
    return w


def lex_compare(a: Word, b: Word) -> Ordering:
    """Compare at the first differing position.

    When one word is a proper prefix of the other there is no such position
    and the result is ``PREFIX_INCOMPARABLE``.
    """
    for x, y in zip(a, b):
        if x < y:
            return Ordering.LESS
        if x > y:
            return Ordering.GREATER
    if len(a) == len(b):
        return Ordering.EQUAL
    return Ordering.PREFIX_INCOMPARABLE


def is_prefix(a: Word, b: Word) -> bool:
    return len(a) <= len(b) and b[: len(a)] == a


def comparable(a: Word, b: Word) -> bool:
    """True when one word is a prefix of the other."""
    k = min(len(a), len(b))
    return a[:k] == b[:k]


def all_words(n: int, max_length: int, min_length: int = 0) -> Iterator[Word]:
    for length in range(min_length, max_length + 1):
        yield from itertools.product(range(1, n + 1), repeat=length)


def is_prefix_free(words: Iterable[Word]) -> bool:
    ws = set(words)
    for w in ws:
        for i in range(len(w)):
            if w[:i] in ws:
                return False
    return True


def _merge_to_root(ws: set[Word], n: int) -> bool:
    # deepest words must come in complete sibling families
    ws = set(ws)
    while ws != {EMPTY}:
        depth = max(len(w) for w in ws)
        if depth == 0:
            return False
        deepest = [w for w in ws if len(w) == depth]
        parents: dict[Word, int] = {}
        for w in deepest:
            parents[w[:-1]] = parents.get(w[:-1], 0) + 1
        if any(count != n for count in parents.values()):
            return False
        ws.difference_update(deepest)
        ws.update(parents)
    return True


def is_maximal_prefix_code(words: Iterable[Word], n: int) -> bool:
    ws = set(words)
    if not ws:
        return False
    if any(not 1 <= letter <= n for w in ws for letter in w):
        return False
    return is_prefix_free(ws) and _merge_to_root(ws, n)


def explain_code(words: Sequence[Word], n: int) -> str | None:
    """Return a diagnostic for the first violated code condition, or None."""
    if not words:
        return "empty set of words"
    seen = set()
    for w in words:
        if w in seen:
            return f"duplicate word {format_word(w, n)}"
        seen.add(w)
        for letter in w:
            if not 1 <= letter <= n:
                return f"letter {letter} outside 1..{n} in {format_word(w, n)}"
    for w in words:
        for i in range(len(w)):
            if w[:i] in seen:
                return (f"not prefix-free: {format_word(w[:i], n)} is a prefix "
                        f"of {format_word(w, n)}")
    if not _merge_to_root(seen, n):
        return "not maximal: some infinite word has no prefix in the set"
    return None


@dataclass(frozen=True)
class PrefixCode:
    """A maximal prefix code, stored lex-sorted without duplicates."""

    words: tuple[Word, ...]
    n: int

    def __post_init__(self):
        words = tuple(sorted(set(tuple(w) for w in self.words)))
        problem = explain_code(list(words), self.n)
        if problem is not None:
            raise AdmissibilityError(problem)
        object.__setattr__(self, "words", words)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return tuple(w) in set(self.words)

    def prefix_of(self, w: Word) -> Word:
        """The unique code word that is a prefix of ``w`` (w long enough)."""
        ws = set(self.words)
        for i in range(len(w) + 1):
            if w[:i] in ws:
                return w[:i]
        raise KeyError(f"no code word is a prefix of {format_word(w, self.n)}")

    def max_length(self) -> int:
        return max(len(w) for w in self.words)


def expand(code: PrefixCode, w: Word) -> PrefixCode:
    w = tuple(w)
    if w not in code:
        raise KeyError(f"{format_word(w, code.n)} is not in the code")
    rest = [v for v in code.words if v != w]
    children = [w + (j,) for j in range(1, code.n + 1)]
    return PrefixCode(tuple(rest + children), code.n)


def merge_siblings(code: PrefixCode, w: Word) -> PrefixCode:
    """Inverse of ``expand``: replace the family w1..wn by w."""
    w = tuple(w)
    children = {w + (j,) for j in range(1, code.n + 1)}
    if not children <= set(code.words):
        raise KeyError(f"the sibling family below {format_word(w, code.n)} is incomplete")
    rest = [v for v in code.words if v not in children]
    return PrefixCode(tuple(rest + [w]), code.n)


def common_refinement(A: PrefixCode, B: PrefixCode):
    """Coarsest maximal prefix code refining both ``A`` and ``B``.

    Returns ``(C, map_a, map_b)`` where ``map_a[c]`` (``map_b[c]``) is the
    unique word of ``A`` (``B``) that is a prefix of ``c``.
    """
    if A.n != B.n:
        raise ValueError(f"alphabet mismatch: {A.n} vs {B.n}")
    aset, bset = set(A.words), set(B.words)
    map_a: dict[Word, Word] = {}
    map_b: dict[Word, Word] = {}
    for a in A.words:
        for i in range(len(a) + 1):
            if a[:i] in bset:
                map_a[a] = a
                map_b[a] = a[:i]
                break
    for b in B.words:
        for i in range(len(b)):
            if b[:i] in aset:
                map_a[b] = b[:i]
                map_b[b] = b
                break
    return PrefixCode(tuple(map_a), A.n), map_a, map_b


def format_word(w: Word, n: int) -> str:
    if not w:
        return "ε"
    if n <= 9:
        return "".join(str(letter) for letter in w)
    return ".".join(str(letter) for letter in w)


def parse_word(text: str, n: int) -> Word:
    """Parse the text form: digits for n <= 9, dot-separated otherwise."""
    s = text.strip()
    if s in ("", "e", "ε"):
        return EMPTY
    if n >= 10:
        parts = s.split(".")
    else:
        parts = list(s)
    letters = []
    col = 0
    for part in parts:
        if not part.isdigit():
            raise ValueError(f"bad letter {part!r} at column {col} of word {text!r}")
        letter = int(part)
        if not 1 <= letter <= n:
            raise ValueError(f"letter {letter} at column {col} of word {text!r} outside 1..{n}")
        letters.append(letter)
        col += len(part) + (1 if n >= 10 else 0)
    return tuple(letters)
