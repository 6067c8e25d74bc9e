"""Words over ``{x, D}`` and the lattice-path data attached to them.

A word is read as a lattice path: ``x`` is a north step and ``D`` an east
step. D-steps are labelled ``1..n`` from left to right; x-steps are referred
to by their 0-based position in the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "X",
    "D",
    "Word",
    "WordParseError",
    "NotDyckError",
    "BalanceProfile",
    "StandardFactorization",
    "HeightProfile",
    "parse_word",
    "classify",
    "standard_factorize",
    "height_profile",
    "tunnel_matching",
    "dyck_words",
    "balanced_words",
]

X = "x"
D = "D"


class WordParseError(ValueError):
    def __init__(self, text: str, index: int):
        self.text = text
        self.index = index
        super().__init__(f"invalid letter {text[index]!r} at index {index}; expected 'x' or 'D'")


class NotDyckError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    letters: str = ""

    def __post_init__(self):
        for i, ch in enumerate(self.letters):
            if ch != X and ch != D:
                raise WordParseError(self.letters, i)

    def __str__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    @property
    def num_x(self) -> int:
        return self.letters.count(X)

    @property
    def num_d(self) -> int:
        return self.letters.count(D)

    @property
    def semilength(self) -> int:
        """Number of D's; equals the number of x's for balanced words."""
        return self.num_d


def parse_word(text: str) -> Word:
    return Word(text)


def _as_word(w: Word | str) -> Word:
    return w if isinstance(w, Word) else Word(w)


@dataclass(frozen=True)
class BalanceProfile:
    num_x: int
    num_d: int
    is_balanced: bool
    is_dyck: bool
    starts_with_x: bool


def classify(w: Word | str) -> BalanceProfile:
    w = _as_word(w)
    depth = 0
    prefix_ok = True
    for ch in w.letters:
        depth += 1 if ch == X else -1
        if depth < 0:
            prefix_ok = False
    nx, nd = w.num_x, w.num_d
    return BalanceProfile(
        num_x=nx,
        num_d=nd,
        is_balanced=nx == nd,
        is_dyck=prefix_ok and nx == nd,
        starts_with_x=w.letters[:1] == X,
    )


def _require_dyck(w: Word) -> None:
    if not classify(w).is_dyck:
        raise NotDyckError(f"{w.letters!r} is not a Dyck word")


def _require_balanced(w: Word) -> None:
    p = classify(w)
    if not p.is_balanced:
        raise ValueError(f"{w.letters!r} is not balanced ({p.num_x} x's, {p.num_d} D's)")


@dataclass(frozen=True)
class StandardFactorization:
    first_block: Word
    inner: Word
    rest: Word

    def reconstruct(self) -> Word:
        return self.first_block + self.rest


def standard_factorize(w: Word | str) -> StandardFactorization:
    """Split a nonempty Dyck word as ``x inner D rest`` at its first return."""
    w = _as_word(w)
    if not w.letters:
        raise NotDyckError("the empty word has no standard factorization")
    _require_dyck(w)
    depth = 0
    for i, ch in enumerate(w.letters):
        depth += 1 if ch == X else -1
        if depth == 0:
            return StandardFactorization(
                first_block=Word(w.letters[: i + 1]),
                inner=Word(w.letters[1:i]),
                rest=Word(w.letters[i + 1 :]),
            )
    raise AssertionError("unreachable for Dyck words")


@dataclass(frozen=True)
class HeightProfile:
    column_heights: tuple[int, ...]
    east_heights: tuple[int, ...]


def height_profile(w: Word | str) -> HeightProfile:
    """Column heights ``c_i`` (#x's before the i-th D) and ``h_i = c_i - i``."""
    w = _as_word(w)
    _require_balanced(w)
    cols = []
    seen_x = 0
    for ch in w.letters:
        if ch == X:
            seen_x += 1
        else:
            cols.append(seen_x)
    return HeightProfile(
        column_heights=tuple(cols),
        east_heights=tuple(c - i for i, c in enumerate(cols, start=1)),
    )


def tunnel_matching(w: Word | str) -> list[tuple[int, int]]:
    """Pairs ``(x_position, d_label)`` of facing steps, ordered by D label.

    x positions are 0-based indices into the word, D labels run ``1..n``.
    """
    w = _as_word(w)
    _require_dyck(w)
    stack: list[int] = []
    pairs = []
    label = 0
    for i, ch in enumerate(w.letters):
        if ch == X:
            stack.append(i)
        else:
            label += 1
            pairs.append((stack.pop(), label))
    return pairs


def dyck_words(n: int) -> Iterable[Word]:
    """All Dyck words of semi-length ``n`` in lexicographic order (x < D)."""

    def rec(prefix: str, opened: int, closed: int):
        if closed == n:
            yield Word(prefix)
            return
        if opened < n:
            yield from rec(prefix + X, opened + 1, closed)
        if closed < opened:
            yield from rec(prefix + D, opened, closed + 1)

    return rec("", 0, 0)


def balanced_words(n: int, starts_with_x: bool = False) -> Iterable[Word]:
    """All words with ``n`` x's and ``n`` D's, optionally only x-initial ones."""
    from itertools import combinations

    for xs in combinations(range(2 * n), n):
        if starts_with_x and n and xs[0] != 0:
            continue
        letters = [D] * (2 * n)
        for i in xs:
            letters[i] = X
        yield Word("".join(letters))
