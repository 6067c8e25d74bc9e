"""Ferrers boards of words, rook placements, and rook factorizations.

Rows are numbered ``1..n`` bottom to top and columns ``1..n`` left to right;
cell ``(i, j)`` belongs to the board iff ``i <= c_j``.

Both q-statistics count "free" cells: cells with no rook above them in their
column *and* no rook to their left in their row. ``inv`` adds the cells
holding a black rook; a white rook's cell is never counted. ``inv'`` adds
every cell holding a rook. This reading reproduces the expansion
coefficients for every word checked (and ``inv = 4``, ``inv' = 6`` on the
running example); the alternatives ("above *or* left", or counting white
rook cells) do not.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator

from .qpoly import ONE, ZERO, LaurentPoly, q_bracket
from .report import CheckReport
from .weyl import Basis, expand
from .words import Word, _as_word, _require_dyck, classify, height_profile
from . import zpoly

__all__ = [
    "FerrersBoard",
    "RookPlacement",
    "board_from_word",
    "enumerate_full_placements",
    "enumerate_truncated_placements",
    "inv",
    "inv_prime",
    "rook_stirling1",
    "rook_lah",
    "factor_polynomial",
    "elementary_symmetric",
    "stirling1_by_esym",
    "lah_by_difference",
    "q_factorization_check",
]

Cell = tuple[int, int]


@dataclass(frozen=True)
class FerrersBoard:
    n: int
    column_heights: tuple[int, ...]

    def __post_init__(self):
        c = self.column_heights
        if len(c) != self.n:
            raise ValueError("need one height per column")
        if any(not 0 <= h <= self.n for h in c) or any(a > b for a, b in zip(c, c[1:])):
            raise ValueError(f"column heights {c} are not a Ferrers shape")

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= j <= self.n and 1 <= i <= self.column_heights[j - 1]

    def cells(self, min_row: int = 1) -> list[Cell]:
        return [
            (i, j)
            for j, h in enumerate(self.column_heights, start=1)
            for i in range(min_row, h + 1)
        ]

    @property
    def area(self) -> int:
        return sum(self.column_heights)


def board_from_word(w: Word | str) -> FerrersBoard:
    w = _as_word(w)
    prof = height_profile(w)
    return FerrersBoard(len(prof.column_heights), prof.column_heights)


def _is_white(rooks: frozenset[Cell], rook: Cell) -> bool:
    i, j = rook
    return not any(a < i and b > j for a, b in rooks)


def _free(rooks: frozenset[Cell], cell: Cell) -> bool:
    i, j = cell
    return not any((b == j and a > i) or (a == i and b < j) for a, b in rooks)


def inv(board: FerrersBoard, rooks: frozenset[Cell]) -> int:
    total = 0
    for cell in board.cells():
        if cell in rooks:
            total += not _is_white(rooks, cell)
        else:
            total += _free(rooks, cell)
    return total


def inv_prime(board: FerrersBoard, rooks: frozenset[Cell]) -> int:
    """``inv'`` on the board with its bottom row removed."""
    return sum(1 for cell in board.cells(min_row=2) if cell in rooks or _free(rooks, cell))


@dataclass(frozen=True)
class RookPlacement:
    board: FerrersBoard
    rooks: tuple[Cell, ...]  # sorted by column
    white: tuple[int, ...]  # indices into ``rooks``
    inv: int

    @property
    def num_white(self) -> int:
        return len(self.white)

    def to_json(self) -> dict:
        return {
            "board": list(self.board.column_heights),
            "rooks": [list(r) for r in self.rooks],
            "white": list(self.white),
            "inv": self.inv,
        }


def _placements(board: FerrersBoard, min_row: int, size: int | None) -> Iterator[tuple[Cell, ...]]:
    # column by column, rows ascending; ``size=None`` means one rook per column
    n = board.n

    def rec(j: int, used: set[int], acc: list[Cell]):
        if j > n:
            if size is None or len(acc) == size:
                yield tuple(acc)
            return
        remaining = n - j + 1
        if size is not None:
            if len(acc) + remaining < size:
                return
            # leaving column j empty
            yield from rec(j + 1, used, acc)
            if len(acc) == size:
                return
        for i in range(min_row, board.column_heights[j - 1] + 1):
            if i not in used:
                used.add(i)
                acc.append((i, j))
                yield from rec(j + 1, used, acc)
                acc.pop()
                used.discard(i)

    return rec(1, set(), [])


def enumerate_full_placements(board: FerrersBoard, white_count: int | None = None) -> list[RookPlacement]:
    """``n``-rook placements, optionally only those with ``white_count`` white rooks."""
    out = []
    for rooks in _placements(board, 1, None):
        rs = frozenset(rooks)
        white = tuple(idx for idx, r in enumerate(rooks) if _is_white(rs, r))
        if white_count is not None and len(white) != white_count:
            continue
        out.append(RookPlacement(board, rooks, white, inv(board, rs)))
    return out


def _require_x_initial(w: Word) -> None:
    p = classify(w)
    if not p.is_balanced or not p.starts_with_x:
        raise ValueError(f"{w} must be balanced and start with x")


def enumerate_truncated_placements(w: Word | str, k: int) -> list[RookPlacement]:
    """``k``-rook placements on the board minus its bottom row, with ``inv'``."""
    w = _as_word(w)
    _require_x_initial(w)
    board = board_from_word(w)
    return [
        RookPlacement(board, rooks, (), inv_prime(board, frozenset(rooks)))
        for rooks in _placements(board, 2, k)
    ]


def _weigh(placements: list[RookPlacement], q_deformed: bool) -> LaurentPoly:
    if not q_deformed:
        return LaurentPoly.constant(len(placements))
    total = ZERO
    for p in placements:
        total = total + LaurentPoly.monomial(-p.inv)
    return total


def rook_stirling1(w: Word | str, k: int, q_deformed: bool = True) -> LaurentPoly:
    w = _as_word(w)
    _require_dyck(w)
    return _weigh(enumerate_full_placements(board_from_word(w), k), q_deformed)


def rook_lah(w: Word | str, k: int, q_deformed: bool = True) -> LaurentPoly:
    """LAH coefficient at index ``k``, i.e. placements of ``n - k`` rooks."""
    w = _as_word(w)
    n = w.semilength
    if not 0 <= k <= n:
        return ZERO
    if n == 0:
        return ONE
    return _weigh(enumerate_truncated_placements(w, n - k), q_deformed)


def factor_polynomial(w: Word | str) -> tuple[int, ...]:
    """``prod_i (z - c_i + i)`` as coefficients in ``z``."""
    prof = height_profile(_as_word(w))
    return zpoly.from_roots(c - i for i, c in enumerate(prof.column_heights, start=1))


def elementary_symmetric(values, k: int) -> int:
    e = [1] + [0] * len(values)
    for v in values:
        for j in range(len(values), 0, -1):
            e[j] += e[j - 1] * v
    return e[k] if 0 <= k <= len(values) else 0


def stirling1_by_esym(w: Word | str, k: int) -> int:
    w = _as_word(w)
    _require_dyck(w)
    h = height_profile(w).east_heights
    return elementary_symmetric(h, len(h) - k)


def lah_by_difference(w: Word | str, k: int) -> int:
    """``(1/k!) sum_i (-1)^(n-i) C(k, i) P(i - k)`` with ``P`` the factor polynomial."""
    w = _as_word(w)
    if w.letters:
        _require_x_initial(w)
    n = w.semilength
    p = factor_polynomial(w)
    total = sum((-1) ** (n - i) * comb(k, i) * zpoly.evaluate(p, i - k) for i in range(k + 1))
    value, rem = divmod(total, factorial(k))
    if rem:
        raise ArithmeticError(f"difference sum {total} not divisible by {k}!")
    return value


def q_factorization_check(w: Word | str, basis: Basis | str) -> CheckReport:
    """Compare both sides of the q rook factorization at ``z = 0..n``.

    With ``Z = q^z`` every bracket ``[z + a]_q`` equals ``(q^a Z - 1)/(q - 1)``,
    so both sides are polynomials of degree at most ``n`` in ``Z``. Agreement
    at the ``n + 1`` distinct points ``Z = 1, q, .., q^n`` forces equality
    for all ``z``.
    """
    w = _as_word(w)
    basis = Basis(basis)
    if basis is Basis.POWER_XD:
        _require_dyck(w)
    elif basis is Basis.LAH:
        if w.letters:
            _require_x_initial(w)
    else:
        raise ValueError("only power-xd and lah have a q rook factorization")
    exp = expand(w, basis, q_deformed=True)
    n = exp.n
    cols = height_profile(w).column_heights
    rep = CheckReport(f"q-factorization[{basis.value}]", note="degree <= n in q^z; n+1 sample points suffice")
    for z in range(n + 1):
        rhs = ONE
        for i, c in enumerate(cols, start=1):
            rhs = rhs * q_bracket(z - c + i)
        lhs = ZERO
        for k, a in enumerate(exp.signed_coeffs):
            if not a:
                continue
            factor = ONE
            for t in range(k):
                factor = factor * (q_bracket(z) if basis is Basis.POWER_XD else q_bracket(z + t))
            lhs = lhs + a * factor
        rep.record(f"{w} z={z}", lhs == rhs)
    return rep
