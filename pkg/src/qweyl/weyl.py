"""Normal ordering in the (q-deformed) Weyl algebra and basis expansions.

The algebra is generated by ``x`` and ``D`` with ``Dx = q xD + 1``; the
undeformed algebra is the image at ``q = 1``. Every word has a unique normal
form ``sum c_ij x^i D^j``. A balanced word (as many x's as D's) lies in the
span of ``{x^k D^k}`` and can be rewritten over three triangular bases:

* ``NORMAL``   -- ``x^k D^k``
* ``POWER_XD`` -- ``(xD)^k``
* ``LAH``      -- ``x D^k x^(k-1)``, with the empty word for ``k = 0``

Coefficients are stored signed (the literal expansion coefficients ``a_k``);
``Expansion.unsigned(k)`` returns ``(-1)^(n-k) a_k``, i.e. the Stirling and
Lah numbers of the word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Mapping

from .qpoly import ONE, ZERO, InexactDivisionError, LaurentPoly, q_bracket
from .report import CheckReport
from .words import D, X, Word, _as_word, _require_dyck, classify, standard_factorize

__all__ = [
    "Basis",
    "NormalForm",
    "Expansion",
    "NotExpandable",
    "normal_order",
    "rewrite_normal_order",
    "basis_word",
    "expand",
    "stirling1_by_recurrence",
    "lah_by_recurrence",
    "commute_xmDn",
    "bar_qstirling2",
    "qlah",
    "qreduction_identities_check",
]


class NotExpandable(ArithmeticError):
    """The word is not an exact combination of the requested basis."""


class Basis(enum.Enum):
    NORMAL = "normal"
    POWER_XD = "power-xd"
    LAH = "lah"


def _qpow(e: int, q_deformed: bool) -> LaurentPoly:
    return LaurentPoly.monomial(e) if q_deformed else ONE


def _bracket(m: int, q_deformed: bool) -> LaurentPoly:
    return q_bracket(m) if q_deformed else LaurentPoly.constant(m)


def monomial_name(i: int, j: int) -> str:
    xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
    ds = "" if j == 0 else ("D" if j == 1 else f"D^{j}")
    return xs + ds


class NormalForm:
    """Finite combination of monomials ``x^i D^j`` with Laurent coefficients."""

    __slots__ = ("_terms", "q_deformed")

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly] = (), q_deformed: bool = True):
        self._terms = {m: c for m, c in dict(terms).items() if c}
        self.q_deformed = q_deformed

    @classmethod
    def one(cls, q_deformed: bool = True) -> "NormalForm":
        return cls({(0, 0): ONE}, q_deformed)

    @property
    def terms(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> LaurentPoly:
        return self._terms.get((i, j), ZERO)

    def monomials(self) -> list[tuple[int, int]]:
        return sorted(self._terms, reverse=True)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], LaurentPoly]]:
        for m in self.monomials():
            yield m, self._terms[m]

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "NormalForm") -> "NormalForm":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, ZERO) + c
        return NormalForm(out, self.q_deformed)

    def __neg__(self):
        return NormalForm({m: -c for m, c in self._terms.items()}, self.q_deformed)

    def __sub__(self, other: "NormalForm") -> "NormalForm":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "NormalForm":
        return NormalForm({m: v * c for m, v in self._terms.items()}, self.q_deformed)

    def times_x(self) -> "NormalForm":
        # x^i D^j x = q^j x^(i+1) D^j + [j]_q x^i D^(j-1)
        out: dict[tuple[int, int], LaurentPoly] = {}
        qd = self.q_deformed
        for (i, j), c in self._terms.items():
            key = (i + 1, j)
            out[key] = out.get(key, ZERO) + c * _qpow(j, qd)
            if j:
                key = (i, j - 1)
                out[key] = out.get(key, ZERO) + c * _bracket(j, qd)
        return NormalForm(out, qd)

    def times_d(self) -> "NormalForm":
        return NormalForm({(i, j + 1): c for (i, j), c in self._terms.items()}, self.q_deformed)

    def times_word(self, w: Word | str) -> "NormalForm":
        nf = self
        for ch in str(w):
            nf = nf.times_x() if ch == X else nf.times_d()
        return nf

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        total = NormalForm({}, self.q_deformed)
        for (i, j), c in other._terms.items():
            total = total + self.times_word(X * i + D * j).scale(c)
        return total

    def at_one(self) -> "NormalForm":
        return NormalForm(
            {m: LaurentPoly.constant(c.at_one()) for m, c in self._terms.items()}, False
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self:
            name = monomial_name(i, j)
            neg = c.is_monomial() and c.coeff(c.min_exponent()) < 0
            mag = -c if neg else c
            if not name:
                body = str(mag)
            elif mag == ONE:
                body = name
            elif mag.is_monomial():
                body = f"{mag}·{name}"
            else:
                body = f"({mag})·{name}"
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"NormalForm({self})"

    def to_json(self) -> list:
        return [[i, j, c.to_json()] for (i, j), c in self]


def normal_order(w: Word | str, q_deformed: bool = True) -> NormalForm:
    """Normal form of ``w``; ``q_deformed=False`` gives the ``q = 1`` image."""
    return NormalForm.one(q_deformed).times_word(_as_word(w))


def rewrite_normal_order(w: Word | str, q_deformed: bool = True) -> NormalForm:
    """Normal form by literal rewriting ``Dx -> q xD + 1`` on words.

    Keeps a multiset of (word, coefficient) states, always rewriting the
    leftmost ``Dx`` adjacency and merging equal words eagerly. Much slower
    than :func:`normal_order`; kept as an independent check of it.
    """
    pending: dict[str, LaurentPoly] = {str(_as_word(w)): ONE}
    done: dict[tuple[int, int], LaurentPoly] = {}
    qf = LaurentPoly.monomial(1) if q_deformed else ONE
    while pending:
        nxt: dict[str, LaurentPoly] = {}
        for word, c in pending.items():
            pos = word.find(D + X)
            if pos < 0:
                key = (word.count(X), word.count(D))
                done[key] = done.get(key, ZERO) + c
                continue
            swapped = word[:pos] + X + D + word[pos + 2 :]
            deleted = word[:pos] + word[pos + 2 :]
            nxt[swapped] = nxt.get(swapped, ZERO) + c * qf
            nxt[deleted] = nxt.get(deleted, ZERO) + c
        pending = {k: v for k, v in nxt.items() if v}
    return NormalForm(done, q_deformed)


def basis_word(basis: Basis, k: int) -> Word:
    if k < 0:
        raise ValueError("basis index must be non-negative")
    if basis is Basis.NORMAL:
        return Word(X * k + D * k)
    if basis is Basis.POWER_XD:
        return Word((X + D) * k)
    if k == 0:
        return Word("")
    return Word(X + D * k + X * (k - 1))


@lru_cache(maxsize=None)
def _basis_nf(basis: Basis, k: int, q_deformed: bool) -> NormalForm:
    return normal_order(basis_word(basis, k), q_deformed)


@dataclass(frozen=True)
class Expansion:
    word: str
    basis: Basis
    n: int
    signed_coeffs: tuple[LaurentPoly, ...]
    q_deformed: bool = True

    def signed(self, k: int) -> LaurentPoly:
        return self.signed_coeffs[k] if 0 <= k <= self.n else ZERO

    def unsigned(self, k: int) -> LaurentPoly:
        a = self.signed(k)
        return -a if (self.n - k) % 2 else a

    @property
    def unsigned_coeffs(self) -> tuple[LaurentPoly, ...]:
        return tuple(self.unsigned(k) for k in range(self.n + 1))

    def at_one(self) -> "Expansion":
        return Expansion(
            self.word,
            self.basis,
            self.n,
            tuple(LaurentPoly.constant(c.at_one()) for c in self.signed_coeffs),
            False,
        )

    def resubstitute(self) -> NormalForm:
        total = NormalForm({}, self.q_deformed)
        for k, a in enumerate(self.signed_coeffs):
            if a:
                total = total + _basis_nf(self.basis, k, self.q_deformed).scale(a)
        return total

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "basis": self.basis.value,
            "n": self.n,
            "q_deformed": self.q_deformed,
            "coefficients": [c.to_json() for c in self.signed_coeffs],
        }

    def __str__(self):
        lines = []
        for k, a in enumerate(self.signed_coeffs):
            lines.append(f"k={k}\t{a}\t[{basis_word(self.basis, k) or '1'}]")
        return "\n".join(lines)


def expand(w: Word | str, basis: Basis | str, q_deformed: bool = True) -> Expansion:
    """Coefficients ``a_0..a_n`` with ``w = sum a_k b_k`` exactly.

    Solves the triangular system against the basis normal forms from the top
    index down, dividing by the unit diagonal entry at each step, then checks
    that nothing is left over.
    """
    w = _as_word(w)
    basis = Basis(basis)
    prof = classify(w)
    if not prof.is_balanced:
        raise ValueError(f"{w} is not balanced")
    if basis is Basis.LAH and w.letters and not prof.starts_with_x:
        raise ValueError(f"LAH expansion requires a word starting with x, got {w}")
    n = prof.num_x
    residual = normal_order(w, q_deformed)
    coeffs: list[LaurentPoly] = [ZERO] * (n + 1)
    for k in range(n, -1, -1):
        target = residual.coeff(k, k)
        if not target:
            continue
        bnf = _basis_nf(basis, k, q_deformed)
        diag = bnf.coeff(k, k)
        try:
            a = target.div_exact(diag)
        except InexactDivisionError as exc:
            raise NotExpandable(f"{w} is not expandable over {basis.value} at k={k}") from exc
        coeffs[k] = a
        residual = residual - bnf.scale(a)
    if residual:
        raise NotExpandable(f"{w} leaves residual {residual} over {basis.value}")
    return Expansion(str(w), basis, n, tuple(coeffs), q_deformed)


def _signed_from_unsigned(word: Word, basis: Basis, u: list, q_deformed: bool) -> Expansion:
    n = len(u) - 1
    coeffs = tuple(c if (n - k) % 2 == 0 else -c for k, c in enumerate(u))
    return Expansion(str(word), basis, n, coeffs, q_deformed)


def stirling1_by_recurrence(w: Word | str, q_deformed: bool = True) -> Expansion:
    """POWER_XD expansion of a Dyck word via the standard-factorization recurrence."""
    w = _as_word(w)
    _require_dyck(w)
    memo: dict[str, list[LaurentPoly]] = {}

    def unsigned(word: Word) -> list[LaurentPoly]:
        key = word.letters
        if key in memo:
            return memo[key]
        if not key:
            memo[key] = [ONE]
            return memo[key]
        f = standard_factorize(word)
        inner = unsigned(f.inner)
        m = len(inner)
        block = [ZERO] * (m + 1)
        for k1 in range(1, m + 1):
            total = ZERO
            for ell in range(k1 - 1, m):
                if inner[ell]:
                    total = total + inner[ell] * _qpow(-ell, q_deformed) * comb(ell, k1 - 1)
            block[k1] = total
        rest = unsigned(f.rest)
        out = [ZERO] * (len(block) + len(rest) - 1)
        for k1, a in enumerate(block):
            if a:
                for k2, b in enumerate(rest):
                    if b:
                        out[k1 + k2] = out[k1 + k2] + a * b
        memo[key] = out
        return out

    return _signed_from_unsigned(w, Basis.POWER_XD, unsigned(w), q_deformed)


def lah_by_recurrence(w: Word | str) -> Expansion:
    """LAH expansion (at ``q = 1``) of a Dyck word via its recurrence."""
    w = _as_word(w)
    _require_dyck(w)
    memo: dict[str, list[int]] = {}

    def unsigned(word: Word) -> list[int]:
        key = word.letters
        if key in memo:
            return memo[key]
        if not key:
            memo[key] = [1]
            return memo[key]
        f = standard_factorize(word)
        inner = unsigned(f.inner)
        m = len(inner)

        def at(k: int) -> int:
            return inner[k] if 0 <= k < len(inner) else 0

        block = [0] + [at(k1 - 1) + 2 * k1 * at(k1) + (k1 + k1 * k1) * at(k1 + 1) for k1 in range(1, m + 1)]
        rest = unsigned(f.rest)
        n = len(block) + len(rest) - 2
        out = [0] * (n + 1)
        for k1, a in enumerate(block):
            if not a:
                continue
            for k2, b in enumerate(rest):
                if not b:
                    continue
                for k in range(max(k1, k2), k1 + k2 + 1):
                    j = k1 + k2 - k
                    out[k] += a * b * comb(k1, j) * comb(k2, j) * factorial(j)
        memo[key] = out
        return out

    u = [LaurentPoly.constant(c) for c in unsigned(w)]
    return _signed_from_unsigned(w, Basis.LAH, u, False)


def commute_xmDn(m: int, n: int) -> dict[tuple[int, int], int]:
    """``x^m D^n`` rewritten as ``sum coeff * D^a x^b`` (q = 1).

    Keys are ``(a, b) = (n - j, m - j)`` and values ``(-1)^j C(m,j) C(n,j) j!``.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return {
        (n - j, m - j): (-1) ** j * comb(m, j) * comb(n, j) * factorial(j)
        for j in range(min(m, n) + 1)
    }


@lru_cache(maxsize=None)
def bar_qstirling2(n: int, k: int) -> LaurentPoly:
    """Unsigned LAH-basis coefficients of ``(xD)^n`` by recurrence."""
    if k < 0 or k > n:
        return ZERO
    if k == 0:
        return ONE if n == 0 else ZERO
    return (
        bar_qstirling2(n - 1, k - 1).shift(-(k - 1))
        + (q_bracket(k) * bar_qstirling2(n - 1, k)).shift(-k)
    )


@lru_cache(maxsize=None)
def qlah(n: int, k: int) -> LaurentPoly:
    """Unsigned LAH-basis coefficients of ``x^n D^n`` by recurrence."""
    if k < 0 or k > n:
        return ZERO
    if k == 0:
        return ONE if n == 0 else ZERO
    bk = q_bracket(k)
    return (
        qlah(n - 1, k - 1).shift(-(2 * k - 2))
        + ((1 + LaurentPoly.monomial(1)) * bk * qlah(n - 1, k)).shift(-2 * k)
        + (bk * q_bracket(k + 1) * qlah(n - 1, k + 1)).shift(-(2 * k + 1))
    )


def qreduction_identities_check(n: int) -> CheckReport:
    """Normal-order both sides of the two reduction identities for ``xD^n`` and ``x^nD``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rep = CheckReport("q-reduction")
    scale = LaurentPoly.monomial(-n)
    bn = q_bracket(n)
    lhs = normal_order(X + D * n)
    rhs = (normal_order(D * n + X) - normal_order(D * (n - 1)).scale(bn)).scale(scale)
    rep.record(f"xD^{n}", lhs == rhs, f"{lhs} vs {rhs}" if lhs != rhs else "")
    lhs = normal_order(X * n + D)
    rhs = (normal_order(D + X * n) - normal_order(X * (n - 1)).scale(bn)).scale(scale)
    rep.record(f"x^{n}D", lhs == rhs, f"{lhs} vs {rhs}" if lhs != rhs else "")
    return rep
