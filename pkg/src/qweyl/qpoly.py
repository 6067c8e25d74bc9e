"""Exact Laurent polynomials in ``q`` with integer coefficients.

A :class:`LaurentPoly` is a sparse map ``{exponent: coefficient}`` with no
stored zeros. Values are immutable and hashable, so they can be used as
dictionary keys and shared between threads.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "InexactDivisionError",
    "q_bracket",
    "eval_at_one",
    "ZERO",
    "ONE",
    "Q",
]


class InexactDivisionError(ArithmeticError):
    """Raised by :meth:`LaurentPoly.div_exact` when the divisor does not divide."""


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # terms already free of zeros
        p = cls.__new__(cls)
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial() or abs(self.coeff(self.min_exponent())) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly.monomial(e * n, c ** (-n))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def div_exact(self, divisor: "LaurentPoly | int") -> "LaurentPoly":
        """Quotient of exact division in the Laurent ring.

        Both operands are shifted to ordinary polynomials and long division is
        carried out from the top degree. Raises :class:`InexactDivisionError`
        if a nonzero remainder is left.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        lo_d = divisor.min_exponent()
        hi_d = divisor.max_exponent()
        lead = divisor._terms[hi_d]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            hi_r = max(rem)
            lo_r = min(rem)
            # a Laurent multiple of divisor spans at least hi_d - lo_d exponents
            if hi_r - lo_r < hi_d - lo_d:
                raise InexactDivisionError(f"{divisor} does not divide {self}")
            c, r = divmod(rem[hi_r], lead)
            if r:
                raise InexactDivisionError(f"{divisor} does not divide {self}")
            shift = hi_r - hi_d
            quot[shift] = c
            for e, dc in divisor._terms.items():
                s = rem.get(e + shift, 0) - c * dc
                if s:
                    rem[e + shift] = s
                else:
                    rem.pop(e + shift, None)
        return LaurentPoly._raw(quot)

    def at_one(self) -> int:
        return sum(self._terms.values())

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- serialization ----------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if a == 1 else f"{a}*{var}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def q_bracket(m: int) -> LaurentPoly:
    """``(q**m - 1) / (q - 1)`` for any integer ``m``; ``[0]_q`` is zero."""
    if m >= 0:
        return LaurentPoly._raw({e: 1 for e in range(m)})
    return LaurentPoly._raw({e: -1 for e in range(m, 0)})


def eval_at_one(p: LaurentPoly) -> int:
    return p.at_one()
