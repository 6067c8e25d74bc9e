"""Integer polynomials in ``z`` as coefficient tuples (index = power of ``z``)."""

from __future__ import annotations

from typing import Iterable, Sequence

ZPoly = tuple[int, ...]


def trim(coeffs: Iterable[int]) -> ZPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def monomial(k: int, coeff: int = 1) -> ZPoly:
    return trim([0] * k + [coeff])


def add(a: Sequence[int], b: Sequence[int]) -> ZPoly:
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def sub(a: Sequence[int], b: Sequence[int]) -> ZPoly:
    return add(a, [-c for c in b])


def scale(a: Sequence[int], c: int) -> ZPoly:
    return trim(x * c for x in a)


def mul(a: Sequence[int], b: Sequence[int]) -> ZPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def from_roots(roots: Iterable[int]) -> ZPoly:
    """Expanded ``prod (z - r)``."""
    p: ZPoly = (1,)
    for r in roots:
        p = mul(p, (-r, 1))
    return p


def rising(k: int) -> ZPoly:
    """``z (z+1) ... (z+k-1)``."""
    return from_roots(-i for i in range(k))


def falling(k: int) -> ZPoly:
    return from_roots(range(k))


def evaluate(p: Sequence[int], z: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * z + c
    return acc


def to_str(p: Sequence[int], var: str = "z") -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            v = var if k == 1 else f"{var}^{k}"
            body = v if mag == 1 else f"{mag}*{v}"
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
