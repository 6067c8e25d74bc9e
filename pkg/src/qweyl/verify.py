"""Named identity suites.

Each suite runs one family of cross-checks over a range of instances and
returns a :class:`~qweyl.report.CheckReport`. Instances are visited in a
fixed order so reports are reproducible.
"""

from __future__ import annotations

import random
from typing import Callable

from . import zpoly
from .graphs import (
    build_graph,
    chromatic_by_deletion_contraction,
    chromatic_polynomial,
    bijection_check,
    decreasing_forests,
    enumerate_forest_families,
    forest_family_poly,
    forest_partition_weight,
    ForestPartition,
)
from .partitions import (
    brute_force_classical,
    lah,
    p_q,
    stirling1,
    stirling2,
)
from .qpoly import ONE, ZERO, InexactDivisionError, LaurentPoly, q_bracket
from .report import CheckReport
from .rooks import (
    board_from_word,
    enumerate_full_placements,
    enumerate_truncated_placements,
    factor_polynomial,
    lah_by_difference,
    q_factorization_check,
    stirling1_by_esym,
)
from .weyl import (
    Basis,
    NormalForm,
    bar_qstirling2,
    basis_word,
    expand,
    lah_by_recurrence,
    normal_order,
    qlah,
    qreduction_identities_check,
    stirling1_by_recurrence,
)
from .words import Word, balanced_words, dyck_words

__all__ = ["SUITES", "run_suite"]


def _dyck_upto(n: int):
    for m in range(1, n + 1):
        yield from dyck_words(m)


def _forest_counts(w: Word, q_deformed: bool) -> dict[int, LaurentPoly]:
    g = build_graph(w)
    out: dict[int, LaurentPoly] = {}
    for parent in decreasing_forests(g):
        k = g.n - len(parent)
        if q_deformed:
            alpha = ForestPartition(g.n, tuple(sorted(parent.items())))
            term = LaurentPoly.monomial(-forest_partition_weight(g, alpha))
        else:
            term = ONE
        out[k] = out.get(k, ZERO) + term
    return out


def _full_rook_counts(w: Word, q_deformed: bool) -> dict[int, LaurentPoly]:
    out: dict[int, LaurentPoly] = {}
    for p in enumerate_full_placements(board_from_word(w)):
        term = LaurentPoly.monomial(-p.inv) if q_deformed else ONE
        out[p.num_white] = out.get(p.num_white, ZERO) + term
    return out


def _truncated_rook_counts(w: Word, q_deformed: bool) -> dict[int, LaurentPoly]:
    # keyed by LAH index k = n - (#rooks)
    n = w.semilength
    out: dict[int, LaurentPoly] = {}
    for r in range(n + 1):
        total = ZERO
        for p in enumerate_truncated_placements(w, r):
            total = total + (LaurentPoly.monomial(-p.inv) if q_deformed else ONE)
        out[n - r] = total
    return out


def cross_oracle(max_semilength: int = 6) -> CheckReport:
    """All q = 1 routes to the Stirling and Lah numbers of Dyck words."""
    rep = CheckReport("cross-oracle")
    for w in _dyck_upto(max_semilength):
        n = w.semilength
        g = build_graph(w)
        s_exp = expand(w, Basis.POWER_XD, q_deformed=False)
        s_rec = stirling1_by_recurrence(w, q_deformed=False)
        forests = _forest_counts(w, False)
        rooks = _full_rook_counts(w, False)
        l_exp = expand(w, Basis.LAH, q_deformed=False)
        l_rec = lah_by_recurrence(w)
        l_rooks = _truncated_rook_counts(w, False)
        for k in range(1, n + 1):
            vals = [
                s_exp.unsigned(k).at_one(),
                s_rec.unsigned(k).at_one(),
                forests.get(k, ZERO).at_one(),
                rooks.get(k, ZERO).at_one(),
                stirling1_by_esym(w, k),
            ]
            rep.record(f"{w} stirling1 k={k}", len(set(vals)) == 1, str(vals))
            vals = [
                l_exp.unsigned(k).at_one(),
                l_rec.unsigned(k).at_one(),
                len(enumerate_forest_families(g, k)),
                l_rooks[k].at_one(),
                lah_by_difference(w, k),
            ]
            rep.record(f"{w} lah k={k}", len(set(vals)) == 1, str(vals))
    return rep


def cross_oracle_q(max_semilength: int = 5) -> CheckReport:
    """q-deformed routes: expansion, recurrence, weighted forests, weighted rooks."""
    rep = CheckReport("cross-oracle-q")
    for w in _dyck_upto(max_semilength):
        n = w.semilength
        s_exp = expand(w, Basis.POWER_XD)
        s_rec = stirling1_by_recurrence(w)
        forests = _forest_counts(w, True)
        rooks = _full_rook_counts(w, True)
        l_exp = expand(w, Basis.LAH)
        l_rooks = _truncated_rook_counts(w, True)
        for k in range(1, n + 1):
            vals = [s_exp.unsigned(k), s_rec.unsigned(k), forests.get(k, ZERO), rooks.get(k, ZERO)]
            rep.record(f"{w} stirling1_q k={k}", len(set(vals)) == 1, ", ".join(map(str, vals)))
            vals = [l_exp.unsigned(k), l_rooks[k]]
            rep.record(f"{w} lah_q k={k}", len(set(vals)) == 1, ", ".join(map(str, vals)))
    # the truncated-board statement also covers x-initial words that are not Dyck
    for m in range(1, max_semilength + 1):
        for w in balanced_words(m, starts_with_x=True):
            l_exp = expand(w, Basis.LAH)
            l_rooks = _truncated_rook_counts(w, True)
            ok = all(l_exp.unsigned(k) == l_rooks[k] for k in range(m + 1))
            rep.record(f"{w} lah_q all k", ok)
    return rep


def specialization(max_semilength: int = 5) -> CheckReport:
    """q = 1 image of every q-deformed quantity equals the undeformed one."""
    rep = CheckReport("specialization")
    for w in _dyck_upto(max_semilength):
        n = w.semilength
        pairs = [
            (expand(w, Basis.POWER_XD), expand(w, Basis.POWER_XD, q_deformed=False)),
            (stirling1_by_recurrence(w), stirling1_by_recurrence(w, q_deformed=False)),
            (expand(w, Basis.LAH), lah_by_recurrence(w)),
            (expand(w, Basis.NORMAL), expand(w, Basis.NORMAL, q_deformed=False)),
        ]
        ok = all(a.at_one().signed_coeffs == b.signed_coeffs for a, b in pairs)
        fq, f1 = _forest_counts(w, True), _forest_counts(w, False)
        rq, r1 = _full_rook_counts(w, True), _full_rook_counts(w, False)
        uq, u1 = _truncated_rook_counts(w, True), _truncated_rook_counts(w, False)
        for qd, one in ((fq, f1), (rq, r1), (uq, u1)):
            ok = ok and all(qd.get(k, ZERO).at_one() == one.get(k, ZERO).at_one() for k in range(n + 1))
        ok = ok and normal_order(w).at_one() == normal_order(w, q_deformed=False)
        rep.record(str(w), ok)
    return rep


def _nf_from_combination(basis: Basis, coeffs, q_deformed: bool) -> NormalForm:
    total = NormalForm({}, q_deformed)
    for k, c in enumerate(coeffs):
        if c:
            total = total + normal_order(basis_word(basis, k), q_deformed).scale(c)
    return total


def classical(max_n: int = 8, max_family_n: int = 6) -> CheckReport:
    """Classical Stirling/Lah identities, the two q-Stirling-2 realizations,
    the q-Lah forest weights, and the Carlitz recurrence."""
    rep = CheckReport("classical")
    for n in range(0, 7):
        for k in range(0, n + 1):
            rep.record(
                f"brute-force classical ({n},{k})",
                brute_force_classical(n, k) == (stirling1(n, k), stirling2(n, k), lah(n, k)),
            )
    for n in range(1, max_n + 1):
        sign = lambda k: 1 if (n - k) % 2 == 0 else -1  # noqa: E731
        lhs = normal_order("x" * n + "D" * n, q_deformed=False)
        rhs = _nf_from_combination(Basis.POWER_XD, [sign(k) * stirling1(n, k) for k in range(n + 1)], False)
        rep.record(f"x^nD^n over (xD)^k n={n}", lhs == rhs)
        rhs = _nf_from_combination(Basis.LAH, [sign(k) * lah(n, k) for k in range(n + 1)], False)
        rep.record(f"x^nD^n over xD^kx^(k-1) n={n}", lhs == rhs)
        lhs = normal_order(basis_word(Basis.LAH, n), q_deformed=False)
        rhs = _nf_from_combination(Basis.NORMAL, [lah(n, k) for k in range(n + 1)], False)
        rep.record(f"xD^nx^(n-1) normal form n={n}", lhs == rhs)
        lhs = normal_order("xD" * n, q_deformed=False)
        rhs = _nf_from_combination(Basis.NORMAL, [stirling2(n, k) for k in range(n + 1)], False)
        rep.record(f"(xD)^n normal form n={n}", lhs == rhs)
        # Stirling inversion: sum_j (-1)^(n-j) [n,j] {j,k} = delta_nk
        row = [sum((-1) ** (n - j) * stirling1(n, j) * stirling2(j, k) for j in range(n + 1)) for k in range(n + 1)]
        rep.record(f"stirling inversion n={n}", row == [int(k == n) for k in range(n + 1)])
        rep.record(
            f"lah cross identity n={n}",
            all(lah(n, k) == sum(stirling1(n, j) * stirling2(j, k) for j in range(n + 1)) for k in range(n + 1)),
        )
        exp = expand("xD" * n, Basis.LAH)
        ok = all(bar_qstirling2(n, k) == p_q(n, k) == exp.unsigned(k) for k in range(n + 1))
        rep.record(f"bar q-stirling2 = p_q = LAH((xD)^n) n={n}", ok)
        exp = expand("x" * n + "D" * n, Basis.LAH)
        rep.record(f"q-lah = LAH(x^nD^n) n={n}", all(qlah(n, k) == exp.unsigned(k) for k in range(n + 1)))
        carlitz = expand("xD" * n, Basis.NORMAL).signed_coeffs
        prev = expand("xD" * (n - 1), Basis.NORMAL).signed_coeffs

        def at(seq, k):
            return seq[k] if 0 <= k < len(seq) else ZERO

        ok = all(
            at(carlitz, k) == at(prev, k - 1).shift(k - 1) + q_bracket(k) * at(prev, k)
            for k in range(1, n + 1)
        )
        rep.record(f"carlitz recurrence n={n}", ok and at(carlitz, 0) == ZERO)
    for n in range(1, max_family_n + 1):
        ok = all(forest_family_poly(n, k) == qlah(n, k) for k in range(1, n + 1))
        rep.record(f"weighted H(n,k) = q-lah n={n}", ok)
    for n in range(1, 9):
        rep.merge(qreduction_identities_check(n))
    return rep


def factorization(max_semilength: int = 6, max_q_semilength: int = 5) -> CheckReport:
    """Rook factorization, chromatic polynomial, and their q-versions."""
    rep = CheckReport("factorization")
    for w in _dyck_upto(max_semilength):
        n = w.semilength
        fp = factor_polynomial(w)
        s = expand(w, Basis.POWER_XD, q_deformed=False)
        gen = zpoly.trim(s.signed(k).at_one() for k in range(n + 1))
        l = expand(w, Basis.LAH, q_deformed=False)
        rising = ()
        for k in range(n + 1):
            rising = zpoly.add(rising, zpoly.scale(zpoly.rising(k), l.signed(k).at_one()))
        chi = chromatic_polynomial(w)
        chi_dc = chromatic_by_deletion_contraction(build_graph(w))
        esym = zpoly.trim((-1) ** (n - k) * stirling1_by_esym(w, k) for k in range(n + 1))
        ok = fp == gen == rising == chi == chi_dc == esym
        rep.record(str(w), ok, "" if ok else f"{fp} {gen} {rising} {chi} {chi_dc} {esym}")
    for m in range(1, max_q_semilength + 1):
        for w in dyck_words(m):
            rep.merge(q_factorization_check(w, Basis.POWER_XD))
        for w in balanced_words(m, starts_with_x=True):
            rep.merge(q_factorization_check(w, Basis.LAH))
    return rep


def bijection(max_semilength: int = 5) -> CheckReport:
    rep = CheckReport("bcf-bijection")
    for w in _dyck_upto(max_semilength):
        rep.merge(bijection_check(w))
    return rep


def _random_poly(rng: random.Random) -> LaurentPoly:
    size = rng.randint(0, 5)
    return LaurentPoly((rng.randint(-6, 6), rng.randint(-9, 9)) for _ in range(size))


def _random_balanced(rng: random.Random, n: int, x_initial: bool = False) -> Word:
    letters = ["x"] * n + ["D"] * n
    rng.shuffle(letters)
    if x_initial and n and letters[0] != "x":
        i = letters.index("x")
        letters[0], letters[i] = letters[i], letters[0]
    return Word("".join(letters))


def properties(cases: int = 10_000, seed: int = 20240917) -> CheckReport:
    """Randomized checks: degree conservation, expansion round trip, ring
    axioms, exact division. ``cases`` is split evenly over the four kinds."""
    rng = random.Random(seed)
    rep = CheckReport("properties")
    per = -(-cases // 4)
    bad = {"degree": 0, "roundtrip": 0, "ring": 0, "division": 0}
    for _ in range(per):
        length = rng.randint(0, 10)
        w = Word("".join(rng.choice("xD") for _ in range(length)))
        excess = w.num_x - w.num_d
        nf = normal_order(w, q_deformed=rng.random() < 0.5)
        if any(i - j != excess for (i, j) in nf.terms):
            bad["degree"] += 1
    for _ in range(per):
        basis = rng.choice(list(Basis))
        w = _random_balanced(rng, rng.randint(0, 5), x_initial=basis is Basis.LAH)
        qd = rng.random() < 0.5
        if expand(w, basis, qd).resubstitute() != normal_order(w, qd):
            bad["roundtrip"] += 1
    for _ in range(per):
        a, b, c = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        ok = (
            (a + b) + c == a + (b + c)
            and (a * b) * c == a * (b * c)
            and a * (b + c) == a * b + a * c
            and a + b == b + a
            and a * b == b * a
            and a - a == ZERO
            and a * ONE == a
            and (a * b).at_one() == a.at_one() * b.at_one()
            and (a + b).at_one() == a.at_one() + b.at_one()
        )
        bad["ring"] += not ok
    for _ in range(per):
        a, b = _random_poly(rng), _random_poly(rng)
        if b.is_zero():
            b = ONE
        try:
            ok = (a * b).div_exact(b) == a
        except InexactDivisionError:
            ok = False
        bad["division"] += not ok
    for kind, count in bad.items():
        rep.record(kind, count == 0, f"{per} cases, {count} failures")
    return rep


def q_reduction(max_n: int = 8) -> CheckReport:
    rep = CheckReport("q-reduction")
    for n in range(1, max_n + 1):
        rep.merge(qreduction_identities_check(n))
    return rep


SUITES: dict[str, Callable[..., CheckReport]] = {
    "cross-oracle": cross_oracle,
    "cross-oracle-q": cross_oracle_q,
    "specialization": specialization,
    "classical": classical,
    "factorization": factorization,
    "bijection": bijection,
    "properties": properties,
    "q-reduction": q_reduction,
}


def run_suite(name: str, max_semilength: int | None = None, **kwargs) -> CheckReport:
    fn = SUITES[name]
    if max_semilength is not None:
        if name in ("cross-oracle", "cross-oracle-q", "specialization", "bijection"):
            kwargs["max_semilength"] = max_semilength
        elif name == "factorization":
            kwargs["max_semilength"] = max_semilength
            kwargs["max_q_semilength"] = min(max_semilength, 5)
        elif name in ("classical", "q-reduction"):
            kwargs["max_n"] = max_semilength
    return fn(**kwargs)
