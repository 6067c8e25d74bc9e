"""Acceptance checks, one group per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion. Published values are written out literally
here, independent of the golden files under ``qweyl/tables``.
"""

import sys
import time

import pytest

from qweyl import tables
from qweyl.graphs import (
    build_graph,
    complete_graph,
    enumerate_forest_families,
    forest_family_poly,
    forest_partition_poly,
    qlah_family_weight,
)
from qweyl.partitions import enumerate_partitions, partition_weight
from qweyl.qpoly import ONE, LaurentPoly, q_bracket
from qweyl.rooks import (
    board_from_word,
    enumerate_full_placements,
    enumerate_truncated_placements,
    rook_stirling1,
)
from qweyl.verify import run_suite
from qweyl.weyl import Basis, bar_qstirling2, expand, qlah

W = "xxDxxDDD"


def poly(*pairs):
    """``poly((-4, 1), (-3, 1))`` is q^-4 + q^-3."""
    return LaurentPoly(pairs)


def qm(e):
    return LaurentPoly.monomial(e)


# ---------------------------------------------------------------- criterion 1

c1 = pytest.mark.criterion(1)


@c1
@pytest.mark.parametrize("name", sorted(tables.TABLES))
def test_golden_table(name):
    t0 = time.perf_counter()
    got = tables.render(name)
    elapsed = time.perf_counter() - t0
    assert got == tables.golden(name)
    assert elapsed < 1.0


@c1
def test_table1_values():
    e = expand(W, Basis.POWER_XD)
    assert e.signed(1) == -poly((-4, 1), (-3, 1))
    assert e.signed(2) == poly((-4, 3), (-3, 2))
    assert e.signed(3) == -poly((-4, 3), (-3, 1))
    # printed as 1; every route here gives q^-4 (see the xfail below)
    assert e.signed(4) == qm(-4)


@c1
@pytest.mark.xfail(strict=True, reason="printed k=4 entry of the q-xD-Stirling table is 1; recomputation gives q^-4")
def test_table1_printed_k4_entry():
    assert expand(W, Basis.POWER_XD).signed(4) == ONE


@c1
def test_table2_values():
    assert bar_qstirling2(4, 1) == qm(-3)
    assert bar_qstirling2(4, 2) == poly((-5, 1), (-4, 3), (-3, 3))
    assert bar_qstirling2(4, 3) == poly((-6, 1), (-5, 2), (-4, 3))
    assert bar_qstirling2(4, 4) == qm(-6)


@c1
def test_table4_weights():
    printed = {"1|234": 5, "134|2": 3, "124|3": 3, "123|4": 3, "12|34": 4, "13|24": 4, "14|23": 4}
    got = {str(pi): partition_weight(pi) for pi in enumerate_partitions(4, 2)}
    assert got == printed


@c1
def test_table5_values():
    b = q_bracket
    assert qlah(4, 1) == b(2) * b(3) * b(4) * qm(-9)
    assert qlah(4, 2) == b(3) * b(3) * b(4) * qm(-11)
    assert qlah(4, 3) == b(3) * b(4) * qm(-12)
    assert qlah(4, 3) == poly((-7, 1), (-8, 2), (-9, 3), (-10, 3), (-11, 2), (-12, 1))
    assert qlah(4, 4) == qm(-12)


@c1
def test_example_stirling_q1():
    e = expand(W, Basis.POWER_XD, q_deformed=False)
    assert [e.signed(k).at_one() for k in range(5)] == [0, -2, 5, -4, 1]


@c1
def test_example_lah_q1():
    e = expand(W, Basis.LAH, q_deformed=False)
    assert [e.signed(k).at_one() for k in range(5)] == [0, -12, 24, -10, 1]


@c1
def test_example_lah_q():
    e = expand(W, Basis.LAH)
    assert e.signed(1) == -poly((-7, 1), (-6, 3), (-5, 4), (-4, 3), (-3, 1))
    assert e.signed(2) == poly((-4, 2), (-5, 5), (-6, 7), (-7, 6), (-8, 3), (-9, 1))
    assert e.signed(3) == -poly((-10, 1), (-9, 2), (-8, 3), (-7, 3), (-6, 1))
    # sign (-1)^(4-4) = +1
    assert e.signed(4) == qm(-10)


@c1
@pytest.mark.xfail(strict=True, reason="printed expansion gives the xD^4x^3 term a minus sign; (-1)^0 = +1")
def test_example_lah_q_printed_sign():
    assert expand(W, Basis.LAH).signed(4) == -qm(-10)


@c1
def test_running_word_two_forest_families():
    assert len(enumerate_forest_families(build_graph(W), 2)) == 24


@c1
def test_three_white_rook_placement_with_inv_four():
    placements = enumerate_full_placements(board_from_word(W), 3)
    assert 4 in {p.inv for p in placements}


@c1
def test_three_white_rook_polynomial():
    placements = enumerate_full_placements(board_from_word(W), 3)
    assert len(placements) == 4
    assert rook_stirling1(W, 3) == poly((-4, 3), (-3, 1))
    assert forest_partition_poly(W, 3) == poly((-4, 3), (-3, 1))


@c1
def test_two_rook_truncated_placement_with_inv_prime_six():
    assert 6 in {p.inv for p in enumerate_truncated_placements(W, 2)}


@c1
def test_three_forest_families_of_k4():
    fams = enumerate_forest_families(complete_graph(4), 3)
    assert len(fams) == 12
    total = sum((qm(-qlah_family_weight(4, a)) for a in fams), LaurentPoly.constant(0))
    assert total == qlah(4, 3) == forest_family_poly(4, 3)


# ---------------------------------------------------------------- criteria 2-8


def _assert_suite(record_property, name, **kwargs):
    rep = run_suite(name, **kwargs)
    record_property("instances", (sum(i.passed for i in rep.instances), len(rep.instances)))
    assert rep.instances, f"{name} ran no instances"
    assert rep.passed, "\n".join(i.label + " " + i.detail for i in rep.failures[:10])


@pytest.mark.criterion(2)
def test_cross_oracle_q1(record_property):
    _assert_suite(record_property, "cross-oracle", max_semilength=6)


@pytest.mark.criterion(2)
def test_dyck_word_count():
    from qweyl.words import dyck_words

    assert sum(1 for n in range(1, 7) for _ in dyck_words(n)) == 1 + 2 + 5 + 14 + 42 + 132


@pytest.mark.criterion(3)
def test_cross_oracle_q(record_property):
    _assert_suite(record_property, "cross-oracle-q", max_semilength=5)


@pytest.mark.criterion(4)
def test_specialization(record_property):
    _assert_suite(record_property, "specialization", max_semilength=5)


@pytest.mark.criterion(5)
def test_classical_identities(record_property):
    _assert_suite(record_property, "classical")


@pytest.mark.criterion(6)
def test_factorization(record_property):
    _assert_suite(record_property, "factorization", max_semilength=6)


@pytest.mark.criterion(7)
def test_bcf_bijection(record_property):
    _assert_suite(record_property, "bijection", max_semilength=5)


@pytest.mark.criterion(8)
def test_property_suite(record_property):
    rep = run_suite("properties", cases=10_000)
    # details read "<cases> cases, <failures> failures"
    counts = [(int(i.detail.split()[0]), int(i.detail.split()[2])) for i in rep.instances]
    total = sum(c for c, _ in counts)
    record_property("instances", (total - sum(f for _, f in counts), total))
    assert total >= 10_000
    assert rep.passed, [i.detail for i in rep.failures]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
