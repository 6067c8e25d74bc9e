"""Regression tables for the running examples, rendered in canonical text form.

Each renderer recomputes its table from scratch; ``golden_path`` points at
the checked-in expected output under ``qweyl/tables/``.
"""

from __future__ import annotations

from importlib import resources
from typing import Callable

from .partitions import enumerate_partitions, partition_weight
from .weyl import Basis, bar_qstirling2, expand, qlah

RUNNING_WORD = "xxDxxDDD"


def _signed_rows(values, n: int) -> list[str]:
    return [f"k={k}\t{values[k]}" for k in range(1, n + 1)]


def table1() -> str:
    e = expand(RUNNING_WORD, Basis.POWER_XD, q_deformed=True)
    head = f"# (-1)^(n-k) [w, k]_q over (xD)^k, w = {RUNNING_WORD}"
    return "\n".join([head, *_signed_rows(e.signed_coeffs, e.n)]) + "\n"


def table2() -> str:
    n = 4
    vals = [bar_qstirling2(n, k) if (n - k) % 2 == 0 else -bar_qstirling2(n, k) for k in range(n + 1)]
    head = "# (-1)^(n-k) bar{n, k}_q over xD^kx^(k-1), (xD)^n with n = 4"
    return "\n".join([head, *_signed_rows(vals, n)]) + "\n"


def table4() -> str:
    rows = [f"{pi}\t{partition_weight(pi)}" for pi in enumerate_partitions(4, 2)]
    return "\n".join(["# set partitions of [4] into 2 blocks and their weights", *rows]) + "\n"


def table5() -> str:
    n = 4
    vals = [qlah(n, k) if (n - k) % 2 == 0 else -qlah(n, k) for k in range(n + 1)]
    head = "# (-1)^(n-k) <n, k>_q over xD^kx^(k-1), x^nD^n with n = 4"
    return "\n".join([head, *_signed_rows(vals, n)]) + "\n"


def _example(basis: Basis, q_deformed: bool, label: str) -> str:
    e = expand(RUNNING_WORD, basis, q_deformed=q_deformed)
    head = f"# {label}, w = {RUNNING_WORD}"
    return "\n".join([head, *_signed_rows(e.signed_coeffs, e.n)]) + "\n"


def example_2_1() -> str:
    return _example(Basis.POWER_XD, False, "signed coefficients over (xD)^k at q = 1")


def example_2_2() -> str:
    return _example(Basis.LAH, False, "signed coefficients over xD^kx^(k-1) at q = 1")


def example_4_2() -> str:
    return _example(Basis.LAH, True, "signed coefficients over xD^kx^(k-1)")


TABLES: dict[str, Callable[[], str]] = {
    "table1": table1,
    "table2": table2,
    "table4": table4,
    "table5": table5,
    "example-2-1": example_2_1,
    "example-2-2": example_2_2,
    "example-4-2": example_4_2,
}


def render(name: str) -> str:
    return TABLES[name]()


def golden(name: str) -> str:
    if name not in TABLES:
        raise KeyError(name)
    return resources.files("qweyl").joinpath("tables", f"{name}.txt").read_text(encoding="utf-8")
