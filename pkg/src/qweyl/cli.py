"""Command-line front end.

Exit status: 0 on success, 1 when a verification or table check fails, 2 on
usage errors (bad flags, malformed words, words outside an operation's
domain).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tables
from .graphs import (
    build_graph,
    enumerate_bcf_subgraphs,
    enumerate_forest_families,
    enumerate_forest_partitions,
    forest_partition_weight,
    qlah_family_weight,
)
from .partitions import enumerate_partitions, partition_weight
from .rooks import board_from_word, enumerate_full_placements, enumerate_truncated_placements
from .verify import SUITES, run_suite
from .weyl import Basis, NotExpandable, expand, normal_order
from .words import Word

ENUM_KINDS = ("forests", "families", "rooks", "truncated-rooks", "partitions", "bcf")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qweyl", description="Normal ordering and Stirling/Lah numbers of words.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, word=True):
        if word:
            sp.add_argument("--word", required=True, help="word over {x, D}")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("normal-order", help="normal form of a word")
    common(sp)
    sp.add_argument("--q", action="store_true", help="use the q-deformed relation Dx = q xD + 1")

    sp = sub.add_parser("expand", help="expansion over a basis")
    common(sp)
    sp.add_argument("--basis", required=True, choices=[b.value for b in Basis])
    sp.add_argument("--q", action="store_true")

    sp = sub.add_parser("enumerate", help="list combinatorial objects with weights")
    common(sp, word=False)
    sp.add_argument("--word", help="Dyck or x-initial word (not needed for partitions)")
    sp.add_argument("--kind", required=True, choices=ENUM_KINDS)
    sp.add_argument("--k", type=int, help="component / white-rook / block / rook count")
    sp.add_argument("--n", type=int, help="ground set size for partitions")

    sp = sub.add_parser("verify", help="run a named identity suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--max-semilength", type=int)
    sp.add_argument("--cases", type=int, help="randomized cases (properties suite)")
    sp.add_argument("--seed", type=int, help="random seed (properties suite)")
    sp.add_argument("--verbose", action="store_true", help="print every instance")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("table", help="reproduce a regression table and compare with its golden file")
    sp.add_argument("name", choices=sorted(tables.TABLES))
    return p


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_normal_order(args) -> int:
    nf = normal_order(Word(args.word), q_deformed=args.q)
    _emit(args, str(nf), {"word": args.word, "q_deformed": args.q, "terms": nf.to_json()})
    return 0


def _cmd_expand(args) -> int:
    e = expand(Word(args.word), Basis(args.basis), q_deformed=args.q)
    head = f"word={e.word} basis={e.basis.value} n={e.n} q={'yes' if args.q else 'no'}"
    _emit(args, head + "\n" + str(e), e.to_json())
    return 0


def _ks(args, n: int) -> list[int]:
    return [args.k] if args.k is not None else list(range(1, n + 1))


def _cmd_enumerate(args) -> int:
    if args.kind == "partitions":
        if args.n is None:
            raise ValueError("--n is required for partitions")
        items = []
        for k in _ks(args, args.n):
            for pi in enumerate_partitions(args.n, k):
                items.append({"k": k, "partition": str(pi), "weight": partition_weight(pi)})
        text = "\n".join(f"k={it['k']}\t{it['partition']}\twt={it['weight']}" for it in items)
        _emit(args, text, items)
        return 0
    if args.word is None:
        raise ValueError("--word is required")
    w = Word(args.word)
    n = w.semilength
    items, lines = [], []
    if args.kind in ("forests", "families", "bcf"):
        g = build_graph(w)
        complete = len(g.edges) == n * (n - 1) // 2
        for k in _ks(args, n):
            if args.kind == "forests":
                for a in enumerate_forest_partitions(g, k):
                    wt = forest_partition_weight(g, a)
                    items.append({"k": k, **a.to_json(), "weight": wt})
                    lines.append(f"k={k}\t{sorted(a.parent)}\twt={wt}")
            elif args.kind == "families":
                for fam in enumerate_forest_families(g, k):
                    # the family weight is only defined on complete graphs
                    wt = qlah_family_weight(n, fam) if complete else None
                    items.append({"k": k, **fam.to_json(), "weight": wt})
                    groups = " | ".join(f"{list(vs)}:{list(pp)}" for vs, pp in fam.groups)
                    lines.append(f"k={k}\t{groups}" + (f"\twt={wt}" if wt is not None else ""))
            else:
                for s in enumerate_bcf_subgraphs(g, n - k):
                    edges = sorted(s)
                    items.append({"k": k, "edges": [list(e) for e in edges]})
                    lines.append(f"k={k}\t{edges}")
    elif args.kind == "rooks":
        board = board_from_word(w)
        for k in _ks(args, n):
            for p in enumerate_full_placements(board, k):
                items.append({"k": k, **p.to_json()})
                lines.append(f"k={k}\t{list(p.rooks)}\twhite={list(p.white)}\tinv={p.inv}")
    else:
        ks = [args.k] if args.k is not None else list(range(0, n + 1))
        for r in ks:
            for p in enumerate_truncated_placements(w, r):
                items.append({"rooks_placed": r, **p.to_json()})
                lines.append(f"rooks={r}\t{list(p.rooks)}\tinv'={p.inv}")
    _emit(args, "\n".join(lines), items)
    return 0


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "properties":
        if args.cases is not None:
            kwargs["cases"] = args.cases
        if args.seed is not None:
            kwargs["seed"] = args.seed
    rep = run_suite(args.suite, args.max_semilength, **kwargs)
    if args.format == "json":
        data = {
            "suite": rep.name,
            "passed": rep.passed,
            "instances": [{"label": i.label, "passed": i.passed, "detail": i.detail} for i in rep.instances],
        }
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        lines = rep.lines() if args.verbose else [i for i in rep.lines() if i.startswith("FAIL")]
        for line in lines:
            print(line)
        print(rep.summary())
    return 0 if rep.passed else 1


def _cmd_table(args) -> int:
    got = tables.render(args.name)
    sys.stdout.write(got)
    want = tables.golden(args.name)
    if got != want:
        print(f"{args.name}: output differs from golden file", file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "normal-order": _cmd_normal_order,
    "expand": _cmd_expand,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, NotExpandable) as exc:
        print(f"qweyl: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
