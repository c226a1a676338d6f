#!/usr/bin/env python3
"""Run the capture-bound verification over the standard corpus.

Writes the corpus as graph6 plus one JSONL run record per graph, then prints
the summary line. Everything is seeded; rerunning reproduces the files byte
for byte.

Usage: python scripts/verify_corpus.py [--random-count 200] [--out-dir results]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from copslab.corpus import theorem_corpus
from copslab.graphs import encode_graph6
from copslab.solver import SolverBudgetError, probe_conjecture, verify_theorem_bound


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--random-count", type=int, default=200)
    parser.add_argument("--out-dir", default="results")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus = theorem_corpus(random_count=args.random_count)

    with open(out_dir / "corpus.g6", "w") as fh:
        for name, g in corpus:
            fh.write(f"{encode_graph6(g)}\n")

    passed = failed = unknown = 0
    with open(out_dir / "runs.jsonl", "w") as fh:
        for name, g in corpus:
            try:
                rep = verify_theorem_bound(g)
            except SolverBudgetError as exc:
                unknown += 1
                fh.write(json.dumps({"graph": name, "error": str(exc)}, sort_keys=True) + "\n")
                continue
            status, _ = probe_conjecture(g, rep.t)
            record = {
                "graph": name,
                "graph6": encode_graph6(g),
                "n": g.n,
                "m": g.m,
                "lip_order": rep.lip_order,
                "t": rep.t,
                "cop_number": rep.cop_number,
                "strategy_capture_moves": rep.strategy_capture_moves,
                "solver_capture_moves": rep.solver_capture_moves,
                "theorem_pass": rep.passed,
                "conjecture_status": status,
            }
            fh.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
            if rep.passed:
                passed += 1
            else:
                failed += 1
                print(f"FAIL {name}: {record}", file=sys.stderr)

    print(f"corpus={len(corpus)} passed={passed} failed={failed} unknown={unknown}")
    print(f"records in {out_dir / 'runs.jsonl'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
