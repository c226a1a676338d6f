#!/usr/bin/env python3
"""Sweep the t-3 cop question over several graph sizes.

For each n in [n-min, n-max], samples seeded connected graphs free of induced
t-vertex paths and records whether t-3 cops already capture on them. Any
VIOLATED line is a counterexample candidate worth a close look; at the sizes
this script reaches, expect none.

Usage: python scripts/search_conjecture.py --t 5 --n-min 6 --n-max 9 \
           --samples 100 --seed 11 [--out results/conjecture.jsonl]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from copslab.generators import GenerationError, connected_ptfree_graph
from copslab.graphs import encode_graph6
from copslab.rng import SplitMix64
from copslab.solver import probe_conjecture


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--t", type=int, default=5)
    parser.add_argument("--n-min", type=int, default=6)
    parser.add_argument("--n-max", type=int, default=9)
    parser.add_argument("--samples", type=int, default=100, help="samples per n")
    parser.add_argument("--seed", type=int, default=11)
    parser.add_argument("--out", default="results/conjecture.jsonl")
    args = parser.parse_args()
    if args.t < 5:
        parser.error("the t-3 question starts at t=5")

    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    totals = {"HOLDS": 0, "VIOLATED": 0, "UNKNOWN": 0, "generation_failures": 0}

    with open(out_path, "w") as fh:
        for n in range(args.n_min, args.n_max + 1):
            stream = SplitMix64(args.seed + n)
            for i in range(args.samples):
                sample_seed = stream.next_u64()
                try:
                    g = connected_ptfree_graph(n, args.t, sample_seed)
                except GenerationError as exc:
                    totals["generation_failures"] += 1
                    fh.write(json.dumps({"n": n, "sample": i, "error": str(exc)}) + "\n")
                    continue
                status, evidence = probe_conjecture(g, args.t)
                totals[status] += 1
                record = {
                    "n": n,
                    "sample": i,
                    "seed": sample_seed,
                    "graph6": encode_graph6(g),
                    "m": g.m,
                    "t": args.t,
                    "status": status,
                }
                if status != "HOLDS":
                    record["evidence"] = evidence
                fh.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
                if status == "VIOLATED":
                    print(f"counterexample candidate: n={n} {encode_graph6(g)}")

    print(f"t={args.t}: {totals}")
    print(f"records in {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
