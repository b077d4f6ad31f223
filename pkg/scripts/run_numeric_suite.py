"""Run the numeric tier over several seeds and summarize pass counts and timings.

Usage: python3 scripts/run_numeric_suite.py [seed ...] [--stretch]
"""

import sys
from collections import defaultdict

from pencilcontact.verify import PASS, RunConfig, exit_code, run_numeric


def main(argv):
    stretch = "--stretch" in argv
    seeds = [int(a) for a in argv[1:] if a != "--stretch"] or [0]
    tally = defaultdict(lambda: [0, 0, 0.0])
    worst = 0
    for seed in seeds:
        rows = run_numeric(RunConfig(seed=seed, stretch=stretch))
        worst = max(worst, exit_code(rows))
        for r in rows:
            key = (r.invariant_id, r.d, r.method)
            tally[key][0] += r.status == PASS
            tally[key][1] += 1
            tally[key][2] = max(tally[key][2], r.timings.get("seconds", 0.0))
            if r.status != PASS:
                print(f"seed {seed}: {r.invariant_id} d={r.d} {r.method}: expected {r.expected}, got {r.computed}")
    for (name, d, method), (ok, n, slow) in sorted(tally.items(), key=str):
        print(f"{name:<30} d={d}  {method:<16} {ok}/{n} pass  max {slow:.1f} s")
    return worst


if __name__ == "__main__":
    sys.exit(main(sys.argv))
