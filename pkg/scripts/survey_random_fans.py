#!/usr/bin/env python3
"""Sample random coloured fans and tabulate how the verdicts co-occur.

Usage: python scripts/survey_random_fans.py [COUNT] [SEED]

Prints a frequency table over the five global verdicts, plus the observed
gap cases: Q-factorial fans without quotient singularities and factorial
fans that are not smooth, the configurations that cannot occur for
colour-free fans.
"""

import random
import sys
from collections import Counter

from horofan import classification as cl
from horofan import sampling as S


def main() -> int:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 300
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 2024
    rng = random.Random(seed)

    table = Counter()
    gaps = Counter()
    for _ in range(count):
        d = S.random_diagram(rng)
        fan = S.random_coloured_fan(rng, d, rng.randint(1, 3),
                                    n_hyperplanes=rng.randint(1, 3))
        v = cl.classify(fan, d)
        key = (v.q_factorial, v.factorial, v.smooth,
               v.quotient_singularities, v.toroidal)
        table[key] += 1
        if v.q_factorial and not v.quotient_singularities:
            gaps["Q-factorial, worse than quotient singularities"] += 1
        if v.factorial and not v.smooth:
            gaps["factorial but singular"] += 1
        if v.quotient_singularities and not v.smooth:
            gaps["quotient singularities but singular"] += 1

    header = ("Qfact", "fact", "smooth", "quotsing", "toroidal")
    print(f"{count} random fans (seed {seed})")
    print("  ".join(f"{h:>8}" for h in header) + f"  {'count':>6}")
    for key, n in sorted(table.items(), reverse=True):
        row = "  ".join(f"{str(b):>8}" for b in key)
        print(f"{row}  {n:>6}")
    print()
    for label, n in sorted(gaps.items()):
        print(f"{label}: {n}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
