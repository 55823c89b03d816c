#!/usr/bin/env python3
"""Random cross-check battery over the rationals.

Draws random multiple-root pairs, runs every coefficient-side vs root-side
comparison the preconditions allow, then replays the bundled two-variable
example through the document-level battery.  Exits 1 if any check fails.
"""

import argparse
import random
import sys
import time

from subres.serialize import parse_system
from subres.verify import mv_checks, random_pair, univariate_checks

BUNDLED_SYSTEM = {
    "n": 2,
    "variables": ["x1", "x2"],
    "polynomials": [
        [{"exponents": [1, 1], "coeff": "1"}],
        [
            {"exponents": [2, 0], "coeff": "1"},
            {"exponents": [0, 2], "coeff": "1"},
            {"exponents": [0, 1], "coeff": "-2"},
        ],
        [
            {"exponents": [0, 0], "coeff": "c0"},
            {"exponents": [1, 0], "coeff": "c1"},
            {"exponents": [0, 1], "coeff": "c2"},
        ],
    ],
    "degrees": [2, 2, 1],
    "t": 2,
    "S": [[2, 0]],
    "T_override": {"2": [[0, 2]]},
    "roots": [
        {
            "point": ["0", "0"],
            "dual": [
                {"terms": [{"alpha": [0, 0], "coeff": "1"}]},
                {"terms": [{"alpha": [1, 0], "coeff": "1"}]},
                {"terms": [{"alpha": [0, 1], "coeff": "1"}, {"alpha": [2, 0], "coeff": "2"}]},
            ],
        },
        {"point": ["0", "2"]},
    ],
}


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="cross-check root-side subresultant formulas against determinants"
    )
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    parser.add_argument("--cases", type=int, default=50, help="number of random pairs")
    parser.add_argument(
        "--max-degree", type=int, default=6, help="degree bound for each random pair"
    )
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    started = time.perf_counter()
    total = 0
    failures = []
    for i in range(args.cases):
        a, b = random_pair(rng, max_degree=args.max_degree)
        for check in univariate_checks(a, b):
            total += 1
            if not check.ok:
                failures.append(("pair %d: %s vs %s" % (i, a, b), check))
    for check in mv_checks(parse_system(BUNDLED_SYSTEM)):
        total += 1
        if not check.ok:
            failures.append(("bundled system", check))
    elapsed = time.perf_counter() - started

    print(
        "%d checks on %d random pairs + 1 bundled system in %.2f s"
        % (total, args.cases, elapsed)
    )
    for origin, check in failures:
        print("FAIL [%s] %s: %s" % (origin, check.name, check.detail), file=sys.stderr)
    if failures:
        return 1
    print("all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
