#!/usr/bin/env python3
"""Measure how period computation scales across text-size decades.

Times the classical and the distance-sampled implementation on generated
prefixes of 10^5, 10^6 and 10^7 bytes and prints per-decade growth factors.
"""

import argparse
import sys
import time

from strreg.cds import period_cds
from strreg.classical import period_classical
from strreg.sampling import build_cds
from strreg.text import GenSpec, gen_text


def best_ns(fn, reps: int) -> int:
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return min(samples)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=77)
    ap.add_argument("--alphabet", type=int, default=26)
    args = ap.parse_args()

    sizes = (10**5, 10**6, 10**7)
    data = gen_text(GenSpec(alphabet_size=args.alphabet, length=sizes[-1], seed=args.seed))

    results = {"classical": [], "cds": []}
    for n in sizes:
        text = data[:n]
        reps = 5 if n < sizes[-1] else 2
        results["classical"].append(best_ns(lambda: period_classical(text), reps))
        results["cds"].append(best_ns(lambda: period_cds(build_cds(text), text), reps))
        print(f"n={n}: classical {results['classical'][-1] / 1e6:.2f} ms, "
              f"cds {results['cds'][-1] / 1e6:.2f} ms")

    for name, ns in results.items():
        factors = [ns[i + 1] / ns[i] for i in range(len(ns) - 1)]
        print(f"{name} growth per decade: " + ", ".join(f"{f:.1f}x" for f in factors))
    return 0


if __name__ == "__main__":
    sys.exit(main())
