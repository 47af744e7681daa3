"""Tabulate the ∘-homomorphism verdict against |S| for semilattice chains and rectangular bands.

    python scripts/corollary_sweep.py --primes 2,3,5,7
"""

import argparse
import time

from congkit import PrimeField, SemigroupAlgebra, build, build_phi_context, check_circ_homomorphism
from congkit.errors import GuardExceeded
from congkit.semigroup import RectangularBand, SemilatticeChain


def families(max_chain, max_band_order):
    for n in range(1, max_chain + 1):
        yield SemilatticeChain(n), n <= 2
    for l in range(1, 4):
        for r in range(1, 4):
            if l * r <= max_band_order:
                yield RectangularBand(l, r), l <= 2 and r <= 2


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--primes", default="2,3,5")
    parser.add_argument("--max-chain", type=int, default=4)
    parser.add_argument("--max-band-order", type=int, default=6)
    args = parser.parse_args()
    primes = [int(p) for p in args.primes.split(",")]

    print(f"{'semigroup':<24} {'|S|':>3} {'p':>3} {'ideals':>6} {'permutable':>10} {'circ':>5} {'expected':>8} {'s':>6}")
    mismatches = 0
    for spec, expected in families(args.max_chain, args.max_band_order):
        s = build(spec)
        for p in primes:
            started = time.perf_counter()
            try:
                ctx = build_phi_context(SemigroupAlgebra(s, PrimeField(p)))
            except GuardExceeded as exc:
                print(f"{s.label:<24} {s.n:>3} {p:>3}  skipped: {exc}")
                continue
            report = check_circ_homomorphism(ctx)
            mismatches += report.verdict != expected
            print(f"{s.label:<24} {s.n:>3} {p:>3} {len(ctx.ideals):>6} {str(report.details['permutable']):>10} "
                  f"{str(report.verdict):>5} {str(expected):>8} {time.perf_counter() - started:>6.2f}")
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
