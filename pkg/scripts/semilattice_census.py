"""Brute-force census: which small semilattices and rectangular bands are congruence-permutable.

Enumerates every semilattice structure on {0..n-1} (commutative, idempotent,
associative tables) and reports permutability by isomorphism-free count.

    python scripts/semilattice_census.py --max-order 4
"""

import argparse
from collections import Counter
from itertools import product

from congkit import Custom, build, is_permutable
from congkit.semigroup import RectangularBand


def semilattice_tables(n):
    off = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for values in product(range(n), repeat=len(off)):
        t = [[i if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(off, values):
            t[i][j] = t[j][i] = v
        if all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in product(range(n), repeat=3)):
            yield tuple(map(tuple, t))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=4)
    parser.add_argument("--max-side", type=int, default=3)
    args = parser.parse_args()

    print("semilattices (labelled tables)")
    for n in range(1, args.max_order + 1):
        counts = Counter(is_permutable(build(Custom(t))).verdict for t in semilattice_tables(n))
        print(f"  order {n}: {sum(counts.values()):>4} tables, {counts[True]:>3} permutable, {counts[False]:>4} not")

    print("rectangular bands")
    for l, r in product(range(1, args.max_side + 1), repeat=2):
        report = is_permutable(build(RectangularBand(l, r)))
        witness = ""
        if report.witnesses:
            w = report.witnesses[0]
            witness = f"  witness α={w['alpha']} β={w['beta']} pair={tuple(w['pair'])}"
        print(f"  {l}x{r}: permutable={report.verdict}{witness}")


if __name__ == "__main__":
    main()
