"""Write DOT files for the congruence and ideal lattices of the worked examples.

    python scripts/render_lattices.py --out lattices/
    dot -Tpng lattices/F3_cyclic_4.dot -o c4.png
"""

import argparse
import re
from pathlib import Path

from congkit.cli import main as cli_main

EXAMPLES = [
    ("semilattice2", (2, 3)),
    ("cyclic:4", (2, 3)),
    ("right-zero:2", (2,)),
    ("left-zero:2", (2,)),
    ("rect-band:2,2", (2, 3)),
]


def slug(text):
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="lattices")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for family, primes in EXAMPLES:
        target = out / f"Con_{slug(family)}.dot"
        cli_main(["semigroup", "--family", family, "--format", "dot", "--out", str(target)])
        print(target)
        for p in primes:
            target = out / f"F{p}_{slug(family)}.dot"
            cli_main(["algebra", "--family", family, "--prime", str(p), "--format", "dot", "--out", str(target)])
            print(target)


if __name__ == "__main__":
    main()
