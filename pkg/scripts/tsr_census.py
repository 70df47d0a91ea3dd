"""Count (t,s,r)-biracks per modulus, with how many are involutory and their ranks.

    python scripts/tsr_census.py --max-n 24
"""

import argparse
from collections import Counter

from bikei.search import search_tsr


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()

    print(f"{'n':>3} {'total':>6} {'involutory':>11}  involutory ranks")
    for n in range(1, args.max_n + 1):
        entries = search_tsr(n)
        inv = [e for e in entries if e.involutory]
        ranks = Counter(e.rank for e in inv)
        spread = " ".join(f"N={k}:{v}" for k, v in sorted(ranks.items()))
        print(f"{n:>3} {len(entries):>6} {len(inv):>11}  {spread}")


if __name__ == "__main__":
    main()
