"""Compare involutory biracks with biracks whose columns u_x, l_x are all involutions.

Every involutory birack has involutive columns. This script asks how far the
converse fails on small sets by enumerating raw tables (no isomorphism
reduction) and printing the difference.

    python scripts/converse_search.py --max-n 3
    python scripts/converse_search.py --max-n 4 --examples 5    # n = 4 takes about 25 s
"""

import argparse
import time
from dataclasses import dataclass

from bikei import format_matrix_file, verify_axioms
from bikei.birack import is_involutory
from bikei.search import converse_report


@dataclass
class Config:
    max_n: int = 3
    examples: int = 2


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    parser.add_argument("--examples", type=int, default=Config.examples)
    cfg = Config(**{k: v for k, v in vars(parser.parse_args()).items()})

    print(f"{'n':>2} {'involutory':>11} {'col-inv':>8} {'col-inv only':>13} {'seconds':>8}")
    for n in range(1, cfg.max_n + 1):
        start = time.perf_counter()
        rep = converse_report(n, max_examples=cfg.examples)
        took = time.perf_counter() - start
        assert rep.involutory_not_column == 0, "an involutory birack with a non-involutive column"
        print(f"{n:>2} {rep.involutory:>11} {rep.column_involutive:>8} "
              f"{rep.column_not_involutory:>13} {took:>8.1f}")
        for X in rep.examples:
            assert verify_axioms(X).ok and not is_involutory(X)
            print(format_matrix_file(X, f"n={n}: involutive columns, not involutory"))


if __name__ == "__main__":
    main()
