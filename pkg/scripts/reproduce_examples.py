"""Recompute the worked examples: the Z_4 bikei matrix, Fox colorings, and virtual knot 3.3.

    python scripts/reproduce_examples.py [--json]
"""

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from bikei import (extract_presentation, format_matrix_file, make_tsr, parse_braid_word,
                   parse_presentation_file, phi_column_group, phi_image, phi_integral)

DATA = Path(__file__).resolve().parent.parent / "data"


@dataclass
class Row:
    example: str
    target: str
    value: str


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    fox, z4, z11 = make_tsr(3, 2, 2, 1), make_tsr(4, 1, 2, 3), make_tsr(11, 6, 5, 3)
    trefoil = extract_presentation(parse_braid_word("s1 s1 s1"))
    unknot = extract_presentation(parse_braid_word(""))
    down = parse_presentation_file((DATA / "vk33_down.txt").read_text())
    up = parse_presentation_file((DATA / "vk33_up.txt").read_text())

    rows = [
        Row("trefoil", fox.name, str(phi_integral(trefoil, fox)[0])),
        Row("unknot", fox.name, str(phi_integral(unknot, fox)[0])),
        Row("trefoil, image", fox.name, str(phi_image(trefoil, fox))),
        Row("trefoil, column group", fox.name, str(phi_column_group(trefoil, fox))),
        Row("3.3 down", z11.name, str(phi_integral(down, z11, oriented=True)[0])),
        Row("3.3 up", z11.name, str(phi_integral(up, z11, oriented=True)[0])),
        Row("3.3 down", z4.name, str(phi_integral(down, z4)[0])),
        Row("3.3 up", z4.name, str(phi_integral(up, z4)[0])),
    ]
    if args.json:
        print(json.dumps([asdict(r) for r in rows], indent=2))
        return
    print(format_matrix_file(z4, "Z_4 bikei, (t,s,r) = (1,2,3)"))
    width = max(len(r.example) for r in rows)
    for r in rows:
        print(f"{r.example:<{width}}  {r.target:<14}  {r.value}")


if __name__ == "__main__":
    main()
