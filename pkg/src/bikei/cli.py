"""Command-line front end: ``bikei {verify,classify,invariant,present,search}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .birack import (FiniteBirack, TsrParams, classify, format_matrix_file, make_constant_action,
                     make_tsr, parse_matrix_file, to_matrix, verify_axioms)
from .counting import (DEFAULT_BUDGET, phi_column_group, phi_image, phi_integral, phi_writhe,
                       result_json)
from .diagram import Presentation, extract_presentation, parse_braid_word, parse_gauss_code, parse_presentation_file
from .errors import InvalidBirackError, NotInvolutoryError, ParseError, ResourceLimitError
from .search import PRESETS, converse_report, enumerate_biracks, search_tsr

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SEMANTIC, EXIT_RESOURCE = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    matrix: Path | None = None
    tsr: tuple[int, int, int, int] | None = None
    constant: tuple[str, str] | None = None
    braid: str | None = None
    strands: int | None = None
    gauss: str | None = None
    presentation: Path | None = None
    oriented: bool = False
    enhancement: str = "none"
    raw_image: bool = False
    fmt: str = "text"
    budget: int = DEFAULT_BUDGET

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        budget = args.budget
        if budget is None:
            budget = int(os.environ.get("BIKEI_BUDGET", DEFAULT_BUDGET))
        return cls(
            command=args.command,
            matrix=getattr(args, "matrix", None),
            tsr=tuple(args.tsr) if getattr(args, "tsr", None) else None,
            constant=tuple(args.constant) if getattr(args, "constant", None) else None,
            braid=getattr(args, "braid", None),
            strands=getattr(args, "strands", None),
            gauss=getattr(args, "gauss", None),
            presentation=getattr(args, "presentation", None),
            oriented=getattr(args, "oriented", False),
            enhancement=getattr(args, "enhancement", "none"),
            raw_image=getattr(args, "raw_image", False),
            fmt=args.format,
            budget=budget,
        )

    def birack(self) -> FiniteBirack:
        if self.matrix is not None:
            return parse_matrix_file(Path(self.matrix).read_text())
        if self.tsr is not None:
            return make_tsr(TsrParams(*self.tsr))
        if self.constant is not None:
            sigma, rho = (_parse_perm(s) for s in self.constant)
            return make_constant_action(sigma, rho)
        raise ParseError("no birack source given (--matrix, --tsr or --constant)")

    def diagram(self) -> Presentation:
        if self.braid is not None:
            return extract_presentation(parse_braid_word(self.braid, self.oriented, self.strands))
        if self.gauss is not None:
            return extract_presentation(parse_gauss_code(self.gauss, self.oriented))
        if self.presentation is not None:
            return parse_presentation_file(Path(self.presentation).read_text())
        raise ParseError("no diagram source given (--braid, --gauss or --presentation)")


def _parse_perm(text: str) -> tuple[int, ...]:
    """1-based images, comma or space separated: ``"2,1"`` is the swap on two points."""
    try:
        images = [int(v) - 1 for v in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError("permutation images must be integers", text) from None
    return tuple(images)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _matrix_json(X: FiniteBirack) -> dict:
    U, L = to_matrix(X)
    return {"n": X.n, "U": U, "L": L}


def _summary(X: FiniteBirack) -> tuple[dict, str]:
    flags = classify(X)
    data = {k[3:]: v for k, v in vars(flags).items()}
    text = ", ".join(f"{k}: {_yes(v)}" for k, v in data.items())
    return data, f"{text}, N={X.rank if X.rank is not None else '?'}"


def cmd_verify(cfg: RunConfig, out) -> int:
    X = cfg.birack()
    report = verify_axioms(X)
    flags, line = _summary(X)
    if cfg.fmt == "json":
        json.dump({
            "axioms": [{"name": c.name, "passed": c.passed,
                        "witness": [w + 1 for w in c.witness] if c.witness else None,
                        "detail": c.detail} for c in report.checks],
            "flags": flags, "rank": X.rank, "matrix": _matrix_json(X),
        }, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{report}\n{line}\n{format_matrix_file(X)}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_classify(cfg: RunConfig, out) -> int:
    X = cfg.birack()
    flags, line = _summary(X)
    if cfg.fmt == "json":
        json.dump({"flags": flags, "rank": X.rank}, out, indent=2)
        out.write("\n")
    else:
        out.write(line + "\n")
    return EXIT_OK


def cmd_invariant(cfg: RunConfig, out) -> int:
    X = cfg.birack()
    P = cfg.diagram()
    total, per = phi_integral(P, X, cfg.oriented, cfg.budget)
    poly = None
    if cfg.enhancement == "image":
        poly = phi_image(P, X, cfg.oriented, cfg.budget, closure=not cfg.raw_image)
    elif cfg.enhancement == "writhe":
        poly = phi_writhe(P, X, cfg.oriented, cfg.budget)
    elif cfg.enhancement == "colgroup":
        poly = phi_column_group(P, X, cfg.oriented, cfg.budget)
    if cfg.fmt == "json":
        json.dump(result_json(total, per, poly), out, indent=2)
        out.write("\n")
    else:
        out.write(f"total: {total}\n")
        for w, c in sorted(per.items()):
            out.write(f"framing ({', '.join(map(str, w))}): {c}\n")
        if poly is not None:
            out.write(f"{cfg.enhancement}: {poly}\n")
    return EXIT_OK


def cmd_present(cfg: RunConfig, out) -> int:
    P = cfg.diagram()
    if cfg.fmt == "json":
        json.dump({"generators": list(P.names),
                   "relations": [list(r) for r in P.relations],
                   "signs": list(P.signs),
                   "component_of": list(P.component_of),
                   "writhe": list(P.writhe)}, out, indent=2)
        out.write("\n")
    else:
        out.write(P.format())
    return EXIT_OK


def cmd_search(args, cfg: RunConfig, out) -> int:
    if args.tsr_all is not None:
        entries = search_tsr(args.tsr_all)
        if cfg.fmt == "json":
            json.dump([{"n": e.params.n, "t": e.params.t, "s": e.params.s, "r": e.params.r,
                        "involutory": e.involutory, "rank": e.rank} for e in entries], out, indent=2)
            out.write("\n")
        else:
            for e in entries:
                p = e.params
                tag = "involutory" if e.involutory else "non-involutory"
                out.write(f"(t,s,r)=({p.t},{p.s},{p.r}) {tag} N={e.rank}\n")
            inv = sum(e.involutory for e in entries)
            out.write(f"# n={args.tsr_all}: {len(entries)} (t,s,r)-biracks, {inv} involutory\n")
        return EXIT_OK
    if args.converse is not None:
        rep = converse_report(args.converse)
        data = {k: getattr(rep, k) for k in ("n", "involutory", "column_involutive",
                                               "involutory_not_column", "column_not_involutory")}
        if cfg.fmt == "json":
            data["examples"] = [_matrix_json(X) for X in rep.examples]
            json.dump(data, out, indent=2)
            out.write("\n")
        else:
            for k, v in data.items():
                out.write(f"{k}: {v}\n")
            for X in rep.examples:
                out.write(format_matrix_file(X, "column-involutive, not involutory"))
        return EXIT_OK
    pred = PRESETS[args.pred]
    hits = enumerate_biracks(args.tables, pred)
    if cfg.fmt == "json":
        json.dump([_matrix_json(X) for X in hits], out, indent=2)
        out.write("\n")
    else:
        for i, X in enumerate(hits, 1):
            out.write(format_matrix_file(X, f"structure {i}") + "\n")
        out.write(f"# n={args.tables} pred={pred.label()}: {len(hits)} structures\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bikei", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def birack_opts(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--matrix", type=Path, help="birack matrix file")
        g.add_argument("--tsr", type=int, nargs=4, metavar=("N", "T", "S", "R"),
                       help="(t,s,r)-birack on Z_N")
        g.add_argument("--constant", nargs=2, metavar=("SIGMA", "RHO"),
                       help="constant action birack; 1-based images such as 2,1")

    def diagram_opts(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--braid", help='braid word, e.g. "s1 S2 v1"')
        g.add_argument("--gauss", help='signed Gauss code, e.g. "O+1 U+2 / ..."')
        g.add_argument("--presentation", type=Path, help="presentation file")
        p.add_argument("--strands", type=int, help="strand count for braid words")
        p.add_argument("--oriented", action="store_true",
                       help="treat the link as oriented (allows non-involutory biracks)")

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=None,
                       help=f"search node bound (default $BIKEI_BUDGET or {DEFAULT_BUDGET})")

    p = sub.add_parser("verify", help="check the birack axioms and print the matrix")
    birack_opts(p)
    common(p)
    p = sub.add_parser("classify", help="print classification flags and rank")
    birack_opts(p)
    common(p)
    p = sub.add_parser("invariant", help="counting invariant and enhancements")
    birack_opts(p)
    diagram_opts(p)
    p.add_argument("--enhancement", choices=("none", "image", "writhe", "colgroup"), default="none")
    p.add_argument("--raw-image", action="store_true",
                   help="image enhancement on the raw label set instead of its closure")
    common(p)
    p = sub.add_parser("present", help="print the presentation of a diagram")
    diagram_opts(p)
    common(p)
    p = sub.add_parser("search", help="enumerate small biracks")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tsr-all", type=int, metavar="N", help="all (t,s,r)-biracks on Z_N")
    g.add_argument("--tables", type=int, metavar="N", help="all tables on N elements")
    g.add_argument("--converse", type=int, metavar="N",
                   help="compare involutory biracks with column-involutive ones")
    p.add_argument("--pred", choices=sorted(PRESETS), default="birack")
    common(p)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        if cfg.command == "verify":
            return cmd_verify(cfg, out)
        if cfg.command == "classify":
            return cmd_classify(cfg, out)
        if cfg.command == "invariant":
            return cmd_invariant(cfg, out)
        if cfg.command == "present":
            return cmd_present(cfg, out)
        return cmd_search(args, cfg, out)
    except NotInvolutoryError as e:
        print(f"error: {e}; pass --oriented for oriented links", file=sys.stderr)
        return EXIT_SEMANTIC
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, InvalidBirackError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
