"""Link diagrams, their semiarcs, and birack presentations.

Crossing convention: a positive crossing, drawn with both strands pointing
up, has the overstrand entering bottom-left and the understrand entering
bottom-right, and gives the relation ``B(in_left, in_right) = (out_left,
out_right)``. A negative crossing gives ``B(out_left, out_right) = (in_left,
in_right)``. In both cases ``in_left`` continues to ``out_right`` and
``in_right`` continues to ``out_left``, as in a braid generator.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import ParseError


@dataclass(frozen=True)
class Crossing:
    in_left: int
    in_right: int
    out_left: int
    out_right: int
    positive: bool = True

    @property
    def over(self) -> tuple[int, int]:
        return (self.in_left, self.out_right) if self.positive else (self.in_right, self.out_left)

    @property
    def under(self) -> tuple[int, int]:
        return (self.in_right, self.out_left) if self.positive else (self.in_left, self.out_right)

    @classmethod
    def from_passes(cls, over: tuple[int, int], under: tuple[int, int], positive: bool) -> "Crossing":
        if positive:
            return cls(over[0], under[0], under[1], over[1], True)
        return cls(under[0], over[0], over[1], under[1], False)

    @property
    def sign(self) -> int:
        return 1 if self.positive else -1

    def relation(self) -> tuple[int, int, int, int]:
        if self.positive:
            return self.in_left, self.in_right, self.out_left, self.out_right
        return self.out_left, self.out_right, self.in_left, self.in_right


def _successors(semiarc_count: int, crossings: Sequence[Crossing]) -> list[int]:
    succ = list(range(semiarc_count))
    for c in crossings:
        succ[c.in_left] = c.out_right
        succ[c.in_right] = c.out_left
    return succ


def _components(succ: Sequence[int]) -> tuple[list[int], int]:
    comp = [-1] * len(succ)
    c = 0
    for start in range(len(succ)):
        if comp[start] >= 0:
            continue
        s = start
        while comp[s] < 0:
            comp[s] = c
            s = succ[s]
        c += 1
    return comp, c


@dataclass(frozen=True)
class LinkDiagram:
    """Classical crossings of a (possibly virtual) link diagram.

    Semiarcs are numbered ``0..semiarc_count-1``. A semiarc that touches no
    crossing is a free loop, i.e. a zero-crossing component.
    """

    crossings: tuple[Crossing, ...]
    semiarc_count: int
    component_of: tuple[int, ...]
    component_count: int
    oriented: bool = True

    def __post_init__(self):
        ins, outs = [0] * self.semiarc_count, [0] * self.semiarc_count
        for c in self.crossings:
            for s in (c.in_left, c.in_right):
                ins[s] += 1
            for s in (c.out_left, c.out_right):
                outs[s] += 1
        for s in range(self.semiarc_count):
            if (ins[s], outs[s]) not in ((1, 1), (0, 0)):
                raise ValueError(f"semiarc {s} is used {ins[s]} times as input, {outs[s]} as output")
        succ = _successors(self.semiarc_count, self.crossings)
        comp, c = _components(succ)
        if c != self.component_count or len(self.component_of) != self.semiarc_count:
            raise ValueError("component data does not match the strands")
        # component ids must be constant along strands
        if any(self.component_of[s] != self.component_of[succ[s]] for s in range(len(succ))):
            raise ValueError("component assignment is not constant along strands")

    @classmethod
    def build(cls, crossings: Iterable[Crossing], semiarc_count: int, oriented: bool = True):
        crossings = tuple(crossings)
        comp, c = _components(_successors(semiarc_count, crossings))
        return cls(crossings, semiarc_count, tuple(comp), c, oriented)

    def successor(self, s: int) -> int:
        for c in self.crossings:
            if c.in_left == s:
                return c.out_right
            if c.in_right == s:
                return c.out_left
        return s

    @property
    def free_loops(self) -> list[int]:
        used = {s for c in self.crossings for s in (c.in_left, c.in_right, c.out_left, c.out_right)}
        return [s for s in range(self.semiarc_count) if s not in used]

    def writhe(self) -> tuple[int, ...]:
        w = [0] * self.component_count
        for c in self.crossings:
            k = self.component_of[c.in_left]
            if k == self.component_of[c.in_right]:
                w[k] += c.sign
        return tuple(w)

    def reversed(self, components: Iterable[int]) -> "LinkDiagram":
        """The same diagram with the given components' orientations reversed."""
        flip = set(components)
        crossings = []
        for c in self.crossings:
            over, under = c.over, c.under
            fo = self.component_of[over[0]] in flip
            fu = self.component_of[under[0]] in flip
            if fo:
                over = over[::-1]
            if fu:
                under = under[::-1]
            crossings.append(Crossing.from_passes(over, under, c.positive != (fo != fu)))
        return replace(self, crossings=tuple(crossings))


# -- braid words -----------------------------------------------------------

_BRAID_TOKEN = re.compile(r"([sSv])(\d+)$")


def parse_braid_word(text: str, oriented: bool = True, strands: int | None = None) -> LinkDiagram:
    """Closure of a virtual braid word such as ``"s1 S2 v1"``.

    ``sK`` and ``SK`` are the positive and negative classical crossings of
    strands ``K`` and ``K+1``; ``vK`` is a virtual crossing.
    """
    word = []
    for pos, tok in enumerate(text.split(), 1):
        m = _BRAID_TOKEN.match(tok)
        if not m or int(m.group(2)) < 1:
            raise ParseError("malformed braid generator", tok, pos)
        word.append((m.group(1), int(m.group(2))))
    needed = 1 + max((k for _, k in word), default=0)
    if strands is None:
        strands = needed
    elif strands < needed:
        raise ParseError(f"word needs {needed} strands, got {strands}")

    parent = list(range(strands))

    def new_id():
        parent.append(len(parent))
        return len(parent) - 1

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    current = list(range(strands))
    raw = []
    for kind, k in word:
        i, j = k - 1, k
        if kind == "v":
            current[i], current[j] = current[j], current[i]
            continue
        a, b = current[i], current[j]
        c, d = new_id(), new_id()
        raw.append((a, b, c, d, kind == "s"))
        current[i], current[j] = c, d
    for p in range(strands):
        ra, rb = find(current[p]), find(p)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    reps = sorted({find(a) for a in range(len(parent))})
    index = {r: i for i, r in enumerate(reps)}
    crossings = [Crossing(*(index[find(v)] for v in rec[:4]), rec[4]) for rec in raw]
    return LinkDiagram.build(crossings, len(reps), oriented)


# -- Gauss codes -----------------------------------------------------------

_GAUSS_TOKEN = re.compile(r"([OU])([+-])(\d+)$")


def parse_gauss_code(text: str, oriented: bool = True) -> LinkDiagram:
    """Signed oriented Gauss code, e.g. ``"O+1 U+2 O+3 U+1 O+2 U+3"``.

    Components are separated by ``/``; an empty component is an unknotted
    circle with no crossings.
    """
    passes: dict[int, dict[str, tuple[int, int, int]]] = {}
    sign: dict[int, str] = {}
    order: list[int] = []
    base = 0
    pos = 0
    for chunk in text.split("/"):
        tokens = chunk.split()
        m = len(tokens)
        if m == 0:
            base += 1
            continue
        for j, tok in enumerate(tokens):
            pos += 1
            match = _GAUSS_TOKEN.match(tok)
            if not match:
                raise ParseError("malformed Gauss code token", tok, pos)
            kind, sg, label = match.group(1), match.group(2), int(match.group(3))
            seen = passes.setdefault(label, {})
            if kind in seen:
                raise ParseError(f"crossing {label} visited twice as {kind}", tok, pos)
            if label in sign and sign[label] != sg:
                raise ParseError(f"sign mismatch at crossing {label}", tok, pos)
            if label not in sign:
                order.append(label)
            sign[label] = sg
            seen[kind] = (base + (j - 1) % m, base + j, pos)
        base += m
    crossings = []
    for label in order:
        seen = passes[label]
        if len(seen) != 2:
            missing = "U" if "O" in seen else "O"
            pos = next(iter(seen.values()))[2]
            raise ParseError(f"crossing {label} has no {missing} pass", str(label), pos)
        crossings.append(Crossing.from_passes(seen["O"][:2], seen["U"][:2], sign[label] == "+"))
    return LinkDiagram.build(crossings, base, oriented)


# -- presentations ---------------------------------------------------------

Relation = tuple[int, int, int, int]


def _default_names(count: int) -> tuple[str, ...]:
    if count <= 26:
        return tuple(string.ascii_lowercase[:count])
    return tuple(f"g{i + 1}" for i in range(count))


@dataclass(frozen=True)
class Presentation:
    """Generators ``0..generator_count-1`` and relations ``B(g_i, g_j) = (g_k, g_l)``.

    ``signs[r]`` records which side of relation ``r`` carries the strands
    entering the crossing: ``+1`` for ``(i, j)``, ``-1`` for ``(k, l)``. Kink
    insertion needs this to know where a strand runs.
    """

    generator_count: int
    relations: tuple[Relation, ...]
    component_of: tuple[int, ...]
    writhe: tuple[int, ...]
    signs: tuple[int, ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        rels = tuple(tuple(r) for r in self.relations)
        object.__setattr__(self, "relations", rels)
        if not self.signs:
            object.__setattr__(self, "signs", (1,) * len(rels))
        if not self.names:
            object.__setattr__(self, "names", _default_names(self.generator_count))
        m = self.generator_count
        if len(self.signs) != len(rels):
            raise ValueError("one sign per relation required")
        if len(self.names) != m or len(set(self.names)) != m:
            raise ValueError("generator names must be unique, one per generator")
        if len(self.component_of) != m:
            raise ValueError("component_of must have one entry per generator")
        for r in rels:
            if len(r) != 4 or any(not 0 <= g < m for g in r):
                raise ValueError(f"relation {r} refers to a missing generator")
        if sorted(set(self.component_of)) != list(range(len(self.writhe))):
            raise ValueError("components must be numbered 0..c-1 with one writhe entry each")

    @property
    def component_count(self) -> int:
        return len(self.writhe)

    def rotated(self) -> "Presentation":
        """Every relation ``B(i,j)=(k,l)`` rewritten as ``B(l,k)=(j,i)``."""
        rels = tuple((l, k, j, i) for i, j, k, l in self.relations)
        return replace(self, relations=rels, signs=tuple(-s for s in self.signs))

    def format(self) -> str:
        nm = self.names
        lines = ["gens: " + " ".join(nm)]
        lines.append("comp: " + " ".join(f"{nm[g]}={self.component_of[g] + 1}"
                                        for g in range(self.generator_count)))
        lines.append("writhe: " + " ".join(map(str, self.writhe)))
        for (i, j, k, l), sg in zip(self.relations, self.signs):
            if sg > 0:
                lines.append(f"B({nm[i]},{nm[j]})=({nm[k]},{nm[l]})")
            else:
                lines.append(f"({nm[k]},{nm[l]})=B({nm[i]},{nm[j]})")
        return "\n".join(lines) + "\n"


def extract_presentation(D: LinkDiagram, reverse: Iterable[int] = ()) -> Presentation:
    """One generator per semiarc and one relation per classical crossing.

    ``reverse`` lists components whose orientation is flipped first; for an
    unoriented diagram any choice is valid.
    """
    reverse = tuple(reverse)
    if reverse:
        D = D.reversed(reverse)
    return Presentation(
        generator_count=D.semiarc_count,
        relations=tuple(c.relation() for c in D.crossings),
        component_of=D.component_of,
        writhe=D.writhe(),
        signs=tuple(c.sign for c in D.crossings),
    )


_NAME = r"\s*([A-Za-z_][A-Za-z0-9_']*)\s*"
_PAIR = rf"\({_NAME},{_NAME}\)"
_FORWARD = re.compile(rf"\s*B\s*{_PAIR}\s*=\s*{_PAIR}")
_BACKWARD = re.compile(rf"\s*{_PAIR}\s*=\s*B\s*{_PAIR}")


def parse_presentation_file(text: str) -> Presentation:
    """Read the ``gens:/comp:/writhe:`` + relation-line format.

    Relations may be written ``B(x,y)=(u,v)`` or ``(u,v)=B(x,y)``, several
    per line separated by commas. The second form marks a negative crossing
    (strands enter at ``u, v``).
    """
    gens: list[str] | None = None
    comp_spec: list[tuple[str, str, int]] = []
    writhe: list[int] | None = None
    rels: list[tuple[tuple[str, str, str, str], int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        key = head.strip().lower()
        if _ and key == "gens":
            gens = rest.split()
        elif _ and key == "comp":
            for tok in rest.split():
                name, eq, num = tok.partition("=")
                if not eq or not num.lstrip("-").isdigit():
                    raise ParseError("malformed component assignment", tok, lineno)
                comp_spec.append((name, tok, int(num)))
        elif _ and key == "writhe":
            try:
                writhe = [int(v) for v in rest.split()]
            except ValueError:
                raise ParseError("writhe entries must be integers", rest.strip(), lineno) from None
        else:
            pos = 0
            while pos < len(line):
                if line[pos] in ", \t;":
                    pos += 1
                    continue
                m = _FORWARD.match(line, pos)
                if m:
                    rels.append((m.groups(), 1, lineno))
                else:
                    m = _BACKWARD.match(line, pos)
                    if not m:
                        raise ParseError("malformed relation", line[pos:], lineno)
                    u, v, x, y = m.groups()
                    rels.append(((x, y, u, v), -1, lineno))
                pos = m.end()
    if gens is None:
        raise ParseError("missing 'gens:' line")
    if len(set(gens)) != len(gens):
        raise ParseError("duplicate generator name", next(g for g in gens if gens.count(g) > 1))
    index = {g: i for i, g in enumerate(gens)}

    def lookup(name, lineno):
        if name not in index:
            raise ParseError("unknown generator", name, lineno)
        return index[name]

    if comp_spec:
        comp = [None] * len(gens)
        for name, tok, num in comp_spec:
            if num < 1:
                raise ParseError("component numbers start at 1", tok)
            comp[lookup(name, None)] = num - 1
        if None in comp:
            raise ParseError("component missing for generator", gens[comp.index(None)])
    else:
        comp = [0] * len(gens)
    c = max(comp, default=-1) + 1
    if sorted(set(comp)) != list(range(c)):
        raise ParseError(f"components must be numbered 1..{c} without gaps")
    if writhe is None:
        writhe = [0] * c
    if len(writhe) != c:
        raise ParseError(f"writhe has {len(writhe)} entries but there are {c} components")
    relations = tuple(tuple(lookup(g, ln) for g in names) for names, _, ln in rels)
    return Presentation(len(gens), relations, tuple(comp), tuple(writhe),
                        tuple(sg for _, sg, _ in rels), tuple(gens))


def _fresh_name(taken: set[str], prefix: str) -> str:
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def insert_kinks(P: Presentation, counts: Sequence[int]) -> Presentation:
    """Add ``counts[k]`` positive kinks to component ``k``.

    A kink placed on a semiarc ``g`` splits it: ``g`` now runs into the kink
    crossing ``B(g, c) = (h, c)``, with ``c`` the kink's loop and ``h`` the
    continuation carrying ``g``'s old end. On a free loop ``h`` is ``g``
    itself, so the first kink there adds one generator instead of two.
    """
    if len(counts) != P.component_count:
        raise IndexError(f"expected {P.component_count} kink counts, got {len(counts)}")
    if any(k < 0 for k in counts):
        raise ValueError("kink counts must be non-negative")
    rels = [list(r) for r in P.relations]
    signs = list(P.signs)
    comp = list(P.component_of)
    names = list(P.names)
    writhe = list(P.writhe)
    taken = set(names)

    def add_generator(k, prefix):
        name = _fresh_name(taken, prefix)
        taken.add(name)
        names.append(name)
        comp.append(k)
        return len(names) - 1

    for k, count in enumerate(counts):
        members = [g for g in range(P.generator_count) if P.component_of[g] == k]
        for _ in range(count):
            site = None
            for g in members:
                for ridx, (r, sg) in enumerate(zip(rels, signs)):
                    slots = (0, 1) if sg > 0 else (2, 3)
                    hit = next((q for q in slots if r[q] == g), None)
                    if hit is not None:
                        site = (g, ridx, hit)
                        break
                if site is not None:
                    break
            loop = add_generator(k, "k")
            if site is None:
                if any(members[0] in r for r in rels):
                    raise ValueError(f"component {k + 1} has no semiarc entering a crossing")
                g = members[0]
                rels.append([g, loop, g, loop])
            else:
                g, ridx, slot = site
                h = add_generator(k, "h")
                rels[ridx][slot] = h
                rels.append([g, loop, h, loop])
            signs.append(1)
            writhe[k] += 1
    return Presentation(len(names), tuple(tuple(r) for r in rels), tuple(comp),
                        tuple(writhe), tuple(signs), tuple(names))
