"""Finite biracks stored as operation tables.

Elements are ``0..n-1`` internally. The matrix form ``[U|L]`` and the matrix
file use 1-based indices, with ``U(i,j) = k`` meaning ``x_k = B_1(x_j, x_i)``
and ``L(i,j) = h`` meaning ``x_h = B_2(x_i, x_j)``.

For ``(t,s,r)``-biracks on ``Z_n`` element ``i`` stands for the residue
``(i + 1) mod n``, so that ``Z_4 = {1, 2, 3, 4}`` with ``4 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from . import perm
from .errors import InvalidBirackError, ParseError, ResourceLimitError

Table = tuple[tuple[int, ...], ...]

COLUMN_GROUP_MAX_N = 10


def _as_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class FiniteBirack:
    """A map ``B(x, y) = (b1[x][y], b2[x][y])`` on an ``n``-element set.

    Construction only checks shapes and ranges; use :func:`verify_axioms`
    to find out whether the tables actually satisfy the birack axioms.
    Derived maps are ``None`` where they do not exist.
    """

    n: int
    b1: Table
    b2: Table
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidBirackError(f"set size must be positive, got {self.n}")
        b1, b2 = _as_table(self.b1), _as_table(self.b2)
        for label, tab in (("b1", b1), ("b2", b2)):
            if len(tab) != self.n or any(len(row) != self.n for row in tab):
                raise InvalidBirackError(f"{label} must be a {self.n}x{self.n} table")
            for row in tab:
                for v in row:
                    if not 0 <= v < self.n:
                        raise InvalidBirackError(f"{label} entry {v} outside 0..{self.n - 1}")
        object.__setattr__(self, "b1", b1)
        object.__setattr__(self, "b2", b2)

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.b1[x][y], self.b2[x][y]

    @property
    def elements(self) -> range:
        return range(self.n)

    def u(self, x: int) -> perm.Perm:
        """Column map ``y -> B_1(x, y)``."""
        return tuple(self.b1[x][y] for y in range(self.n))

    def l(self, x: int) -> perm.Perm:
        """Column map ``y -> B_2(y, x)``."""
        return tuple(self.b2[y][x] for y in range(self.n))

    @cached_property
    def columns_bijective(self) -> bool:
        return all(perm.is_permutation(self.u(x)) and perm.is_permutation(self.l(x))
                   for x in self.elements)

    # pairs are encoded as x * n + y

    @cached_property
    def pair_map(self) -> tuple[int, ...]:
        n = self.n
        return tuple(self.b1[x][y] * n + self.b2[x][y] for x in range(n) for y in range(n))

    @cached_property
    def inverse_map(self) -> tuple[int, ...] | None:
        if not perm.is_permutation(self.pair_map):
            return None
        return perm.inverse(self.pair_map)

    @cached_property
    def sideways(self) -> tuple[int, ...] | None:
        """``S(B_1(x,y), x) = (B_2(x,y), y)`` as a pair table, if it is a bijection."""
        n = self.n
        table: list[int | None] = [None] * (n * n)
        for x, y in product(range(n), repeat=2):
            key = self.b1[x][y] * n + x
            if table[key] is not None:
                return None
            table[key] = self.b2[x][y] * n + y
        if None in table or not perm.is_permutation(table):
            return None
        return tuple(table)

    @cached_property
    def sideways_inverse(self) -> tuple[int, ...] | None:
        return None if self.sideways is None else perm.inverse(self.sideways)

    def _diagonal(self, table: tuple[int, ...], component: int) -> tuple[int, ...]:
        n = self.n
        return tuple(divmod(table[x * n + x], n)[component] for x in range(n))

    @cached_property
    def alpha(self) -> perm.Perm | None:
        if self.sideways_inverse is None:
            return None
        second = self._diagonal(self.sideways_inverse, 1)
        if not perm.is_permutation(second):
            return None
        return perm.inverse(second)

    @cached_property
    def kink_map(self) -> perm.Perm | None:
        if self.alpha is None:
            return None
        first = self._diagonal(self.sideways_inverse, 0)
        pi = tuple(first[a] for a in self.alpha)
        return pi if perm.is_permutation(pi) else None

    @cached_property
    def rank(self) -> int | None:
        return None if self.kink_map is None else perm.order(self.kink_map)


# -- matrix form -----------------------------------------------------------


def from_matrix(n: int, U: Sequence[Sequence[int]], L: Sequence[Sequence[int]]) -> FiniteBirack:
    if len(U) != n or len(L) != n or any(len(r) != n for r in list(U) + list(L)):
        raise InvalidBirackError(f"U and L must both be {n}x{n}")
    for label, M in (("U", U), ("L", L)):
        for i, row in enumerate(M):
            for j, v in enumerate(row):
                if not 1 <= v <= n:
                    raise InvalidBirackError(
                        f"{label}({i + 1},{j + 1}) = {v} is outside 1..{n}")
        for j in range(n):
            col = [M[i][j] for i in range(n)]
            if sorted(col) != list(range(1, n + 1)):
                raise InvalidBirackError(
                    f"column {j + 1} of {label} is not a permutation: {col}")
    b1 = [[U[y][x] - 1 for y in range(n)] for x in range(n)]
    b2 = [[L[x][y] - 1 for y in range(n)] for x in range(n)]
    return FiniteBirack(n, b1, b2)


def to_matrix(X: FiniteBirack) -> tuple[list[list[int]], list[list[int]]]:
    n = X.n
    U = [[X.b1[j][i] + 1 for j in range(n)] for i in range(n)]
    L = [[X.b2[i][j] + 1 for j in range(n)] for i in range(n)]
    return U, L


def format_matrix_file(X: FiniteBirack, comment: str | None = None) -> str:
    U, L = to_matrix(X)
    width = len(str(X.n))
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(X.n))
    for urow, lrow in zip(U, L):
        lines.append(" ".join(f"{v:>{width}}" for v in urow + lrow))
    return "\n".join(lines) + "\n"


def parse_matrix_file(text: str) -> FiniteBirack:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            bad = next(t for t in line.split() if not t.lstrip("-").isdigit())
            raise ParseError(f"non-integer entry on line {lineno}", bad, lineno) from None
    if not rows:
        raise ParseError("empty matrix file")
    lineno, head = rows[0]
    if len(head) != 1 or head[0] < 1:
        raise ParseError("first line must hold the set size n", " ".join(map(str, head)), lineno)
    n = head[0]
    body = rows[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(body)}")
    for lineno, row in body:
        if len(row) != 2 * n:
            raise ParseError(f"line {lineno} must hold {2 * n} integers, found {len(row)}")
    U = [row[:n] for _, row in body]
    L = [row[n:] for _, row in body]
    return from_matrix(n, U, L)


# -- standard families -----------------------------------------------------


def index_of(residue: int, n: int) -> int:
    return (residue - 1) % n


def residue_of(index: int, n: int) -> int:
    return (index + 1) % n


@dataclass(frozen=True)
class TsrParams:
    n: int
    t: int
    s: int
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidBirackError(f"modulus must be positive, got {self.n}")
        n = self.n
        object.__setattr__(self, "t", self.t % n)
        object.__setattr__(self, "s", self.s % n)
        object.__setattr__(self, "r", self.r % n)
        if gcd(self.t, n) != 1:
            raise InvalidBirackError(f"t={self.t} is not a unit mod {n}")
        if gcd(self.r, n) != 1:
            raise InvalidBirackError(f"r={self.r} is not a unit mod {n}")
        if (self.s * self.s - (1 - self.t * self.r) * self.s) % n:
            raise InvalidBirackError(
                f"s^2 = {self.s * self.s % n} but (1-tr)s = {(1 - self.t * self.r) * self.s % n} mod {n}")

    @property
    def kink_factor(self) -> int:
        return (self.t * self.r + self.s) % self.n


def make_tsr(p: TsrParams | int, t: int | None = None, s: int | None = None,
             r: int | None = None) -> FiniteBirack:
    """``B(x, y) = (sx + ty, rx)`` over ``Z_n``.

    Accepts either a :class:`TsrParams` or the four integers ``n, t, s, r``.
    """
    if not isinstance(p, TsrParams):
        p = TsrParams(p, t, s, r)
    n = p.n
    res = [residue_of(i, n) for i in range(n)]
    b1 = [[index_of(p.s * res[x] + p.t * res[y], n) for y in range(n)] for x in range(n)]
    b2 = [[index_of(p.r * res[x], n) for _ in range(n)] for x in range(n)]
    return FiniteBirack(n, b1, b2, name=f"tsr({n},{p.t},{p.s},{p.r})")


def make_constant_action(sigma: Sequence[int], rho: Sequence[int]) -> FiniteBirack:
    """``B(x, y) = (sigma(y), rho(x))`` for commuting permutations."""
    sigma, rho = tuple(sigma), tuple(rho)
    if len(sigma) != len(rho):
        raise InvalidBirackError("sigma and rho act on sets of different size")
    for label, p in (("sigma", sigma), ("rho", rho)):
        if not perm.is_permutation(p):
            raise InvalidBirackError(f"{label} is not a permutation: {p}")
    n = len(sigma)
    X = FiniteBirack(n, [[sigma[y] for y in range(n)] for _ in range(n)],
                     [[rho[x]] * n for x in range(n)], name="constant-action")
    if perm.compose(sigma, rho) != perm.compose(rho, sigma):
        witness = _yang_baxter_witness(X)
        raise InvalidBirackError(
            f"sigma and rho do not commute; Yang-Baxter fails at {_fmt(witness)}")
    return X


# -- axioms ----------------------------------------------------------------


def _fmt(elems) -> str:
    return "(" + ", ".join(f"x{e + 1}" for e in elems) + ")"


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""

    def __str__(self):
        mark = "pass" if self.passed else "FAIL"
        out = f"{self.name}: {mark}"
        if not self.passed:
            out += f" at {_fmt(self.witness)}" if self.witness is not None else ""
            out += f" - {self.detail}" if self.detail else ""
        return out


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def _check_invertible(X: FiniteBirack) -> AxiomCheck:
    n = X.n
    seen: dict[int, tuple[int, int]] = {}
    for x, y in product(range(n), repeat=2):
        img = X.pair_map[x * n + y]
        if img in seen:
            a, b = seen[img]
            return AxiomCheck("invertible", False, (a, b, x, y),
                              f"B{_fmt((a, b))} = B{_fmt((x, y))} = {_fmt(divmod(img, n))}")
        seen[img] = (x, y)
    return AxiomCheck("invertible", True)


def _check_sideways(X: FiniteBirack) -> AxiomCheck:
    n = X.n
    value: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in product(range(n), repeat=2):
        key = (X.b1[x][y], x)
        val = (X.b2[x][y], y)
        if key in value and value[key] != val:
            return AxiomCheck("sideways", False, key,
                              f"S{_fmt(key)} would need both {_fmt(value[key])} and {_fmt(val)}")
        value[key] = val
    for key in product(range(n), repeat=2):
        if key not in value:
            return AxiomCheck("sideways", False, key, f"S{_fmt(key)} is undefined")
    hit: dict[tuple[int, int], tuple[int, int]] = {}
    for key, val in sorted(value.items()):
        if val in hit:
            return AxiomCheck("sideways", False, val,
                              f"S{_fmt(hit[val])} = S{_fmt(key)}, S is not invertible")
        hit[val] = key
    return AxiomCheck("sideways", True)


def _check_diagonal(X: FiniteBirack) -> AxiomCheck:
    if X.sideways is None:
        return AxiomCheck("diagonal", False, None, "sideways map undefined")
    for label, table in (("S", X.sideways), ("S^-1", X.sideways_inverse)):
        for comp in (0, 1):
            images = X._diagonal(table, comp)
            if not perm.is_permutation(images):
                seen: dict[int, int] = {}
                for x, v in enumerate(images):
                    if v in seen:
                        return AxiomCheck(
                            "diagonal", False, (seen[v], x),
                            f"x -> {label}_{comp + 1}(x,x) is not injective")
                    seen[v] = x
    return AxiomCheck("diagonal", True)


def _yang_baxter_sides(X: FiniteBirack, x: int, y: int, z: int):
    B = X

    def left(a, b, c):
        a, b = B(a, b)
        return a, b, c

    def right(a, b, c):
        b, c = B(b, c)
        return a, b, c

    lhs = left(*right(*left(x, y, z)))
    rhs = right(*left(*right(x, y, z)))
    return lhs, rhs


def _yang_baxter_witness(X: FiniteBirack) -> tuple[int, int, int] | None:
    for triple in product(range(X.n), repeat=3):
        lhs, rhs = _yang_baxter_sides(X, *triple)
        if lhs != rhs:
            return triple
    return None


def _check_yang_baxter(X: FiniteBirack) -> AxiomCheck:
    w = _yang_baxter_witness(X)
    if w is None:
        return AxiomCheck("yang_baxter", True)
    lhs, rhs = _yang_baxter_sides(X, *w)
    return AxiomCheck("yang_baxter", False, w, f"{_fmt(lhs)} != {_fmt(rhs)}")


def verify_axioms(X: FiniteBirack) -> AxiomReport:
    return AxiomReport((_check_invertible(X), _check_sideways(X),
                        _check_diagonal(X), _check_yang_baxter(X)))


def is_birack(X: FiniteBirack) -> bool:
    return verify_axioms(X).ok


def is_involutory(X: FiniteBirack) -> bool:
    """``(tau B)^2 = Id`` and ``S = B^-1``."""
    n = X.n
    for x, y in product(range(n), repeat=2):
        u, v = X(x, y)
        if X(v, u) != (y, x):
            return False
    if X.sideways is None or X.sideways != X.inverse_map:
        return False
    assert all(perm.is_involution(X.u(x)) and perm.is_involution(X.l(x))
               for x in X.elements), "involutory birack with a non-involutive column"
    return True


def tsr_involutory_criterion(p: TsrParams) -> bool:
    n, t, s, r = p.n, p.t, p.s, p.r
    return ((t * t - 1) % n == 0 and (r * r - 1) % n == 0
            and (t + r) * s % n == 0 and (1 - r) * s % n == 0)


def is_rack(X: FiniteBirack) -> bool:
    """Only the table condition ``B_2(x,y) = x``; birack axioms not checked."""
    return all(X.b2[x][y] == x for x in X.elements for y in X.elements)


@dataclass(frozen=True)
class ClassificationFlags:
    is_birack: bool
    is_involutory: bool
    is_rack: bool
    is_quandle: bool
    is_biquandle: bool
    is_bikei: bool
    is_kei: bool

    def names(self) -> list[str]:
        return [k[3:] for k, v in vars(self).items() if v]


def classify(X: FiniteBirack) -> ClassificationFlags:
    br = is_birack(X)
    inv = br and is_involutory(X)
    rack = br and is_rack(X)
    rank_one = br and X.rank == 1
    return ClassificationFlags(
        is_birack=br,
        is_involutory=inv,
        is_rack=rack,
        is_quandle=rack and rank_one,
        is_biquandle=rank_one,
        is_bikei=inv and rank_one,
        is_kei=inv and rank_one and rack,
    )


def kink_map_and_rank(X: FiniteBirack) -> tuple[perm.Perm, int]:
    if X.kink_map is None:
        raise InvalidBirackError("kink map undefined: sideways map is not diagonally bijective")
    return X.kink_map, X.rank


def sideways_map(X: FiniteBirack) -> dict[tuple[int, int], tuple[int, int]]:
    if X.sideways is None:
        raise InvalidBirackError("sideways map does not exist")
    n = X.n
    return {divmod(k, n): divmod(v, n) for k, v in enumerate(X.sideways)}


def subbirack_closure(X: FiniteBirack, seed: Iterable[int]) -> frozenset[int]:
    closed = set(seed)
    frontier = list(closed)
    while frontier:
        new = set()
        for x in frontier:
            for y in list(closed):
                for a, b in ((x, y), (y, x)):
                    new.update(X(a, b))
        frontier = [v for v in new if v not in closed]
        closed.update(frontier)
    return frozenset(closed)


def column_group(X: FiniteBirack, subset: Iterable[int]) -> tuple[int, list[perm.Perm]]:
    """Order of the group generated by ``u_x, l_x`` for ``x`` in ``subset``."""
    if X.n > COLUMN_GROUP_MAX_N:
        raise ResourceLimitError(
            f"column group closure is limited to |X| <= {COLUMN_GROUP_MAX_N}, got {X.n}")
    gens = []
    for x in sorted(set(subset)):
        gens.extend((X.u(x), X.l(x)))
    gens = list(dict.fromkeys(gens))
    return len(perm.group_closure(gens, X.n)), gens
