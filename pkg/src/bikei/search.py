"""Exhaustive search for small birack structures."""

from __future__ import annotations

from dataclasses import dataclass, fields
from itertools import product
from math import gcd

from . import perm
from .birack import FiniteBirack, TsrParams, is_involutory, is_rack, tsr_involutory_criterion, verify_axioms
from .errors import InvalidBirackError, ResourceLimitError

MAX_TABLE_ORDER = 4
MAX_TSR_MODULUS = 64
DEFAULT_NODE_BUDGET = 20_000_000


@dataclass(frozen=True)
class SearchPredicate:
    require_invertible: bool = False
    require_yang_baxter: bool = False
    require_sideways: bool = False
    require_diagonal_bijectivity: bool = False
    require_involutory: bool = False
    require_column_involutions: bool = False
    require_rank_one: bool = False
    require_rack: bool = False

    def __post_init__(self):
        if not any(getattr(self, f.name) for f in fields(self)):
            raise ValueError("at least one predicate must be enabled")

    @property
    def needs_bijective_columns(self) -> bool:
        return (self.require_sideways or self.require_diagonal_bijectivity
                or self.require_column_involutions or self.require_rank_one)

    def label(self) -> str:
        return "+".join(f.name[len("require_"):] for f in fields(self) if getattr(self, f.name))


_BIRACK = dict(require_invertible=True, require_yang_baxter=True,
               require_sideways=True, require_diagonal_bijectivity=True)

PRESETS: dict[str, SearchPredicate] = {
    "birack": SearchPredicate(**_BIRACK),
    "involutory": SearchPredicate(**_BIRACK, require_involutory=True),
    "bikei": SearchPredicate(**_BIRACK, require_involutory=True, require_rank_one=True),
    "biquandle": SearchPredicate(**_BIRACK, require_rank_one=True),
    "rack": SearchPredicate(**_BIRACK, require_rack=True),
    "quandle": SearchPredicate(**_BIRACK, require_rack=True, require_rank_one=True),
    "kei": SearchPredicate(**_BIRACK, require_rack=True, require_rank_one=True,
                           require_involutory=True),
    "colinv-birack": SearchPredicate(**_BIRACK, require_column_involutions=True),
    "colinv-yb": SearchPredicate(require_yang_baxter=True, require_column_involutions=True),
}


def satisfies(X: FiniteBirack, pred: SearchPredicate) -> bool:
    """Evaluate ``pred`` on a complete table with the birack-core checks."""
    report = verify_axioms(X)
    checks = (
        (pred.require_invertible, lambda: report["invertible"].passed),
        (pred.require_yang_baxter, lambda: report["yang_baxter"].passed),
        (pred.require_sideways, lambda: report["sideways"].passed),
        (pred.require_diagonal_bijectivity, lambda: report["diagonal"].passed),
        (pred.require_column_involutions,
         lambda: all(perm.is_permutation(X.u(x)) and perm.is_involution(X.u(x))
                     and perm.is_permutation(X.l(x)) and perm.is_involution(X.l(x))
                     for x in X.elements)),
        (pred.require_involutory, lambda: is_involutory(X)),
        (pred.require_rank_one, lambda: X.rank == 1),
        (pred.require_rack, lambda: is_rack(X)),
    )
    return all(check() for wanted, check in checks if wanted)


def enumerate_biracks(n: int, pred: SearchPredicate,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> list[FiniteBirack]:
    """Every table ``B`` on ``n`` elements satisfying ``pred``, lexicographically ordered.

    Tables are filled pair by pair with pruning from necessary partial
    conditions; each complete table is then checked by :func:`satisfies`.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_TABLE_ORDER:
        raise ResourceLimitError(f"table enumeration is limited to n <= {MAX_TABLE_ORDER}")

    pairs = sorted(product(range(n), repeat=2), key=lambda p: (max(p), p))
    b1 = [[-1] * n for _ in range(n)]
    b2 = [[-1] * n for _ in range(n)]
    f1 = [[-1] * n for _ in range(n)]
    f2 = [[-1] * n for _ in range(n)]
    trail: list[tuple[list[int], int, int]] = []
    images: set[tuple[int, int]] = set()
    columns = pred.needs_bijective_columns
    hits: list[FiniteBirack] = []
    nodes = 0

    def force(tab, x, y, v):
        cur = tab[x][y]
        if cur >= 0:
            return cur == v
        tab[x][y] = v
        trail.append((tab[x], y, cur))
        return True

    def implied(x, y, u, v):
        """Record values forced by assigning ``B(x,y) = (u,v)``; False on contradiction."""
        if pred.require_column_involutions:
            if not (force(f1, x, u, y) and force(f2, v, y, x)):
                return False
        if pred.require_involutory:
            if not (force(f1, v, u, y) and force(f2, v, u, x)
                    and force(f1, v, y, u) and force(f2, v, y, x)):
                return False
        for tab, forced in ((b1, f1), (b2, f2)):
            for a, b in product(range(n), repeat=2):
                if tab[a][b] >= 0 and forced[a][b] >= 0 and tab[a][b] != forced[a][b]:
                    return False
        return True

    def yb_consistent():
        def B(a, b):
            u, v = b1[a][b], b2[a][b]
            return None if u < 0 or v < 0 else (u, v)

        for x, y, z in product(range(n), repeat=3):
            # left side: (B x 1)(1 x B)(B x 1)
            p = B(x, y)
            if p is None:
                continue
            a, b = p
            q = B(b, z)
            if q is None:
                continue
            b, c = q
            r = B(a, b)
            if r is None:
                continue
            lhs = r + (c,)
            p = B(y, z)
            if p is None:
                continue
            b, c = p
            q = B(x, b)
            if q is None:
                continue
            a, b = q
            r = B(b, c)
            if r is None:
                continue
            if lhs != (a,) + r:
                return False
        return True

    def row_ok(x, y, u, v):
        if columns:
            if any(b1[x][w] == u for w in range(n) if w != y):
                return False
            if any(b2[w][y] == v for w in range(n) if w != x):
                return False
        if pred.require_invertible and (u, v) in images:
            return False
        if pred.require_rack and v != x:
            return False
        return True

    def dfs(idx):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(f"search exceeded {node_budget} nodes")
        if idx == len(pairs):
            X = FiniteBirack(n, b1, b2)
            if satisfies(X, pred):
                hits.append(X)
            return
        x, y = pairs[idx]
        us = [f1[x][y]] if f1[x][y] >= 0 else range(n)
        vs = [f2[x][y]] if f2[x][y] >= 0 else range(n)
        for u, v in product(us, vs):
            if not row_ok(x, y, u, v):
                continue
            mark = len(trail)
            b1[x][y], b2[x][y] = u, v
            images.add((u, v))
            if implied(x, y, u, v) and (not pred.require_yang_baxter or yb_consistent()):
                dfs(idx + 1)
            while len(trail) > mark:
                row, col, old = trail.pop()
                row[col] = old
            images.discard((u, v))
            b1[x][y] = b2[x][y] = -1

    dfs(0)
    hits.sort(key=lambda X: (X.b1, X.b2))
    return hits


def brute_force_biracks(n: int, pred: SearchPredicate) -> list[FiniteBirack]:
    """Try all ``(n^2)^(n^2)`` maps; only sensible for ``n <= 2``."""
    if (n * n) ** (n * n) > 10 ** 6:
        raise ResourceLimitError(f"brute force over {(n * n) ** (n * n)} maps refused")
    out = []
    pairs = list(product(range(n), repeat=2))
    for images in product(pairs, repeat=n * n):
        b1 = [[images[x * n + y][0] for y in range(n)] for x in range(n)]
        b2 = [[images[x * n + y][1] for y in range(n)] for x in range(n)]
        X = FiniteBirack(n, b1, b2)
        if satisfies(X, pred):
            out.append(X)
    out.sort(key=lambda X: (X.b1, X.b2))
    return out


@dataclass(frozen=True)
class TsrEntry:
    params: TsrParams
    involutory: bool
    rank: int


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def search_tsr(n: int) -> list[TsrEntry]:
    if not 1 <= n <= MAX_TSR_MODULUS:
        raise ResourceLimitError(f"(t,s,r) search is limited to 1 <= n <= {MAX_TSR_MODULUS}")
    units = [a for a in range(n) if gcd(a, n) == 1] or [0]
    out = []
    for t in units:
        for r in units:
            for s in range(n):
                try:
                    p = TsrParams(n, t, s, r)
                except InvalidBirackError:
                    continue
                out.append(TsrEntry(p, tsr_involutory_criterion(p),
                                    multiplicative_order(p.kink_factor, n)))
    return out


@dataclass(frozen=True)
class ConverseReport:
    """Involutory biracks versus biracks whose columns are all involutions."""

    n: int
    involutory: int
    column_involutive: int
    involutory_not_column: int
    column_not_involutory: int
    examples: tuple[FiniteBirack, ...]

    @property
    def strict(self) -> bool:
        return self.column_not_involutory > 0


def converse_report(n: int, max_examples: int = 3) -> ConverseReport:
    inv = enumerate_biracks(n, PRESETS["involutory"])
    col = enumerate_biracks(n, PRESETS["colinv-birack"])
    inv_set = {(X.b1, X.b2) for X in inv}
    col_set = {(X.b1, X.b2) for X in col}
    extra = [X for X in col if (X.b1, X.b2) not in inv_set]
    return ConverseReport(n, len(inv), len(col), len(inv_set - col_set), len(extra),
                          tuple(extra[:max_examples]))
