"""Labeling counts, the integral counting invariant, and its enhancements."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .birack import (FiniteBirack, TsrParams, column_group, index_of, is_involutory,
                     make_tsr, residue_of, subbirack_closure)
from .diagram import Presentation, insert_kinks
from .errors import (InvalidBirackError, NonLinearTargetError, NotInvolutoryError,
                     ResourceLimitError)
from .linalg import count_solutions_mod, is_prime, rank_mod_p
from .polynomial import EnhancementPolynomial

DEFAULT_BUDGET = 10 ** 9


@dataclass(frozen=True)
class Labeling:
    assignment: tuple[int, ...]

    def image(self) -> frozenset[int]:
        return frozenset(self.assignment)


def satisfies(P: Presentation, X: FiniteBirack, assignment) -> bool:
    return all(X(assignment[i], assignment[j]) == (assignment[k], assignment[l])
               for i, j, k, l in P.relations)


class _Tables:
    """Lookup tables for propagation; inverse tables are ``None`` when not bijective."""

    def __init__(self, X: FiniteBirack):
        n = X.n
        self.n = n
        self.b1, self.b2 = X.b1, X.b2
        self.uinv = self.linv = self.binv = None
        if X.columns_bijective:
            self.uinv = [[0] * n for _ in range(n)]
            self.linv = [[0] * n for _ in range(n)]
            for x in range(n):
                for y in range(n):
                    self.uinv[x][X.b1[x][y]] = y
                    self.linv[y][X.b2[x][y]] = x
        if X.inverse_map is not None:
            self.binv = [divmod(X.inverse_map[p], n) for p in range(n * n)]


def _plan(P: Presentation, tables: _Tables) -> tuple[list[int], list[int]]:
    """Static branching order, and generators in no relation."""
    rels = P.relations
    in_rel = {g for r in rels for g in r}
    free = [g for g in range(P.generator_count) if g not in in_rel]
    known: set[int] = set()

    def close():
        changed = True
        while changed:
            changed = False
            for i, j, k, l in rels:
                new = set()
                if i in known and j in known:
                    new |= {k, l}
                if tables.uinv and i in known and k in known:
                    new.add(j)
                if tables.linv and j in known and l in known:
                    new.add(i)
                if tables.binv and k in known and l in known:
                    new |= {i, j}
                if new - known:
                    known.update(new)
                    changed = True

    order = []
    while len(known) < len(in_rel):
        def score(g):
            partner = sum(1 for i, j, _, _ in rels
                          if (g == i and j in known) or (g == j and i in known))
            uses = sum(1 for i, j, _, _ in rels if g in (i, j))
            return (partner, uses, -g)
        g = max((g for g in in_rel if g not in known), key=score)
        order.append(g)
        known.add(g)
        close()
    return order, free


def count_labelings_backtrack(P: Presentation, X: FiniteBirack, collect: bool = False,
                              budget: int = DEFAULT_BUDGET) -> tuple[int, list[Labeling] | None]:
    """Count assignments of elements of ``X`` to generators satisfying every relation.

    Depth-first over a static generator order; after each choice, relations
    with enough known slots force the rest. Raises :class:`ResourceLimitError`
    when ``|X|`` to the number of branching generators exceeds ``budget``.
    """
    tables = _Tables(X)
    n = X.n
    order, free = _plan(P, tables)
    branching = len(order) + (len(free) if collect else 0)
    if n ** branching > budget:
        raise ResourceLimitError(
            f"{n}^{branching} search nodes exceeds the budget of {budget}")

    rels = P.relations
    rels_of: list[list[int]] = [[] for _ in range(P.generator_count)]
    for ridx, r in enumerate(rels):
        for g in set(r):
            rels_of[g].append(ridx)
    val = [-1] * P.generator_count
    trail: list[int] = []
    queue: list[int] = []
    b1, b2, uinv, linv, binv = tables.b1, tables.b2, tables.uinv, tables.linv, tables.binv

    def assign(g, v):
        if val[g] < 0:
            val[g] = v
            trail.append(g)
            queue.extend(rels_of[g])
            return True
        return val[g] == v

    def propagate():
        while queue:
            i, j, k, l = rels[queue.pop()]
            a, b, c, d = val[i], val[j], val[k], val[l]
            if a >= 0 and b >= 0:
                if not (assign(k, b1[a][b]) and assign(l, b2[a][b])):
                    return False
                continue
            if uinv and a >= 0 and c >= 0 and not assign(j, uinv[a][c]):
                return False
            if linv and b >= 0 and d >= 0 and not assign(i, linv[b][d]):
                return False
            if binv and c >= 0 and d >= 0:
                x, y = binv[c * n + d]
                if not (assign(i, x) and assign(j, y)):
                    return False
        return True

    found: list[tuple[int, ...]] = []
    count = 0

    def undo(mark):
        while len(trail) > mark:
            val[trail.pop()] = -1
        queue.clear()

    def dfs(idx):
        nonlocal count
        while idx < len(order) and val[order[idx]] >= 0:
            idx += 1
        if idx == len(order):
            count += 1
            if collect:
                found.append(tuple(val))
            return
        g = order[idx]
        for v in range(n):
            mark = len(trail)
            if assign(g, v) and propagate():
                dfs(idx + 1)
            undo(mark)

    dfs(0)
    total = count * n ** len(free)
    if not collect:
        return total, None
    labelings = []
    for base in found:
        for values in itertools.product(range(n), repeat=len(free)):
            a = list(base)
            for g, v in zip(free, values):
                a[g] = v
            labelings.append(Labeling(tuple(a)))
    return total, labelings


def linear_system(P: Presentation, p: TsrParams) -> list[list[int]]:
    """Homogeneous rows ``s g_i + t g_j - g_k`` and ``r g_i - g_l`` per relation."""
    m = P.generator_count
    rows = []
    for i, j, k, l in P.relations:
        row = [0] * m
        row[i] += p.s
        row[j] += p.t
        row[k] -= 1
        rows.append(row)
        row = [0] * m
        row[i] += p.r
        row[l] -= 1
        rows.append(row)
    return rows


def count_labelings_linear(P: Presentation, p: TsrParams) -> int:
    if not isinstance(p, TsrParams):
        raise NonLinearTargetError(f"linear counting needs (t,s,r) parameters, got {type(p).__name__}")
    n, m = p.n, P.generator_count
    rows = linear_system(P, p)
    if is_prime(n):
        return n ** (m - rank_mod_p(rows, n))
    return count_solutions_mod(rows, m, n)


def linear_params(X: FiniteBirack) -> TsrParams | None:
    """Recover ``(t, s, r)`` if ``X`` is exactly a ``(t,s,r)``-birack table."""
    n = X.n
    zero, one = index_of(0, n), index_of(1, n)
    s = residue_of(X.b1[one][zero], n)
    t = residue_of(X.b1[zero][one], n)
    r = residue_of(X.b2[one][zero], n)
    try:
        p = TsrParams(n, t, s, r)
    except InvalidBirackError:
        return None
    return p if make_tsr(p) == X else None


def count_labelings(P: Presentation, X: FiniteBirack, budget: int = DEFAULT_BUDGET,
                    method: str = "auto") -> int:
    if method not in ("auto", "backtrack", "linear"):
        raise ValueError(f"unknown counting method {method!r}")
    if method != "backtrack":
        p = linear_params(X)
        if p is not None:
            return count_labelings_linear(P, p)
        if method == "linear":
            raise NonLinearTargetError("target birack is not a (t,s,r)-birack")
    return count_labelings_backtrack(P, X, budget=budget)[0]


# -- invariants ------------------------------------------------------------


def framings(P: Presentation, X: FiniteBirack, oriented: bool) -> Iterator[tuple[tuple[int, ...], Presentation]]:
    """Each framing vector ``w`` in ``(Z_N)^c`` with the presentation framed to it."""
    if not oriented and not is_involutory(X):
        raise NotInvolutoryError(
            "unoriented counting is only defined for involutory biracks")
    N = X.rank
    if N is None:
        raise InvalidBirackError("kink map undefined, so the birack rank is unknown")
    for w in itertools.product(range(N), repeat=P.component_count):
        kinks = [(wk - ck) % N for wk, ck in zip(w, P.writhe)]
        yield w, insert_kinks(P, kinks)


def phi_integral(P: Presentation, X: FiniteBirack, oriented: bool = False,
                 budget: int = DEFAULT_BUDGET, method: str = "auto") -> tuple[int, dict[tuple[int, ...], int]]:
    per = {w: count_labelings(Pw, X, budget, method) for w, Pw in framings(P, X, oriented)}
    return sum(per.values()), per


def _labelings(P, X, oriented, budget):
    for w, Pw in framings(P, X, oriented):
        yield w, count_labelings_backtrack(Pw, X, collect=True, budget=budget)[1]


def phi_image(P: Presentation, X: FiniteBirack, oriented: bool = False,
              budget: int = DEFAULT_BUDGET, closure: bool = True) -> EnhancementPolynomial:
    """``sum u^|Im f|``; with ``closure`` the image is first closed to a subbirack."""
    poly = EnhancementPolynomial(("u",))
    for _, labs in _labelings(P, X, oriented, budget):
        for f in labs:
            im = subbirack_closure(X, f.image()) if closure else f.image()
            poly.add((len(im),))
    return poly


def phi_writhe(P: Presentation, X: FiniteBirack, oriented: bool = False,
               budget: int = DEFAULT_BUDGET, method: str = "auto") -> EnhancementPolynomial:
    _, per = phi_integral(P, X, oriented, budget, method)
    names = tuple(f"q{k + 1}" for k in range(P.component_count))
    return EnhancementPolynomial(names, per)


def phi_column_group(P: Presentation, X: FiniteBirack, oriented: bool = False,
                     budget: int = DEFAULT_BUDGET) -> EnhancementPolynomial:
    poly = EnhancementPolynomial(("u",))
    orders: dict[frozenset[int], int] = {}
    for _, labs in _labelings(P, X, oriented, budget):
        for f in labs:
            im = subbirack_closure(X, f.image())
            if im not in orders:
                orders[im] = column_group(X, im)[0]
            poly.add((orders[im],))
    return poly


def result_json(total: int, per_framing: dict[tuple[int, ...], int],
                polynomial: EnhancementPolynomial | None = None) -> dict:
    return {
        "total": total,
        "per_framing": [{"w": list(w), "count": c} for w, c in sorted(per_framing.items())],
        "polynomial": polynomial.to_json() if polynomial is not None else None,
    }
