"""Permutations of ``range(n)`` stored as tuples of images."""

from __future__ import annotations

from collections import deque
from math import gcd
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(images: Sequence[int]) -> bool:
    n = len(images)
    return sorted(images) == list(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p∘q``, i.e. apply ``q`` first."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def order(p: Perm) -> int:
    """Exponent of ``p``: lcm of its cycle lengths."""
    m = 1
    for c in cycles(p):
        m = m * len(c) // gcd(m, len(c))
    return m


def is_involution(p: Perm) -> bool:
    return all(p[p[i]] == i for i in range(len(p)))


def group_closure(gens: Iterable[Perm], n: int) -> set[Perm]:
    """All products of ``gens`` (the generated subgroup of S_n), by BFS."""
    gens = list(dict.fromkeys(gens))
    e = identity(n)
    group = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = compose(g, h)
            if gh not in group:
                group.add(gh)
                queue.append(gh)
    return group
