"""Integer and modular linear algebra for counting solutions of ``A x = 0 mod n``."""

from __future__ import annotations

from math import gcd, prod
from typing import Sequence

Matrix = list[list[int]]


def rank_mod_p(A: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the field ``Z_p`` (``p`` prime) by Gaussian elimination."""
    M = [[v % p for v in row] for row in A]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if M[r][c]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = pow(M[rank][c], -1, p)
        M[rank] = [v * inv % p for v in M[rank]]
        for r in range(rows):
            if r != rank and M[r][c]:
                f = M[r][c]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def smith_diagonal(A: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    Returns ``min(rows, cols)`` non-negative entries, zeros last.
    """
    M = [list(row) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        # smallest nonzero entry in the remaining block becomes the pivot
        while True:
            entries = [(abs(M[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if M[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            M[t], M[pi] = M[pi], M[t]
            for row in M:
                row[t], row[pj] = row[pj], row[t]
            piv = M[t][t]
            done = True
            for i in range(t + 1, rows):
                q = M[i][t] // piv
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                if M[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = M[t][j] // piv
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if M[i][j] % piv), None)
            if bad is None:
                break
            M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
        diag.append(abs(M[t][t]))
    return diag


def count_solutions_mod(A: Sequence[Sequence[int]], variables: int, n: int) -> int:
    """Number of ``x`` in ``Z_n^variables`` with ``A x = 0 mod n``."""
    if n == 1:
        return 1
    if not A:
        return n ** variables
    d = smith_diagonal(A)
    return n ** (variables - len(d)) * prod(gcd(v, n) for v in d)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n ** 0.5) + 1))
