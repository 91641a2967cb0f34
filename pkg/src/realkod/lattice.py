"""Exact integer and rational linear algebra on small dense matrices.

Matrices are plain lists of rows.  Nothing here touches floating point:
integers stay Python ints and rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

Rat = Fraction
IntMatrix = List[List[int]]


def _copy(A: Sequence[Sequence]) -> list:
    return [list(row) for row in A]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def transpose(A: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*A)]


def is_symmetric(A: Sequence[Sequence]) -> bool:
    n = len(A)
    return all(len(row) == n for row in A) and all(
        A[i][j] == A[j][i] for i in range(n) for j in range(i))


def bareiss_minors(A: Sequence[Sequence[int]]) -> List[int]:
    """Leading principal minors of a square integer matrix.

    Fraction-free Bareiss elimination without pivoting: after step k the
    pivot entry equals the (k+1)-th leading minor.  When a pivot vanishes the
    remaining minors are computed directly, since a zero leading minor blocks
    the recurrence but not the later minors.
    """
    n = len(A)
    M = _copy(A)
    minors: List[int] = []
    prev = 1
    for k in range(n):
        pivot = M[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend(determinant([row[:j] for row in A[:j]])
                          for j in range(k + 2, n + 1))
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return minors


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant via Bareiss elimination with row pivoting."""
    n = len(A)
    if n == 0:
        return 1
    M = _copy(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def is_negative_definite(A: Sequence[Sequence[int]]) -> bool:
    """True iff the symmetric matrix ``A`` is negative definite.

    Uses the sign pattern of leading principal minors: the k-th minor must
    have sign (-1)^k.  The empty matrix counts as negative definite.
    """
    if not is_symmetric(A):
        raise ValueError("is_negative_definite expects a symmetric matrix")
    for k, minor in enumerate(bareiss_minors(A), start=1):
        if minor == 0 or (minor > 0) != (k % 2 == 0):
            return False
    return True


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """Solve ``A x = b`` exactly; ``None`` when ``A`` is singular."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_rational expects a square system")
    M = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def rank(A: Sequence[Sequence]) -> int:
    if not A or not A[0]:
        return 0
    M = [[Fraction(v) for v in row] for row in A]
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            if M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


@dataclass(frozen=True)
class SNFResult:
    """Smith form ``U @ A @ V == D`` with unimodular ``U`` and ``V``."""

    factors: List[int]
    diagonal: IntMatrix
    left: IntMatrix
    right: IntMatrix


def smith_normal_form(A: Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form by elementary row and column operations.

    Each stage moves the smallest nonzero entry of the remaining block to the
    pivot, clears its row and column by Euclidean division, and repeats until
    the pivot divides every remaining entry.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = _copy(A)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row[dst] += q * row[src]
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col[dst] += q * col[src]
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n)
                       if D[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    clean &= D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    clean &= D[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
    factors = [D[i][i] for i in range(min(m, n))]
    return SNFResult(factors=factors, diagonal=D, left=U, right=V)
