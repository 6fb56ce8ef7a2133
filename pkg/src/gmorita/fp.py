"""Dense exact linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced mod p.  Reduced row
echelon form is the single kernel; rank, nullspace, solving and inversion
all reduce to it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PrimeField",
    "as_fp",
    "mat_mul",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "solve_unique",
    "inverse",
    "is_invertible",
    "row_space",
    "in_row_space",
    "intersect_row_spaces",
]

_MAX_P = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p; arithmetic is exact mod p."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p <= _MAX_P):
            raise ValueError(f"prime modulus {self.p} out of range [2, 2^31]")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def __str__(self) -> str:
        return f"F_{self.p}"


def as_fp(a, p: int) -> np.ndarray:
    """Copy `a` into an int64 array with entries reduced mod p."""
    return np.asarray(a, dtype=np.int64) % p


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p, falling back to exact object arithmetic if int64 could overflow."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    inner = a.shape[-1] if a.ndim else 1
    if inner * (p - 1) * (p - 1) < 2**62:
        return (a @ b) % p
    return (a.astype(object) @ b.astype(object) % p).astype(np.int64)


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form. Returns (R, pivot column indices)."""
    m = as_fp(a, p).copy()
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        for j in range(rows):
            if j != r and m[j, c]:
                m[j] = (m[j] - m[j, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis of {x : a @ x = 0}, one solution per row."""
    a = as_fp(a, p)
    rows, cols = a.shape
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, c]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b, or None. b may be a vector or a matrix."""
    a = as_fp(a, p)
    b = as_fp(b, p)
    vector = b.ndim == 1
    if vector:
        b = b[:, None]
    aug = np.hstack([a, b])
    r, pivots = rref(aug, p)
    ncols = a.shape[1]
    if any(c >= ncols for c in pivots):
        return None
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = r[i, ncols:]
    return x[:, 0] if vector else x


def solve_unique(a, b, p: int) -> np.ndarray | None:
    """The unique solution of a @ x = b; None if there is no solution or several."""
    a = as_fp(a, p)
    if rank(a, p) < a.shape[1]:
        return None
    return solve(a, b, p)


def inverse(a, p: int) -> np.ndarray:
    a = as_fp(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse expects a square matrix")
    x = solve(a, np.eye(n, dtype=np.int64), p)
    if x is None or rank(a, p) < n:
        raise ZeroDivisionError("matrix is singular mod p")
    return x


def is_invertible(a, p: int) -> bool:
    a = as_fp(a, p)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def row_space(a, p: int) -> np.ndarray:
    """Canonical (echelonized, zero rows dropped) basis of the row space."""
    r, pivots = rref(a, p)
    return r[: len(pivots)]


def in_row_space(v, a, p: int) -> bool:
    """True iff vector v lies in the row space of a."""
    a = as_fp(a, p)
    v = as_fp(v, p)
    return rank(np.vstack([a, v]), p) == rank(a, p)


def intersect_row_spaces(a, b, p: int) -> np.ndarray:
    """Canonical basis of (row space of a) ∩ (row space of b)."""
    a = row_space(a, p)
    b = row_space(b, p)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    # kernel of [a^T | -b^T] gives coefficient pairs with equal combinations
    stacked = np.hstack([a.T, (-b.T) % p])
    ker = nullspace(stacked, p)
    combos = mat_mul(ker[:, : a.shape[0]], a, p)
    return row_space(combos, p)
