"""Dense exact integer matrices (numpy ``object`` arrays of Python ints).

Everything here is exact: entries are arbitrary-precision ``int`` and no
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import ContractError, ParseError


def as_int_matrix(m, shape=None) -> np.ndarray:
    """Copy ``m`` into a 2-d object array of Python ints."""
    if isinstance(m, np.ndarray) and m.ndim == 2:
        out = np.empty(m.shape, dtype=object)
        for idx, v in np.ndenumerate(m):
            out[idx] = int(v)
        return out
    rows = [list(r) for r in m]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    out = np.zeros(shape, dtype=object)
    for i, r in enumerate(rows):
        if len(r) != shape[1]:
            raise ContractError("ragged matrix rows")
        for j, v in enumerate(r):
            out[i, j] = int(v)
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ContractError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return np.dot(a, b)


def is_zero(a: np.ndarray) -> bool:
    return all(v == 0 for v in a.flat)


def to_lists(a: np.ndarray) -> list[list[int]]:
    return [[int(v) for v in row] for row in a]


def determinant(a: np.ndarray) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, m = a.shape
    if n != m:
        raise ContractError(f"determinant of non-square {a.shape} matrix")
    if n == 0:
        return 1
    m_ = [[int(v) for v in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m_[k][k] == 0:
            for i in range(k + 1, n):
                if m_[i][k] != 0:
                    m_[k], m_[i] = m_[i], m_[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m_[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m_[i][j] = (m_[i][j] * pivot - m_[i][k] * m_[k][j]) // prev
        prev = pivot
    return sign * m_[n - 1][n - 1]


class SNF(NamedTuple):
    """Result of :func:`smith_decomposition`: ``u @ m @ v == s``."""

    u: np.ndarray
    u_inv: np.ndarray
    s: np.ndarray
    v: np.ndarray
    v_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.s.shape)
        return [int(self.s[i, i]) for i in range(k) if self.s[i, i] != 0]


def _find_pivot(a: np.ndarray, t: int):
    sub = a[t:, t:]
    if sub.size == 0:
        return None
    best = None
    for i, j in np.argwhere(sub != 0):
        v = abs(sub[i, j])
        if best is None or v < best[0]:
            best = (v, int(i) + t, int(j) + t)
            if v == 1:
                break
    return None if best is None else best[1:]


def smith_decomposition(m) -> SNF:
    """Smith normal form with both transforms and their inverses.

    Pivots are the entry of smallest absolute value in the active block,
    ties going to the lowest (row, col) in row-major order. The diagonal is
    non-negative and satisfies ``d1 | d2 | ...``.
    """
    a = as_int_matrix(m)
    rows, cols = a.shape
    u, u_inv = identity(rows), identity(rows)
    v, v_inv = identity(cols), identity(cols)

    def row_swap(i, j):
        if i != j:
            a[[i, j], :] = a[[j, i], :]
            u[[i, j], :] = u[[j, i], :]
            u_inv[:, [i, j]] = u_inv[:, [j, i]]

    def col_swap(i, j):
        if i != j:
            a[:, [i, j]] = a[:, [j, i]]
            v[:, [i, j]] = v[:, [j, i]]
            v_inv[[i, j], :] = v_inv[[j, i], :]

    def row_addmul(dst, src, q):
        # row_dst += q * row_src
        a[dst, :] = a[dst, :] + q * a[src, :]
        u[dst, :] = u[dst, :] + q * u[src, :]
        u_inv[:, src] = u_inv[:, src] - q * u_inv[:, dst]

    def col_addmul(dst, src, q):
        a[:, dst] = a[:, dst] + q * a[:, src]
        v[:, dst] = v[:, dst] + q * v[:, src]
        v_inv[src, :] = v_inv[src, :] - q * v_inv[dst, :]

    t = 0
    while t < min(rows, cols):
        piv = _find_pivot(a, t)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        p = a[t, t]
        clean = True
        for i in range(t + 1, rows):
            if a[i, t] != 0:
                row_addmul(i, t, -(a[i, t] // p))
                clean = clean and a[i, t] == 0
        for j in range(t + 1, cols):
            if a[t, j] != 0:
                col_addmul(j, t, -(a[t, j] // p))
                clean = clean and a[t, j] == 0
        if not clean:
            continue
        bad = None
        for i, j in np.argwhere(a[t + 1:, t + 1:] % p != 0) if p not in (1, -1) else ():
            bad = int(i) + t + 1
            break
        if bad is not None:
            row_addmul(t, bad, 1)
            continue
        if p < 0:
            a[t, :] = -a[t, :]
            u[t, :] = -u[t, :]
            u_inv[:, t] = -u_inv[:, t]
        t += 1
    return SNF(u, u_inv, a, v, v_inv)


def smith_normal_form(m):
    """Return ``(U, S, V)`` with ``U @ m @ V == S`` and ``U``, ``V`` unimodular."""
    r = smith_decomposition(m)
    return r.u, r.s, r.v


def rational_rank(a: np.ndarray) -> int:
    return len(smith_decomposition(a).diagonal)


def inverse_unimodular(a: np.ndarray) -> np.ndarray:
    r = smith_decomposition(a)
    if r.diagonal != [1] * a.shape[0] or a.shape[0] != a.shape[1]:
        raise ContractError("matrix is not unimodular")
    # u a v = I  =>  a^{-1} = v u
    return matmul(r.v, r.u)


def rational_inverse(a: np.ndarray) -> list[list[Fraction]]:
    n = a.shape[0]
    aug = [[Fraction(int(a[i, j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ContractError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def format_matrix(a) -> str:
    """Matrix exchange format: ``matrix <rows> <cols>`` then row-major ints."""
    a = as_int_matrix(a)
    lines = [f"matrix {a.shape[0]} {a.shape[1]}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in a)
    return "\n".join(lines) + "\n"


def parse_matrices(text: str) -> list[np.ndarray]:
    """Read every matrix block from ``text`` (whitespace separated, ``#`` comments)."""
    tokens: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens.extend((tok, lineno) for tok in line.split("#", 1)[0].split())
    out = []
    pos = 0
    while pos < len(tokens):
        tok, lineno = tokens[pos]
        if tok != "matrix":
            raise ParseError(f"expected 'matrix', got {tok!r}", lineno)
        try:
            rows, cols = int(tokens[pos + 1][0]), int(tokens[pos + 2][0])
        except (IndexError, ValueError):
            raise ParseError("bad matrix header", lineno) from None
        if rows < 0 or cols < 0:
            raise ParseError("negative matrix shape", lineno)
        pos += 3
        body = tokens[pos:pos + rows * cols]
        if len(body) < rows * cols:
            raise ParseError("matrix body truncated", lineno)
        try:
            vals = [int(t) for t, _ in body]
        except ValueError as exc:
            raise ParseError(f"non-integer entry: {exc}", lineno) from None
        m = zeros(rows, cols)
        for k, val in enumerate(vals):
            m[k // cols, k % cols] = val
        out.append(m)
        pos += rows * cols
    return out
