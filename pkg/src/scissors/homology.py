"""Integer chain complexes, their homology, and induced maps.

Boundaries are stored sparsely as one ``{row: coefficient}`` dict per
column.  Homology is computed in two stages:

1. Gaussian elimination of the chain complex along unit pivots.  Each
   elimination of a pair ``(a, b)`` with ``<d b, a> = +-1`` replaces the
   complex by a chain-homotopy-equivalent smaller one; the projection and
   inclusion chain maps are kept as a log so cycles can be moved between
   the original and the reduced complex.
2. Dense Smith normal form on what is left, which fixes a deterministic
   integral basis of every ``H_n`` (free generators and torsion
   generators) together with a coordinate map for cycles.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from . import linalg
from .errors import ContractError, StructuralError

Column = dict  # {row index: nonzero int}


@dataclass(frozen=True)
class FgAbGroup:
    """``Z^free_rank + Z/t1 + Z/t2 + ...`` with ``t1 | t2 | ...`` and every ``ti > 1``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise StructuralError("negative free rank")
        for t in self.torsion:
            if t <= 1:
                raise StructuralError(f"torsion coefficient {t} must exceed 1")
        for s, t in zip(self.torsion, self.torsion[1:]):
            if t % s:
                raise StructuralError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_invariant_factors(cls, factors: Iterable[int], generators: int) -> "FgAbGroup":
        """Cokernel of a presentation with ``generators`` generators and SNF diagonal ``factors``."""
        factors = [abs(int(f)) for f in factors if f != 0]
        return cls(generators - len(factors), tuple(f for f in factors if f != 1))

    @classmethod
    def direct_sum(cls, free_rank: int, orders: Iterable[int]) -> "FgAbGroup":
        """``Z^free_rank + Z/o1 + Z/o2 + ...`` for arbitrary orders, put into canonical form."""
        orders = [int(o) for o in orders if int(o) != 1]
        if any(o <= 0 for o in orders):
            raise StructuralError("cyclic summand orders must be positive")
        if not orders:
            return cls(free_rank)
        m = linalg.zeros(len(orders), len(orders))
        for i, o in enumerate(orders):
            m[i, i] = o
        g = cls.from_invariant_factors(linalg.smith_decomposition(m).diagonal, len(orders))
        return cls(free_rank + g.free_rank, g.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def _sparse_columns_from_dense(m: np.ndarray) -> list[Column]:
    cols = []
    for j in range(m.shape[1]):
        cols.append({i: int(m[i, j]) for i in range(m.shape[0]) if m[i, j] != 0})
    return cols


def _apply(cols: Sequence[Column], vec: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for j, c in vec.items():
        if c:
            for i, v in cols[j].items():
                out[i] += c * v
    return {i: v for i, v in out.items() if v}


class ChainComplex:
    """Chain complex of free abelian groups ``C_0 <- C_1 <- ... <- C_top``.

    ``boundaries[n]`` (``1 <= n <= top``) is a list of ``ranks[n]`` sparse
    columns with rows indexed by ``range(ranks[n - 1])``.  ``labels`` may
    carry one hashable name per basis element (simplices, usually).
    """

    def __init__(self, ranks: Sequence[int], boundaries: Mapping[int, Sequence[Column]],
                 labels: Sequence[Sequence[Hashable]] | None = None, check: bool = True):
        self.ranks = tuple(int(r) for r in ranks)
        self.top = len(self.ranks) - 1
        self._bd = {n: tuple({int(i): int(v) for i, v in col.items() if v} for col in boundaries.get(n, ()))
                    for n in range(1, self.top + 1)}
        for n in range(1, self.top + 1):
            if not self._bd[n] and self.ranks[n]:
                self._bd[n] = tuple({} for _ in range(self.ranks[n]))
        self.labels = tuple(tuple(l) for l in labels) if labels is not None else None
        if check:
            self.validate()

    @classmethod
    def from_dense(cls, matrices: Sequence, ranks: Sequence[int] | None = None) -> "ChainComplex":
        """``matrices[k]`` is the dense boundary ``C_{k+1} -> C_k``."""
        mats = [linalg.as_int_matrix(m) for m in matrices]
        if ranks is None:
            ranks = ([mats[0].shape[0]] + [m.shape[1] for m in mats]) if mats else [0]
        return cls(ranks, {k + 1: _sparse_columns_from_dense(m) for k, m in enumerate(mats)})

    def boundary(self, n: int) -> tuple[Column, ...]:
        if n <= 0 or n > self.top:
            return tuple({} for _ in range(self.rank(n)))
        return self._bd[n]

    def rank(self, n: int) -> int:
        return self.ranks[n] if 0 <= n <= self.top else 0

    def dense_boundary(self, n: int) -> np.ndarray:
        m = linalg.zeros(self.rank(n - 1), self.rank(n))
        for j, col in enumerate(self.boundary(n)):
            for i, v in col.items():
                m[i, j] = v
        return m

    def index(self, n: int) -> dict[Hashable, int]:
        return self._index[n]

    @cached_property
    def _index(self) -> dict[int, dict[Hashable, int]]:
        if self.labels is None:
            raise ContractError("complex carries no basis labels")
        return {n: {lab: i for i, lab in enumerate(self.labels[n])} for n in range(self.top + 1)}

    def validate(self) -> None:
        for n in range(1, self.top + 1):
            cols = self._bd[n]
            if len(cols) != self.ranks[n]:
                raise StructuralError(f"degree {n}: {len(cols)} columns for rank {self.ranks[n]}")
            for col in cols:
                for i in col:
                    if not 0 <= i < self.ranks[n - 1]:
                        raise StructuralError(f"degree {n}: row {i} out of range")
        for n in range(2, self.top + 1):
            lower = self._bd[n - 1]
            for j, col in enumerate(self._bd[n]):
                if _apply(lower, col):
                    raise StructuralError(f"boundary squared is nonzero: d{n - 1} d{n} on generator {j}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * r for n, r in enumerate(self.ranks))

    def dual(self) -> "ChainComplex":
        """The cochain complex, re-indexed as a chain complex: ``C'_k = C^{top-k}``."""
        top = self.top
        ranks = [self.ranks[top - k] for k in range(top + 1)]
        bds = {}
        for k in range(1, top + 1):
            # d'_k : C^{top-k} -> C^{top-k+1} is the transpose of d_{top-k+1}
            src = self._bd[top - k + 1]
            cols: list[dict[int, int]] = [dict() for _ in range(ranks[k])]
            for j, col in enumerate(src):
                for i, v in col.items():
                    cols[i][j] = v
            bds[k] = cols
        labels = None if self.labels is None else [self.labels[top - k] for k in range(top + 1)]
        return ChainComplex(ranks, bds, labels, check=False)

    @cached_property
    def _basis(self) -> "_HomologyBasis":
        return _HomologyBasis(self)

    def homology(self) -> list[FgAbGroup]:
        return [self._basis.groups[n] for n in range(self.top + 1)]

    def betti(self) -> list[int]:
        return [g.free_rank for g in self.homology()]


IntegerChainComplex = ChainComplex


def homology(c: ChainComplex) -> list[FgAbGroup]:
    """``H_n = ker d_n / im d_{n+1}`` for every degree, in canonical form."""
    return c.homology()


class _Reduction:
    """Elimination log for unit pivots; see module docstring."""

    def __init__(self, cx: ChainComplex):
        top = cx.top
        self.top = top
        self.cols = {n: {j: dict(col) for j, col in enumerate(cx.boundary(n))} for n in range(1, top + 1)}
        self.rows: dict[int, dict[int, set]] = {}
        for n, cols in self.cols.items():
            rows: dict[int, set] = defaultdict(set)
            for j, col in cols.items():
                for i in col:
                    rows[i].add(j)
            self.rows[n] = rows
        self.alive = {n: set(range(cx.rank(n))) for n in range(top + 1)}
        # (k, a, b, eps, alpha, beta): a in C_{k-1}, b in C_k, pivot of d_k
        self.log: list[tuple] = []
        for k in range(top, 0, -1):
            self._reduce(k)

    def _reduce(self, k: int) -> None:
        cols, rows = self.cols[k], self.rows[k]
        heap = [(len(col), j) for j, col in cols.items() if col]
        heapq.heapify(heap)
        while heap:
            length, b = heapq.heappop(heap)
            col = cols.get(b)
            if col is None or len(col) != length:
                continue
            best = None
            for a, v in col.items():
                if v in (1, -1):
                    cost = len(rows[a])
                    if best is None or cost < best[0] or (cost == best[0] and a < best[1]):
                        best = (cost, a)
            if best is None:
                continue
            touched = self._eliminate(k, best[1], b)
            for c in touched:
                if c in cols and cols[c]:
                    heapq.heappush(heap, (len(cols[c]), c))

    def _eliminate(self, k: int, a: int, b: int) -> list[int]:
        cols, rows = self.cols[k], self.rows[k]
        colb = cols.pop(b)
        eps = colb.pop(a)
        alpha = colb
        beta = {c: cols[c][a] for c in rows[a] if c != b}
        for r in alpha:
            rows[r].discard(b)
        for c, bc in beta.items():
            colc = cols[c]
            del colc[a]
            q = bc * eps
            for r, av in alpha.items():
                nv = colc.get(r, 0) - q * av
                if nv:
                    if r not in colc:
                        rows[r].add(c)
                    colc[r] = nv
                elif r in colc:
                    del colc[r]
                    rows[r].discard(c)
        del rows[a]
        # drop row b of d_{k+1} and column a of d_{k-1}
        if k + 1 in self.cols:
            up_cols, up_rows = self.cols[k + 1], self.rows[k + 1]
            for c in up_rows.pop(b, ()):
                del up_cols[c][b]
        if k - 1 in self.cols:
            lo_cols, lo_rows = self.cols[k - 1], self.rows[k - 1]
            for r in lo_cols.pop(a, {}):
                lo_rows[r].discard(a)
        self.alive[k - 1].discard(a)
        self.alive[k].discard(b)
        self.log.append((k, a, b, eps, dict(alpha), beta))
        return list(beta)

    def project(self, n: int, vec: Mapping[int, int]) -> dict[int, int]:
        """Chain map from the original complex to the reduced one, degree ``n``."""
        x = {i: v for i, v in vec.items() if v}
        for k, a, b, eps, alpha, _beta in self.log:
            if k - 1 == n:
                xa = x.pop(a, 0)
                if xa:
                    for r, av in alpha.items():
                        nv = x.get(r, 0) - eps * xa * av
                        if nv:
                            x[r] = nv
                        else:
                            x.pop(r, None)
            elif k == n:
                x.pop(b, None)
        return x

    def lift(self, n: int, vec: Mapping[int, int]) -> dict[int, int]:
        """Chain map from the reduced complex back to the original, degree ``n``."""
        y = {i: v for i, v in vec.items() if v}
        for k, _a, b, eps, _alpha, beta in reversed(self.log):
            if k == n:
                s = sum(bc * y.get(c, 0) for c, bc in beta.items())
                if s:
                    y[b] = -eps * s
        return y


class _DegreeBasis:
    """Basis data for one ``H_n`` of the reduced complex."""

    def __init__(self, order, v_inv_tail, p, factors, group):
        self.order = order              # surviving basis indices, sorted
        self.v_inv_tail = v_inv_tail    # rows of V^{-1} giving kernel coordinates
        self.p = p                      # SNF row transform on kernel coordinates
        self.factors = factors          # invariant factors of im d_{n+1} in ker d_n
        self.group = group
        self.generators: list[dict[int, int]] = []

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    def coordinates(self, reduced_cycle: Mapping[int, int]) -> list[int]:
        x = np.array([reduced_cycle.get(i, 0) for i in self.order], dtype=object).reshape(-1, 1)
        k = linalg.matmul(self.v_inv_tail, x)
        return [int(v) for v in linalg.matmul(self.p, k).flat]


class _HomologyBasis:
    def __init__(self, cx: ChainComplex):
        self.cx = cx
        red = self.red = _Reduction(cx)
        top = cx.top
        order = {n: sorted(red.alive[n]) for n in range(top + 1)}

        def dense(n):
            rows, cols = order.get(n - 1, []), order[n]
            m = linalg.zeros(len(rows), len(cols))
            if 1 <= n <= top:
                pos = {r: i for i, r in enumerate(rows)}
                for j, c in enumerate(cols):
                    for r, v in red.cols[n][c].items():
                        m[pos[r], j] = v
            return m

        self.degrees: dict[int, _DegreeBasis] = {}
        self.groups: dict[int, FgAbGroup] = {}
        for n in range(top + 1):
            dn = dense(n)
            snf = linalg.smith_decomposition(dn)
            rk = len(snf.diagonal)
            kernel = snf.v[:, rk:]
            v_inv_tail = snf.v_inv[rk:, :]
            up = dense(n + 1) if n < top else linalg.zeros(len(order[n]), 0)
            x = linalg.matmul(v_inv_tail, up)
            snf2 = linalg.smith_decomposition(x)
            factors = snf2.diagonal
            group = FgAbGroup.from_invariant_factors(factors, kernel.shape[1])
            deg = _DegreeBasis(order[n], v_inv_tail, snf2.u, factors, group)
            gens = linalg.matmul(kernel, snf2.u_inv)
            for j in range(gens.shape[1]):
                vec = {order[n][i]: int(gens[i, j]) for i in range(gens.shape[0]) if gens[i, j] != 0}
                deg.generators.append(red.lift(n, vec))
            self.degrees[n] = deg
            self.groups[n] = group

    def free_generators(self, n: int) -> list[dict[int, int]]:
        deg = self.degrees[n]
        return deg.generators[deg.n_factors:]

    def torsion_generators(self, n: int) -> list[tuple[int, dict[int, int]]]:
        deg = self.degrees[n]
        return [(t, deg.generators[i]) for i, t in enumerate(deg.factors) if t > 1]

    def classify(self, n: int, cycle: Mapping[int, int]) -> tuple[list[int], list[int]]:
        """Free coordinates and torsion coordinates (reduced mod order) of a cycle."""
        deg = self.degrees[n]
        y = deg.coordinates(self.red.project(n, cycle))
        nf = deg.n_factors
        tors = [y[i] % t for i, t in enumerate(deg.factors) if t > 1]
        return y[nf:], tors


def free_cycle_basis(c: ChainComplex, n: int) -> list[dict[int, int]]:
    """Integral cycles whose classes form a basis of ``H_n / torsion``."""
    return c._basis.free_generators(n)


def torsion_cycle_basis(c: ChainComplex, n: int) -> list[tuple[int, dict[int, int]]]:
    return c._basis.torsion_generators(n)


def homology_class(c: ChainComplex, n: int, cycle: Mapping[int, int]) -> tuple[list[int], list[int]]:
    """Coordinates of ``[cycle]`` in the canonical basis: (free part, torsion part)."""
    bd = c.boundary(n)
    if _apply(bd, cycle):
        raise ContractError(f"chain in degree {n} is not a cycle")
    return c._basis.classify(n, cycle)


class ChainMap:
    """Degree-0 chain map given as sparse images of basis elements."""

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 components: Mapping[int, Sequence[Column]], check: bool = True):
        self.source, self.target = source, target
        self.components = {n: tuple(dict(c) for c in components.get(n, [{}] * source.rank(n)))
                           for n in range(source.top + 1)}
        if check:
            self.validate()

    @classmethod
    def identity(cls, c: ChainComplex) -> "ChainMap":
        return cls(c, c, {n: [{i: 1} for i in range(c.rank(n))] for n in range(c.top + 1)}, check=False)

    @classmethod
    def from_dense(cls, source, target, matrices: Sequence) -> "ChainMap":
        return cls(source, target, {n: _sparse_columns_from_dense(linalg.as_int_matrix(m))
                                    for n, m in enumerate(matrices)})

    def validate(self) -> None:
        s, t = self.source, self.target
        for n in range(s.top + 1):
            comp = self.components[n]
            if len(comp) != s.rank(n):
                raise StructuralError(f"chain map degree {n}: wrong number of columns")
            for col in comp:
                if any(not 0 <= i < t.rank(n) for i in col):
                    raise StructuralError(f"chain map degree {n}: image out of range")
        for n in range(1, s.top + 1):
            for j in range(s.rank(n)):
                lhs = _apply(t.boundary(n), self.components[n][j])
                rhs = _apply(self.components[n - 1], s.boundary(n)[j])
                if lhs != rhs:
                    raise StructuralError(f"chain map does not commute with the boundary in degree {n}")

    def apply(self, n: int, vec: Mapping[int, int]) -> dict[int, int]:
        return _apply(self.components[n], vec)

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        """``self @ other`` is ``self`` after ``other``."""
        if other.target is not self.source:
            raise ContractError("chain maps are not composable")
        comps = {n: [self.apply(n, col) for col in other.components[n]] for n in other.components}
        return ChainMap(other.source, self.target, comps, check=False)


@dataclass(frozen=True)
class HomologyMap:
    """Induced map on homology in the canonical bases.

    ``free[n]`` is the integer matrix on ``H_n/tors`` (columns = images of
    source generators); ``torsion[n]`` records the torsion-to-torsion block,
    row ``i`` reduced modulo the ``i``-th target torsion order.
    """

    source_groups: tuple[FgAbGroup, ...]
    target_groups: tuple[FgAbGroup, ...]
    free: tuple[np.ndarray, ...]
    torsion: tuple[np.ndarray, ...]

    def __matmul__(self, other: "HomologyMap") -> "HomologyMap":
        free = tuple(linalg.matmul(a, b) for a, b in zip(self.free, other.free))
        tors = []
        for n, (a, b) in enumerate(zip(self.torsion, other.torsion)):
            m = linalg.matmul(a, b)
            for i, t in enumerate(self.target_groups[n].torsion):
                m[i, :] = m[i, :] % t
            tors.append(m)
        return HomologyMap(other.source_groups, self.target_groups, free, tuple(tors))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomologyMap):
            return NotImplemented
        return (self.source_groups == other.source_groups and self.target_groups == other.target_groups
                and all(a.shape == b.shape and (a == b).all() for a, b in zip(self.free, other.free))
                and all(a.shape == b.shape and (a == b).all() for a, b in zip(self.torsion, other.torsion)))

    def is_identity(self) -> bool:
        mats = self.free + self.torsion
        return all(m.shape[0] == m.shape[1] and (m == linalg.identity(m.shape[0])).all() for m in mats)


def induced_map(f: ChainMap) -> HomologyMap:
    """The map ``f_*`` on homology, in the canonical bases of source and target."""
    src, tgt = f.source._basis, f.target._basis
    free_mats, tors_mats = [], []
    for n in range(f.source.top + 1):
        gens = src.free_generators(n)
        tgens = src.torsion_generators(n)
        if n > f.target.top:
            free_mats.append(linalg.zeros(0, len(gens)))
            tors_mats.append(linalg.zeros(0, len(tgens)))
            continue
        tg = tgt.groups[n]
        fm = linalg.zeros(tg.free_rank, len(gens))
        for j, z in enumerate(gens):
            coords, _ = tgt.classify(n, f.apply(n, z))
            for i, v in enumerate(coords):
                fm[i, j] = v
        tm = linalg.zeros(len(tg.torsion), len(tgens))
        for j, (_order, z) in enumerate(tgens):
            _, coords = tgt.classify(n, f.apply(n, z))
            for i, v in enumerate(coords):
                tm[i, j] = v
        free_mats.append(fm)
        tors_mats.append(tm)
    target_groups = [tgt.groups.get(n, FgAbGroup()) for n in range(f.source.top + 1)]
    return HomologyMap(tuple(f.source.homology()), tuple(target_groups), tuple(free_mats), tuple(tors_mats))


def free_determinant(h: HomologyMap, degree: int) -> int:
    """Exact determinant of the induced map on ``H_degree / torsion``."""
    if not 0 <= degree < len(h.free):
        return 1
    m = h.free[degree]
    if m.shape[0] != m.shape[1]:
        raise ContractError(f"degree {degree}: free part is {m.shape[0]}x{m.shape[1]}, not square")
    return linalg.determinant(m)


def signature(form) -> int:
    """Signature of a nondegenerate symmetric integer form, by rational congruence."""
    a = [[Fraction(int(v)) for v in row] for row in (form.tolist() if isinstance(form, np.ndarray) else form)]
    n = len(a)
    for i in range(n):
        if len(a[i]) != n or any(a[i][j] != a[j][i] for j in range(n)):
            raise ContractError("form is not symmetric")
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                raise ContractError("form is degenerate")
            i, j = pair
            # e_i <- e_i + e_j gives diagonal 2 a_ij
            for r in range(n):
                a[r][i] += a[r][j]
            for c in range(n):
                a[i][c] += a[j][c]
            p = i
        a[k], a[p] = a[p], a[k]
        for row in a:
            row[k], row[p] = row[p], row[k]
        d = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos - neg
