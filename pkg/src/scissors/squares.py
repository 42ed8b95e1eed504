"""Finite categories with squares: validation, K_0, grid nerve, string-to-grid.

A squares category has objects, two classes of morphisms (horizontal and
vertical) and a set of distinguished squares::

        A --top--> B
        |          |
      left       right
        v          v
        C -bottom> D

written ``(top, left, right, bottom)``.  Identities are implicit and named
``id:X``; composition tables list only non-identity pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import ContractError, ParseError, ResourceError
from .homology import FgAbGroup
from .simplicial import SIMPLICIAL, SimplicialObject

H, V = "h", "v"


def ident(x: str) -> str:
    return f"id:{x}"


class SquaresCategory:
    """Finite explicit squares category.

    ``hmor`` / ``vmor`` map morphism names to ``(src, dst)``; ``hcomp`` /
    ``vcomp`` map ``(f, g)`` (``f`` first) to the composite name.
    ``unions`` maps an unordered pair of objects to their designated union.
    """

    def __init__(self, objects, initial, hmor=None, vmor=None, hcomp=None, vcomp=None,
                 squares=(), isoclasses=None, unions=None):
        self.objects = tuple(objects)
        self.initial = initial
        self.mor = {H: dict(hmor or {}), V: dict(vmor or {})}
        self.comp = {H: dict(hcomp or {}), V: dict(vcomp or {})}
        self.squares = frozenset(tuple(s) for s in squares)
        if isoclasses is None:
            isoclasses = [(x,) for x in self.objects]
        self.isoclasses = tuple(tuple(c) for c in isoclasses)
        self.unions = {frozenset(key): val for key, val in (unions or {}).items()}

    # -- morphisms --------------------------------------------------------

    def ends(self, kind: str, f: str) -> tuple[str, str]:
        if f.startswith("id:") and f[3:] in self.objects and f not in self.mor[kind]:
            return f[3:], f[3:]
        try:
            return self.mor[kind][f]
        except KeyError:
            raise ContractError(f"unknown {kind}-morphism {f!r}") from None

    def has_morphism(self, kind: str, f: str) -> bool:
        try:
            self.ends(kind, f)
        except ContractError:
            return False
        return True

    def compose(self, kind: str, f: str, g: str) -> str:
        """``f`` then ``g``."""
        if self.ends(kind, f)[1] != self.ends(kind, g)[0]:
            raise ContractError(f"{kind}-morphisms {f} and {g} are not composable")
        if f.startswith("id:") and f not in self.mor[kind]:
            return g
        if g.startswith("id:") and g not in self.mor[kind]:
            return f
        try:
            return self.comp[kind][(f, g)]
        except KeyError:
            raise ContractError(f"no composite recorded for {kind}-morphisms ({f}, {g})") from None

    def morphisms(self, kind: str) -> list[str]:
        return [ident(x) for x in self.objects] + list(self.mor[kind])

    def morphisms_from(self, kind: str, x: str) -> list[str]:
        return [ident(x)] + [f for f, (s, _) in self.mor[kind].items() if s == x]

    def morphisms_between(self, kind: str, x: str, y: str) -> list[str]:
        out = [f for f, e in self.mor[kind].items() if e == (x, y)]
        return ([ident(x)] if x == y else []) + out

    def iso_class(self, x: str) -> int:
        for i, c in enumerate(self.isoclasses):
            if x in c:
                return i
        raise ContractError(f"object {x!r} is in no iso-class")

    def union(self, a: str, b: str) -> str:
        try:
            return self.unions[frozenset((a, b))]
        except KeyError:
            raise ContractError(f"no designated union for {a} and {b}") from None

    def square_corners(self, sq) -> tuple[str, str, str, str]:
        top, left, right, bottom = sq
        a, b = self.ends(H, top)
        a2, c = self.ends(V, left)
        b2, d = self.ends(V, right)
        c2, d2 = self.ends(H, bottom)
        if (a, b, c, d) != (a2, b2, c2, d2):
            raise ContractError(f"square {sq} does not close up")
        return a, b, c, d

    def relabel(self, mapping) -> "SquaresCategory":
        """Rename objects by ``mapping`` (morphism names mentioning ids are kept)."""
        m = lambda x: mapping.get(x, x)  # noqa: E731
        ren_id = lambda f: ident(m(f[3:])) if f.startswith("id:") and f[3:] in self.objects else f  # noqa: E731
        return SquaresCategory(
            [m(x) for x in self.objects], m(self.initial),
            {f: (m(s), m(t)) for f, (s, t) in self.mor[H].items()},
            {f: (m(s), m(t)) for f, (s, t) in self.mor[V].items()},
            self.comp[H], self.comp[V],
            [tuple(ren_id(f) for f in sq) for sq in self.squares],
            [[m(x) for x in c] for c in self.isoclasses],
            {tuple(m(x) for x in k) if len(k) > 1 else (m(next(iter(k))),) * 2: m(v)
             for k, v in self.unions.items()})


# -- squares closure and validation --------------------------------------


def _hpaste(c, s1, s2):
    return (c.compose(H, s1[0], s2[0]), s1[1], s2[2], c.compose(H, s1[3], s2[3]))


def _vpaste(c, s1, s2):
    return (s1[0], c.compose(V, s1[1], s2[1]), c.compose(V, s1[2], s2[2]), s2[3])


def identity_squares(c: SquaresCategory) -> set:
    out = set()
    for f in c.morphisms(H):
        a, b = c.ends(H, f)
        out.add((f, ident(a), ident(b), f))
    for g in c.morphisms(V):
        a, d = c.ends(V, g)
        out.add((ident(a), g, g, ident(d)))
    return out


def close_squares(c: SquaresCategory) -> SquaresCategory:
    """Add the identity-bordered squares and close under pasting."""
    sqs = set(c.squares) | identity_squares(c)
    while True:
        new = set()
        by_left = {}
        by_top = {}
        for s in sqs:
            by_left.setdefault(s[1], []).append(s)
            by_top.setdefault(s[0], []).append(s)
        for s in sqs:
            for t in by_left.get(s[2], ()):
                new.add(_hpaste(c, s, t))
            for t in by_top.get(s[3], ()):
                new.add(_vpaste(c, s, t))
        if new <= sqs:
            break
        sqs |= new
    return SquaresCategory(c.objects, c.initial, c.mor[H], c.mor[V], c.comp[H], c.comp[V], sqs,
                           c.isoclasses, {tuple(k) if len(k) > 1 else tuple(k) * 2: v
                                          for k, v in c.unions.items()})


@dataclass
class SquaresReport:
    valid: bool
    errors: list = field(default_factory=list)

    def summary(self) -> str:
        return "\n".join([f"valid: {str(self.valid).lower()}"] + [f"error: {e}" for e in self.errors])


def validate_squares(c: SquaresCategory) -> SquaresReport:
    """Check every axiom exhaustively; each violation comes with a witness."""
    errs = []
    objs = set(c.objects)
    if len(objs) != len(c.objects):
        errs.append("an object is declared twice")
    if c.initial not in objs:
        errs.append(f"initial object {c.initial!r} is not an object")
    for kind in (H, V):
        for f, (s, t) in c.mor[kind].items():
            if s not in objs or t not in objs:
                errs.append(f"{kind}-morphism {f} has an unknown end")
        if errs:
            continue
        for (f, g), fg in c.comp[kind].items():
            if not (c.has_morphism(kind, f) and c.has_morphism(kind, g) and c.has_morphism(kind, fg)):
                errs.append(f"{kind}-composite ({f}, {g}) = {fg} names an unknown morphism")
            elif c.ends(kind, f)[1] != c.ends(kind, g)[0]:
                errs.append(f"{kind}-composite ({f}, {g}) of non-composable morphisms")
            elif c.ends(kind, fg) != (c.ends(kind, f)[0], c.ends(kind, g)[1]):
                errs.append(f"{kind}-composite ({f}, {g}) = {fg} has the wrong ends")
        if errs:
            continue
        plain = list(c.mor[kind])
        for f, g in itertools.product(plain, plain):
            if c.ends(kind, f)[1] == c.ends(kind, g)[0] and (f, g) not in c.comp[kind]:
                errs.append(f"{kind}-composite of ({f}, {g}) missing")
        if errs:
            continue
        for f, g, h in itertools.product(plain, plain, plain):
            if c.ends(kind, f)[1] == c.ends(kind, g)[0] and c.ends(kind, g)[1] == c.ends(kind, h)[0]:
                if c.compose(kind, c.compose(kind, f, g), h) != c.compose(kind, f, c.compose(kind, g, h)):
                    errs.append(f"{kind}-composition not associative on ({f}, {g}, {h})")
        if c.initial in objs:
            for x in c.objects:
                n = len(c.morphisms_between(kind, c.initial, x))
                if n != 1:
                    errs.append(f"{n} {kind}-morphisms from the initial object to {x}")
    if errs:
        return SquaresReport(False, errs)
    good = []
    for sq in sorted(c.squares):
        try:
            c.square_corners(sq)
            good.append(sq)
        except ContractError as exc:
            errs.append(str(exc))
    for sq in sorted(identity_squares(c) - c.squares):
        errs.append(f"identity-bordered square {sq} is not distinguished")
    sqs = set(good)
    by_left, by_top = {}, {}
    for s in good:
        by_left.setdefault(s[1], []).append(s)
        by_top.setdefault(s[0], []).append(s)
    for s in sorted(good):
        for t in sorted(by_left.get(s[2], ())):
            p = _hpaste(c, s, t)
            if p not in sqs:
                errs.append(f"horizontal pasting of {s} and {t} gives {p}, not distinguished")
        for t in sorted(by_top.get(s[3], ())):
            p = _vpaste(c, s, t)
            if p not in sqs:
                errs.append(f"vertical pasting of {s} and {t} gives {p}, not distinguished")
    seen = [x for cl in c.isoclasses for x in cl]
    if sorted(seen) != sorted(c.objects):
        errs.append("iso-classes do not partition the objects")
    for key, u in c.unions.items():
        if u not in objs or any(x not in objs for x in key):
            errs.append(f"union {sorted(key)} -> {u} names an unknown object")
    if not errs:
        for a, b, d in itertools.product(c.objects, repeat=3):
            try:
                left = c.union(c.union(a, b), d)
                right = c.union(a, c.union(b, d))
            except ContractError:
                continue
            if left != right:
                errs.append(f"union is not associative on ({a}, {b}, {d})")
    return SquaresReport(not errs, errs)


def _require_valid(c: SquaresCategory) -> None:
    rep = validate_squares(c)
    if not rep.valid:
        raise ContractError(f"invalid squares category: {rep.errors[0]}")


# -- K_0 -------------------------------------------------------------------


@dataclass(frozen=True)
class K0Presentation:
    """``K_0`` with named generators and the coordinate map on objects.

    ``basis`` is an integer matrix whose columns express each generator in
    iso-classes; ``coords`` maps iso-class coordinates to generator
    coordinates (torsion generators first, then free ones).
    """

    group: FgAbGroup
    generators: tuple
    class_names: tuple
    basis: np.ndarray
    coords: np.ndarray
    category: SquaresCategory = field(compare=False, repr=False)

    def class_of(self, x: str) -> list[int]:
        i = self.category.iso_class(x)
        out = [int(v) for v in self.coords[:, i]]
        for k, t in enumerate(self.group.torsion):
            out[k] %= t
        return out

    def __str__(self):
        if not self.generators:
            return str(self.group)
        return f"{self.group} generated by {', '.join(self.generators)}"


def _combo_name(col, names) -> str:
    parts = []
    for v, n in zip(col, names):
        v = int(v)
        if v == 0:
            continue
        coef = "" if abs(v) == 1 else str(abs(v))
        sign = "-" if v < 0 else "+"
        parts.append(f"{sign}{coef}{n}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s or "0"


def quotient_presentation(relations: np.ndarray, names):
    """``Z^n / (row span of relations)``: group, basis, coordinate map, generator names.

    Free generators are replaced by plain basis vectors ``e_i`` whenever
    such a choice exists (searched in lexicographic order).
    """
    n = len(names)
    rel = relations if relations.shape[0] else linalg.zeros(0, n)
    r = linalg.smith_decomposition(rel.T)  # u rel^T v = s, so columns of u^{-1} span Z^n
    diag = r.diagonal
    # new coordinates y = u x; relations kill s_i y_i
    tors_idx = [i for i, d in enumerate(diag) if d > 1]
    free_idx = list(range(len(diag), n))
    u, u_inv = r.u, r.u_inv
    tors = [diag[i] for i in tors_idx]
    coords = linalg.zeros(len(tors_idx) + len(free_idx), n)
    basis = linalg.zeros(n, len(tors_idx) + len(free_idx))
    for k, i in enumerate(tors_idx + free_idx):
        coords[k, :] = u[i, :]
        basis[:, k] = u_inv[:, i]
    nt, nf = len(tors_idx), len(free_idx)
    if nf:
        free_coords = coords[nt:, :]
        for cols in itertools.islice(itertools.combinations(range(n), nf), 20000):
            sub = free_coords[:, list(cols)]
            if abs(linalg.determinant(sub)) == 1:
                # change free basis so the chosen classes become the generators
                inv = linalg.inverse_unimodular(sub)
                coords[nt:, :] = linalg.matmul(inv, free_coords)
                for k, ci in enumerate(cols):
                    col = linalg.zeros(n, 1)
                    col[ci, 0] = 1
                    # torsion part of e_ci is irrelevant for a free generator's name
                    basis[:, nt + k] = col[:, 0]
                break
    gens = tuple(_combo_name(basis[:, k], names) for k in range(nt + nf))
    return FgAbGroup(nf, tuple(tors)), gens, basis, coords


def k0_presentation(c: SquaresCategory) -> K0Presentation:
    """Free abelian group on iso-classes modulo ``[empty] = 0`` and ``[A] + [D] = [B] + [C]``."""
    _require_valid(c)
    names = tuple("[" + cl[0] + "]" for cl in c.isoclasses)
    n = len(names)
    rows = []
    e = [0] * n
    e[c.iso_class(c.initial)] = 1
    rows.append(e)
    for sq in sorted(c.squares):
        a, b, cc, d = c.square_corners(sq)
        row = [0] * n
        row[c.iso_class(a)] += 1
        row[c.iso_class(d)] += 1
        row[c.iso_class(b)] -= 1
        row[c.iso_class(cc)] -= 1
        if any(row):
            rows.append(row)
    rel = linalg.as_int_matrix(rows, (len(rows), n))
    group, gens, basis, coords = quotient_presentation(rel, names)
    return K0Presentation(group, gens, names, basis, coords, c)


def coequalizer_pi0(d0, d1, target: FgAbGroup | None = None) -> FgAbGroup:
    """``target / image(d0 - d1)`` for two homomorphisms given as integer matrices.

    Target coordinates list the torsion summands first (in ``target.torsion``
    order) and then the free ones; without ``target`` it is free.
    """
    a, b = linalg.as_int_matrix(d0), linalg.as_int_matrix(d1)
    if a.shape != b.shape:
        raise ContractError(f"face maps have shapes {a.shape} and {b.shape}")
    rows = a.shape[0]
    if target is not None and target.free_rank + len(target.torsion) != rows:
        raise ContractError(f"target has {target.free_rank + len(target.torsion)} generators, maps have {rows} rows")
    cols = [list(a[:, j] - b[:, j]) for j in range(a.shape[1])]
    if target is not None:
        for i, t in enumerate(target.torsion):
            col = [0] * rows
            col[i] = t
            cols.append(col)
    if not cols:
        return FgAbGroup(rows)
    m = linalg.as_int_matrix(cols, (len(cols), rows)).T
    diag = linalg.smith_decomposition(m).diagonal
    return FgAbGroup(rows - len(diag), tuple(d for d in diag if d > 1))


# -- grids ---------------------------------------------------------------


@dataclass(frozen=True)
class GridSimplex:
    """``n x n`` grid of distinguished squares.

    ``objects[r][c]`` for ``0 <= r, c <= n``; ``hmaps[r][c]`` goes from
    ``objects[r][c]`` to ``objects[r][c+1]`` and ``vmaps[r][c]`` from
    ``objects[r][c]`` to ``objects[r+1][c]``.
    """

    objects: tuple
    hmaps: tuple
    vmaps: tuple

    @property
    def n(self) -> int:
        return len(self.objects) - 1

    def square(self, r: int, c: int) -> tuple:
        return (self.hmaps[r][c], self.vmaps[r][c], self.vmaps[r][c + 1], self.hmaps[r + 1][c])

    def ident(self) -> str:
        if self.n == 0:
            return str(self.objects[0][0])
        h = "/".join(",".join(row) for row in self.hmaps)
        v = "/".join(",".join(row) for row in self.vmaps)
        return f"h({h})v({v})"

    def check(self, c: SquaresCategory) -> None:
        n = self.n
        for r in range(n + 1):
            for col in range(n):
                if c.ends(H, self.hmaps[r][col]) != (self.objects[r][col], self.objects[r][col + 1]):
                    raise ContractError(f"horizontal map at ({r}, {col}) has the wrong ends")
        for r in range(n):
            for col in range(n + 1):
                if c.ends(V, self.vmaps[r][col]) != (self.objects[r][col], self.objects[r + 1][col]):
                    raise ContractError(f"vertical map at ({r}, {col}) has the wrong ends")
        for r in range(n):
            for col in range(n):
                if self.square(r, col) not in c.squares:
                    raise ContractError(f"square at ({r}, {col}) is not distinguished: {self.square(r, col)}")


def grid_face(c: SquaresCategory, g: GridSimplex, i: int) -> GridSimplex:
    """Delete row ``i`` and column ``i``, composing the maps across them."""
    n = g.n
    if not 0 <= i <= n or n == 0:
        raise ContractError(f"face {i} of a {n}-simplex")
    keep = [k for k in range(n + 1) if k != i]
    objs = tuple(tuple(g.objects[r][col] for col in keep) for r in keep)

    def merge(kind, seq):
        # seq has n maps between n+1 positions; drop position i
        if i == 0:
            return seq[1:]
        if i == n:
            return seq[:-1]
        return seq[:i - 1] + (c.compose(kind, seq[i - 1], seq[i]),) + seq[i + 1:]

    hm = tuple(merge(H, g.hmaps[r]) for r in keep)
    vcols = [merge(V, tuple(g.vmaps[r][col] for r in range(n))) for col in keep]
    vm = tuple(tuple(vcols[col][r] for col in range(n)) for r in range(n - 1))
    return GridSimplex(objs, hm, vm)


def grid_degeneracy(g: GridSimplex, i: int) -> GridSimplex:
    """Repeat row ``i`` and column ``i``, joined by identities."""
    n = g.n
    if not 0 <= i <= n:
        raise ContractError(f"degeneracy {i} of a {n}-simplex")
    idx = list(range(i + 1)) + list(range(i, n + 1))
    objs = tuple(tuple(g.objects[r][col] for col in idx) for r in idx)

    def widen(row, objrow):
        return tuple(row[:i]) + (ident(objrow[i]),) + tuple(row[i:])

    hm = tuple(widen(g.hmaps[r], g.objects[r]) for r in idx)
    vcols = []
    for col in idx:
        column = tuple(g.vmaps[r][col] for r in range(n))
        vcols.append(column[:i] + (ident(g.objects[i][col]),) + column[i:])
    vm = tuple(tuple(vcols[col][r] for col in range(n + 2)) for r in range(n + 1))
    return GridSimplex(objs, hm, vm)


def enumerate_grids(c: SquaresCategory, n: int, budget: int | None = None) -> list[GridSimplex]:
    """Every ``n``-simplex of the grid nerve, in a deterministic order."""
    if n == 0:
        return [GridSimplex(((x,),), ((),), ()) for x in c.objects]
    by_corner = {}
    for sq in sorted(c.squares):
        by_corner.setdefault((sq[0], sq[1]), []).append(sq)
    out = []

    def h_strings(x, k):
        if k == 0:
            yield ()
            return
        for f in c.morphisms_from(H, x):
            for rest in h_strings(c.ends(H, f)[1], k - 1):
                yield (f,) + rest

    def extend(rows_h, rows_v):
        if budget is not None and len(out) > budget:
            raise ResourceError(f"grid enumeration in degree {n} exceeded the budget of {budget}")
        if len(rows_h) == n + 1:
            objs = tuple(tuple([c.ends(H, row[0])[0]] + [c.ends(H, f)[1] for f in row]) for row in rows_h)
            out.append(GridSimplex(objs, tuple(rows_h), tuple(rows_v)))
            return
        top = rows_h[-1]
        start = c.ends(H, top[0])[0]

        def fill(col, left, vs, bottoms):
            if col == n:
                yield vs, bottoms
                return
            for sq in by_corner.get((top[col], left), ()):
                yield from fill(col + 1, sq[2], vs + (sq[2],), bottoms + (sq[3],))

        for v0 in c.morphisms_from(V, start):
            for vs, bottoms in fill(0, v0, (v0,), ()):
                extend(rows_h + [bottoms], rows_v + [vs])

    for x in c.objects:
        for row in h_strings(x, n):
            extend([row], [])
    return out


def _decompose(c: SquaresCategory, g: GridSimplex):
    """``g = s_word(base)`` with ``base`` nondegenerate (word decreasing)."""
    indices = [i for i in range(g.n - 1, -1, -1) if grid_degeneracy(grid_face(c, g, i), i) == g]
    base = g
    for i in indices:
        base = grid_face(c, base, i)
    return base, tuple(indices)


def grid_nerve(c: SquaresCategory, n_max: int, budget: int | None = 100000) -> SimplicialObject:
    """Grid nerve truncated at degree ``n_max`` as a simplicial object.

    Only nondegenerate grids become simplices; faces are recorded as
    (nondegenerate base, degeneracy word).  ``budget`` caps the number of
    grids enumerated per degree.
    """
    _require_valid(c)
    simplices, faces = {}, {}
    for n in range(n_max + 1):
        for g in enumerate_grids(c, n, budget):
            base, word = _decompose(c, g)
            if word:
                continue
            key = g.ident()
            simplices[key] = n
            for i in range(n + 1 if n else 0):
                fb, fw = _decompose(c, grid_face(c, g, i))
                faces[(key, i)] = (fb.ident(), fw)
    return SimplicialObject(SIMPLICIAL, simplices, faces)


# -- strings and the comparison grid ----------------------------------------


def string_face(c: SquaresCategory, pieces: tuple, k: int) -> tuple:
    """Nerve face ``d_k`` on a string of pieces composed by union."""
    m = len(pieces)
    if not 0 <= k <= m:
        raise ContractError(f"face {k} of a string of length {m}")
    if k == 0:
        return pieces[1:]
    if k == m:
        return pieces[:-1]
    return pieces[:k - 1] + (c.union(pieces[k - 1], pieces[k]),) + pieces[k + 1:]


def sd_string_face(c: SquaresCategory, pieces: tuple, i: int) -> tuple:
    """Face ``i`` of the edgewise subdivision on a ``(2m+1)``-string: ``d_{m-i} d_{m+1+i}``."""
    if len(pieces) % 2 == 0:
        raise ContractError("strings must have odd length 2m+1")
    m = len(pieces) // 2
    return string_face(c, string_face(c, pieces, m + 1 + i), m - i)


def _unique(c, kind, x, y):
    found = c.morphisms_between(kind, x, y)
    if len(found) != 1:
        raise ContractError(f"{len(found)} {kind}-morphisms {x} -> {y}; need exactly one designated map")
    return found[0]


def string_to_grid(c: SquaresCategory, pieces) -> GridSimplex:
    """``m x m`` grid of a string ``W_m ... W_1 W_0 W'_1 ... W'_m``.

    Entry ``(r, c)`` is the union ``W_r ... W_0 ... W'_c``; horizontal maps
    add the next ``W'`` and vertical maps add the next ``W``.
    """
    pieces = tuple(pieces)
    if len(pieces) % 2 == 0:
        raise ContractError("strings must have odd length 2m+1")
    m = len(pieces) // 2
    left = pieces[:m][::-1]   # W_1 .. W_m
    right = pieces[m + 1:]    # W'_1 .. W'_m
    objs = []
    for r in range(m + 1):
        row = []
        for col in range(m + 1):
            x = pieces[m]
            for w in right[:col]:
                x = c.union(x, w)
            for w in left[:r]:
                x = c.union(w, x)
            row.append(x)
        objs.append(tuple(row))
    hm = tuple(tuple(_unique(c, H, objs[r][col], objs[r][col + 1]) for col in range(m)) for r in range(m + 1))
    vm = tuple(tuple(_unique(c, V, objs[r][col], objs[r + 1][col]) for col in range(m + 1)) for r in range(m))
    g = GridSimplex(tuple(objs), hm, vm)
    g.check(c)
    return g


# -- toy categories ------------------------------------------------------


def _subset_name(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def finite_sets_category(size: int = 3) -> SquaresCategory:
    """Subsets of ``{0..size-1}`` with inclusions both ways and pushout squares.

    A square of inclusions ``A -> B, A -> C, B -> D, C -> D`` is distinguished
    when ``B n C = A`` and ``B u C = D``.  Iso-classes are cardinalities and
    the union pairing is union of disjoint subsets.
    """
    subsets = [frozenset(s) for k in range(size + 1) for s in itertools.combinations(range(size), k)]
    names = {s: _subset_name(s) for s in subsets}
    mor = {}
    for a in subsets:
        for b in subsets:
            if a < b:
                mor[f"{names[a]}<{names[b]}"] = (names[a], names[b])
    comp = {}
    for a, b, d in itertools.product(subsets, repeat=3):
        if a < b < d:
            comp[(f"{names[a]}<{names[b]}", f"{names[b]}<{names[d]}")] = f"{names[a]}<{names[d]}"

    def inc(a, b):
        return ident(names[a]) if a == b else f"{names[a]}<{names[b]}"

    squares = []
    for b, cc in itertools.product(subsets, repeat=2):
        a, d = b & cc, b | cc
        squares.append((inc(a, b), inc(a, cc), inc(b, d), inc(cc, d)))
    classes = [[names[s] for s in subsets if len(s) == k] for k in range(size + 1)]
    unions = {(names[a], names[b]): names[a | b] for a in subsets for b in subsets if not a & b}
    return SquaresCategory([names[s] for s in subsets], names[frozenset()], mor, dict(mor), comp, dict(comp),
                           squares, classes, unions)


def two_object_category() -> SquaresCategory:
    """Objects ``0`` (initial) and ``A``; only the squares the axioms force."""
    mor = {"0<A": ("0", "A")}
    return close_squares(SquaresCategory(["0", "A"], "0", mor, dict(mor)))


def doubling_category() -> SquaresCategory:
    """Objects ``0, X, W, Y`` with squares forcing ``[Y] = 2[X]`` and ``[Y] = 2[W]``.

    Its K_0 is Z + Z/2: generated by ``[X]`` and the order-two class ``[X] - [W]``.
    """
    mor = {"0<X": ("0", "X"), "0<W": ("0", "W"), "0<Y": ("0", "Y"), "X<Y": ("X", "Y"), "W<Y": ("W", "Y")}
    comp = {("0<X", "X<Y"): "0<Y", ("0<W", "W<Y"): "0<Y"}
    squares = [("0<X", "0<X", "X<Y", "X<Y"), ("0<W", "0<W", "W<Y", "W<Y")]
    return close_squares(SquaresCategory(["0", "X", "W", "Y"], "0", mor, dict(mor), comp, dict(comp), squares))


def point_category() -> SquaresCategory:
    return close_squares(SquaresCategory(["0"], "0"))


TOY_CATEGORIES = {
    "point": point_category,
    "two": two_object_category,
    "doubling": doubling_category,
    "finsets": finite_sets_category,
}


# -- text format ---------------------------------------------------------


def format_squares(c: SquaresCategory) -> str:
    lines = [f"object {x}" + (" initial" if x == c.initial else "") for x in c.objects]
    for kind, word in ((H, "hmor"), (V, "vmor")):
        lines += [f"{word} {f} {s} {t}" for f, (s, t) in c.mor[kind].items()]
    for kind, word in ((H, "hcomp"), (V, "vcomp")):
        lines += [f"{word} {f} {g} {fg}" for (f, g), fg in c.comp[kind].items()]
    lines += ["square " + " ".join(sq) for sq in sorted(c.squares)]
    lines += ["isoclass " + " ".join(cl) for cl in c.isoclasses]
    for key, u in sorted(c.unions.items(), key=lambda kv: sorted(kv[0])):
        pair = sorted(key) if len(key) > 1 else list(key) * 2
        lines.append(f"union {pair[0]} {pair[1]} {u}")
    return "\n".join(lines) + "\n"


def parse_squares(text: str) -> SquaresCategory:
    objects, initial = [], None
    mor = {H: {}, V: {}}
    comp = {H: {}, V: {}}
    squares, classes, unions = [], [], {}
    arity = {"object": (1, 2), "hmor": (3, 3), "vmor": (3, 3), "hcomp": (3, 3), "vcomp": (3, 3),
             "square": (4, 4), "isoclass": (1, None), "union": (3, 3)}
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        head, rest = words[0], words[1:]
        if head not in arity:
            raise ParseError(f"unknown keyword {head!r}", lineno)
        lo, hi = arity[head]
        if len(rest) < lo or (hi is not None and len(rest) > hi):
            raise ParseError(f"wrong number of fields for {head}", lineno)
        if head == "object":
            if len(rest) == 2:
                if rest[1] != "initial":
                    raise ParseError(f"unexpected {rest[1]!r} after object id", lineno)
                if initial is not None:
                    raise ParseError("two initial objects", lineno)
                initial = rest[0]
            objects.append(rest[0])
        elif head in ("hmor", "vmor"):
            kind = H if head == "hmor" else V
            if rest[0] in mor[kind]:
                raise ParseError(f"{head} {rest[0]} declared twice", lineno)
            mor[kind][rest[0]] = (rest[1], rest[2])
        elif head in ("hcomp", "vcomp"):
            comp[H if head == "hcomp" else V][(rest[0], rest[1])] = rest[2]
        elif head == "square":
            squares.append(tuple(rest))
        elif head == "isoclass":
            classes.append(rest)
        else:
            unions[(rest[0], rest[1])] = rest[2]
    if initial is None:
        raise ParseError("no initial object declared")
    return SquaresCategory(objects, initial, mor[H], mor[V], comp[H], comp[V], squares,
                           classes or None, unions)
