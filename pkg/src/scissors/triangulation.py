"""Finite triangulations of closed (or bounded) pseudomanifolds.

Two face conventions are supported.  In *set* mode a face is its vertex
set and simplicial chains use the sorted vertex tuple as basis element,
which is the usual simplicial complex.  In *ordered* mode a face is its
ordered vertex tuple (a Delta-complex whose faces inherit the vertex order
of their facets).  Ordered mode is what makes small quotient
triangulations such as the period-2 staircase tori possible: there two
different facets span the same vertex set.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ContractError, ParseError, StructuralError
from .homology import ChainComplex, ChainMap, FgAbGroup, HomologyMap, induced_map


def permutation_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

    def groups(self, items):
        out = defaultdict(list)
        for x in items:
            out[self.find(x)].append(x)
        return sorted(out.values())


@dataclass(frozen=True)
class Triangulation:
    """Facet list of a pure ``dim``-dimensional complex on ``n_vertices`` vertices.

    ``orientation`` holds one sign per facet, relative to the vertex order
    the facet is written in.  ``ordered`` selects the face convention; left
    as ``None`` it is switched on exactly when two facets share a vertex set.
    """

    dim: int
    n_vertices: int
    facets: tuple
    orientation: tuple | None = None
    ordered: bool | None = field(default=None, compare=False)

    def __post_init__(self):
        facets = tuple(tuple(int(v) for v in f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        if self.dim < 0:
            raise StructuralError("negative dimension")
        for i, f in enumerate(facets):
            if len(f) != self.dim + 1:
                raise StructuralError(f"facet {i} {f} has {len(f)} vertices, expected {self.dim + 1}")
            if len(set(f)) != len(f):
                raise StructuralError(f"facet {i} {f} repeats a vertex")
            if any(not 0 <= v < self.n_vertices for v in f):
                raise StructuralError(f"facet {i} {f} uses a vertex outside 0..{self.n_vertices - 1}")
        if self.orientation is not None:
            signs = tuple(int(s) for s in self.orientation)
            if len(signs) != len(facets) or any(s not in (1, -1) for s in signs):
                raise StructuralError("orientation needs one sign +1/-1 per facet")
            object.__setattr__(self, "orientation", signs)
        shared = len({frozenset(f) for f in facets}) != len(facets)
        if self.ordered is None:
            object.__setattr__(self, "ordered", shared)
        if len(set(facets)) != len(facets):
            raise StructuralError("facet listed twice")
        if not self.ordered and shared:
            raise StructuralError("two facets span the same vertex set (use ordered mode)")

    # -- faces and chains -------------------------------------------------

    def key(self, face) -> tuple:
        return tuple(face) if self.ordered else tuple(sorted(face))

    def facet_parity(self, i: int) -> int:
        """Sign relating facet ``i`` as written to its chain basis element."""
        return 1 if self.ordered else permutation_sign(self.facets[i])

    @cached_property
    def _faces(self) -> list[list[tuple]]:
        levels = [set() for _ in range(self.dim + 1)]
        for f in self.facets:
            base = f if self.ordered else tuple(sorted(f))
            for k in range(self.dim + 1):
                levels[k].update(itertools.combinations(base, k + 1))
        return [sorted(s) for s in levels]

    def faces(self, k: int) -> list[tuple]:
        if not 0 <= k <= self.dim:
            return []
        return self._faces[k]

    @cached_property
    def _face_index(self) -> list[dict[tuple, int]]:
        return [{f: i for i, f in enumerate(level)} for level in self._faces]

    def face_index(self, k: int) -> dict[tuple, int]:
        return self._face_index[k]

    def f_vector(self) -> list[int]:
        return [len(level) for level in self._faces]

    @cached_property
    def chain_complex(self) -> ChainComplex:
        bd = {}
        for k in range(1, self.dim + 1):
            idx = self._face_index[k - 1]
            bd[k] = [{idx[f[:i] + f[i + 1:]]: (-1) ** i for i in range(k + 1)} for f in self._faces[k]]
        return ChainComplex(self.f_vector(), bd, labels=self._faces, check=False)

    def homology(self) -> list[FgAbGroup]:
        return self.chain_complex.homology()

    def betti(self) -> list[int]:
        return self.chain_complex.betti()

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def fundamental_chain(self) -> dict[int, int]:
        """Top chain ``sum orient_i * [facet_i]`` in the chain basis."""
        if self.orientation is None:
            raise ContractError("triangulation carries no orientation")
        idx = self._face_index[self.dim]
        return {idx[self.key(f)]: s * self.facet_parity(i)
                for i, (f, s) in enumerate(zip(self.facets, self.orientation))}

    # -- adjacency --------------------------------------------------------

    @cached_property
    def ridges(self) -> dict[tuple, list[tuple[int, int]]]:
        """Ridge key -> list of (facet index, incidence sign of the ridge in that facet)."""
        out = defaultdict(list)
        if self.dim == 0:
            return {}
        for i, f in enumerate(self.facets):
            base = self.key(f)
            p = self.facet_parity(i)
            for j in range(self.dim + 1):
                out[base[:j] + base[j + 1:]].append((i, p * (-1) ** j))
        return dict(out)

    def boundary_ridges(self) -> list[tuple]:
        return sorted(r for r, inc in self.ridges.items() if len(inc) == 1)

    def is_closed(self) -> bool:
        return all(len(inc) == 2 for inc in self.ridges.values())

    def strong_components(self) -> list[list[int]]:
        """Facets grouped by adjacency through ridges."""
        uf = _UnionFind(len(self.facets))
        for inc in self.ridges.values():
            for (a, _), (b, _) in zip(inc, inc[1:]):
                uf.union(a, b)
        return uf.groups(range(len(self.facets)))

    def connected_components(self) -> list[list[int]]:
        """Vertices grouped by the edges of the complex."""
        uf = _UnionFind(self.n_vertices)
        for f in self.facets:
            for v in f[1:]:
                uf.union(f[0], v)
        return uf.groups(range(self.n_vertices))

    def find_orientation(self) -> tuple | None:
        """Facet signs making every interior ridge cancel, or ``None`` if none exist."""
        signs = [0] * len(self.facets)
        neighbours = defaultdict(list)
        for inc in self.ridges.values():
            if len(inc) == 2:
                (a, ca), (b, cb) = inc
                neighbours[a].append((b, ca, cb))
                neighbours[b].append((a, cb, ca))
        for start in range(len(self.facets)):
            if signs[start]:
                continue
            signs[start] = 1
            stack = [start]
            while stack:
                a = stack.pop()
                for b, ca, cb in neighbours[a]:
                    want = -signs[a] * ca * cb
                    if signs[b] == 0:
                        signs[b] = want
                        stack.append(b)
                    elif signs[b] != want:
                        return None
        return tuple(signs)

    def orientation_defects(self) -> list[tuple]:
        """Interior ridges on which the stored orientation does not cancel."""
        if self.orientation is None:
            return []
        bad = []
        for r, inc in self.ridges.items():
            if len(inc) == 2:
                (a, ca), (b, cb) = inc
                if self.orientation[a] * ca + self.orientation[b] * cb != 0:
                    bad.append(r)
        return sorted(bad)

    def is_orientable(self) -> bool:
        return self.find_orientation() is not None

    def with_orientation(self, signs=None) -> "Triangulation":
        """Copy carrying ``signs`` (computed when omitted)."""
        if signs is None:
            signs = self.find_orientation()
            if signs is None:
                raise ContractError("triangulation is not orientable")
        return Triangulation(self.dim, self.n_vertices, self.facets, tuple(signs), self.ordered)

    def reversed(self) -> "Triangulation":
        if self.orientation is None:
            raise ContractError("triangulation carries no orientation")
        return self.with_orientation(tuple(-s for s in self.orientation))

    def vertex_link(self, v: int) -> list[tuple]:
        return [tuple(u for u in f if u != v) for f in self.facets if v in f]

    def boundary_components(self) -> list[list[tuple]]:
        """Boundary ridges grouped into connected pieces (shared vertex = connected)."""
        ridges = self.boundary_ridges()
        uf = _UnionFind(len(ridges))
        first_seen = {}
        for i, r in enumerate(ridges):
            for v in r:
                if v in first_seen:
                    uf.union(first_seen[v], i)
                else:
                    first_seen[v] = i
        return [[ridges[i] for i in grp] for grp in uf.groups(range(len(ridges)))]

    def sub(self, facet_indices) -> "Triangulation":
        """Pure subcomplex on the chosen facets (vertex numbering kept)."""
        keep = sorted(set(facet_indices))
        signs = None if self.orientation is None else tuple(self.orientation[i] for i in keep)
        return Triangulation(self.dim, self.n_vertices, tuple(self.facets[i] for i in keep), signs,
                             self.ordered)

    def relabel(self, perm) -> "Triangulation":
        """Rename vertex ``v`` to ``perm[v]`` (facet order and signs kept)."""
        return Triangulation(self.dim, self.n_vertices, tuple(tuple(perm[v] for v in f) for f in self.facets),
                             self.orientation, self.ordered)


# -- validation ---------------------------------------------------------


@dataclass
class ValidationReport:
    valid: bool
    closed: bool
    connected: bool
    orientable: bool
    top_homology: FgAbGroup
    errors: list[str]
    warnings: list[str]
    f_vector: list[int]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))

    def summary(self) -> str:
        lines = [f"valid: {str(self.valid).lower()}",
                 f"closed: {str(self.closed).lower()}",
                 f"connected: {str(self.connected).lower()}",
                 f"orientable: {str(self.orientable).lower()}",
                 f"top homology: {self.top_homology}",
                 f"f-vector: {' '.join(map(str, self.f_vector))}",
                 f"chi: {self.euler_characteristic}"]
        lines += [f"error: {e}" for e in self.errors]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def _sphere_like(link: Triangulation) -> bool:
    groups = link.homology()
    want = [FgAbGroup(1 if k in (0, link.dim) else 0) for k in range(link.dim + 1)]
    if link.dim == 0:
        want = [FgAbGroup(2)]
    return groups == want


def validate(t: Triangulation, allow_boundary: bool = False, check_links: bool = True) -> ValidationReport:
    """Check the pseudomanifold and orientation invariants, with witnesses.

    Vertex links are only checked to have the homology of a sphere, and a
    failure there is a warning rather than an error.
    """
    errors, warnings = [], []
    for r, inc in sorted(t.ridges.items()):
        if len(inc) > 2:
            errors.append(f"face {r} lies in {len(inc)} facets: {[t.facets[i] for i, _ in inc]}")
        elif len(inc) == 1 and not allow_boundary:
            errors.append(f"face {r} lies in only one facet: {t.facets[inc[0][0]]}")
    used = {v for f in t.facets for v in f}
    for v in range(t.n_vertices):
        if v not in used:
            errors.append(f"vertex {v} lies in no facet")
    for r in t.orientation_defects():
        errors.append(f"orientation does not cancel on face {r}")
    closed = t.is_closed()
    branching = any(len(inc) > 2 for inc in t.ridges.values())
    orientable = not branching and t.find_orientation() is not None
    comps = t.connected_components()
    connected = len([c for c in comps if any(v in used for v in c)]) <= 1
    if closed and not errors:
        strong = t.strong_components()
        top = FgAbGroup(len(strong) if orientable else 0)
    else:
        top = t.homology()[t.dim] if t.facets else FgAbGroup()
    if check_links and closed and not errors and t.dim >= 1:
        if t.ordered:
            warnings.append("vertex links not checked in ordered mode")
        else:
            for v in range(t.n_vertices):
                link = Triangulation(t.dim - 1, t.n_vertices, t.vertex_link(v))
                if not _sphere_like(link):
                    warnings.append(f"link of vertex {v} does not have sphere homology")
    return ValidationReport(not errors, closed, connected, orientable, top, errors, warnings, t.f_vector())


# -- automorphisms ------------------------------------------------------


@dataclass(frozen=True)
class VertexAutomorphism:
    """Vertex permutation: vertex ``v`` goes to ``perm[v]``."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(v) for v in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise StructuralError(f"not a permutation of 0..{len(perm) - 1}: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "VertexAutomorphism":
        return cls(tuple(range(n)))

    def __call__(self, v: int) -> int:
        return self.perm[v]

    def __matmul__(self, other: "VertexAutomorphism") -> "VertexAutomorphism":
        """``self @ other`` applies ``other`` first."""
        return VertexAutomorphism(tuple(self.perm[v] for v in other.perm))

    def inverse(self) -> "VertexAutomorphism":
        inv = [0] * len(self.perm)
        for v, w in enumerate(self.perm):
            inv[w] = v
        return VertexAutomorphism(tuple(inv))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm)))


def _check_automorphism(t: Triangulation, phi: VertexAutomorphism) -> None:
    if len(phi.perm) != t.n_vertices:
        raise ContractError(f"permutation has {len(phi.perm)} entries, triangulation has {t.n_vertices} vertices")
    top = t.face_index(t.dim)
    for f in t.facets:
        image = t.key(tuple(phi.perm[v] for v in f))
        if image not in top:
            raise ContractError(f"facet {f} is sent to {image}, which is not a facet")


def is_automorphism(t: Triangulation, phi: VertexAutomorphism) -> bool:
    try:
        _check_automorphism(t, phi)
    except ContractError:
        return False
    return True


def automorphism_chain_map(t: Triangulation, phi: VertexAutomorphism) -> ChainMap:
    """Chain automorphism induced by ``phi`` on the simplicial chains of ``t``."""
    _check_automorphism(t, phi)
    comps = {}
    for k in range(t.dim + 1):
        idx = t.face_index(k)
        cols = []
        for f in t.faces(k):
            image = tuple(phi.perm[v] for v in f)
            if t.ordered:
                cols.append({idx[image]: 1})
            else:
                cols.append({idx[tuple(sorted(image))]: permutation_sign(image)})
        comps[k] = cols
    cx = t.chain_complex
    return ChainMap(cx, cx, comps, check=False)


def automorphism_action(t: Triangulation, phi: VertexAutomorphism) -> HomologyMap:
    """Induced map on integral homology in the canonical bases."""
    return induced_map(automorphism_chain_map(t, phi))


def orientation_degree(t: Triangulation, phi: VertexAutomorphism) -> int:
    """+1 / -1 according as ``phi`` preserves / reverses the fundamental chain.

    Needs a connected oriented ``t``.
    """
    if t.orientation is None:
        t = t.with_orientation()
    if len(t.strong_components()) != 1:
        raise ContractError("orientation degree needs a strongly connected triangulation")
    fc = t.fundamental_chain()
    f = automorphism_chain_map(t, phi)
    image = f.apply(t.dim, fc)
    if image == fc:
        return 1
    if image == {i: -v for i, v in fc.items()}:
        return -1
    raise ContractError("automorphism does not map the fundamental chain to +-itself")


# -- subobjects ---------------------------------------------------------


@dataclass(frozen=True)
class SubcomplexInclusion:
    """A host triangulation (boundary allowed) and a subset of its facets."""

    host: Triangulation
    facet_subset: frozenset

    def __post_init__(self):
        subset = frozenset(int(i) for i in self.facet_subset)
        if any(not 0 <= i < len(self.host.facets) for i in subset):
            raise StructuralError("facet subset refers to a missing facet")
        if not subset:
            raise StructuralError("facet subset is empty")
        object.__setattr__(self, "facet_subset", subset)
        bad = [r for r, inc in self.host.ridges.items() if len(inc) > 2]
        if bad:
            raise StructuralError(f"host face {bad[0]} lies in more than two facets")

    @property
    def subobject(self) -> Triangulation:
        return self.host.sub(self.facet_subset)


def is_sk_embedding(inc: SubcomplexInclusion) -> bool:
    """Each boundary component of the subobject lies wholly in the host boundary or wholly inside."""
    host_boundary = set(inc.host.boundary_ridges())
    for comp in inc.subobject.boundary_components():
        inside = [r in host_boundary for r in comp]
        if any(inside) and not all(inside):
            return False
    return True


# -- file format --------------------------------------------------------


def format_triangulation(t: Triangulation, phi: VertexAutomorphism | None = None) -> str:
    lines = [f"dim {t.dim}", f"vertices {t.n_vertices}"]
    auto = len({frozenset(f) for f in t.facets}) != len(t.facets)
    if t.ordered and not auto:
        lines.append("ordered")
    lines += ["facet " + " ".join(map(str, f)) for f in t.facets]
    if t.orientation is not None:
        lines += [f"orient {s}" for s in t.orientation]
    if phi is not None:
        lines.append("perm " + " ".join(map(str, phi.perm)))
    return "\n".join(lines) + "\n"


def parse_triangulation(text: str) -> tuple[Triangulation, VertexAutomorphism | None]:
    """Read the line format written by :func:`format_triangulation`.

    ``#`` starts a comment.  ``ordered`` forces ordered faces when the facet
    list alone would not switch them on.
    """
    dim = n = None
    facets, signs, perm = [], [], None
    ordered = None

    def ints(words, lineno):
        try:
            return [int(w) for w in words]
        except ValueError:
            raise ParseError(f"expected integers, got {' '.join(words)!r}", lineno) from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        head, rest = words[0], words[1:]
        if head == "dim":
            if dim is not None or len(rest) != 1:
                raise ParseError("bad or repeated 'dim' line", lineno)
            dim = ints(rest, lineno)[0]
        elif head == "vertices":
            if n is not None or len(rest) != 1:
                raise ParseError("bad or repeated 'vertices' line", lineno)
            n = ints(rest, lineno)[0]
        elif head == "facet":
            if dim is None or len(rest) != dim + 1:
                raise ParseError(f"facet needs {'dim+1' if dim is None else dim + 1} vertices", lineno)
            facets.append(tuple(ints(rest, lineno)))
        elif head == "orient":
            if len(rest) != 1 or rest[0] not in ("1", "-1", "+1"):
                raise ParseError("orient takes +1 or -1", lineno)
            signs.append(int(rest[0]))
        elif head == "perm":
            if perm is not None:
                raise ParseError("repeated 'perm' line", lineno)
            perm = tuple(ints(rest, lineno))
        elif head == "ordered":
            ordered = True
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno)
    if dim is None or n is None:
        raise ParseError("missing 'dim' or 'vertices' line")
    if signs and len(signs) != len(facets):
        raise ParseError(f"{len(signs)} orient lines for {len(facets)} facets")
    try:
        t = Triangulation(dim, n, tuple(facets), tuple(signs) if signs else None, ordered)
        phi = VertexAutomorphism(perm) if perm is not None else None
    except StructuralError as exc:
        raise ParseError(str(exc)) from None
    if phi is not None and len(phi.perm) != n:
        raise ParseError(f"perm has {len(phi.perm)} entries for {n} vertices")
    return t, phi
