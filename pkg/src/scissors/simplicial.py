"""Finite simplicial and semisimplicial sets presented by nondegenerate simplices.

An *element* of a simplicial object is a pair ``(x, word)`` where ``x`` is a
nondegenerate simplex id and ``word`` is a degeneracy word
``s_{i1} s_{i2} ... s_{ik}`` stored as the tuple ``(i1, ..., ik)`` in normal
form ``i1 > i2 > ... > ik``.  Degenerate simplices are never stored; they are
generated on demand.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Hashable, Iterator, Mapping, Sequence

from .errors import ContractError, ParseError, StructuralError
from .homology import ChainComplex

SIMPLICIAL = "simplicial"
SEMISIMPLICIAL = "semisimplicial"

Word = tuple
Element = tuple  # (simplex id, Word)


def normalize_word(word: Sequence[int]) -> Word:
    """Rewrite a degeneracy word with ``s_i s_j = s_{j+1} s_i`` (i <= j) until strictly decreasing."""
    w = list(word)
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a <= b:
                w[k], w[k + 1] = b + 1, a
                changed = True
    return tuple(w)


def format_word(word: Word) -> str:
    return "".join(f"s{i}" for i in word)


_WORD_RE = re.compile(r"s(\d+)")


def parse_word(text: str) -> Word:
    if not re.fullmatch(r"(s\d+)*", text):
        raise ParseError(f"bad degeneracy word {text!r}")
    return tuple(int(m) for m in _WORD_RE.findall(text))


class SimplicialObject:
    """A finite simplicial or semisimplicial set.

    ``simplices`` maps each nondegenerate simplex id to its degree (insertion
    order is kept and used for every enumeration).  ``faces[(x, i)]`` is the
    element ``d_i x``; in the semisimplicial kind every word is empty.
    """

    def __init__(self, kind: str, simplices: Mapping[Hashable, int],
                 faces: Mapping[tuple, Element], check: bool = True):
        if kind not in (SIMPLICIAL, SEMISIMPLICIAL):
            raise StructuralError(f"unknown kind {kind!r}")
        self.kind = kind
        self.simplices = dict(simplices)
        self.faces = {k: (v[0], tuple(v[1])) for k, v in faces.items()}
        if check:
            self.validate()

    # ----------------------------------------------------------------- shape
    @property
    def top_degree(self) -> int:
        return max(self.simplices.values(), default=-1)

    @property
    def dims(self) -> dict[int, list]:
        out: dict[int, list] = {n: [] for n in range(self.top_degree + 1)}
        for x, n in self.simplices.items():
            out[n].append(x)
        return out

    def counts(self) -> list[int]:
        return [len(v) for v in self.dims.values()]

    def degree(self, elem: Element) -> int:
        return self.simplices[elem[0]] + len(elem[1])

    # ------------------------------------------------------------ operators
    def face(self, elem: Element, i: int) -> Element:
        x, word = elem
        n = self.degree(elem)
        if n == 0 or not 0 <= i <= n:
            raise ContractError(f"face d{i} undefined in degree {n}")
        out = []
        for pos, j in enumerate(word):
            if i < j:
                out.append(j - 1)
            elif i == j or i == j + 1:
                return x, normalize_word(out + list(word[pos + 1:]))
            else:
                out.append(j)
                i -= 1
        y, w2 = self.faces[(x, i)]
        return y, normalize_word(out + list(w2))

    def degeneracy(self, elem: Element, j: int) -> Element:
        if self.kind != SIMPLICIAL:
            raise ContractError("semisimplicial objects have no degeneracies")
        n = self.degree(elem)
        if not 0 <= j <= n:
            raise ContractError(f"degeneracy s{j} undefined in degree {n}")
        return elem[0], normalize_word((j,) + tuple(elem[1]))

    def elements(self, n: int) -> Iterator[Element]:
        """Every element of degree ``n`` (degenerate ones too, in the simplicial kind)."""
        for x, m in self.simplices.items():
            if m == n:
                yield x, ()
            elif m < n and self.kind == SIMPLICIAL:
                for combo in itertools.combinations(range(n - 1, -1, -1), n - m):
                    yield x, combo

    # ------------------------------------------------------------ validation
    def validate(self) -> None:
        for x, n in self.simplices.items():
            if not isinstance(n, int) or n < 0:
                raise StructuralError(f"simplex {x!r} has bad degree {n!r}")
        for (x, i), (y, word) in self.faces.items():
            if x not in self.simplices:
                raise StructuralError(f"face of unknown simplex {x!r}")
            if y not in self.simplices:
                raise StructuralError(f"face d{i} of {x!r} targets unknown simplex {y!r}")
            n = self.simplices[x]
            if not 0 <= i <= n or n == 0:
                raise StructuralError(f"face index {i} out of range for {x!r} of degree {n}")
            if self.kind == SEMISIMPLICIAL and word:
                raise StructuralError(f"semisimplicial face d{i} of {x!r} carries degeneracies")
            if tuple(word) != normalize_word(word):
                raise StructuralError(f"face d{i} of {x!r}: word {format_word(word)} not in normal form")
            m = self.simplices[y]
            if m + len(word) != n - 1:
                raise StructuralError(f"face d{i} of {x!r} has degree {m + len(word)}, expected {n - 1}")
            if word and not (word[0] < n - 1 and word[-1] >= 0):
                raise StructuralError(f"face d{i} of {x!r}: word {format_word(word)} out of range")
        for x, n in self.simplices.items():
            for i in range(n + 1 if n > 0 else 0):
                if (x, i) not in self.faces:
                    raise StructuralError(f"missing face d{i} of {x!r}")
        for x, n in self.simplices.items():
            for j in range(1, n + 1 if n >= 2 else 0):
                for i in range(j):
                    lhs = self.face(self.face((x, ()), j), i)
                    rhs = self.face(self.face((x, ()), i), j - 1)
                    if lhs != rhs:
                        raise StructuralError(
                            f"simplicial identity d{i} d{j} = d{j - 1} d{i} fails on {x!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialObject):
            return NotImplemented
        return (self.kind, self.simplices, self.faces) == (other.kind, other.simplices, other.faces)

    def __repr__(self) -> str:
        return f"SimplicialObject({self.kind}, counts={self.counts()})"

    # ------------------------------------------------------------------ text
    def to_text(self) -> str:
        lines = [f"kind {self.kind}"]
        for x, n in self.simplices.items():
            lines.append(f"simplex {n} {x}")
        for x, n in self.simplices.items():
            for i in range(n + 1 if n > 0 else 0):
                y, word = self.faces[(x, i)]
                lines.append(f"face {x} {i} {y}" + (f" {format_word(word)}" if word else ""))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimplicialObject":
        kind = None
        simplices: dict[str, int] = {}
        faces: dict[tuple, Element] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            toks = raw.split("#", 1)[0].split()
            if not toks:
                continue
            try:
                if toks[0] == "kind" and len(toks) == 2:
                    kind = toks[1]
                elif toks[0] == "simplex" and len(toks) == 3:
                    if toks[2] in simplices:
                        raise ParseError(f"duplicate simplex {toks[2]!r}", lineno)
                    simplices[toks[2]] = int(toks[1])
                elif toks[0] == "face" and len(toks) in (4, 5):
                    key = (toks[1], int(toks[2]))
                    if key in faces:
                        raise ParseError(f"duplicate face {key}", lineno)
                    faces[key] = (toks[3], parse_word(toks[4]) if len(toks) == 5 else ())
                else:
                    raise ParseError(f"unrecognized line {raw.strip()!r}", lineno)
            except ValueError:
                raise ParseError(f"bad integer in {raw.strip()!r}", lineno) from None
        if kind is None:
            raise ParseError("missing 'kind' line")
        return cls(kind, simplices, faces)


# --------------------------------------------------------------------- chains
def normalized_chains(x: SimplicialObject) -> ChainComplex:
    """Normalized chains: one generator per nondegenerate simplex, degenerate faces dropped."""
    dims = x.dims
    top = x.top_degree
    index = {n: {s: k for k, s in enumerate(dims[n])} for n in dims}
    bds = {}
    for n in range(1, top + 1):
        cols = []
        for s in dims[n]:
            col: dict[int, int] = {}
            for i in range(n + 1):
                y, word = x.faces[(s, i)]
                if not word:
                    r = index[n - 1][y]
                    col[r] = col.get(r, 0) + (-1) ** i
            cols.append(col)
        bds[n] = cols
    ranks = [len(dims[n]) for n in range(top + 1)] or [0]
    labels = [dims[n] for n in range(top + 1)] if top >= 0 else [[]]
    return ChainComplex(ranks, bds, labels)


# -------------------------------------------------------------- constructors
def free_degeneracies(x: SimplicialObject) -> SimplicialObject:
    """Free simplicial set on a semisimplicial one: same nondegenerate data, formal degeneracies."""
    if x.kind != SEMISIMPLICIAL:
        raise ContractError("free_degeneracies expects a semisimplicial object")
    return SimplicialObject(SIMPLICIAL, x.simplices, x.faces)


def _sd_face(x: SimplicialObject, z: Element, n: int, i: int) -> Element:
    # (sd X)_n = X_{2n+1}; the i-th face deletes vertices n+1+i and n-i
    return x.face(x.face(z, n + 1 + i), n - i)


def _sd_degeneracy(x: SimplicialObject, z: Element, n: int, i: int) -> Element:
    return x.degeneracy(x.degeneracy(z, n + 1 + i), n - i)


def _sd_decompose(x: SimplicialObject, z: Element, n: int) -> tuple[Element, Word]:
    """Write ``z`` in ``(sd X)_n`` as ``s^sd_word(base)`` with ``base`` sd-nondegenerate."""
    if x.kind != SIMPLICIAL:
        return z, ()
    indices = []
    for i in range(n - 1, -1, -1):
        # s^sd_i : (sd X)_{n-1} -> (sd X)_n has left inverse d_{n+i} d_{n-1-i}
        r = x.face(x.face(z, n - 1 - i), n + i)
        if _sd_degeneracy(x, r, n - 1, i) == z:
            indices.append(i)
    base, m = z, n
    for i in indices:
        base = x.face(x.face(base, m - 1 - i), m + i)
        m -= 1
    return base, tuple(indices)


def _element_id(z: Element) -> str:
    x, word = z
    return str(x) if not word else f"{x}@{format_word(word)}"


def edgewise_subdivide(x: SimplicialObject) -> SimplicialObject:
    """Edgewise subdivision: ``(sd X)_n = X_{2n+1}``.

    Faces are ``d_i = d_{n-i} d_{n+1+i}`` and degeneracies
    ``s_i = s_{n-i} s_{n+1+i}``, i.e. ``[n]`` is embedded in ``[2n+1]`` as
    ``[n]^op * [n]`` so that face ``i`` removes the two entries adjacent to the
    middle at distance ``i``.
    """
    simplices: dict[str, int] = {}
    faces: dict[tuple, Element] = {}
    ids: dict[Element, str] = {}
    for n in range(x.top_degree + 1):
        if 2 * n + 1 > x.top_degree and x.kind == SEMISIMPLICIAL:
            break
        for z in x.elements(2 * n + 1):
            if x.kind == SIMPLICIAL and _sd_decompose(x, z, n)[1]:
                continue
            name = _element_id(z)
            ids[z] = name
            simplices[name] = n
            if n == 0:
                continue
            for i in range(n + 1):
                base, word = _sd_decompose(x, _sd_face(x, z, n, i), n - 1)
                faces[(name, i)] = (ids[base], word)
    return SimplicialObject(x.kind, simplices, faces)


# ------------------------------------------------------------------- nerves
@dataclass(frozen=True)
class FiniteCategory:
    """Finite category with composition written diagrammatically: ``compose[(f, g)]`` is f then g."""

    objects: tuple
    morphisms: tuple  # (id, src, dst)
    composition: Mapping[tuple, Hashable]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "morphisms", tuple(tuple(m) for m in self.morphisms))
        object.__setattr__(self, "composition", dict(self.composition))

    @property
    def src(self) -> dict:
        return {m: s for m, s, _ in self.morphisms}

    @property
    def dst(self) -> dict:
        return {m: d for m, _, d in self.morphisms}

    def identities(self) -> dict:
        """Object -> its identity morphism, for objects that have one."""
        src, dst = self.src, self.dst
        out = {}
        for e, s, d in self.morphisms:
            if s != d or s in out:
                continue
            if all(self.composition.get((e, g)) == g for g in src if src[g] == s) and \
                    all(self.composition.get((f, e)) == f for f in dst if dst[f] == s):
                out[s] = e
        return out

    @property
    def is_unital(self) -> bool:
        return len(self.identities()) == len(self.objects)

    def validate(self) -> None:
        obs = set(self.objects)
        if len(obs) != len(self.objects):
            raise StructuralError("duplicate object")
        src, dst = self.src, self.dst
        if len(src) != len(self.morphisms):
            raise StructuralError("duplicate morphism id")
        for m, s, d in self.morphisms:
            if s not in obs or d not in obs:
                raise StructuralError(f"morphism {m!r} has unknown endpoint")
        for (f, g), h in self.composition.items():
            if f not in src or g not in src or h not in src:
                raise StructuralError(f"composition ({f!r}, {g!r}) -> {h!r} names an unknown morphism")
            if dst[f] != src[g]:
                raise StructuralError(f"composition ({f!r}, {g!r}) of non-composable morphisms")
            if src[h] != src[f] or dst[h] != dst[g]:
                raise StructuralError(f"composite ({f!r}, {g!r}) -> {h!r} has wrong endpoints")
        for f in src:
            for g in src:
                if dst[f] == src[g] and (f, g) not in self.composition:
                    raise StructuralError(f"composition missing for composable pair ({f!r}, {g!r})")
        comp = self.composition
        for f in src:
            for g in src:
                if dst[f] != src[g]:
                    continue
                for h in src:
                    if dst[g] == src[h] and comp[(comp[(f, g)], h)] != comp[(f, comp[(g, h)])]:
                        raise StructuralError(f"associativity fails on ({f!r}, {g!r}, {h!r})")


def _string_id(morphs: Sequence) -> str:
    return "<" + ",".join(str(m) for m in morphs) + ">"


def nerve(cat: FiniteCategory, kind: str | None = None) -> SimplicialObject:
    """Nerve of a finite category; the semisimplicial nerve drops identities."""
    cat.validate()
    ids = cat.identities()
    if kind is None:
        kind = SIMPLICIAL if cat.is_unital else SEMISIMPLICIAL
    if kind == SIMPLICIAL and not cat.is_unital:
        raise StructuralError("simplicial nerve needs an identity on every object")
    identity_set = set(ids.values())
    src, dst, comp = cat.src, cat.dst, cat.composition
    arrows = [m for m, _, _ in cat.morphisms if m not in identity_set]
    if kind == SEMISIMPLICIAL:
        for f in arrows:
            for g in arrows:
                if dst[f] == src[g] and comp[(f, g)] in identity_set:
                    raise StructuralError(
                        f"composite ({f!r}, {g!r}) is an identity; no non-unital nerve")

    def reduce(string: tuple) -> Element:
        # identities at position p (1-based) are the degeneracy s_{p-1}
        word = tuple(p for p in range(len(string) - 1, -1, -1) if string[p] in identity_set)
        rest = tuple(m for m in string if m not in identity_set)
        if not rest:
            return str(src[string[0]]), word
        return _string_id(rest), word

    simplices: dict[str, int] = {str(o): 0 for o in cat.objects}
    faces: dict[tuple, Element] = {}
    level = [(a,) for a in arrows]
    n = 1
    while level:
        nxt = []
        for s in level:
            name = _string_id(s)
            simplices[name] = n
            if n == 1:
                faces[(name, 0)] = (str(dst[s[0]]), ())
                faces[(name, 1)] = (str(src[s[0]]), ())
            else:
                for i in range(n + 1):
                    if i == 0:
                        t = s[1:]
                    elif i == n:
                        t = s[:-1]
                    else:
                        t = s[:i - 1] + (comp[(s[i - 1], s[i])],) + s[i + 1:]
                    faces[(name, i)] = reduce(t)
            nxt.extend(s + (g,) for g in arrows if src[g] == dst[s[-1]])
        level = nxt
        n += 1
        if n > 64:
            raise StructuralError("nerve has nondegenerate simplices beyond degree 64 (non-nilpotent arrows)")
    return SimplicialObject(kind, simplices, faces)


# ----------------------------------------------------------------- fixtures
def standard_simplex(n: int, kind: str = SEMISIMPLICIAL) -> SimplicialObject:
    """``Delta^n`` with vertices ``0..n``; simplex ids are vertex strings like ``"012"``."""
    return _from_faces_of(list(itertools.combinations(range(n + 1), n + 1)), kind)


def simplex_boundary(n: int, kind: str = SEMISIMPLICIAL) -> SimplicialObject:
    """``boundary Delta^n`` (an ``(n-1)``-sphere)."""
    return _from_faces_of(list(itertools.combinations(range(n + 1), n)), kind)


def _from_faces_of(top: list[tuple], kind: str) -> SimplicialObject:
    cells = set()
    for f in top:
        for k in range(1, len(f) + 1):
            cells.update(itertools.combinations(f, k))

    def name(c):
        return "v" + "_".join(map(str, c))

    simplices = {name(c): len(c) - 1 for c in sorted(cells, key=lambda c: (len(c), c))}
    faces = {}
    for c in cells:
        if len(c) > 1:
            for i in range(len(c)):
                faces[(name(c), i)] = (name(c[:i] + c[i + 1:]), ())
    return SimplicialObject(kind, simplices, faces)


def point(kind: str = SIMPLICIAL) -> SimplicialObject:
    return SimplicialObject(kind, {"p": 0}, {})


def circle(kind: str = SIMPLICIAL) -> SimplicialObject:
    """One vertex, one edge with both faces on the vertex."""
    return SimplicialObject(kind, {"v": 0, "e": 1}, {("e", 0): ("v", ()), ("e", 1): ("v", ())})


def poset_category(n: int) -> FiniteCategory:
    """The total order ``0 < 1 < ... < n`` as a category."""
    objs = tuple(str(i) for i in range(n + 1))
    morphs = tuple((f"{i}{j}", str(i), str(j)) for i in range(n + 1) for j in range(i, n + 1))
    comp = {(f"{i}{j}", f"{j}{k}"): f"{i}{k}" for i in range(n + 1) for j in range(i, n + 1)
            for k in range(j, n + 1)}
    return FiniteCategory(objs, morphs, comp)
