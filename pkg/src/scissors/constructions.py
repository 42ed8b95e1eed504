"""Building triangulations: spheres, staircase tori, products, mapping tori."""

from __future__ import annotations

import itertools

import numpy as np

from .errors import ContractError
from .triangulation import Triangulation, VertexAutomorphism, _check_automorphism


def _oriented(t: Triangulation) -> Triangulation:
    signs = t.find_orientation()
    return t if signs is None else t.with_orientation(signs)


def simplex_boundary(n: int) -> Triangulation:
    """The boundary of the ``n``-simplex, an ``(n-1)``-sphere on ``n+1`` vertices."""
    if n < 1:
        raise ContractError("simplex boundary needs n >= 1")
    facets = [tuple(v for v in range(n + 1) if v != i) for i in range(n + 1)]
    return Triangulation(n - 1, n + 1, tuple(facets), tuple((-1) ** i for i in range(n + 1)))


def _vertex_order(t: Triangulation, f: tuple) -> tuple:
    # order used to triangulate prisms and products over a facet; any order
    # works as long as shared faces get the same one
    return f if t.ordered else tuple(sorted(f))


def _lattice_paths(p: int, q: int):
    for rights in itertools.combinations(range(p + q), p):
        i = j = 0
        path = [(0, 0)]
        for step in range(p + q):
            if step in rights:
                i += 1
            else:
                j += 1
            path.append((i, j))
        yield path


def product(a: Triangulation, b: Triangulation) -> Triangulation:
    """Staircase triangulation of ``a x b``; vertex ``(u, v)`` is ``u * b.n_vertices + v``."""
    facets = []
    for fa in a.facets:
        oa = _vertex_order(a, fa)
        for fb in b.facets:
            ob = _vertex_order(b, fb)
            for path in _lattice_paths(a.dim, b.dim):
                facets.append(tuple(oa[i] * b.n_vertices + ob[j] for i, j in path))
    ordered = True if (a.ordered or b.ordered) else None
    t = Triangulation(a.dim + b.dim, a.n_vertices * b.n_vertices, tuple(facets), None, ordered)
    return _oriented(t)


def _prism(bottom: tuple, top: tuple, lower_first: bool):
    d = len(bottom) - 1
    for k in range(d + 1):
        if lower_first:
            yield bottom[:k + 1] + top[k:]
        else:
            yield top[:k + 1] + bottom[k:]


def mapping_torus(t: Triangulation, phi: VertexAutomorphism | None = None, layers: int = 3,
                  alternate: bool = False) -> Triangulation:
    """Triangulated mapping torus of ``phi`` (identity when omitted).

    ``layers`` copies of ``t`` are joined by staircase prisms and the last
    copy is glued to the first through ``phi``.  With three or more layers
    no prism touches the same layer twice, so the gluing never collapses a
    simplex.  With ``alternate`` (even ``layers`` only) the prism direction
    flips from one layer to the next, which makes the circle reflection
    ``layer l -> -l`` a simplicial automorphism (see :func:`circle_reflection`).
    Vertex ``v`` of layer ``l`` is ``l * n + v``.
    """
    if layers < 3:
        raise ContractError("mapping torus needs at least 3 layers")
    if alternate and layers % 2:
        raise ContractError("alternating prisms need an even number of layers")
    n = t.n_vertices
    if phi is None:
        phi = VertexAutomorphism.identity(n)
    _check_automorphism(t, phi)
    facets = []
    for l in range(layers):
        nxt = (l + 1) % layers
        for f in t.facets:
            o = _vertex_order(t, f)
            low = tuple(l * n + v for v in o)
            high = tuple(nxt * n + (phi.perm[v] if nxt == 0 else v) for v in o)
            facets.extend(_prism(low, high, not alternate or l % 2 == 0))
    ordered = True if t.ordered else None
    out = Triangulation(t.dim + 1, layers * n, tuple(facets), None, ordered)
    return _oriented(out)


def circle_reflection(n: int, layers: int) -> VertexAutomorphism:
    """Vertex map ``(l, v) -> (-l, v)`` on an alternating mapping torus of the identity."""
    return VertexAutomorphism(tuple(((-l) % layers) * n + v for l in range(layers) for v in range(n)))


def layer_rotation(n: int, layers: int, shift: int) -> VertexAutomorphism:
    return VertexAutomorphism(tuple(((l + shift) % layers) * n + v for l in range(layers) for v in range(n)))


def lift_to_layers(phi: VertexAutomorphism, layers: int) -> VertexAutomorphism:
    """Apply ``phi`` in every layer (an automorphism of the mapping torus of the identity)."""
    n = len(phi.perm)
    return VertexAutomorphism(tuple(l * n + phi.perm[v] for l in range(layers) for v in range(n)))


# -- staircase tori ------------------------------------------------------


def _torus_index(x, period):
    return sum(int(c) % period * period ** i for i, c in enumerate(x))


def _torus_point(i, n, period):
    return tuple((i // period ** k) % period for k in range(n))


def staircase_torus(n: int, period: int = 2) -> Triangulation:
    """Freudenthal (staircase) triangulation of the ``n``-torus ``R^n / period Z^n``.

    There are ``period^n * n!`` facets.  Period 2 needs ordered faces;
    period 3 and up is an honest simplicial complex.
    """
    if n < 1 or period < 2:
        raise ContractError("staircase torus needs n >= 1 and period >= 2")
    if n == 1 and period == 2:
        raise ContractError("a 2-vertex circle is degenerate; use period >= 3")
    facets = []
    for base in itertools.product(range(period), repeat=n):
        for sigma in itertools.permutations(range(n)):
            x = list(base)
            verts = [_torus_index(x, period)]
            for c in sigma:
                x[c] += 1
                verts.append(_torus_index(x, period))
            facets.append(tuple(verts))
    t = Triangulation(n, period ** n, tuple(facets), None, True if period == 2 else None)
    return _oriented(t)


def torus_automorphism(n: int, period: int, matrix, shift=None) -> VertexAutomorphism:
    """Vertex map ``x -> A x + shift (mod period)`` on the staircase torus."""
    a = np.array(matrix, dtype=object).reshape(n, n)
    b = [0] * n if shift is None else list(shift)
    perm = []
    for i in range(period ** n):
        x = _torus_point(i, n, period)
        y = [sum(int(a[r, c]) * x[c] for c in range(n)) + b[r] for r in range(n)]
        perm.append(_torus_index(y, period))
    return VertexAutomorphism(tuple(perm))


def staircase_symmetries(n: int):
    """The ``2 (n+1)!`` matrices in GL_n(Z) that preserve the staircase triangulation.

    With ``x_0 = 0`` they are ``x_i -> +-(x_pi(i) - x_pi(0))`` for ``pi`` in S_{n+1}.
    """
    out = []
    for pi in itertools.permutations(range(n + 1)):
        m = [[0] * n for _ in range(n)]
        for i in range(1, n + 1):
            if pi[i]:
                m[i - 1][pi[i] - 1] += 1
            if pi[0]:
                m[i - 1][pi[0] - 1] -= 1
        out.append(m)
        out.append([[-v for v in row] for row in m])
    return out
