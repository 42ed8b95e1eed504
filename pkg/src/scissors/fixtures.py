"""Named triangulations used by the tests, the acceptance suite and the CLI."""

from __future__ import annotations

from functools import lru_cache

from .constructions import mapping_torus, product, simplex_boundary, staircase_torus
from .errors import ContractError
from .triangulation import Triangulation, VertexAutomorphism

# Six-vertex projective plane (half of the icosahedron).
RP2_FACETS = ((0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
              (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5))

# Nine-vertex complex projective plane.  Vertices are the points of F_3^2
# (vertex 3a + b is (a, b)); the 36 facets are four orbits of 5-sets under
# translation, found by searching all 1001 four-orbit unions for a closed
# pseudomanifold with homology Z, 0, Z, 0, Z whose vertex links are 3-spheres.
CP2_FACETS = (
    (0, 1, 2, 3, 4), (0, 1, 2, 3, 5), (0, 1, 2, 4, 5), (0, 1, 3, 4, 6), (0, 1, 3, 5, 7),
    (0, 1, 3, 6, 7), (0, 1, 4, 5, 6), (0, 1, 5, 6, 8), (0, 1, 5, 7, 8), (0, 1, 6, 7, 8),
    (0, 2, 3, 4, 8), (0, 2, 3, 5, 8), (0, 2, 4, 5, 6), (0, 2, 4, 6, 7), (0, 2, 4, 7, 8),
    (0, 2, 5, 6, 8), (0, 2, 6, 7, 8), (0, 3, 4, 6, 7), (0, 3, 4, 7, 8), (0, 3, 5, 7, 8),
    (1, 2, 3, 4, 8), (1, 2, 3, 5, 7), (1, 2, 3, 6, 7), (1, 2, 3, 6, 8), (1, 2, 4, 5, 7),
    (1, 2, 4, 7, 8), (1, 2, 6, 7, 8), (1, 3, 4, 6, 8), (1, 4, 5, 6, 8), (1, 4, 5, 7, 8),
    (2, 3, 5, 6, 7), (2, 3, 5, 6, 8), (2, 4, 5, 6, 7), (3, 4, 5, 6, 7), (3, 4, 5, 6, 8),
    (3, 4, 5, 7, 8),
)


def _oriented(t: Triangulation) -> Triangulation:
    signs = t.find_orientation()
    return t if signs is None else t.with_orientation(signs)


def rp2() -> Triangulation:
    return Triangulation(2, 6, RP2_FACETS)


def cp2() -> Triangulation:
    return _oriented(Triangulation(4, 9, CP2_FACETS))


def cp2_translation(a: int, b: int) -> VertexAutomorphism:
    """Translation by ``(a, b)`` of F_3^2, a symmetry of :func:`cp2`."""
    return VertexAutomorphism(tuple(3 * ((v // 3 + a) % 3) + (v % 3 + b) % 3 for v in range(9)))


_BUILDERS = {
    "s1": lambda: simplex_boundary(2),
    "s2": lambda: simplex_boundary(3),
    "s3": lambda: simplex_boundary(4),
    "s4": lambda: simplex_boundary(5),
    "s5": lambda: simplex_boundary(6),
    "t2": lambda: staircase_torus(2, 2),
    "t3": lambda: staircase_torus(3, 2),
    "t4": lambda: staircase_torus(4, 2),
    "t5": lambda: staircase_torus(5, 2),
    "t2p3": lambda: staircase_torus(2, 3),
    "t3p3": lambda: staircase_torus(3, 3),
    "rp2": rp2,
    "cp2": cp2,
    "s2xs2": lambda: product(simplex_boundary(3), simplex_boundary(3)),
    "s2xs1": lambda: mapping_torus(simplex_boundary(3)),
    "s3xs1": lambda: mapping_torus(simplex_boundary(4)),
    "cp2xs1": lambda: mapping_torus(cp2()),
    "klein": lambda: mapping_torus(simplex_boundary(2), VertexAutomorphism((0, 2, 1))),
}

FIXTURE_NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def fixture(name: str) -> Triangulation:
    """Build (and cache) the named triangulation."""
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ContractError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
