"""Manifold invariants: chi, Kervaire semicharacteristic, automorphism actions.

``k1_class`` is the image of the pair ``(M, phi)`` in ``K_1(Z) = {+-1}``:
the product over all degrees of the determinant of ``phi`` on rational
homology.  For an orientation-reversing ``phi`` on an odd-dimensional
closed orientable manifold it equals ``(-1)^kappa``.
"""

from __future__ import annotations

from .constructions import mapping_torus  # noqa: F401  (part of this module's API)
from .errors import ContractError
from .homology import free_determinant
from .triangulation import (Triangulation, VertexAutomorphism, automorphism_action,  # noqa: F401
                            is_sk_embedding, orientation_degree, validate)


def euler_characteristic(t: Triangulation) -> int:
    """Alternating count of faces."""
    return t.euler_characteristic()


def kervaire_semicharacteristic(t: Triangulation) -> int:
    """Sum of the even-degree Betti numbers below the middle, mod 2 (odd ``d`` only)."""
    if t.dim % 2 == 0:
        raise ContractError("kappa defined for odd dimensions only")
    if not t.is_closed():
        raise ContractError("kappa needs a closed triangulation")
    b = t.betti()
    return sum(b[i] for i in range(0, t.dim, 2)) % 2


def k1_class(t: Triangulation, phi: VertexAutomorphism) -> int:
    """Product of the determinants of ``phi_*`` on ``H_i / torsion`` over all ``i``."""
    h = automorphism_action(t, phi)
    out = 1
    for i in range(t.dim + 1):
        out *= free_determinant(h, i)
    return out


def check_duality_identity(t: Triangulation, phi: VertexAutomorphism, i: int) -> bool:
    """``det(phi_i) det(phi_{d-i}) == det(phi_d) ** b_i`` on the computed action."""
    if not 0 <= i <= t.dim:
        raise ContractError(f"degree {i} outside 0..{t.dim}")
    if not t.is_orientable():
        raise ContractError("duality identity needs an orientable triangulation")
    h = automorphism_action(t, phi)
    d = t.dim
    lhs = free_determinant(h, i) * free_determinant(h, d - i)
    return lhs == free_determinant(h, d) ** t.betti()[i]
