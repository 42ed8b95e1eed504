"""Cup-product pairing on the middle cohomology of an oriented closed manifold."""

from __future__ import annotations

from .errors import ContractError
from .homology import free_cycle_basis, signature
from .linalg import zeros
from .triangulation import Triangulation


def middle_cocycles(t: Triangulation) -> list[dict[int, int]]:
    """Integral cocycles whose classes span ``H^k / torsion`` for ``d = 2k``."""
    k = t.dim // 2
    return free_cycle_basis(t.chain_complex.dual(), t.dim - k)


def intersection_form(t: Triangulation):
    """Matrix of ``(a, b) -> <a u b, [M]>`` on ``H^k / torsion`` (object array).

    The cup product is evaluated by the front/back face formula on each
    facet in its chain-basis vertex order.
    """
    if t.dim % 2:
        raise ContractError("intersection form needs even dimension")
    if t.orientation is None:
        t = t.with_orientation()
    if not t.is_closed():
        raise ContractError("intersection form needs a closed triangulation")
    k = t.dim // 2
    basis = middle_cocycles(t)
    idx = t.face_index(k)
    front, back = [], []
    for f in t.faces(t.dim):
        front.append(idx[f[:k + 1]])
        back.append(idx[f[k:]])
    fc = t.fundamental_chain()
    n = len(basis)
    q = zeros(n, n)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            q[i, j] = sum(c * a.get(front[s], 0) * b.get(back[s], 0) for s, c in fc.items())
    return q


def manifold_signature(t: Triangulation) -> int:
    """Signature of the intersection form of an oriented closed ``4k``-manifold."""
    if t.dim % 4:
        raise ContractError(f"signature needs dimension divisible by 4, got {t.dim}")
    q = intersection_form(t)
    if q.shape[0] == 0:
        return 0
    return signature(q)
