import pytest

from scissors import linalg
from scissors.errors import ContractError, StructuralError
from scissors.homology import (ChainComplex, ChainMap, FgAbGroup, free_cycle_basis, free_determinant,
                               homology, homology_class, induced_map, signature, torsion_cycle_basis)


def rp2_complex():
    # minimal CW structure: one cell per degree, boundary 0 then 2
    return ChainComplex.from_dense([[[0]], [[2]]])


def test_fg_ab_group_canonical_form():
    g = FgAbGroup.from_invariant_factors([1, 2, 0, 6], 5)
    assert g == FgAbGroup(2, (2, 6))
    assert str(g) == "Z^2 + Z/2 + Z/6"
    assert str(FgAbGroup()) == "0"
    assert FgAbGroup().is_trivial
    assert FgAbGroup.direct_sum(1, [2, 3, 1]) == FgAbGroup(1, (6,))
    assert FgAbGroup.direct_sum(0, [2, 4]) == FgAbGroup(0, (2, 4))


def test_fg_ab_group_rejects_bad_torsion():
    with pytest.raises(Exception):
        FgAbGroup(0, (4, 2))


def test_rp2_cellular():
    assert [str(g) for g in homology(rp2_complex())] == ["Z", "Z/2", "0"]


def test_boundary_squared_nonzero_is_structural_error():
    with pytest.raises(StructuralError):
        ChainComplex.from_dense([[[1]], [[1]]])


def test_euler_characteristic_and_betti():
    c = rp2_complex()
    assert c.euler_characteristic() == 1
    assert c.betti() == [1, 0, 0]


def test_dual_complex_gives_cohomology():
    # cohomology of RP^2: Z, 0, Z/2 -> dual re-indexed top-k
    groups = rp2_complex().dual().homology()
    assert [str(g) for g in groups] == ["Z/2", "0", "Z"]


def test_cycle_bases_and_classes():
    c = rp2_complex()
    assert torsion_cycle_basis(c, 1)[0][0] == 2
    assert len(free_cycle_basis(c, 0)) == 1
    assert homology_class(c, 1, {0: 3}) == ([], [1])
    with pytest.raises(ContractError):
        homology_class(ChainComplex.from_dense([[[1]]]), 1, {0: 1})


def torus_cells():
    # CW torus: one vertex, two edges, one face with zero boundary
    return ChainComplex.from_dense([linalg.zeros(1, 2), linalg.zeros(2, 1)])


def test_induced_map_on_torus():
    c = torus_cells()
    swap = ChainMap.from_dense(c, c, [[[1]], [[0, 1], [1, 0]], [[-1]]])
    h = induced_map(swap)
    assert free_determinant(h, 1) == -1
    assert free_determinant(h, 2) == -1
    assert free_determinant(h, 7) == 1
    assert (h @ h).is_identity()
    assert induced_map(ChainMap.identity(c)).is_identity()


def test_non_chain_map_rejected():
    c = torus_cells()
    line = ChainComplex.from_dense([[[-1, 1]]])
    with pytest.raises(StructuralError):
        ChainMap.from_dense(line, line, [[[1, 0], [0, 1]], [[2]]])
    assert c is not None


def test_torsion_block_of_induced_map():
    c = rp2_complex()
    h = induced_map(ChainMap.from_dense(c, c, [[[1]], [[3]], [[3]]]))
    assert h.torsion[1].tolist() == [[1]]


def test_free_determinant_non_square():
    a = ChainComplex.from_dense([linalg.zeros(1, 2)])
    b = ChainComplex.from_dense([linalg.zeros(1, 1)])
    h = induced_map(ChainMap.from_dense(a, b, [[[1]], [[1, 0]]]))
    with pytest.raises(ContractError):
        free_determinant(h, 1)


@pytest.mark.parametrize("form,expected", [
    ([[1]], 1), ([[-1]], -1), ([[0, 1], [1, 0]], 0), ([[2, 1], [1, 2]], 2),
    ([[1, 0, 0], [0, -1, 0], [0, 0, -1]], -1), ([[0, 1, 0], [1, 0, 0], [0, 0, 1]], 1),
])
def test_signature(form, expected):
    assert signature(form) == expected


def test_signature_rejects_degenerate_and_asymmetric():
    with pytest.raises(ContractError):
        signature([[0, 0], [0, 0]])
    with pytest.raises(ContractError):
        signature([[0, 1], [2, 0]])
