import itertools

import pytest

from scissors.constructions import simplex_boundary
from scissors.cutpaste import (Bordism, InvariantTuple, boundary_labels, invariant_tuple, j_group,
                               sk_boundary_class, sk_boundary_split, sk_equivalent, skk_equivalent,
                               skk_group_structure)
from scissors.errors import ContractError
from scissors.fixtures import fixture
from scissors.homology import FgAbGroup
from scissors.triangulation import Triangulation


def test_tuple_report():
    assert invariant_tuple(fixture("s3")).report() == "{dim:3, chi:0, kappa:1, bordism:trivial}"
    assert invariant_tuple(fixture("s2")).report() == "{dim:2, chi:2, bordism:trivial}"
    assert invariant_tuple(fixture("s5"), "0").report(True) == "{dim:5, chi:0, kappa:1, bordism:supplied(0), verdict:true}"


def test_dimension_zero_is_signed_count():
    pts = Triangulation(0, 3, ((0,), (1,), (2,)), (1, 1, -1))
    assert invariant_tuple(pts).bordism == Bordism("computed", 1)


def test_label_required_from_dimension_five():
    with pytest.raises(ContractError):
        invariant_tuple(fixture("s5"))


def test_unorientable_rejected():
    with pytest.raises(ContractError):
        invariant_tuple(fixture("rp2"))


def test_tuple_consistency_checks():
    with pytest.raises(ContractError):
        InvariantTuple(3, 2, 1, Bordism("trivial"))
    with pytest.raises(ContractError):
        InvariantTuple(2, 2, 1, Bordism("trivial"))
    with pytest.raises(ContractError):
        Bordism("guessed")


TUPLES = [InvariantTuple(3, 0, k, Bordism("trivial")) for k in (0, 1)] + \
         [InvariantTuple(4, c, None, Bordism("computed", s)) for c in (0, 2, 3) for s in (-1, 0)]


def test_relations_are_equivalences():
    for rel in (skk_equivalent, sk_equivalent):
        same = [t for t in TUPLES if t.dim == 4]
        for a in same:
            assert rel(a, a)
        for a, b in itertools.product(same, repeat=2):
            assert rel(a, b) == rel(b, a)
        for a, b, c in itertools.product(same, repeat=3):
            if rel(a, b) and rel(b, c):
                assert rel(a, c)


def test_skk_refines_sk():
    for a, b in itertools.combinations(TUPLES, 2):
        if a.dim == b.dim and skk_equivalent(a, b):
            assert sk_equivalent(a, b)
    # kappa separates in SKK but not in SK
    assert not skk_equivalent(TUPLES[0], TUPLES[1])
    assert sk_equivalent(TUPLES[0], TUPLES[1])


def test_dimension_mismatch():
    with pytest.raises(ContractError):
        skk_equivalent(TUPLES[0], TUPLES[2])


def test_high_dimension_needs_convention():
    a = InvariantTuple(5, 0, 1, Bordism("supplied", "0"))
    b = InvariantTuple(5, 0, 0, Bordism("supplied", "0"))
    with pytest.raises(ContractError):
        sk_equivalent(a, b)
    assert sk_equivalent(a, b, {"0": 0})
    assert not skk_equivalent(a, b)
    with pytest.raises(ContractError, match="no class"):
        sk_equivalent(a, InvariantTuple(5, 0, 1, Bordism("supplied", "x")), {"0": 0})


def test_manifold_decisions():
    s5, cp2s1, t5 = (invariant_tuple(fixture(n), "0") for n in ("s5", "cp2xs1", "t5"))
    assert skk_equivalent(s5, cp2s1)
    assert not skk_equivalent(s5, t5)
    assert sk_equivalent(invariant_tuple(fixture("t3")), invariant_tuple(fixture("s3")))
    assert not skk_equivalent(invariant_tuple(fixture("t3")), invariant_tuple(fixture("s3")))


def test_group_structure_table():
    want = {1: FgAbGroup(0, (2,)), 2: FgAbGroup(1), 3: FgAbGroup(), 4: FgAbGroup(2)}
    for d, g in want.items():
        assert skk_group_structure(d).group == g
    assert str(j_group(5)) == "Z/2 generated by [S^5]"
    with pytest.raises(ContractError):
        skk_group_structure(6)
    assert skk_group_structure(5, j_group(4)).group == FgAbGroup(1, (2,))


def test_boundary_classes():
    disk = Triangulation(2, 4, ((0, 1, 2), (0, 2, 3)))
    assert boundary_labels(disk) == [("S^1", ("Z", "Z"))]
    cls = sk_boundary_class(disk)
    assert cls.sk_part == (1, None) and cls.boundary == (("S^1", 1),)
    closed = sk_boundary_class(simplex_boundary(3))
    assert closed.boundary == ()
    assert str(closed).endswith("boundary=1)")


def test_boundary_split_contract():
    tup = invariant_tuple(fixture("s4"))
    with pytest.raises(ContractError, match="not asserted nullbordant"):
        sk_boundary_split(5, InvariantTuple(5, 0, 1, Bordism("supplied", "0")), ["M"])
    with pytest.raises(ContractError, match="two different"):
        sk_boundary_split(4, tup, [("M", ("Z",)), ("M", ("Z", "Z"))], nullbordant={"M"})
    ok = sk_boundary_split(4, tup, ["M", "M", "N"], nullbordant={"M", "N"})
    assert ok.boundary == (("M", 2), ("N", 1))
