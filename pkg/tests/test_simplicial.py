import itertools

import pytest
from hypothesis import given, strategies as st

from scissors.errors import ContractError, ParseError, StructuralError
from scissors.homology import FgAbGroup
from scissors.simplicial import (SEMISIMPLICIAL, SIMPLICIAL, FiniteCategory, SimplicialObject, circle,
                                 edgewise_subdivide, format_word, free_degeneracies, nerve, normalize_word,
                                 normalized_chains, parse_word, point, poset_category, simplex_boundary,
                                 standard_simplex)


def groups(x):
    return [str(g) for g in normalized_chains(x).homology()]


@given(st.lists(st.integers(0, 5), max_size=6))
def test_normal_form_is_strictly_decreasing_and_idempotent(word):
    w = normalize_word(word)
    assert all(a > b for a, b in zip(w, w[1:]))
    assert normalize_word(w) == w


def test_normal_form_rule():
    # s_0 s_0 = s_1 s_0
    assert normalize_word((0, 0)) == (1, 0)
    assert normalize_word((0, 2)) == (3, 0)
    assert parse_word(format_word((3, 1))) == (3, 1)


def test_point_and_one_object_nerve():
    cat = FiniteCategory(("*",), (("e", "*", "*"),), {("e", "e"): "e"})
    x = nerve(cat)
    assert x.kind == SIMPLICIAL and x.counts() == [1]
    assert groups(point()) == ["Z"]


def test_nerve_of_poset_is_simplex():
    x = nerve(poset_category(2))
    assert x.counts() == [3, 3, 1]
    assert normalized_chains(x).euler_characteristic() == 1
    assert groups(x) == ["Z", "0", "0"]


def test_nerve_degenerate_faces():
    x = nerve(poset_category(1))
    e = ("<01>", ())
    assert x.degeneracy(e, 0) != x.degeneracy(e, 1)
    assert x.face(x.degeneracy(e, 0), 0) == e


def test_truncated_free_monoid_rejected():
    # one object, identity and a with a*a left undefined
    cat = FiniteCategory(("*",), (("e", "*", "*"), ("a", "*", "*")),
                         {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a"})
    with pytest.raises(StructuralError, match="'a', 'a'"):
        nerve(cat)


def test_non_associative_table_rejected():
    objs = ("*",)
    morphs = (("e", "*", "*"), ("a", "*", "*"), ("b", "*", "*"))
    comp = {(f, g): "e" for f in "eab" for g in "eab"}
    for f in "eab":
        comp[("e", f)] = f
        comp[(f, "e")] = f
    comp[("a", "b")] = "a"
    comp[("b", "a")] = "b"
    comp[("a", "a")] = "a"
    comp[("b", "b")] = "a"
    with pytest.raises(StructuralError, match="associativity"):
        nerve(FiniteCategory(objs, morphs, comp))


def test_free_degeneracies_keeps_cells_and_homology():
    for x in (point(SEMISIMPLICIAL), standard_simplex(2), circle(SEMISIMPLICIAL), simplex_boundary(3)):
        y = free_degeneracies(x)
        assert y.kind == SIMPLICIAL
        assert y.simplices == x.simplices
        assert groups(y) == groups(x)
    assert free_degeneracies(standard_simplex(2)).counts() == [3, 3, 1]
    with pytest.raises(ContractError):
        free_degeneracies(point())


def test_circle_homology_before_and_after():
    assert groups(circle(SEMISIMPLICIAL)) == ["Z", "Z"]
    assert groups(free_degeneracies(circle(SEMISIMPLICIAL))) == ["Z", "Z"]


def test_semisimplicial_subdivision_counterexample():
    sd = edgewise_subdivide(standard_simplex(2))
    assert sd.kind == SEMISIMPLICIAL
    assert sd.counts() == [3]
    assert normalized_chains(sd).homology() == [FgAbGroup(3)]


def test_simplicial_subdivision_of_simplex():
    sd = edgewise_subdivide(free_degeneracies(standard_simplex(2)))
    assert sd.counts() == [6, 9, 4]
    assert groups(sd) == ["Z", "0", "0"]


def test_subdivided_circle():
    assert groups(edgewise_subdivide(circle())) == ["Z", "Z"]


def test_subdivision_is_simplicial_and_valid():
    for x in (free_degeneracies(simplex_boundary(3)), nerve(poset_category(2))):
        sd = edgewise_subdivide(x)
        sd.validate()
        assert groups(sd) == groups(x)


def simplicial_identities_hold(x):
    for n in range(1, x.top_degree + 2):
        for z in x.elements(n):
            for i, j in itertools.combinations(range(n + 1), 2):
                if n >= 2 and x.face(x.face(z, j), i) != x.face(x.face(z, i), j - 1):
                    return False
            if x.kind == SIMPLICIAL:
                for j in range(n + 1):
                    s = x.degeneracy(z, j)
                    if x.face(s, j) != z or x.face(s, j + 1) != z:
                        return False
    return True


def test_identities_on_outputs():
    assert simplicial_identities_hold(edgewise_subdivide(nerve(poset_category(2))))
    assert simplicial_identities_hold(nerve(poset_category(3)))


def test_normalized_chains_boundary_squares_to_zero():
    c = normalized_chains(edgewise_subdivide(nerve(poset_category(3))))
    c.validate()
    assert [c.rank(n) for n in range(c.top + 1)] == edgewise_subdivide(nerve(poset_category(3))).counts()


def test_text_round_trip():
    x = edgewise_subdivide(free_degeneracies(standard_simplex(2)))
    text = x.to_text()
    assert SimplicialObject.from_text(text) == x
    assert SimplicialObject.from_text(text).to_text() == text


@pytest.mark.parametrize("text", ["simplex 0 a\n", "kind simplicial\nsimplex x a\n",
                                  "kind simplicial\nsimplex 0 a\nsimplex 0 a\n", "kind simplicial\nbogus\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        SimplicialObject.from_text(text)


def test_missing_face_is_structural():
    with pytest.raises((StructuralError, ContractError)):
        SimplicialObject(SIMPLICIAL, {"v": 0, "e": 1}, {("e", 0): ("v", ())})


def test_broken_identity_is_structural():
    simplices = {"a": 0, "b": 0, "c": 0, "x": 1, "y": 1, "z": 1, "t": 2}
    faces = {("x", 0): ("b", ()), ("x", 1): ("a", ()), ("y", 0): ("c", ()), ("y", 1): ("b", ()),
             ("z", 0): ("c", ()), ("z", 1): ("a", ()),
             ("t", 0): ("y", ()), ("t", 1): ("z", ()), ("t", 2): ("y", ())}
    with pytest.raises(StructuralError):
        SimplicialObject(SEMISIMPLICIAL, simplices, faces)
