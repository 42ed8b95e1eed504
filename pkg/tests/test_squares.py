import itertools

import numpy as np
import pytest

from scissors.errors import ContractError, ParseError, ResourceError
from scissors.homology import FgAbGroup
from scissors.simplicial import normalized_chains
from scissors.squares import (TOY_CATEGORIES, SquaresCategory, close_squares, coequalizer_pi0,
                              doubling_category, enumerate_grids, finite_sets_category, format_squares,
                              grid_degeneracy, grid_face, grid_nerve, k0_presentation, parse_squares,
                              point_category, sd_string_face, string_to_grid, two_object_category,
                              validate_squares)


@pytest.mark.parametrize("name", sorted(TOY_CATEGORIES))
def test_toys_validate_and_round_trip(name):
    c = TOY_CATEGORIES[name]()
    assert validate_squares(c).valid
    d = parse_squares(format_squares(c))
    assert format_squares(d) == format_squares(c)


def test_k0_values():
    assert k0_presentation(point_category()).group == FgAbGroup()
    two = k0_presentation(two_object_category())
    assert two.group == FgAbGroup(1) and two.generators == ("[A]",)
    dbl = k0_presentation(doubling_category())
    assert dbl.group == FgAbGroup(1, (2,))
    assert dbl.class_of("Y") == [0, 2]
    assert dbl.class_of("X")[1] == dbl.class_of("W")[1] == 1
    assert dbl.class_of("X")[0] != dbl.class_of("W")[0]


def test_finite_sets_k0_counts_points():
    for size in (2, 3):
        c = finite_sets_category(size)
        k = k0_presentation(c)
        assert k.group == FgAbGroup(1)
        assert k.generators == ("[{0}]",)
        for x in c.objects:
            n = 0 if x == "{}" else len(x.strip("{}").split(","))
            assert k.class_of(x) == [n]


def test_relabel_invariance():
    c = finite_sets_category(2)
    names = {x: f"obj{i}" for i, x in enumerate(c.objects)}
    d = c.relabel(names)
    assert validate_squares(d).valid
    k, kd = k0_presentation(c), k0_presentation(d)
    assert k.group == kd.group
    for x in c.objects:
        assert k.class_of(x) == kd.class_of(names[x])


def test_missing_identity_square_witness():
    c = two_object_category()
    bare = SquaresCategory(c.objects, c.initial, c.mor["h"], c.mor["v"])
    rep = validate_squares(bare)
    assert not rep.valid
    assert any("identity-bordered square" in e for e in rep.errors)
    assert validate_squares(close_squares(bare)).valid


def test_pasting_witness():
    c = finite_sets_category(3)
    ids = {sq for sq in c.squares if any(f.startswith("id:") for f in sq)}
    found = []
    for sq in sorted(c.squares - ids):
        broken = SquaresCategory(c.objects, c.initial, c.mor["h"], c.mor["v"], c.comp["h"], c.comp["v"],
                                 c.squares - {sq}, c.isoclasses)
        errs = validate_squares(broken).errors
        found += [e for e in errs if "pasting" in e and str(sq) in e]
    assert found


def test_two_initial_maps_witness():
    mor = {"a": ("0", "A"), "b": ("0", "A")}
    rep = validate_squares(close_squares(SquaresCategory(["0", "A"], "0", mor, dict(mor))))
    assert any("2 h-morphisms from the initial object to A" in e for e in rep.errors)
    with pytest.raises(ContractError):
        k0_presentation(SquaresCategory(["0", "A"], "0", mor, dict(mor)))


@pytest.mark.parametrize("text", ["object 0\n", "object 0 initial\nfrob x\n",
                                  "object 0 initial\nhmor f 0\n", "object 0 initial\nobject 1 initial\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_squares(text)


def test_coequalizer_examples():
    assert coequalizer_pi0([[2]], [[0]]) == FgAbGroup(0, (2,))
    assert coequalizer_pi0(np.zeros((2, 1), dtype=object), np.zeros((2, 1), dtype=object)) == FgAbGroup(2)
    assert coequalizer_pi0([[1]], [[0]]) == FgAbGroup()
    assert coequalizer_pi0([[0]], [[0]], FgAbGroup(0, (4,))) == FgAbGroup(0, (4,))
    with pytest.raises(ContractError):
        coequalizer_pi0([[1, 0]], [[1]])


def simplicial_identities(c, grids):
    for g in grids:
        n = g.n
        for i, j in itertools.combinations(range(n + 1), 2):
            if n >= 2:
                assert grid_face(c, grid_face(c, g, j), i) == grid_face(c, grid_face(c, g, i), j - 1)
        for j in range(n + 1):
            s = grid_degeneracy(g, j)
            s.check(c)
            assert grid_face(c, s, j) == g and grid_face(c, s, j + 1) == g
            for i in range(j):
                assert grid_face(c, s, i) == grid_degeneracy(grid_face(c, g, i), j - 1)
            for i in range(j + 2, n + 2):
                assert grid_face(c, s, i) == grid_degeneracy(grid_face(c, g, i - 1), j)


@pytest.mark.parametrize("name", sorted(TOY_CATEGORIES))
def test_grid_simplicial_identities(name):
    c = TOY_CATEGORIES[name]()
    for n in range(3):
        simplicial_identities(c, enumerate_grids(c, n))


def test_grid_nerve_counts_and_homology():
    assert grid_nerve(finite_sets_category(), 2).counts() == [8, 56, 96]
    x = grid_nerve(two_object_category(), 3)
    assert x.counts() == [2, 2]
    assert [str(g) for g in normalized_chains(x).homology()] == ["Z", "Z"]
    assert grid_nerve(point_category(), 3).counts() == [1]


def test_grid_budget():
    with pytest.raises(ResourceError):
        grid_nerve(finite_sets_category(), 3, budget=50)


def test_string_to_grid_m1_picture():
    c = finite_sets_category()
    g = string_to_grid(c, ("{0}", "{1}", "{2}"))
    # W_1 = {0}, W_0 = {1}, W'_1 = {2}: a single pushout square
    assert g.objects == (("{1}", "{1,2}"), ("{0,1}", "{0,1,2}"))
    assert g.square(0, 0) in c.squares


def test_string_faces_commute_small():
    c = finite_sets_category()
    s = ("{0}", "{}", "{1}", "{}", "{2}")
    g = string_to_grid(c, s)
    for i in range(3):
        assert string_to_grid(c, sd_string_face(c, s, i)) == grid_face(c, g, i)
    with pytest.raises(ContractError):
        string_to_grid(c, ("{0}", "{1}"))
