import pytest

from symcomm.errors import ArgumentError, ClassificationError, UnsupportedFamilyError
from symcomm.pairs import Family, build_pair, grid_families, symmetric_rank
from symcomm.satake import (BLACK, WHITE, SatakeDiagram, SubDiagram, cartan_coordinates,
                            classify_subdiagram, dim_c_a, enumerate_subdiagrams, is_maximal_proper,
                            levi_rank, satake_diagram, subdiagram_element)
from symcomm.structure import p_levi

GRID = [f for f in grid_families() if not (f.tag == "BDI" and sum(f.params) < 3)]


def test_diagram_examples():
    d = satake_diagram("AI", 4)
    assert d.white == (1, 2, 3) and not d.arrows and d.rank == 3
    d = satake_diagram("AIII", 2, 5)
    assert len(d.white) == 4 and len(d.arrows) == 2 and len(d.black) == 2 and d.rank == 2
    d = satake_diagram("A0", 4)
    assert len(d.nodes) == 6 and not d.black and len(d.arrows) == 3 and d.rank == 3
    assert all(b == a + 3 for a, b in d.arrows)


@pytest.mark.parametrize("fam", GRID, ids=str)
def test_rank_matches_pair(fam):
    d = satake_diagram(fam)
    assert levi_rank(d, d.full()) == d.rank == symmetric_rank(build_pair(fam))
    for a, b in d.arrows:
        assert a < b and d.color(a) == d.color(b) == WHITE


def test_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        satake_diagram("BDI", 1, 1)


def test_arrow_validation():
    with pytest.raises(ArgumentError):
        SatakeDiagram(None, "A2", (WHITE, BLACK), ((1, 2, 1),), ((1, 2),))
    with pytest.raises(ArgumentError):
        SatakeDiagram(None, "A2", (WHITE, WHITE), ((1, 2, 1),), ((2, 1),))


@pytest.mark.parametrize("fam,count", [(("AI", 2), 2), (("AIII", 1, 2), 2), (("AI", 3), 4)])
def test_subdiagram_counts(fam, count):
    assert len(enumerate_subdiagrams(satake_diagram(*fam))) == count


def test_levi_rank_and_dim_c_a_examples():
    d = satake_diagram("AIII", 2, 3)
    assert levi_rank(d, d.minimal()) == 0 and dim_c_a(d, d.minimal()) == 2
    assert levi_rank(d, d.full()) == 2 and dim_c_a(d, d.full()) == 0
    drop = SubDiagram.of(set(d.black) | set(d.units()[1]))
    assert levi_rank(d, drop) == 1 and dim_c_a(d, drop) == 1


def test_invalid_subdiagrams():
    d = satake_diagram("AIII", 2, 3)
    with pytest.raises(ArgumentError):
        levi_rank(d, SubDiagram.of([1]))          # misses the black node
    with pytest.raises(ArgumentError):
        dim_c_a(d, SubDiagram.of([1, 3]))          # breaks an arrow
    with pytest.raises(ArgumentError):
        levi_rank(d, SubDiagram.of([3, 9]))


@pytest.mark.parametrize("fam", GRID, ids=str)
def test_maximality_and_boundaries(fam):
    d = satake_diagram(fam)
    subs = enumerate_subdiagrams(d)
    assert len(set(subs)) == len(subs) == 2 ** len(d.units())
    assert dim_c_a(d, d.minimal()) == d.rank and levi_rank(d, d.minimal()) == 0
    for s in subs:
        proper = s != d.full()
        assert (proper and is_maximal_proper(d, s)) == (dim_c_a(d, s) == 1)
        comps = classify_subdiagram(d, s)
        assert sum(c.family.closed_form_rank() for c in comps if not c.compact) == levi_rank(d, s)


def _norm(f):
    # (p, q) and (q, p) give the same pair
    return Family(f.tag, tuple(sorted(f.params)))


def test_full_diagram_classifies_as_itself():
    for fam in GRID:
        d = satake_diagram(fam)
        comps = classify_subdiagram(d, d.full())
        if len(comps) == 1:
            assert _norm(fam) in {_norm(f) for f in (comps[0].family, *comps[0].aliases)}
        else:
            # so_4 splits into two sl_2 factors
            assert fam in (Family.of("BDI", 2, 2), Family.of("DIII", 2)), fam


def test_classification_examples():
    d = satake_diagram("AIII", 2, 5)
    inner = SubDiagram.of({2, 3, 4, 5})
    (c,) = classify_subdiagram(d, inner)
    assert c.family == Family.of("AIII", 1, 4)
    comps = classify_subdiagram(d, d.minimal())
    assert [c.compact for c in comps] == [True]
    d5 = satake_diagram("AI", 5)
    comps = classify_subdiagram(d5, SubDiagram.of({1, 3}))
    assert [c.family for c in comps] == [Family.of("AI", 2)] * 2


def test_unrecognized_component():
    # a lone black node joined to a white one by a double edge is not encoded anywhere
    d = SatakeDiagram(None, "B2", (WHITE, BLACK, WHITE), ((1, 2, 2), (2, 3, 2)), ())
    with pytest.raises(ClassificationError):
        classify_subdiagram(d, d.full())


def test_cartan_coordinates_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        cartan_coordinates(build_pair("DIII", 4))


@pytest.mark.parametrize("fam", [Family.of(t, p, q) for t in ("AIII", "CII")
                                 for p in range(1, 4) for q in range(1, 4)], ids=str)
def test_levi_matches_diagram(fam):
    pair = build_pair(fam)
    d = satake_diagram(fam)
    for s in enumerate_subdiagrams(d):
        L = p_levi(pair, subdiagram_element(pair, d, s, seed=3))
        assert L.c_p_gs.dim == dim_c_a(d, s)
        assert L.pair.rk_sym == levi_rank(d, s)
