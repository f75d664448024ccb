import pytest

import coxroots as cx


def test_small_roots_of_a2_tilde():
    g = cx.catalog("A", 2)
    assert cx.small_roots(g) == [
        "[0, 0, 1]", "[0, 1, 0]", "[0, 1, 1]", "[1, 0, 0]", "[1, 0, 1]", "[1, 1, 0]",
    ]


def test_reduce_acac():
    g = cx.catalog("A2t")
    verdict = cx.is_reduced(g, "acac")
    assert not verdict
    assert verdict.witness == (0, 3)
    assert cx.reduce_fully(g, ["a", "c", "a", "c"]) == ["c", "a"]


def test_finite_a2_abab():
    g = cx.parse_graph("vertex a\nvertex b\nedge a b 3\n")
    assert cx.has_intervening_neighbours(g, "abab")
    assert cx.reduce_fully(g, "abab") == ["b", "a"]


def test_speyer_on_g2_tilde():
    assert cx.check_speyer(cx.catalog("G2t"), samples=200, seed=7) == []


def test_g2_diamond():
    g = cx.catalog("G2")
    p = cx.initial_position(g, "bac")
    assert p.values == ["0", "1", "0"]
    assert sorted(cx.legal_moves(p, g)) == ["a", "c"]
    ac = cx.fire(cx.fire(p, g, "a"), g, "c")
    ca = cx.fire(cx.fire(p, g, "c"), g, "a")
    assert ac == ca
    assert ac.values == ["r3", "1", "1"]
    assert cx.explore(p, g, 20)[0] == "open"


def test_witness_and_errors():
    g = cx.catalog("E6")
    name, vertices = cx.find_affine_witness(g)
    assert name == "E6t" and len(vertices) == 7
    assert cx.bicoloured_word(g, "c", 4) == ["c", "b", "d", "f"]
    with pytest.raises(ValueError):
        cx.parse_graph("vertex a\nvertex b\nedge a b 2\n")
    g2 = cx.parse_graph(g.to_text())
    assert g2 == g
