from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs, nonempty
from edgecolor.colorers import color_ore
from edgecolor.coloring import (PartialColoring, dumps_coloring, is_proper, kempe_path_from,
                                kempe_swap, loads_coloring, missing_colors)
from edgecolor.graph import build, complete, empty, path

P3 = path(3)


def test_is_proper_examples():
    assert is_proper(PartialColoring(complete(3), 3, {}))
    assert is_proper(PartialColoring(complete(3), 3, {(0, 1, 0): 1, (0, 2, 0): 2, (1, 2, 0): 3}))
    dbl = build(2, [(0, 1, 2)])
    assert not is_proper(PartialColoring(dbl, 2, {(0, 1, 0): 1, (0, 1, 1): 1}))


def test_coloring_validation():
    with pytest.raises(ValueError):
        PartialColoring(complete(3), 2, {(0, 1, 0): 3})
    with pytest.raises(ValueError):
        PartialColoring(complete(3), 2, {(0, 1, 1): 1})


def test_missing_colors_examples():
    assert missing_colors(PartialColoring(empty(1), 3, {}), 0) == {1, 2, 3}
    c = PartialColoring(P3, 3, {(0, 1, 0): 1, (1, 2, 0): 2})
    assert missing_colors(c, 1) == {3}
    c = PartialColoring(P3, 2, {(0, 1, 0): 1, (1, 2, 0): 2})
    assert missing_colors(c, 1) == set()


def test_kempe_path_examples():
    c = PartialColoring(P3, 2, {(0, 1, 0): 1, (1, 2, 0): 2})
    p = kempe_path_from(c, 0, 1, 2)
    assert p.vertices == (0, 1, 2) and p.end == 2 and len(p) == 2
    c2 = PartialColoring(P3, 3, {(0, 1, 0): 1})
    assert len(kempe_path_from(c2, 2, 1, 2)) == 0
    k3 = PartialColoring(complete(3), 3, {(0, 1, 0): 1, (1, 2, 0): 2, (0, 2, 0): 3})
    p = kempe_path_from(k3, 0, 1, 2)
    assert p.vertices == (0, 1, 2)


def test_kempe_path_rejects_interior_start():
    c = PartialColoring(P3, 2, {(0, 1, 0): 1, (1, 2, 0): 2})
    with pytest.raises(ValueError):
        kempe_path_from(c, 1, 1, 2)
    with pytest.raises(ValueError):
        kempe_path_from(c, 0, 1, 1)


def test_kempe_swap_examples():
    c = PartialColoring(P3, 2, {(0, 1, 0): 1, (1, 2, 0): 2})
    p = kempe_path_from(c, 0, 1, 2)
    swapped = kempe_swap(c, p)
    assert swapped.colors == {(0, 1, 0): 2, (1, 2, 0): 1}
    assert kempe_swap(swapped, kempe_path_from(swapped, 0, 1, 2)).colors == c.colors
    c2 = PartialColoring(P3, 3, {(0, 1, 0): 1})
    assert kempe_swap(c2, kempe_path_from(c2, 2, 1, 2)).colors == c2.colors


def test_swap_rejects_truncated_path():
    c = PartialColoring(path(4), 2, {(0, 1, 0): 1, (1, 2, 0): 2, (2, 3, 0): 1})
    p = kempe_path_from(c, 0, 1, 2)
    short = type(p)(p.alpha, p.beta, p.vertices[:2], p.edges[:1])
    with pytest.raises(ValueError):
        kempe_swap(c, short)


def test_coloring_format_roundtrip():
    g = build(3, [(0, 1, 2), (1, 2, 1)])
    c = PartialColoring(g, 3, {(0, 1, 0): 1, (0, 1, 1): 2})
    text = dumps_coloring(c)
    assert text.splitlines()[0] == "k 3"
    assert "u 1 2 0" in text.splitlines()
    back = loads_coloring(text, g)
    assert back.colors == c.colors and back.k == 3


@given(nonempty(multigraphs(max_n=6)), st.data())
def test_kempe_swap_properties(g, data):
    c = color_ore(g)
    v = data.draw(st.sampled_from(list(g.vertices)))
    a, b = data.draw(st.lists(st.integers(1, c.k), min_size=2, max_size=2, unique=True))
    if a in c.present(v) and b in c.present(v):
        return
    p = kempe_path_from(c, v, a, b)
    s = kempe_swap(c, p)
    assert is_proper(s) and set(s.colors) == set(c.colors)
    assert kempe_swap(s, kempe_path_from(s, v, a, b)).colors == c.colors
    # the path alternates and every interior vertex carries both colors
    cols = [c.colors[e] for e in p.edges]
    assert all(x != y for x, y in zip(cols, cols[1:])) and set(cols) <= {a, b}
