import json

import pytest

from pi2.graph import (
    TruncatedGraphError,
    build_component,
    component_report_json,
    cycle_basis,
    cycle_rank,
    export_dot,
    is_tree,
)
from pi2.rewrite import SearchLimits, replay_witness

FIGURE_PAIRS = [("123", "132"), ("23123", "32123"), ("312", "132"),
                ("12331", "12313"), ("1232", "2132"), ("1312", "1321")]


def test_star_at_123(threelines):
    p = threelines
    g = build_component(p, p.word("123"))
    assert len(g.vertices) == 4 and len(g.edges) == 3
    assert {e.source for e in g.edges} == {p.word("123")}
    assert is_tree(g) and cycle_basis(g) == []


@pytest.mark.parametrize("root,partner", FIGURE_PAIRS)
def test_paired_components_are_trees(threelines, root, partner):
    p = threelines
    g = build_component(p, p.word(root))
    assert g.exhaustive and is_tree(g)
    assert p.word(partner) in g.vertices
    assert cycle_basis(g) == []


def test_free_component(free2):
    g = build_component(free2, free2.word("abba"))
    assert g.vertices == [free2.word("abba")] and g.edges == []
    assert is_tree(g)
    assert export_dot(g).count("->") == 0


def test_commutative_hexagon(commutative3):
    p = commutative3
    g = build_component(p, p.word("123"))
    assert len(g.vertices) == 6 and len(g.edges) == 6
    assert not is_tree(g) and cycle_rank(g) == 1
    (loop,) = cycle_basis(g)
    assert loop.base == g.root
    assert replay_witness(p, loop.as_witness()) == g.root
    assert len(loop.steps) == 6


def test_tree_witnesses(threelines):
    p = threelines
    g = build_component(p, p.word("23123"))
    for v in g.vertices:
        assert replay_witness(p, g.tree_witness(v)) == v


def test_truncated_component(threelines):
    p = threelines
    g = build_component(p, p.word("23123"), SearchLimits(max_states=5))
    assert not g.exhaustive and g.frontier
    with pytest.raises(TruncatedGraphError):
        is_tree(g)
    assert "dashed" in export_dot(g)
    assert g.to_document()["tree"] is None


def test_dot_and_json(threelines):
    p = threelines
    g = build_component(p, p.word("123"))
    dot = export_dot(g)
    assert dot.count("->") == 3
    for label in "ABC":
        assert '"123" -> ' in dot and f'[label="{label}"]' in dot
    assert "peripheries=2" in dot
    doc = json.loads(component_report_json(build_component(p, p.word("23123"))))
    assert doc["tree"] is True and doc["cycle_rank"] == 0 and len(doc["vertices"]) == 19
    assert len(doc["edges"]) == 18
