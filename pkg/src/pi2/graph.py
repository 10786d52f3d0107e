"""Connected components of the rewriting graph, tree tests and cycle bases."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .presentation import Presentation, Word
from .rewrite import (
    DEFAULT_LIMITS,
    ElementaryStep,
    SearchLimits,
    Witness,
    _moves,
    _successors,
    enumerate_class,
    invert_witness,
)


class TruncatedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    source: Word
    target: Word
    step: ElementaryStep  # always forward (lhs -> rhs) from source


@dataclass(frozen=True)
class ClosedPath:
    base: Word
    steps: tuple[ElementaryStep, ...]

    def as_witness(self) -> Witness:
        return Witness(self.base, self.steps)


@dataclass
class RewriteGraph:
    presentation: Presentation
    root: Word
    vertices: list
    edges: list
    spanning_tree: dict  # vertex -> (parent, step) or None for the root
    exhaustive: bool
    frontier: frozenset = frozenset()

    def tree_witness(self, v: Word) -> Witness:
        steps = []
        while self.spanning_tree[v] is not None:
            v, s = self.spanning_tree[v]
            steps.append(s)
        return Witness(self.root, tuple(reversed(steps)))

    def tree_edges(self) -> set:
        out = set()
        for child, link in self.spanning_tree.items():
            if link is None:
                continue
            parent, s = link
            if s.forward:
                out.add(Edge(parent, child, s))
            else:
                out.add(Edge(child, parent, s.flipped()))
        return out

    def to_document(self) -> dict:
        p = self.presentation
        return {
            "root": p.symbols_of(self.root),
            "vertices": [p.symbols_of(v) for v in self.vertices],
            "edges": [
                {"u": p.symbols_of(e.source), "v": p.symbols_of(e.target), "label": e.step.relation_label, "offset": e.step.prefix_len}
                for e in self.edges
            ],
            "tree": is_tree(self) if self.exhaustive else None,
            "cycle_rank": cycle_rank(self) if self.exhaustive else None,
            "exhaustive": self.exhaustive,
        }


def build_component(p: Presentation, w: Word, limits: SearchLimits = DEFAULT_LIMITS) -> RewriteGraph:
    enum = enumerate_class(p, w, limits)
    vertices = list(enum.order)
    members = enum.parent.keys()
    moves = _moves(p)
    edges = []
    frontier = set()
    for v in vertices:
        for s, x in _successors(moves, v):
            if x not in members:
                frontier.add(v)
                continue
            if s.forward:
                edges.append(Edge(v, x, s))
    return RewriteGraph(p, tuple(w), vertices, edges, dict(enum.parent), enum.exhaustive, frozenset(frontier))


def _require_exhaustive(g: RewriteGraph):
    if not g.exhaustive:
        raise TruncatedGraphError("component was truncated; tree-ness and cycles are undecidable")


def cycle_rank(g: RewriteGraph) -> int:
    _require_exhaustive(g)
    return len(g.edges) - len(g.vertices) + 1


def is_tree(g: RewriteGraph) -> bool:
    return cycle_rank(g) == 0


def cycle_basis(g: RewriteGraph) -> list[ClosedPath]:
    """Fundamental cycles of the BFS spanning tree, one per non-tree edge, based at the root."""
    _require_exhaustive(g)
    p = g.presentation
    tree = g.tree_edges()
    loops = []
    for e in g.edges:
        if e in tree:
            continue
        to_source = g.tree_witness(e.source)
        back = invert_witness(p, g.tree_witness(e.target))
        loops.append(ClosedPath(g.root, to_source.steps + (e.step,) + back.steps))
    return loops


def export_dot(g: RewriteGraph) -> str:
    p = g.presentation
    name = {v: p.format(v) for v in g.vertices}
    lines = ["digraph component {", "  node [shape=box];"]
    for v in g.vertices:
        attrs = [f'label="{name[v]}"']
        if v == g.root:
            attrs.append("peripheries=2")
        if v in g.frontier:
            attrs.append("style=dashed")
        lines.append(f'  "{name[v]}" [{", ".join(attrs)}];')
    for e in g.edges:
        lines.append(f'  "{name[e.source]}" -> "{name[e.target]}" [label="{e.step.relation_label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def component_report_json(g: RewriteGraph) -> str:
    return json.dumps(g.to_document(), indent=2)
