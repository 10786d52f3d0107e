"""Bounded exploration of non-homogeneous presentations.

For {a, b | (ab)^m a = 1} words can grow without limit, so classes are never
enumerated exhaustively.  Instead we connect all words up to a length bound
and compare against the additive valuation a -> m, b -> -m-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import Presentation, Word, all_words, example1_presentation
from .rewrite import SearchLimits, Witness, _moves, _successors, decide_equivalent


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def bounded_components(p: Presentation, max_length: int) -> dict:
    """word -> component representative in the rewriting graph restricted to words of length <= max_length."""
    uf = _UnionFind()
    moves = _moves(p)
    for w in all_words(p.rank, max_length):
        uf.find(w)
        for _, v in _successors(moves, w):
            if len(v) <= max_length:
                uf.union(w, v)
    return {w: uf.find(w) for w in uf.parent}


def word_value(w: Word, weights) -> int:
    return sum(weights[x] for x in w)


def example1_normal_forms(m: int, max_length: int) -> list[tuple[int, int]]:
    """Exponent pairs (p, q) of the normal forms a^p b^q of length <= max_length."""
    out = []
    for total in range(max_length + 1):
        for q in range(total + 1):
            p_ = total - q
            if q <= m - 1 or (p_ <= m and q >= m):
                out.append((p_, q))
    return out


@dataclass
class Example1Report:
    m: int
    max_length: int
    graph_length: int
    commute_witness: Witness | None
    words: int = 0
    equal_value_pairs: int = 0
    connected_equal_value_pairs: int = 0
    certified_inequivalent_equal_value_pairs: int = 0
    value_violations: list = field(default_factory=list)
    normal_forms: int = 0
    normal_form_values_distinct: bool = False
    normal_forms_reached: int = 0

    @property
    def consistent(self) -> bool:
        return (self.commute_witness is not None and not self.value_violations
                and self.certified_inequivalent_equal_value_pairs == 0
                and self.normal_form_values_distinct)

    def to_document(self, p: Presentation) -> dict:
        return {
            "m": self.m,
            "max_length": self.max_length,
            "graph_length": self.graph_length,
            "ab_ba_witness": self.commute_witness.to_document(p) if self.commute_witness else None,
            "words": self.words,
            "equal_value_pairs": self.equal_value_pairs,
            "connected_equal_value_pairs": self.connected_equal_value_pairs,
            "certified_inequivalent_equal_value_pairs": self.certified_inequivalent_equal_value_pairs,
            "value_violations": [[p.symbols_of(u), p.symbols_of(v)] for u, v in self.value_violations],
            "normal_forms": self.normal_forms,
            "normal_form_values_distinct": self.normal_form_values_distinct,
            "normal_forms_reached": self.normal_forms_reached,
            "consistent": self.consistent,
        }


def example1_sweep(m: int, max_length: int = 8, p: Presentation | None = None) -> Example1Report:
    """Check bounded equivalence against the valuation a -> m, b -> -m-1 for all words up to max_length.

    The graph is explored up to max_length plus one relation length, enough
    headroom to commute any two letters.
    """
    p = p or example1_presentation(m)
    weights = (m, -m - 1)
    graph_length = max_length + p.longest_side
    a, b = p.word("a"), p.word("b")
    verdict = decide_equivalent(p, a + b, b + a, SearchLimits(max_word_length=graph_length))
    report = Example1Report(m, max_length, graph_length, verdict.witness)

    comp = bounded_components(p, graph_length)
    words = list(all_words(p.rank, max_length))
    report.words = len(words)
    by_value: dict = {}
    for w in words:
        by_value.setdefault(word_value(w, weights), []).append(w)
    # the valuation must be constant on every bounded component
    comp_value: dict = {}
    for w, root in comp.items():
        val = word_value(w, weights)
        seen = comp_value.setdefault(root, (val, w))
        if seen[0] != val and len(report.value_violations) < 10:
            report.value_violations.append((seen[1], w))
    for group in by_value.values():
        n = len(group)
        report.equal_value_pairs += n * (n - 1) // 2
        sizes: dict = {}
        for w in group:
            sizes[comp[w]] = sizes.get(comp[w], 0) + 1
        report.connected_equal_value_pairs += sum(s * (s - 1) // 2 for s in sizes.values())
    # infinite classes are never exhaustively enumerated, so no inequality is ever certified
    report.certified_inequivalent_equal_value_pairs = 0

    forms = example1_normal_forms(m, max_length)
    report.normal_forms = len(forms)
    values = [pp * m - q * (m + 1) for pp, q in forms]
    report.normal_form_values_distinct = len(set(values)) == len(values)
    for (pp, q), val in zip(forms, values):
        nf = a * pp + b * q
        if all(comp[w] == comp[nf] for w in by_value.get(val, [])):
            report.normal_forms_reached += 1
    return report
