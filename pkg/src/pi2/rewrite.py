"""Elementary transformations, word equivalence with witnesses, and rewrite distance.

A witness is a start word plus a list of elementary steps.  Searches are
breadth first with a fixed step order, so returned witnesses are shortest
and reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .presentation import Presentation, Word


class WitnessError(ValueError):
    """A witness step does not apply to the word it is replayed on."""

    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


@dataclass(frozen=True, order=True)
class ElementaryStep:
    prefix_len: int
    relation_label: str
    forward: bool = True

    def flipped(self) -> "ElementaryStep":
        return ElementaryStep(self.prefix_len, self.relation_label, not self.forward)

    def shifted(self, n: int) -> "ElementaryStep":
        return ElementaryStep(self.prefix_len + n, self.relation_label, self.forward)

    def __str__(self):
        inv = "" if self.forward else "^-1"
        return f"{self.relation_label}{inv}@{self.prefix_len}"


@dataclass(frozen=True)
class Witness:
    start: Word
    steps: tuple[ElementaryStep, ...] = ()

    def __len__(self):
        return len(self.steps)

    def to_document(self, p: Presentation) -> dict:
        return {
            "start": p.symbols_of(self.start),
            "steps": [{"prefix": s.prefix_len, "label": s.relation_label, "forward": s.forward} for s in self.steps],
        }

    @classmethod
    def from_document(cls, p: Presentation, doc: dict) -> "Witness":
        steps = tuple(ElementaryStep(int(s["prefix"]), str(s["label"]), bool(s["forward"])) for s in doc["steps"])
        return cls(p.word(list(doc["start"])), steps)


@dataclass(frozen=True)
class SearchLimits:
    """Termination control.  ``max_word_length=None`` picks a default from the inputs;
    ``max_depth=0`` means unlimited."""

    max_word_length: Optional[int] = None
    max_states: int = 200_000
    max_depth: int = 0

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be >= 1")

    def word_length_bound(self, p: Presentation, *words: Word) -> int:
        if self.max_word_length is not None:
            return self.max_word_length
        return sum(len(w) for w in words) + 2 * p.longest_side


DEFAULT_LIMITS = SearchLimits()


def _moves(p: Presentation):
    """(label, forward, source, target) in the canonical step order."""
    out = []
    for r in sorted(p.relations, key=lambda r: r.label):
        out.append((r.label, True, r.lhs, r.rhs))
        out.append((r.label, False, r.rhs, r.lhs))
    return out


def _successors(moves, w: Word) -> Iterator[tuple[ElementaryStep, Word]]:
    n = len(w)
    for offset in range(n + 1):
        for label, fwd, src, tgt in moves:
            end = offset + len(src)
            if end <= n and w[offset:end] == src:
                yield ElementaryStep(offset, label, fwd), w[:offset] + tgt + w[end:]


def applicable_steps(p: Presentation, w: Word) -> list[ElementaryStep]:
    """All steps applicable to w, ordered by offset, then label, forward first."""
    return [s for s, _ in _successors(_moves(p), w)]


def apply_step(p: Presentation, w: Word, s: ElementaryStep) -> Word:
    try:
        src, tgt = p.relation(s.relation_label).side(s.forward)
    except KeyError:
        raise WitnessError(0, f"unknown relation label {s.relation_label!r}") from None
    end = s.prefix_len + len(src)
    if s.prefix_len < 0 or end > len(w) or w[s.prefix_len:end] != src:
        raise WitnessError(0, f"{s} does not apply to {p.format(w)}")
    return w[:s.prefix_len] + tgt + w[end:]


def replay_witness(p: Presentation, wit: Witness) -> Word:
    w = wit.start
    for i, s in enumerate(wit.steps):
        try:
            w = apply_step(p, w, s)
        except WitnessError as exc:
            raise WitnessError(i, str(exc).split(": ", 1)[1]) from None
        except KeyError:
            raise WitnessError(i, f"unknown relation label {s.relation_label!r}") from None
    return w


def witness_path(p: Presentation, wit: Witness) -> list[Word]:
    """Every intermediate word, start and end included."""
    words = [wit.start]
    for i, s in enumerate(wit.steps):
        try:
            words.append(apply_step(p, words[-1], s))
        except WitnessError as exc:
            raise WitnessError(i, str(exc).split(": ", 1)[1]) from None
    return words


def invert_witness(p: Presentation, wit: Witness) -> Witness:
    # an inverse step acts on the same window, so prefix lengths carry over
    end = replay_witness(p, wit)
    return Witness(end, tuple(s.flipped() for s in reversed(wit.steps)))


def concat_witness(p: Presentation, first: Witness, second: Witness) -> Witness:
    """The composite first-then-second; endpoints must match."""
    if replay_witness(p, first) != second.start:
        raise WitnessError(len(first.steps), "end of first witness is not the start of the second")
    return Witness(first.start, first.steps + second.steps)


def embed_witness(p: Presentation, left: Word, wit: Witness, right: Word) -> Witness:
    n = len(left)
    return Witness(tuple(left) + wit.start + tuple(right), tuple(s.shifted(n) for s in wit.steps))


@dataclass
class ClassEnumeration:
    """Breadth-first enumeration of the words reachable from ``root``."""

    presentation: Presentation
    root: Word
    parent: dict = field(default_factory=dict)
    depth: dict = field(default_factory=dict)
    order: list = field(default_factory=list)
    exhaustive: bool = False
    bound_hit: Optional[str] = None

    @property
    def words(self) -> set:
        return set(self.order)

    def __contains__(self, w):
        return w in self.parent

    def __len__(self):
        return len(self.order)

    def witness_to(self, w: Word) -> Witness:
        steps = []
        while True:
            link = self.parent[w]
            if link is None:
                break
            w, s = link
            steps.append(s)
        return Witness(self.root, tuple(reversed(steps)))

    def canonical(self) -> Word:
        """Lexicographically least word (by letter index)."""
        return min(self.order)


def _bfs(p: Presentation, root: Word, limits: SearchLimits, length_bound: int, target=None) -> ClassEnumeration:
    moves = _moves(p)
    enum = ClassEnumeration(p, root)
    enum.parent[root] = None
    enum.depth[root] = 0
    enum.order.append(root)
    if target is not None and root == target:
        return enum
    queue = deque([root])
    truncated = None
    while queue:
        w = queue.popleft()
        d = enum.depth[w]
        for s, v in _successors(moves, w):
            if v in enum.parent:
                continue
            if len(v) > length_bound:
                truncated = truncated or "max_word_length"
                continue
            if limits.max_depth and d + 1 > limits.max_depth:
                truncated = truncated or "max_depth"
                continue
            if len(enum.order) >= limits.max_states:
                enum.bound_hit = "max_states"
                return enum
            enum.parent[v] = (w, s)
            enum.depth[v] = d + 1
            enum.order.append(v)
            if target is not None and v == target:
                return enum
            queue.append(v)
    enum.bound_hit = truncated
    enum.exhaustive = truncated is None
    return enum


def enumerate_class(p: Presentation, w: Word, limits: SearchLimits = DEFAULT_LIMITS) -> ClassEnumeration:
    return _bfs(p, tuple(w), limits, limits.word_length_bound(p, w))


@dataclass(frozen=True)
class EquivalenceVerdict:
    outcome: str  # "equivalent" | "inequivalent" | "unknown"
    witness: Optional[Witness] = None
    class_certificate: Optional[tuple] = None
    bound_hit: Optional[str] = None

    @property
    def equivalent(self) -> bool:
        return self.outcome == "equivalent"

    @property
    def inequivalent(self) -> bool:
        return self.outcome == "inequivalent"

    @property
    def distance(self) -> Optional[int]:
        return len(self.witness) if self.witness is not None else None

    def to_document(self, p: Presentation) -> dict:
        doc = {"outcome": self.outcome, "distance": self.distance}
        if self.witness is not None:
            doc["witness"] = self.witness.to_document(p)
        if self.class_certificate is not None:
            doc["class_certificate"] = [p.symbols_of(w) for w in self.class_certificate]
        if self.bound_hit is not None:
            doc["bound_hit"] = self.bound_hit
        return doc


def decide_equivalent(p: Presentation, u: Word, v: Word, limits: SearchLimits = DEFAULT_LIMITS) -> EquivalenceVerdict:
    u, v = tuple(u), tuple(v)
    enum = _bfs(p, u, limits, limits.word_length_bound(p, u, v), target=v)
    if v in enum:
        return EquivalenceVerdict("equivalent", witness=enum.witness_to(v))
    if enum.exhaustive:
        return EquivalenceVerdict("inequivalent", class_certificate=tuple(sorted(enum.order)))
    return EquivalenceVerdict("unknown", bound_hit=enum.bound_hit)


def distance(p: Presentation, u: Word, v: Word, limits: SearchLimits = DEFAULT_LIMITS) -> Optional[int]:
    return decide_equivalent(p, u, v, limits).distance


def check_class_certificate(p: Presentation, members, u: Word, v: Word) -> bool:
    """Re-verify an inequivalence certificate: ``members`` contains u, excludes v,
    and is closed under every elementary transformation."""
    members = set(map(tuple, members))
    if tuple(u) not in members or tuple(v) in members:
        return False
    moves = _moves(p)
    return all(x in members for w in members for _, x in _successors(moves, w))


class ClassIndex:
    """Memoized class lookup: word -> canonical representative of its class.

    A lookup returns None when the class could not be enumerated exhaustively
    within the limits.
    """

    def __init__(self, p: Presentation, limits: SearchLimits = DEFAULT_LIMITS):
        self.p = p
        self.limits = limits
        self._canon: dict = {}
        self._members: dict = {}

    def canon(self, w: Word) -> Optional[Word]:
        w = tuple(w)
        try:
            return self._canon[w]
        except KeyError:
            pass
        enum = enumerate_class(self.p, w, self.limits)
        if not enum.exhaustive:
            self._canon[w] = None
            return None
        rep = enum.canonical()
        members = tuple(sorted(enum.order))
        self._members[rep] = members
        for x in members:
            self._canon[x] = rep
        return rep

    def members(self, w: Word) -> Optional[tuple]:
        rep = self.canon(w)
        return None if rep is None else self._members[rep]

    def equivalent(self, u: Word, v: Word) -> Optional[bool]:
        """True/False when decided, None when a class was truncated."""
        cu = self.canon(u)
        if cu is not None:
            return tuple(v) in self._members[cu]
        cv = self.canon(v)
        if cv is not None:
            return tuple(u) in self._members[cv]
        verdict = decide_equivalent(self.p, u, v, self.limits)
        return True if verdict.equivalent else None
