"""Monoid presentations: alphabets, labeled relations, parsing and classification.

Words are plain tuples of letter indices.  The empty tuple is the unit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

Word = tuple


class PresentationError(ValueError):
    """Raised for malformed presentation documents or words."""


@dataclass(frozen=True)
class Letter:
    symbol: str
    index: int


@dataclass(frozen=True)
class LabeledRelation:
    label: str
    lhs: Word
    rhs: Word

    def side(self, forward: bool) -> tuple[Word, Word]:
        """Return (source, target) for the given orientation."""
        return (self.lhs, self.rhs) if forward else (self.rhs, self.lhs)


@dataclass(frozen=True)
class PresentationClass:
    semi_positive: bool
    positive: bool
    homogeneous: bool


@dataclass(frozen=True)
class Presentation:
    alphabet: tuple[Letter, ...]
    relations: tuple[LabeledRelation, ...]

    def __post_init__(self):
        symbols = [l.symbol for l in self.alphabet]
        for i, letter in enumerate(self.alphabet):
            if not letter.symbol:
                raise PresentationError("empty letter symbol")
            if letter.index != i:
                raise PresentationError(f"letter {letter.symbol!r} has index {letter.index}, expected {i}")
        if len(set(symbols)) != len(symbols):
            dup = sorted({s for s in symbols if symbols.count(s) > 1})
            raise PresentationError(f"duplicate symbol(s): {dup}")
        labels = [r.label for r in self.relations]
        if len(set(labels)) != len(labels):
            dup = sorted({s for s in labels if labels.count(s) > 1})
            raise PresentationError(f"duplicate relation label(s): {dup}")
        k = len(self.alphabet)
        for r in self.relations:
            if not r.label:
                raise PresentationError("empty relation label")
            for w in (r.lhs, r.rhs):
                if any(not (0 <= x < k) for x in w):
                    raise PresentationError(f"relation {r.label}: letter index out of range")
            if r.lhs == r.rhs:
                raise PresentationError(f"relation {r.label} has identical sides")

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    @property
    def symbols(self) -> list[str]:
        return [l.symbol for l in self.alphabet]

    @property
    def labels(self) -> list[str]:
        return [r.label for r in self.relations]

    def relation(self, label: str) -> LabeledRelation:
        for r in self.relations:
            if r.label == label:
                return r
        raise KeyError(label)

    @property
    def compact(self) -> bool:
        """True when every symbol is one character (so words print without spaces)."""
        return all(len(s) == 1 for s in self.symbols)

    @property
    def longest_side(self) -> int:
        return max((max(len(r.lhs), len(r.rhs)) for r in self.relations), default=0)

    def word(self, spec: str | Sequence[str] | Word) -> Word:
        """Parse a word from text, a list of symbols, or pass through an index tuple.

        Text is whitespace separated; if it has no whitespace and every symbol
        is a single character, it is read one character per letter.
        """
        if isinstance(spec, tuple) and all(isinstance(x, int) for x in spec):
            if any(not (0 <= x < self.rank) for x in spec):
                raise PresentationError(f"letter index out of range in {spec}")
            return spec
        if isinstance(spec, str):
            text = spec.strip()
            if not text or text == "ε":
                return ()
            if any(ch.isspace() for ch in text):
                tokens = text.split()
            elif text in self.symbols:
                tokens = [text]
            elif self.compact:
                tokens = list(text)
            else:
                tokens = [text]
        else:
            tokens = list(spec)
        lookup = {s: i for i, s in enumerate(self.symbols)}
        try:
            return tuple(lookup[t] for t in tokens)
        except KeyError as exc:
            raise PresentationError(f"unknown symbol {exc.args[0]!r}") from None

    def format(self, w: Word) -> str:
        if not w:
            return "ε"
        sep = "" if self.compact else " "
        return sep.join(self.alphabet[x].symbol for x in w)

    def symbols_of(self, w: Word) -> list[str]:
        return [self.alphabet[x].symbol for x in w]

    def to_document(self) -> dict:
        return {
            "alphabet": self.symbols,
            "relations": [
                {"label": r.label, "lhs": self.symbols_of(r.lhs), "rhs": self.symbols_of(r.rhs)}
                for r in self.relations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2)


def make_presentation(symbols: Iterable[str], relations: Iterable[tuple[str, str | Sequence[str], str | Sequence[str]]]) -> Presentation:
    """Build a presentation from symbols and (label, lhs, rhs) triples of symbol text."""
    alphabet = tuple(Letter(s, i) for i, s in enumerate(symbols))
    free = Presentation(alphabet, ())
    rels = tuple(LabeledRelation(label, free.word(lhs), free.word(rhs)) for label, lhs, rhs in relations)
    return Presentation(alphabet, rels)


def parse_presentation(document: str | dict) -> Presentation:
    """Parse and validate a JSON presentation document."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise PresentationError(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict) or "alphabet" not in document:
        raise PresentationError("document must be an object with an 'alphabet' key")
    alphabet = document["alphabet"]
    if not isinstance(alphabet, list) or not all(isinstance(s, str) for s in alphabet):
        raise PresentationError("'alphabet' must be an array of strings")
    rels = document.get("relations", [])
    if not isinstance(rels, list):
        raise PresentationError("'relations' must be an array")
    triples = []
    for r in rels:
        try:
            label, lhs, rhs = r["label"], r["lhs"], r["rhs"]
        except (KeyError, TypeError):
            raise PresentationError(f"malformed relation {r!r}") from None
        if not isinstance(lhs, list) or not isinstance(rhs, list):
            raise PresentationError(f"relation {label}: sides must be arrays of symbols")
        triples.append((label, lhs, rhs))
    return make_presentation(alphabet, triples)


def load_presentation(path: str | Path) -> Presentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def classify_presentation(p: Presentation) -> PresentationClass:
    positive = all(len(r.lhs) >= 1 and len(r.rhs) >= 1 for r in p.relations)
    homogeneous = all(len(r.lhs) == len(r.rhs) for r in p.relations)
    return PresentationClass(semi_positive=True, positive=positive, homogeneous=homogeneous)


def is_homogeneous(p: Presentation) -> bool:
    return classify_presentation(p).homogeneous


def yoshinaga_presentation(
    n: int,
    permutations: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    symbols: Sequence[str] | None = None,
) -> Presentation:
    """Presentation with generators g1..gn and relations g1...gn = g_{i1}...g_{in}.

    ``permutations`` are 1-based images; the identity is rejected since it
    would give a relation with equal sides.  Labels default to R1, R2, ...
    and symbols to g1..gn.
    """
    if labels is None:
        labels = [f"R{i + 1}" for i in range(len(permutations))]
    if len(labels) != len(permutations):
        raise PresentationError("one label per permutation required")
    if symbols is None:
        symbols = [f"g{i}" for i in range(1, n + 1)]
    if len(symbols) != n:
        raise PresentationError(f"expected {n} symbols")
    ident = tuple(range(1, n + 1))
    rels = []
    for label, perm in zip(labels, permutations):
        perm = tuple(perm)
        if sorted(perm) != list(ident):
            raise PresentationError(f"{perm} is not a permutation of 1..{n}")
        if perm == ident:
            raise PresentationError("identity permutation gives a trivial relation")
        rels.append((label, [symbols[i - 1] for i in ident], [symbols[i - 1] for i in perm]))
    return make_presentation(symbols, rels)


def commutation_presentation(symbols: Sequence[str]) -> Presentation:
    """All pairwise commutation relations x_i x_j = x_j x_i (i < j)."""
    rels = []
    for i, a in enumerate(symbols):
        for b in symbols[i + 1:]:
            rels.append((f"{a}{b}" if len(a) == len(b) == 1 else f"{a}_{b}", [a, b], [b, a]))
    return make_presentation(symbols, rels)


def example1_presentation(m: int) -> Presentation:
    """{a, b | (ab)^m a = 1}."""
    if m < 1:
        raise PresentationError("m must be >= 1")
    return make_presentation(["a", "b"], [("R", ["a", "b"] * m + ["a"], [])])


def degree(p: Presentation, w: Word) -> int:
    """Word length; an invariant of the monoid element only for homogeneous presentations."""
    return len(w)


def all_words(k: int, max_len: int, min_len: int = 0):
    """All words over k letters of length min_len..max_len, shortest first then lex."""
    from itertools import product
    for n in range(min_len, max_len + 1):
        yield from product(range(k), repeat=n)



def corpus_names() -> list[str]:
    from importlib import resources
    root = resources.files("pi2") / "corpus"
    return sorted(f.name[:-5] for f in root.iterdir() if f.name.endswith(".json"))


def load_corpus(name: str) -> Presentation:
    """Load one of the bundled presentations, e.g. ``load_corpus("threelines")``."""
    from importlib import resources
    name = name[:-5] if name.endswith(".json") else name
    f = resources.files("pi2") / "corpus" / f"{name}.json"
    if not f.is_file():
        raise PresentationError(f"no bundled presentation {name!r}; available: {corpus_names()}")
    return parse_presentation(f.read_text(encoding="utf-8"))
