"""Non-cancellative tuples, twins and their classification.

A tuple (a, b, c, d) is non-cancellative (NC) over the kernel (b, c) when
a b d ~ a c d although b and c are inequivalent.  Every positive claim made
here carries a replayable witness; every negative claim carries an
exhaustively enumerated class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .presentation import Presentation, PresentationError, Word, all_words, is_homogeneous
from .rewrite import (
    DEFAULT_LIMITS,
    ClassIndex,
    SearchLimits,
    Witness,
    decide_equivalent,
    replay_witness,
)


class SearchLimitReached(RuntimeError):
    """A class enumeration was truncated, so the question was left undecided."""


@dataclass(frozen=True)
class Kernel:
    b: Word
    c: Word
    inequivalence: tuple  # the full class of b; c is not in it

    def to_document(self, p: Presentation) -> dict:
        return {"b": p.symbols_of(self.b), "c": p.symbols_of(self.c),
                "class_of_b": [p.symbols_of(w) for w in self.inequivalence]}


@dataclass(frozen=True)
class NCTuple:
    a: Word
    b: Word
    c: Word
    d: Word
    relation_witness: Witness
    kernel: Kernel

    @property
    def flanks(self) -> tuple[Word, Word]:
        return self.a, self.d

    def verify(self, p: Presentation) -> bool:
        w = self.relation_witness
        return (w.start == self.a + self.b + self.d
                and replay_witness(p, w) == self.a + self.c + self.d
                and self.b in self.kernel.inequivalence
                and self.c not in self.kernel.inequivalence)

    def to_document(self, p: Presentation) -> dict:
        return {
            "a": p.symbols_of(self.a), "b": p.symbols_of(self.b),
            "c": p.symbols_of(self.c), "d": p.symbols_of(self.d),
            "witness": self.relation_witness.to_document(p),
            "kernel": self.kernel.to_document(p),
        }

    def describe(self, p: Presentation) -> str:
        return f"({p.format(self.a)}, {p.format(self.d)}) in NC({p.format(self.b)}, {p.format(self.c)})"


@dataclass(frozen=True)
class Twin:
    first: NCTuple
    second: NCTuple

    def to_document(self, p: Presentation) -> dict:
        return {"first": self.first.to_document(p), "second": self.second.to_document(p)}


@dataclass(frozen=True)
class ClassificationVerdict:
    status: str  # "yes" | "no" | "unknown"
    counterexample: object = None
    bound: Optional[str] = None

    @property
    def yes(self) -> bool:
        return self.status == "yes"

    @property
    def no(self) -> bool:
        return self.status == "no"


YES = ClassificationVerdict("yes")


def _unknown(reason: str) -> ClassificationVerdict:
    return ClassificationVerdict("unknown", bound=reason)


# --- kernels and single tuples ----------------------------------------------

def certify_kernel(p: Presentation, b: Word, c: Word, limits: SearchLimits = DEFAULT_LIMITS,
                   index: ClassIndex | None = None) -> Optional[Kernel]:
    """Kernel with an exhaustive inequivalence certificate, or None if b ~ c.

    Raises SearchLimitReached when the class of b cannot be enumerated.
    """
    index = index or ClassIndex(p, limits)
    b, c = tuple(b), tuple(c)
    members = index.members(b)
    if members is None:
        raise SearchLimitReached(f"class of {p.format(b)} not exhaustive")
    if c in members:
        return None
    return Kernel(b, c, members)


def _nc_relation(p, index: ClassIndex, a, b, c, d, limits) -> Optional[Witness]:
    """Witness for a b d ~ a c d, None if inequivalent; raises when undecided."""
    u, v = a + b + d, a + c + d
    eq = index.equivalent(u, v)
    if eq is False:
        return None
    verdict = decide_equivalent(p, u, v, limits)
    if verdict.equivalent:
        return verdict.witness
    if verdict.inequivalent:
        return None
    raise SearchLimitReached(f"{p.format(u)} ~ {p.format(v)} undecided ({verdict.bound_hit})")


def check_nc_tuple(p: Presentation, a: Word, b: Word, c: Word, d: Word,
                   limits: SearchLimits = DEFAULT_LIMITS, index: ClassIndex | None = None,
                   kernel: Kernel | None = None) -> Optional[NCTuple]:
    """Certified NC tuple, or None when a b d ≁ a c d or b ~ c.

    Raises SearchLimitReached when either question is undecided within limits.
    """
    a, b, c, d = map(tuple, (a, b, c, d))
    index = index or ClassIndex(p, limits)
    if kernel is None:
        kernel = certify_kernel(p, b, c, limits, index)
        if kernel is None:
            return None
    wit = _nc_relation(p, index, a, b, c, d, limits)
    if wit is None:
        return None
    return NCTuple(a, b, c, d, wit, kernel)


# --- searches ---------------------------------------------------------------

@dataclass
class NCSearch:
    kernel: Kernel
    tuples: list = field(default_factory=list)
    unknown: list = field(default_factory=list)  # (a, d) pairs left undecided


def search_nc_over_kernel(p: Presentation, kernel: Kernel, max_flank_length: int,
                          limits: SearchLimits = DEFAULT_LIMITS,
                          index: ClassIndex | None = None) -> NCSearch:
    """All NC tuples over ``kernel`` with flanks of length <= max_flank_length, one per pair of flank classes."""
    index = index or ClassIndex(p, limits)
    out = NCSearch(kernel)
    seen = set()
    flanks = list(all_words(p.rank, max_flank_length))

    def key(w):
        rep = index.canon(w)
        return rep if rep is not None else ("raw", w)

    keyed = [(w, key(w)) for w in flanks]
    for a, ka in keyed:
        for d, kd in keyed:
            if (ka, kd) in seen:
                continue
            seen.add((ka, kd))
            try:
                t = check_nc_tuple(p, a, kernel.b, kernel.c, d, limits, index, kernel)
            except SearchLimitReached:
                out.unknown.append((a, d))
                continue
            if t is not None:
                out.tuples.append(t)
    out.tuples.sort(key=lambda t: (len(t.a) + len(t.d), len(t.a), t.a, t.d))
    return out


def _divisor_classes(index: ClassIndex, w: Word, side: str) -> Optional[dict]:
    """canonical rep -> a word, for every prefix (side='left') or suffix (side='right')
    of every word in the class of w.  None if the class is not exhaustive."""
    members = index.members(w)
    if members is None:
        return None
    out = {}
    for x in members:
        for i in range(len(x) + 1):
            part = x[:i] if side == "left" else x[i:]
            rep = index.canon(part)
            if rep is None:
                return None
            out.setdefault(rep, part)
    return out


def is_reduced(p: Presentation, t: NCTuple, limits: SearchLimits = DEFAULT_LIMITS,
               index: ClassIndex | None = None) -> ClassificationVerdict:
    index = index or ClassIndex(p, limits)
    right_divs = _divisor_classes(index, t.a, "right")
    left_divs = _divisor_classes(index, t.d, "left")
    if right_divs is None or left_divs is None:
        return _unknown("flank class not exhaustive")
    ca, cd = index.canon(t.a), index.canon(t.d)
    cands = sorted(((len(x) + len(y), x, y, ra, rd) for ra, x in right_divs.items() for rd, y in left_divs.items()
                    if not (ra == ca and rd == cd)))
    for _, x, y, _, _ in cands:
        try:
            smaller = check_nc_tuple(p, x, t.b, t.c, y, limits, index, t.kernel)
        except SearchLimitReached as exc:
            return _unknown(str(exc))
        if smaller is not None:
            return ClassificationVerdict("no", counterexample=smaller)
    return YES


def is_minimal(p: Presentation, t: NCTuple, limits: SearchLimits = DEFAULT_LIMITS,
               index: ClassIndex | None = None) -> ClassificationVerdict:
    """No nonunit common left divisor and no nonunit common right divisor of b and c."""
    index = index or ClassIndex(p, limits)
    unit = index.canon(())
    for side in ("left", "right"):
        db = _divisor_classes(index, t.b, side)
        dc = _divisor_classes(index, t.c, side)
        if db is None or dc is None:
            return _unknown("kernel class not exhaustive")
        common = sorted(set(db) & set(dc) - {unit})
        if common:
            return ClassificationVerdict("no", counterexample={"side": side, "divisor": db[common[0]]})
    return YES


def _splits(index: ClassIndex, w: Word) -> Optional[list]:
    """All (x, y) with x y ~ w, one per pair of classes."""
    members = index.members(w)
    if members is None:
        return None
    seen, out = set(), []
    for m in members:
        for i in range(len(m) + 1):
            x, y = m[:i], m[i:]
            kx, ky = index.canon(x), index.canon(y)
            if kx is None or ky is None:
                return None
            if (kx, ky) not in seen:
                seen.add((kx, ky))
                out.append((x, y))
    return out


def _commute(index: ClassIndex, x: Word, y: Word) -> Optional[bool]:
    return index.equivalent(x + y, y + x)


def is_indecomposable(p: Presentation, t: NCTuple, limits: SearchLimits = DEFAULT_LIMITS,
                      index: ClassIndex | None = None) -> ClassificationVerdict:
    if not is_homogeneous(p):
        return _unknown("factorization space is unbounded for non-homogeneous presentations")
    index = index or ClassIndex(p, limits)
    parts = [_splits(index, w) for w in (t.a, t.b, t.c, t.d)]
    if any(s is None for s in parts):
        return _unknown("class not exhaustive")
    sa, sb, sc, sd = parts
    undecided = False

    def holds(x):
        nonlocal undecided
        if x is None:
            undecided = True
        return bool(x)

    for b1, b2 in sb:
        for c1, c2 in sc:
            e1, e2 = index.equivalent(b1, c1), index.equivalent(b2, c2)
            if e1 is None or e2 is None:
                undecided = True
                continue
            if e1 or e2:
                continue
            for a1, a2 in sa:
                if not (holds(_commute(index, b1, a2)) and holds(_commute(index, c1, a2))):
                    continue
                for d1, d2 in sd:
                    if not (holds(_commute(index, d1, a2)) and holds(_commute(index, d1, b2))
                            and holds(_commute(index, d1, c2))):
                        continue
                    try:
                        first = check_nc_tuple(p, a1, b1, c1, d1, limits, index)
                        second = check_nc_tuple(p, a2, b2, c2, d2, limits, index)
                    except SearchLimitReached:
                        undecided = True
                        continue
                    if first is not None and second is not None:
                        return ClassificationVerdict("no", counterexample=(first, second))
    return _unknown("some sub-question undecided") if undecided else YES


@dataclass
class TwinSearch:
    twins: list = field(default_factory=list)
    reduced: dict = field(default_factory=dict)  # kernel -> list of reduced NCTuple
    searches: list = field(default_factory=list)
    unknown: list = field(default_factory=list)


def find_twins(p: Presentation, kernels: Sequence[tuple[Word, Word]], max_flank_length: int,
               limits: SearchLimits = DEFAULT_LIMITS, index: ClassIndex | None = None) -> TwinSearch:
    """All unordered pairs of distinct reduced NC tuples over each kernel."""
    index = index or ClassIndex(p, limits)
    out = TwinSearch()
    for b, c in kernels:
        try:
            kernel = certify_kernel(p, b, c, limits, index)
        except SearchLimitReached as exc:
            out.unknown.append(((b, c), str(exc)))
            continue
        if kernel is None:
            continue
        search = search_nc_over_kernel(p, kernel, max_flank_length, limits, index)
        out.searches.append(search)
        out.unknown.extend(((b, c), ad) for ad in search.unknown)
        reduced = []
        for t in search.tuples:
            v = is_reduced(p, t, limits, index)
            if v.yes:
                reduced.append(t)
            elif not v.no:
                out.unknown.append(((b, c), (t.a, t.d)))
        out.reduced[(kernel.b, kernel.c)] = reduced
        out.twins.extend(Twin(t1, t2) for t1, t2 in combinations(reduced, 2))
    return out


def all_kernels(p: Presentation, max_length: int, limits: SearchLimits = DEFAULT_LIMITS,
                index: ClassIndex | None = None) -> list[tuple[Word, Word]]:
    """Unordered pairs of inequivalent classes with representatives of length <= max_length."""
    index = index or ClassIndex(p, limits)
    reps = []
    seen = set()
    for w in all_words(p.rank, max_length):
        rep = index.canon(w)
        key = rep if rep is not None else ("raw", w)
        if key not in seen:
            seen.add(key)
            reps.append(w)
    return [(b, c) for b, c in combinations(reps, 2)]


def nc_tuples_exhaustive(p: Presentation, max_kernel_length: int, max_flank_length: int,
                         limits: SearchLimits = DEFAULT_LIMITS, index: ClassIndex | None = None):
    """Every NC tuple with |b|, |c| <= max_kernel_length and |a|, |d| <= max_flank_length.

    Groups candidate middles by the class of a w d for each flank pair, which is
    far cheaper than testing kernels one by one.  Returns (tuples, undecided)
    where tuples are (a, b, c, d) word quadruples with b, c class representatives.
    """
    index = index or ClassIndex(p, limits)
    middles = []
    seen = set()
    for w in all_words(p.rank, max_kernel_length):
        rep = index.canon(w)
        if rep is None:
            raise SearchLimitReached(f"class of {p.format(w)} not exhaustive")
        if rep not in seen:
            seen.add(rep)
            middles.append(w)
    found, undecided = [], []
    flanks = list(all_words(p.rank, max_flank_length))
    for a in flanks:
        for d in flanks:
            buckets: dict = {}
            for w in middles:
                rep = index.canon(a + w + d)
                if rep is None:
                    undecided.append((a, w, d))
                    continue
                buckets.setdefault(rep, []).append(w)
            for group in buckets.values():
                for b, c in combinations(group, 2):
                    found.append((a, b, c, d))
    return found, undecided


# --- structural invariants --------------------------------------------------

@dataclass(frozen=True)
class BoundaryLetterReport:
    end_letters: frozenset
    start_letters: frozenset
    preserved_end: frozenset
    preserved_start: frozenset

    def to_document(self, p: Presentation) -> dict:
        fmt = lambda s: [p.alphabet[i].symbol for i in sorted(s)]
        return {"end_letters": fmt(self.end_letters), "start_letters": fmt(self.start_letters),
                "preserved_end": fmt(self.preserved_end), "preserved_start": fmt(self.preserved_start)}


def boundary_letter_invariant(p: Presentation) -> BoundaryLetterReport:
    """Letters that never end (start) a relation side; a final (initial) such letter is a class invariant."""
    sides = [s for r in p.relations for s in (r.lhs, r.rhs)]
    if any(not s for s in sides):
        raise PresentationError("boundary letter invariant needs every relation side non-empty")
    letters = frozenset(range(p.rank))
    ends = frozenset(s[-1] for s in sides)
    starts = frozenset(s[0] for s in sides)
    return BoundaryLetterReport(ends, starts, letters - ends, letters - starts)


def prove_no_one_sided_nc(p: Presentation, kernel: Kernel | tuple, side: str) -> ClassificationVerdict:
    """Prove that no tuple (P, 1) (side='right') or (1, P) (side='left') lies over the kernel, for every P.

    Yes when b and c end (start) in distinct preserved letters; unknown otherwise.
    """
    b, c = (kernel.b, kernel.c) if isinstance(kernel, Kernel) else map(tuple, kernel)
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    try:
        report = boundary_letter_invariant(p)
    except PresentationError as exc:
        return _unknown(str(exc))
    if not b or not c:
        return _unknown("empty kernel word")
    if side == "right":
        x, y, keep = b[-1], c[-1], report.preserved_end
    else:
        x, y, keep = b[0], c[0], report.preserved_start
    if x != y and x in keep and y in keep:
        return YES
    return _unknown("boundary letters not preserved")


# --- classifying-space certificate -------------------------------------------

@dataclass
class BACertificate:
    simplices: list
    equivalences: list
    pairings: list

    def to_document(self) -> dict:
        return {"simplices": self.simplices, "equivalences": self.equivalences, "pairings": self.pairings}

    @classmethod
    def from_document(cls, doc: dict) -> "BACertificate":
        return cls(list(doc["simplices"]), list(doc.get("equivalences", [])), list(doc["pairings"]))


def _simplex(p, entries, tuple_id, role, orientation):
    kept = [p.symbols_of(w) for w in entries if w]  # unit entries collapse
    return {"tuple": tuple_id, "role": role, "dim": len(kept), "entries": kept, "orientation": orientation}


def ba_certificate(p: Presentation, twin: Twin) -> BACertificate:
    """Simplicial datum in the classifying space of the monoid for a twin.

    Each tuple contributes the simplices (a, b, d) and (a, c, d), the latter
    with reversed orientation, with unit entries removed.  The twin's class is
    the first tuple's glued equivalence minus the second's.
    """
    fmt = p.format
    simplices, equivalences = [], []
    for tid, t in (("first", twin.first), ("second", twin.second)):
        simplices.append(_simplex(p, (t.a, t.b, t.d), tid, "b", 1))
        simplices.append(_simplex(p, (t.a, t.c, t.d), tid, "c", -1))
        equivalences.append({
            "tuple": tid,
            "b_side": f"({fmt(t.b)}) ~ ({fmt(t.a)})^-1 ({fmt(t.a + t.b + t.d)}) ({fmt(t.d)})^-1",
            "c_side": f"({fmt(t.c)}) ~ ({fmt(t.a)})^-1 ({fmt(t.a + t.c + t.d)}) ({fmt(t.d)})^-1",
        })
    pairings = [{"tuple": "first", "sign": 1}, {"tuple": "second", "sign": -1}]
    return BACertificate(simplices, equivalences, pairings)
