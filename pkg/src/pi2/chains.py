"""Cellular chains of the abelian cover of the presentation complex.

Coefficients live in the Laurent ring Z[x1^±1, ..., xk^±1].  A 2-chain assigns
a coefficient to each relation label, a 1-chain to each letter.  Witnesses map
to 2-chains: a step at prefix g contributes +/- ab(g) * [label] depending on
its orientation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

from .graph import RewriteGraph, cycle_basis
from .intlinalg import integer_kernel, solve_integer
from .laurent import GroupRingElem, Monomial, QuotientLattice, mono_inv, mono_mul
from .presentation import Presentation, Word
from .rewrite import Witness, concat_witness, decide_equivalent, embed_witness, replay_witness, witness_path


class _Chain:
    """Finitely supported map key -> GroupRingElem."""

    __slots__ = ("k", "coefficients")

    def __init__(self, k: int, coefficients=()):
        self.k = k
        acc: dict = {}
        items = coefficients.items() if isinstance(coefficients, dict) else coefficients
        for key, val in items:
            acc[key] = acc[key] + val if key in acc else val
        self.coefficients = {key: v for key, v in acc.items() if not v.is_zero()}

    def _new(self, coefficients):
        return type(self)(self.k, coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other):
        return type(self) is type(other) and self.k == other.k and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.coefficients.items())))

    def __add__(self, other):
        return self._new(list(self.coefficients.items()) + list(other.coefficients.items()))

    def __neg__(self):
        return self._new({key: -v for key, v in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r: GroupRingElem | int):
        return self._new({key: v * r for key, v in self.coefficients.items()})

    def translate(self, m: Monomial):
        return self._new({key: v.translate(m) for key, v in self.coefficients.items()})

    def __getitem__(self, key) -> GroupRingElem:
        return self.coefficients.get(key, GroupRingElem.zero(self.k))

    def __repr__(self):
        return f"{type(self).__name__}({self.render()})"

    def render(self, names=None) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for key in sorted(self.coefficients, key=str):
            coef = self.coefficients[key]
            body = coef.render(names)
            if len(coef.terms) > 1:
                parts.append(f"{key}*({body})")
            elif body == "1":
                parts.append(f"{key}")
            elif body == "-1":
                parts.append(f"-{key}")
            elif body.startswith("-"):
                parts.append(f"-{key}*{body[1:]}")
            else:
                parts.append(f"{key}*{body}")
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text


class OneChain(_Chain):
    """Keys are letter indices (1-cells e_1..e_k)."""

    def render(self, names=None) -> str:
        relabeled = _Chain(self.k, {f"e{i + 1}": v for i, v in self.coefficients.items()})
        return relabeled.render(names)


class TwoChain(_Chain):
    """Keys are relation labels (2-cells)."""

    def to_document(self) -> dict:
        return {"cells": {label: self.coefficients[label].to_document() for label in sorted(self.coefficients)}}

    @classmethod
    def from_document(cls, k: int, doc: dict, lattice: Optional[QuotientLattice] = None) -> "TwoChain":
        return cls(k, {label: GroupRingElem.from_document(k, terms, lattice) for label, terms in doc["cells"].items()})

    def to_json(self) -> str:
        return json.dumps(self.to_document())


@dataclass(frozen=True)
class UnitMonomial:
    sign: int
    monomial: Monomial

    def apply(self, ch: TwoChain) -> TwoChain:
        return ch.translate(self.monomial).scale(self.sign)


def abelianize(p: Presentation, w: Word) -> Monomial:
    counts = [0] * p.rank
    for x in w:
        counts[x] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def relation_lattice(p: Presentation) -> Optional[QuotientLattice]:
    """Span of ab(lhs) - ab(rhs) over all relations, or None if every relation is letter balanced.

    Chain coefficients live in the group ring of Z^k modulo this lattice (the
    first homology of the presentation complex).  For balanced presentations
    that is Z^k itself.
    """
    diffs = [tuple(x - y for x, y in zip(abelianize(p, r.lhs), abelianize(p, r.rhs))) for r in p.relations]
    return QuotientLattice.spanned_by(diffs)


def fox(p: Presentation, w: Word) -> OneChain:
    """sum_i ab(w[:i]) * e_{w[i]}."""
    k = p.rank
    lattice = relation_lattice(p)
    acc = []
    prefix = [0] * k
    for x in w:
        acc.append((x, GroupRingElem.monomial(tuple(prefix), 1, lattice)))
        prefix[x] += 1
    return OneChain(k, acc)


def fox_boundary(p: Presentation, label: str) -> OneChain:
    r = p.relation(label)
    return fox(p, r.lhs) - fox(p, r.rhs)


def witness_chain(p: Presentation, wit: Witness) -> TwoChain:
    words = witness_path(p, wit)  # raises WitnessError on a bad step
    lattice = relation_lattice(p)
    terms = []
    for w, s in zip(words, wit.steps):
        coef = GroupRingElem.monomial(abelianize(p, w[:s.prefix_len]), 1 if s.forward else -1, lattice)
        terms.append((s.relation_label, coef))
    return TwoChain(p.rank, terms)


def boundary(p: Presentation, ch: TwoChain) -> OneChain:
    out = OneChain(p.rank)
    for label, coef in ch.coefficients.items():
        out = out + fox_boundary(p, label).scale(coef)
    return out


def is_cycle(p: Presentation, ch: TwoChain) -> bool:
    return boundary(p, ch).is_zero()


def divide_chain(p: Presentation, ch: TwoChain, left: Word) -> TwoChain:
    """Left division by a flank word: multiply by ab(left)^-1.  Right division does nothing."""
    return ch.translate(mono_inv(abelianize(p, left)))


def pi_class_chain(p: Presentation, a: Word, b: Word, c: Word, d: Word, wit1: Witness,
                   a2: Word, d2: Word, wit2: Witness) -> TwoChain:
    """Chain of the twin (a,b,c,d), (a2,b,c,d2) given witnesses a b d -> a c d and a2 b d2 -> a2 c d2."""
    for wit, (x, y) in ((wit1, (a, d)), (wit2, (a2, d2))):
        x, y = tuple(x), tuple(y)
        if wit.start != x + tuple(b) + y or replay_witness(p, wit) != x + tuple(c) + y:
            raise ValueError("witness endpoints do not match the tuple words")
    return divide_chain(p, witness_chain(p, wit1), a) - divide_chain(p, witness_chain(p, wit2), a2)


def twin_chain(p: Presentation, twin) -> TwoChain:
    """Chain of a certified Twin, using the witnesses it carries."""
    t1, t2 = twin.first, twin.second
    return pi_class_chain(p, t1.a, t1.b, t1.c, t1.d, t1.relation_witness,
                          t2.a, t2.d, _rebase(p, t2, t1.b, t1.c))


def _rebase(p, t, b, c):
    """Witness for t.a b t.d -> t.a c t.d, re-anchored on the given kernel words."""
    if t.b == tuple(b) and t.c == tuple(c):
        return t.relation_witness
    # kernel words differ by representative: conjugate with witnesses b -> t.b and t.c -> c
    wb = decide_equivalent(p, b, t.b).witness
    wc = decide_equivalent(p, t.c, c).witness
    pre = embed_witness(p, t.a, wb, t.d)
    post = embed_witness(p, t.a, wc, t.d)
    return concat_witness(p, concat_witness(p, pre, t.relation_witness), post)


def inertia_chain_generators(p: Presentation, g: RewriteGraph, divide_by: Word = ()) -> list[TwoChain]:
    """Chains of the fundamental cycles of a component, optionally divided by a left flank."""
    return [divide_chain(p, witness_chain(p, loop.as_witness()), divide_by) for loop in cycle_basis(g)]


def _leading_label(ch: TwoChain):
    return min(ch.coefficients, key=str)


def unit_equal(ch1: TwoChain, ch2: TwoChain) -> Optional[UnitMonomial]:
    """(s, m) with ch1 = s * m * ch2, if such a unit exists."""
    if ch1.is_zero() or ch2.is_zero():
        return UnitMonomial(1, (0,) * ch1.k) if ch1.is_zero() and ch2.is_zero() else None
    if set(ch1.coefficients) != set(ch2.coefficients):
        return None
    label = _leading_label(ch1)
    m1, c1 = ch1[label].leading()
    m2, c2 = ch2[label].leading()
    candidates = [(m2, c2)]
    if ch1[label].lattice is not None:
        # coset representatives need not keep the leading term leading, so try every term
        candidates += [(m, c) for m, c in ch2[label].terms.items() if m != m2]
    for m, c in candidates:
        if c1 not in (c, -c):
            continue
        unit = UnitMonomial(1 if c1 == c else -1, mono_mul(m1, mono_inv(m)))
        if unit.apply(ch2) == ch1:
            return unit
    return None


# --- box-truncated kernel oracle -------------------------------------------

MAX_BOX_COLUMNS = 20_000


class BoxOverflowError(ValueError):
    pass


def box_monomials(k: int, radius: int) -> list[Monomial]:
    return list(product(range(-radius, radius + 1), repeat=k))


def _boundary_columns(p: Presentation, radius: int):
    """Integer matrix of the boundary map on box-supported 2-chains.

    Columns are (label, monomial); rows are (letter, monomial) pairs.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    labels = sorted(p.labels)
    monos = _box_classes(p, radius)
    if len(labels) * len(monos) > MAX_BOX_COLUMNS:
        raise BoxOverflowError(f"{len(labels) * len(monos)} columns exceeds {MAX_BOX_COLUMNS}")
    keys = [(label, m) for label in labels for m in monos]
    base = {label: fox_boundary(p, label) for label in labels}
    columns = []
    for label, m in keys:
        col = {}
        for letter, coef in base[label].translate(m).coefficients.items():
            for n, c in coef.terms.items():
                col[(letter, n)] = c
        columns.append(col)
    return keys, columns


def _box_classes(p: Presentation, radius: int) -> list[Monomial]:
    lattice = relation_lattice(p)
    monos = box_monomials(p.rank, radius)
    if lattice is None:
        return monos
    return sorted({lattice.reduce(m) for m in monos})


def _chain_to_vector(ch: TwoChain, index: dict) -> Optional[dict]:
    vec = {}
    for label, coef in ch.coefficients.items():
        for m, c in coef.terms.items():
            j = index.get((label, m))
            if j is None:
                return None
            vec[j] = c
    return vec


def _vector_to_chain(k: int, keys, vec: dict, lattice=None) -> TwoChain:
    terms = {}
    for j, c in vec.items():
        label, m = keys[j]
        terms.setdefault(label, {})[m] = c
    return TwoChain(k, {label: GroupRingElem(k, t, lattice) for label, t in terms.items()})


def box_kernel_basis(p: Presentation, radius: int) -> list[TwoChain]:
    """Z-basis of the 2-cycles whose coefficients are supported in [-radius, radius]^k."""
    if not p.relations:
        return []
    keys, columns = _boundary_columns(p, radius)
    return [_vector_to_chain(p.rank, keys, v, relation_lattice(p)) for v in integer_kernel(columns)]


def box_translates(ch: TwoChain, radius: int) -> list[TwoChain]:
    """All monomial translates of ch supported inside the box."""
    support = [m for coef in ch.coefficients.values() for m in coef.terms]
    if not support:
        return []
    k = ch.k
    lo = [-radius - min(m[i] for m in support) for i in range(k)]
    hi = [radius - max(m[i] for m in support) for i in range(k)]
    if any(l > h for l, h in zip(lo, hi)):
        return []
    return [ch.translate(t) for t in product(*(range(l, h + 1) for l, h in zip(lo, hi)))]


@dataclass
class BoxGeneratorReport:
    radius: int
    kernel_rank: int
    translate_count: int
    translates_are_cycles: bool
    kernel_in_translate_span: bool
    chain_in_kernel_span: bool

    @property
    def generates(self) -> bool:
        return (self.translates_are_cycles and self.kernel_in_translate_span
                and self.chain_in_kernel_span and self.kernel_rank == self.translate_count)


def box_generator_check(p: Presentation, ch: TwoChain, radius: int,
                        basis: Optional[list[TwoChain]] = None) -> BoxGeneratorReport:
    """Does the box kernel equal the Z-span of the box translates of ch?"""
    if basis is None:
        basis = box_kernel_basis(p, radius)
    keys = [(label, m) for label in sorted(p.labels) for m in _box_classes(p, radius)]
    index = {key: j for j, key in enumerate(keys)}
    translates = box_translates(ch, radius)
    t_vecs = [v for v in (_chain_to_vector(t, index) for t in translates) if v is not None]
    b_vecs = [_chain_to_vector(b, index) for b in basis]
    ch_vec = _chain_to_vector(ch, index)
    in_span = all(solve_integer(t_vecs, v) is not None for v in b_vecs)
    ch_ok = ch_vec is not None and solve_integer(b_vecs, ch_vec) is not None
    return BoxGeneratorReport(
        radius=radius,
        kernel_rank=len(basis),
        translate_count=len(translates),
        translates_are_cycles=all(is_cycle(p, t) for t in translates),
        kernel_in_translate_span=in_span,
        chain_in_kernel_span=ch_ok,
    )


def chain_sum(chains: Iterable[TwoChain], k: int) -> TwoChain:
    out = TwoChain(k)
    for c in chains:
        out = out + c
    return out
