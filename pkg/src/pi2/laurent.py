"""Integer Laurent polynomials in k commuting variables (the group ring of Z^k).

Monomials are exponent tuples.  Elements are immutable; arithmetic returns new
objects and never stores zero coefficients.

An element may carry a ``QuotientLattice`` L; it then lives in the group ring
of Z^k / L and every monomial is kept as the canonical representative of its
coset, so equality of elements is equality in the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .intlinalg import echelon_rows

Monomial = tuple


@dataclass(frozen=True)
class QuotientLattice:
    """Sublattice of Z^k given by an echelon basis; reduces vectors to coset representatives."""

    rows: tuple

    @classmethod
    def spanned_by(cls, vectors) -> Optional["QuotientLattice"]:
        rows = echelon_rows(vectors)
        return cls(tuple(rows)) if rows else None

    def reduce(self, m: Monomial) -> Monomial:
        v = list(m)
        for row in self.rows:
            j = next(i for i, x in enumerate(row) if x)
            q = v[j] // row[j]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return tuple(v)


def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m, n))


def mono_inv(m: Monomial) -> Monomial:
    return tuple(-a for a in m)


def grlex_key(m: Monomial):
    """Graded lexicographic sort key; translation invariant."""
    return (sum(m), m)


class GroupRingElem:
    __slots__ = ("k", "terms", "lattice", "_hash")

    def __init__(self, k: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
                 lattice: Optional[QuotientLattice] = None):
        self.k = k
        self.lattice = lattice
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = tuple(m)
            if len(m) != k:
                raise ValueError(f"monomial {m} has wrong length for k={k}")
            if lattice is not None:
                m = lattice.reduce(m)
            acc[m] = acc.get(m, 0) + int(c)
        self.terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def zero(cls, k: int, lattice: Optional[QuotientLattice] = None) -> "GroupRingElem":
        return cls(k, (), lattice)

    @classmethod
    def monomial(cls, m: Monomial, coef: int = 1, lattice: Optional[QuotientLattice] = None) -> "GroupRingElem":
        return cls(len(m), {tuple(m): coef}, lattice)

    @classmethod
    def one(cls, k: int, lattice: Optional[QuotientLattice] = None) -> "GroupRingElem":
        return cls.monomial((0,) * k, 1, lattice)

    def _new(self, terms, other=None) -> "GroupRingElem":
        lattice = self.lattice
        if other is not None and other.lattice is not None:
            if lattice is not None and lattice != other.lattice:
                raise ValueError("elements of different quotient rings")
            lattice = other.lattice
        return GroupRingElem(self.k, terms, lattice)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, GroupRingElem) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._new(out, other)

    def __neg__(self) -> "GroupRingElem":
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return self + (-other)

    def __mul__(self, other) -> "GroupRingElem":
        if isinstance(other, int):
            return self._new({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m, c in self.terms.items():
            for n, d in other.terms.items():
                mn = mono_mul(m, n)
                out[mn] = out.get(mn, 0) + c * d
        return self._new(out, other)

    __rmul__ = __mul__

    def translate(self, m: Monomial) -> "GroupRingElem":
        """Multiply by the monomial m."""
        return self._new({mono_mul(n, m): c for n, c in self.terms.items()})

    def leading(self) -> tuple[Monomial, int]:
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def support(self) -> list:
        return sorted(self.terms, key=grlex_key, reverse=True)

    def render(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.k)]
        parts = []
        # positive terms first, then graded lex descending
        for m in sorted(self.terms, key=lambda m: (self.terms[m] < 0, -sum(m), tuple(-x for x in m))):
            c = self.terms[m]
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"GroupRingElem({self.render()})"

    def to_document(self) -> list:
        return [{"exp": list(m), "coef": self.terms[m]} for m in sorted(self.terms)]

    @classmethod
    def from_document(cls, k: int, doc: list, lattice: Optional[QuotientLattice] = None) -> "GroupRingElem":
        return cls(k, [(tuple(t["exp"]), t["coef"]) for t in doc], lattice)
