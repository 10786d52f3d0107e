"""Exact integer linear algebra: Z-bases of integer kernels and lattice membership.

Matrices are given column-wise as sparse dicts {row: value}.  The kernel is
found by unimodular column reduction, A U = [H | 0]; the columns of U that
end up zero in A form a Z-basis of the kernel.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _axpy(dst: dict, q: int, src: dict):
    """dst -= q * src, in place."""
    for k, v in src.items():
        nv = dst.get(k, 0) - q * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def integer_kernel(columns: Sequence[dict], n_rows: Optional[int] = None) -> list[dict]:
    """Z-basis of {x in Z^n : sum_j x_j * columns[j] = 0}, each basis vector a sparse dict {j: x_j}."""
    n = len(columns)
    a = [dict(c) for c in columns]
    u = [{j: 1} for j in range(n)]
    active = set(range(n))
    rows = sorted({r for c in a for r in c})
    by_row: dict = {}
    for j, c in enumerate(a):
        for r in c:
            by_row.setdefault(r, set()).add(j)
    for r in rows:
        while True:
            cand = [j for j in by_row.get(r, ()) if j in active and a[j].get(r)]
            if not cand:
                break
            if len(cand) == 1:
                active.discard(cand[0])
                break
            piv = min(cand, key=lambda j: (abs(a[j][r]), len(a[j]), j))
            pv = a[piv][r]
            for j in cand:
                if j == piv:
                    continue
                q = a[j][r] // pv
                if q:
                    _axpy(a[j], q, a[piv])
                    _axpy(u[j], q, u[piv])
                    for rr in a[piv]:
                        by_row.setdefault(rr, set()).add(j)
    return [u[j] for j in sorted(active)]


def _ext_gcd(a: int, b: int):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def solve_integer(columns: Sequence[dict], target: dict) -> Optional[dict]:
    """Some x in Z^n with sum_j x_j columns[j] = target, or None if no integer solution exists."""
    n = len(columns)
    aug = list(columns) + [{r: -v for r, v in target.items()}]
    kernel = integer_kernel(aug)
    # need a kernel lattice vector whose last coordinate is 1
    g, combo = 0, {}
    for vec in kernel:
        c = vec.get(n, 0)
        if not c:
            continue
        g2, s, t = _ext_gcd(g, c)
        combo = {k: s * v for k, v in combo.items()}
        for k, v in vec.items():
            combo[k] = combo.get(k, 0) + t * v
        g = g2
    if g != 1:
        return None
    if combo.get(n) == -1:
        combo = {k: -v for k, v in combo.items()}
    return {k: v for k, v in combo.items() if k != n and v}


def lattice_contains(columns: Sequence[dict], target: dict) -> bool:
    return solve_integer(columns, target) is not None


def apply_columns(columns: Sequence[dict], x: dict) -> dict:
    out: dict = {}
    for j, c in x.items():
        for r, v in columns[j].items():
            nv = out.get(r, 0) + c * v
            if nv:
                out[r] = nv
            else:
                out.pop(r, None)
    return out


def echelon_rows(vectors: Sequence[Sequence[int]]) -> list[tuple]:
    """Row echelon basis of the lattice spanned by ``vectors``, pivots positive.

    Rows are returned in order of increasing pivot column.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    out = []
    for col in range(n):
        live = [r for r in rows if r[col]]
        if not live:
            continue
        rest = [r for r in rows if not r[col]]
        # gcd-reduce the live rows on this column down to a single pivot row
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(tuple(piv))
        rows = rest
    return out
