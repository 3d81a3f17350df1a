"""Row reduction over F_p (used by bounded ideal-membership checks)."""

from __future__ import annotations


def nullspace_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {a : M a = 0} over F_p, for M given as a list of rows."""
    m = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-m[r][fc]) % p
        basis.append(vec)
    return basis
