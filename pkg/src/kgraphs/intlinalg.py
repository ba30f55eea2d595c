"""Exact integer linear algebra helpers.

Only what the package needs: membership of a vector in the sublattice of Z^m
spanned by a finite list of integer vectors, decided by column reduction to
echelon form with unimodular operations (exact Python ints throughout).
"""

from __future__ import annotations

from typing import List, Sequence


def lattice_member(generators: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Is ``target`` an integer combination of ``generators``?

    Each generator and the target are length-m integer vectors.  An empty
    generator list spans only the origin.
    """
    m = len(target)
    cols: List[List[int]] = [list(c) for c in generators if any(c)]
    for c in cols:
        if len(c) != m:
            raise ValueError("generator length mismatch")
    t = list(target)
    r = 0
    for i in range(m):
        # Gather a single pivot in row i among columns >= r by gcd steps.
        while True:
            nz = [j for j in range(r, len(cols)) if cols[j][i] != 0]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(cols[j][i]))
            cols[r], cols[j] = cols[j], cols[r]
            done = True
            for j2 in range(r + 1, len(cols)):
                if cols[j2][i] != 0:
                    q = cols[j2][i] // cols[r][i]
                    for row in range(m):
                        cols[j2][row] -= q * cols[r][row]
                    if cols[j2][i] != 0:
                        done = False
            if done:
                break
        if r < len(cols) and cols[r][i] != 0:
            p = cols[r][i]
            if t[i] % p != 0:
                return False
            c = t[i] // p
            for row in range(m):
                t[row] -= c * cols[r][row]
            r += 1
        else:
            if t[i] != 0:
                return False
    return all(x == 0 for x in t)


def exponent_rank(values: Sequence[int]) -> int:
    """Rank over Q of the prime-exponent vectors of positive integers.

    ``values[i] = prod p^{E[i][p]}``; the returned rank is the dimension of
    the span of the rows E[i].  A value of 1 contributes a zero row.
    """
    from sympy import factorint
    from sympy import Matrix

    facts = [factorint(v) for v in values]
    primes = sorted({p for f in facts for p in f})
    if not primes:
        return 0
    rows = [[f.get(p, 0) for p in primes] for f in facts]
    return Matrix(rows).rank()
