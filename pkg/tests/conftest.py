"""Shared test helpers: an independent hull-feasibility oracle and friends."""

from fractions import Fraction
from itertools import combinations
from random import Random

from colourdepth.exact import Point


def rand_point(rng: Random, dim: int, bound: int = 100) -> Point:
    return Point(
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(dim)
    )


def feasible_by_basis_enumeration(p: Point, S) -> bool:
    """Exhaustive basic-solution search for sum(l_i v_i) = p, sum(l_i) = 1,
    l >= 0, by Gaussian elimination over homogeneous columns.

    Deliberately independent of colourdepth internals: this is the oracle the
    library's Caratheodory-style hull search is checked against.
    """
    d = p.dim
    for k in range(1, d + 2):
        for sub in combinations(S, k):
            rows = [[v[r] for v in sub] + [p[r]] for r in range(d)]
            rows.append([Fraction(1)] * k + [Fraction(1)])
            mat = [row[:] for row in rows]
            piv_cols = []
            r = 0
            for c in range(k):
                sel = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
                if sel is None:
                    break
                mat[r], mat[sel] = mat[sel], mat[r]
                for i in range(len(mat)):
                    if i != r and mat[i][c] != 0:
                        f = mat[i][c] / mat[r][c]
                        mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
                piv_cols.append((r, c))
                r += 1
            if len(piv_cols) < k:
                continue
            if any(mat[i][-1] != 0 for i in range(r, len(mat))):
                continue
            lams = [mat[i][-1] / mat[i][c] for i, c in piv_cols]
            if all(l >= 0 for l in lams):
                return True
    return False
