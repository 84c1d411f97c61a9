"""Exact rational predicates for affine and conic containment.

Every predicate here is decided in arbitrary-precision rational arithmetic
(`fractions.Fraction`); there is no floating-point code path.  Sign
computations are reduced to integer determinants after clearing denominators
row by row (a positive row scaling never changes a determinant sign), which
keeps the hot loops on plain integers.

All functions are pure and operate on immutable values, so they can be called
from any number of workers without coordination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Literal, Sequence

Mode = Literal["open", "closed"]

__all__ = [
    "Point",
    "pt",
    "origin",
    "InputError",
    "DegenerateConeError",
    "orientation",
    "barycentric_coordinates",
    "point_in_simplex",
    "cone_contains",
    "in_convex_hull",
    "in_general_position",
    "in_general_position_with",
]


class InputError(ValueError):
    """Malformed input: dimension mismatch, bad sizes, out-of-range indices."""


class DegenerateConeError(InputError):
    """Cone generators are linearly dependent."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(
        f"coordinates must be int, Fraction or rational string, got {type(x).__name__}"
    )


class Point:
    """Immutable point with exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(_frac(c) for c in coords))
        if not self.coords:
            raise InputError("a point needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __neg__(self) -> "Point":
        return Point(-c for c in self.coords)

    def __sub__(self, other: "Point") -> "Point":
        if self.dim != other.dim:
            raise InputError("dimension mismatch in point subtraction")
        return Point(a - b for a, b in zip(self.coords, other.coords))

    def __add__(self, other: "Point") -> "Point":
        if self.dim != other.dim:
            raise InputError("dimension mismatch in point addition")
        return Point(a + b for a, b in zip(self.coords, other.coords))

    def __setattr__(self, *args):  # pragma: no cover
        raise AttributeError("Point is immutable")

    def __repr__(self) -> str:
        return "Point(%s)" % ", ".join(str(c) for c in self.coords)


def pt(*coords) -> Point:
    """Shorthand constructor: ``pt(1, 2)`` instead of ``Point((1, 2))``."""
    return Point(coords)


def origin(dim: int) -> Point:
    return Point([Fraction(0)] * dim)


def _check_dims(points: Sequence[Point], dim: int | None = None) -> int:
    if not points:
        raise InputError("empty point list")
    d = points[0].dim if dim is None else dim
    for p in points:
        if p.dim != d:
            raise InputError(f"dimension mismatch: expected {d}, got {p.dim}")
    return d


def _det_int(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _int_homogeneous_row(p: Point) -> tuple[int, ...]:
    """(s*x_1, ..., s*x_d, s) with s the positive lcm of the denominators."""
    s = lcm(*(c.denominator for c in p.coords))
    return tuple(int(c * s) for c in p.coords) + (s,)


def _int_linear_row(p: Point) -> tuple[int, ...]:
    s = lcm(*(c.denominator for c in p.coords))
    return tuple(int(c * s) for c in p.coords)


def orientation(points: Sequence[Point]) -> int:
    """Sign of the determinant of (p2-p1, ..., p_{d+1}-p1) for d+1 points.

    Returns +1, -1, or 0; 0 exactly when the points are affinely dependent.
    """
    d = _check_dims(points)
    if len(points) != d + 1:
        raise InputError(f"orientation needs {d + 1} points in dimension {d}")
    rows = [list(_int_homogeneous_row(p)) for p in points]
    return _sign(_det_int(rows))


def _hom_sign(rows: Sequence[Sequence[int]]) -> int:
    return _sign(_det_int([list(r) for r in rows]))


def barycentric_coordinates(
    p: Point, vertices: Sequence[Point]
) -> list[Fraction] | None:
    """Coefficients l with sum(l) = 1 and p = sum(l_i * v_i), or None.

    None is the degenerate flag: the vertices are affinely dependent.
    """
    d = _check_dims(list(vertices) + [p])
    if len(vertices) != d + 1:
        raise InputError(f"need {d + 1} vertices in dimension {d}")
    # Row r is the equation sum_j l_j * v_j[r] = p[r]; the last row is sum l = 1.
    # Each row is scaled by the lcm of its denominators, which leaves the
    # solution unchanged, then solved by Cramer's rule on integer matrices.
    a_rows: list[list[int]] = []
    b: list[int] = []
    for r in range(d):
        coeffs = [v[r] for v in vertices] + [p[r]]
        s = lcm(*(c.denominator for c in coeffs))
        a_rows.append([int(c * s) for c in coeffs[:-1]])
        b.append(int(p[r] * s))
    a_rows.append([1] * (d + 1))
    b.append(1)
    det = _det_int(a_rows)
    if det == 0:
        return None
    lams = []
    for i in range(d + 1):
        m = [row[:] for row in a_rows]
        for r in range(d + 1):
            m[r][i] = b[r]
        lams.append(Fraction(_det_int(m), det))
    return lams


def _affine_combination(
    p: Point, verts: Sequence[Point]
) -> list[Fraction] | None:
    """Solve sum(l_i v_i) = p with sum(l_i) = 1 over any number of vertices.

    Returns None when the vertices are affinely dependent or the system is
    inconsistent (p outside their affine hull).
    """
    d = p.dim
    k = len(verts)
    rows = [[v[r] for v in verts] + [p[r]] for r in range(d)]
    rows.append([Fraction(1)] * k + [Fraction(1)])
    piv = 0
    pivots = []
    for col in range(k):
        sel = None
        for r in range(piv, len(rows)):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            return None  # affinely dependent
        rows[piv], rows[sel] = rows[sel], rows[piv]
        pr = rows[piv]
        for r in range(len(rows)):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [x - f * y for x, y in zip(rows[r], pr)]
        pivots.append((piv, col))
        piv += 1
    for r in range(piv, len(rows)):
        if rows[r][-1] != 0:
            return None  # inconsistent
    lams = [Fraction(0)] * k
    for r, col in pivots:
        lams[col] = rows[r][-1] / rows[r][col]
    return lams


def _hull_contains(p: Point, points: Sequence[Point]) -> bool:
    """Exact closed convex hull membership via affinely independent subsets."""
    d = p.dim
    pts = []
    seen = set()
    for q in points:
        if q not in seen:
            seen.add(q)
            pts.append(q)
    if p in seen:
        return True
    for k in range(2, min(len(pts), d + 1) + 1):
        for sub in combinations(pts, k):
            lams = _affine_combination(p, sub)
            if lams is not None and all(l >= 0 for l in lams):
                return True
    return False


def point_in_simplex(p: Point, vertices: Sequence[Point], mode: Mode) -> bool:
    """Membership of p in the simplex spanned by d+1 vertices.

    open: all barycentric coordinates strictly positive (degenerate simplices
    contain nothing).  closed: exact hull membership, which also handles
    degenerate vertex sets (repeated or affinely dependent vertices).
    """
    if mode not in ("open", "closed"):
        raise InputError(f"mode must be 'open' or 'closed', got {mode!r}")
    lams = barycentric_coordinates(p, vertices)
    if lams is None:
        if mode == "open":
            return False
        return _hull_contains(p, vertices)
    if mode == "open":
        return all(l > 0 for l in lams)
    return all(l >= 0 for l in lams)


def cone_contains(generators: Sequence[Point], v: Point) -> bool:
    """True iff v is a non-negative combination of d linearly independent
    generators in dimension d."""
    d = _check_dims(list(generators) + [v])
    if len(generators) != d:
        raise InputError(f"need exactly {d} generators in dimension {d}")
    a_rows: list[list[int]] = []
    b: list[int] = []
    for r in range(d):
        coeffs = [g[r] for g in generators] + [v[r]]
        s = lcm(*(c.denominator for c in coeffs))
        a_rows.append([int(c * s) for c in coeffs[:-1]])
        b.append(int(v[r] * s))
    det = _det_int(a_rows)
    if det == 0:
        raise DegenerateConeError("cone generators are linearly dependent")
    ds = _sign(det)
    for i in range(d):
        m = [row[:] for row in a_rows]
        for r in range(d):
            m[r][i] = b[r]
        if _sign(_det_int(m)) * ds < 0:
            return False
    return True


def _affinely_independent(points: Sequence[Point]) -> bool:
    """True iff the points span an affine flat of dimension len(points)-1."""
    rows = [list(_int_homogeneous_row(p)) for p in points]
    # Gaussian rank over rationals, done on the integer rows.
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0])
    for col in range(cols):
        sel = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        for r in range(rank + 1, len(mat)):
            if mat[r][col] != 0:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank == len(points)


def _full_dimensional(points: Sequence[Point], d: int) -> bool:
    """True iff some d+1 of the points are affinely independent."""
    basis: list[Point] = []
    for p in points:
        if _affinely_independent(basis + [p]):
            basis.append(p)
            if len(basis) == d + 1:
                return True
    return False


def in_convex_hull(p: Point, S: Sequence[Point], strict: bool = False) -> bool:
    """Exact convex hull membership.

    Non-strict containment searches affinely independent subsets of at most
    d+1 points for a non-negative affine combination.  Strict containment
    additionally requires conv(S) to be full-dimensional and p to lie strictly
    on the inner side of every supporting hyperplane spanned by d points of S.
    """
    d = _check_dims(list(S) + [p])
    if not _hull_contains(p, S):
        return False
    if not strict:
        return True
    pts = []
    seen = set()
    for q in S:
        if q not in seen:
            seen.add(q)
            pts.append(q)
    if not _full_dimensional(pts, d):
        return False  # lower-dimensional hull has empty interior
    rows = {q: _int_homogeneous_row(q) for q in pts}
    p_row = _int_homogeneous_row(p)
    for facet in combinations(pts, d):
        if not _affinely_independent(facet):
            continue
        base = [rows[q] for q in facet]
        pos = neg = False
        for q in pts:
            s = _hom_sign(base + [rows[q]])
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            if pos and neg:
                break
        if pos and neg:
            continue  # hyperplane cuts through S: not supporting
        sp = _hom_sign(base + [p_row])
        if pos and sp <= 0:
            return False
        if neg and sp >= 0:
            return False
        if not pos and not neg:
            return False  # all of S on the hyperplane
    return True


def in_general_position(points: Sequence[Point]) -> bool:
    """True iff every (d+1)-subset of the points is affinely independent.

    For n >= d+1 points this is equivalent to: no k-dimensional affine flat
    contains k+2 of the points, for any k < d.
    """
    d = _check_dims(points)
    if len(points) < d + 1:
        return True
    rows = [_int_homogeneous_row(p) for p in points]
    for sub in combinations(rows, d + 1):
        if _det_int([list(r) for r in sub]) == 0:
            return False
    return True


def in_general_position_with(points: Sequence[Point], p: Point) -> bool:
    """True iff p avoids every hyperplane spanned by d of the given points.

    Subsets of d points that are themselves affinely dependent span no
    hyperplane and are ignored.  This is the query-side general position
    needed for open and closed containment counts to coincide at p.
    """
    d = _check_dims(list(points) + [p])
    rows = [_int_homogeneous_row(q) for q in points]
    p_row = _int_homogeneous_row(p)
    for sub in combinations(range(len(points)), d):
        base = [rows[i] for i in sub]
        if _hom_sign(base + [p_row]) == 0:
            if _affinely_independent([points[i] for i in sub]):
                return False
    return True
