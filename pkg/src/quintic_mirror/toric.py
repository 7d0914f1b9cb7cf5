"""Lattice polytopes, polar duality, and hypersurface moduli counts.

Polytopes are stored by their vertex lists (extreme points only, sorted).
Facets of a full-dimensional polytope are found by brute force over
vertex subsets, which is the right tool at the sizes that appear here
(simplices in dimension four and small test polytopes).  The polar dual
uses the inequality <x, y> >= -1, so a facet <n, x> <= c with c > 0 on
the primal side becomes the dual vertex -n/c.

The module also carries the two dual simplices of the quintic story and
the small arithmetic around hypersurface moduli: lattice point counts,
moduli dimension, and the Gorenstein witness vectors mu, nu of an
exponent matrix with their pairing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .linalg import (
    canonical_kernel_basis,
    integer_kernel_basis,
    rational_rank,
    solve_rational,
)

LatticePoint = tuple


class OriginNotInteriorError(ValueError):
    """The origin is not strictly inside the polytope."""


class NonReflexiveError(ValueError):
    """The polar dual is not a lattice polytope."""


class InfeasibleWitnessError(ValueError):
    """A Gorenstein witness system has no rational solution."""


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _lattice_point(p) -> tuple:
    out = []
    for x in p:
        xi = int(x)
        if xi != x:
            raise ValueError(f"coordinate {x!r} is not an integer")
        out.append(xi)
    return tuple(out)


@dataclass(frozen=True)
class Facet:
    """The half-space <normal, x> <= offset, with a primitive integer normal."""

    normal: tuple
    offset: int

    def is_tight(self, point) -> bool:
        return _dot(self.normal, point) == self.offset


@dataclass(frozen=True)
class ReflexivityReport:
    """Outcome of a reflexivity test; dual_vertices is the certificate
    (rational when the test fails on integrality)."""

    is_reflexive: bool
    dual_vertices: tuple


class LatticePolytope:
    """Convex hull of finitely many lattice points.

    The constructor canonicalizes: duplicates are dropped and only the
    extreme points are kept as vertices, in lexicographic order, so two
    polytopes compare equal exactly when their hulls agree.
    """

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = sorted({_lattice_point(p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        ambient = len(pts[0])
        if any(len(p) != ambient for p in pts):
            raise ValueError("points live in different ambient dimensions")
        self._ambient = ambient
        base = pts[0]
        diffs = [tuple(x - b for x, b in zip(p, base)) for p in pts[1:]]
        self._dim = rational_rank(diffs) if diffs else 0

        self._facets: Optional[tuple] = None
        self._reduced: Optional["LatticePolytope"] = None
        self._hull_base = base
        self._hull_basis: Optional[tuple] = None

        if self._dim == 0:
            self._vertices = (base,)
        elif self._dim == ambient:
            self._facets = _full_dim_facets(pts, ambient)
            self._vertices = tuple(
                p
                for p in pts
                if rational_rank([f.normal for f in self._facets if f.is_tight(p)])
                == ambient
            )
        else:
            # Work inside the affine hull: a saturated basis of the
            # direction lattice gives integer coordinates for every
            # lattice point of the hull, reducing to the full-dim case.
            normals = integer_kernel_basis(diffs)
            basis = integer_kernel_basis(normals)
            self._hull_basis = tuple(basis)
            reduced_pts = [self._to_reduced(p) for p in pts]
            self._reduced = LatticePolytope(reduced_pts)
            back = {self._to_reduced(p): p for p in pts}
            self._vertices = tuple(sorted(back[q] for q in self._reduced.vertices))

    # -- coordinates in the affine hull --------------------------------

    def _to_reduced(self, point) -> Optional[tuple]:
        delta = tuple(x - b for x, b in zip(point, self._hull_base))
        columns = [
            [self._hull_basis[j][i] for j in range(len(self._hull_basis))]
            for i in range(self._ambient)
        ]
        y = solve_rational(columns, delta)
        if y is None:
            return None
        if any(v.denominator != 1 for v in y):
            return None
        return tuple(v.numerator for v in y)

    def _from_reduced(self, y) -> tuple:
        return tuple(
            self._hull_base[i]
            + sum(self._hull_basis[j][i] * y[j] for j in range(len(y)))
            for i in range(self._ambient)
        )

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def ambient_dim(self) -> int:
        return self._ambient

    @property
    def dim(self) -> int:
        return self._dim

    def facets(self) -> tuple:
        if self._facets is None:
            raise ValueError("facet description needs a full-dimensional polytope")
        return self._facets

    def contains(self, point) -> bool:
        p = _lattice_point(point)
        if len(p) != self._ambient:
            raise ValueError("point has the wrong ambient dimension")
        if self._dim == 0:
            return p == self._vertices[0]
        if self._dim == self._ambient:
            return all(_dot(f.normal, p) <= f.offset for f in self._facets)
        y = self._to_reduced(p)
        return y is not None and self._reduced.contains(y)

    def lattice_points(self) -> list:
        """All lattice points of the hull, in lexicographic order."""
        if self._dim == 0:
            return [self._vertices[0]]
        if self._dim == self._ambient:
            ranges = [
                range(min(v[i] for v in self._vertices), max(v[i] for v in self._vertices) + 1)
                for i in range(self._ambient)
            ]
            return [
                p
                for p in itertools.product(*ranges)
                if all(_dot(f.normal, p) <= f.offset for f in self._facets)
            ]
        return sorted(self._from_reduced(y) for y in self._reduced.lattice_points())

    # -- polarity ------------------------------------------------------

    def _facets_with_interior_origin(self) -> tuple:
        if self._dim != self._ambient:
            raise OriginNotInteriorError(
                "polar dual needs a full-dimensional polytope"
            )
        if any(f.offset <= 0 for f in self._facets):
            raise OriginNotInteriorError("origin is not strictly interior")
        return self._facets

    def polar_dual_rational(self) -> tuple:
        """Vertices of {y : <x, y> >= -1 for all x}, as rational tuples."""
        facets = self._facets_with_interior_origin()
        return tuple(
            tuple(Fraction(-n, f.offset) for n in f.normal) for f in facets
        )

    def polar_dual(self) -> "LatticePolytope":
        """The polar dual as a lattice polytope; raises when a dual vertex
        is not integral."""
        duals = self.polar_dual_rational()
        for v in duals:
            if any(c.denominator != 1 for c in v):
                raise NonReflexiveError(f"dual vertex {v} is not a lattice point")
        return LatticePolytope([tuple(c.numerator for c in v) for v in duals])

    def is_reflexive(self) -> ReflexivityReport:
        """Reflexivity test with the dual vertex list as certificate."""
        try:
            duals = self.polar_dual_rational()
        except OriginNotInteriorError:
            return ReflexivityReport(False, tuple())
        ok = all(c.denominator == 1 for v in duals for c in v)
        return ReflexivityReport(ok, duals)

    # -- dunder plumbing ----------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticePolytope) and self._vertices == other._vertices
        )

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"LatticePolytope(vertices={list(self._vertices)!r})"


def _full_dim_facets(points, ambient: int) -> tuple:
    """Brute-force facet search: every hyperplane spanned by a subset of
    points that keeps all points on one side."""
    if ambient == 1:
        lo = min(p[0] for p in points)
        hi = max(p[0] for p in points)
        return (Facet((-1,), -lo), Facet((1,), hi))
    found = set()
    for subset in itertools.combinations(points, ambient):
        diffs = [
            tuple(x - b for x, b in zip(p, subset[0])) for p in subset[1:]
        ]
        kernel = canonical_kernel_basis(diffs)
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        offset = _dot(normal, subset[0])
        values = [_dot(normal, p) for p in points]
        if all(v <= offset for v in values):
            found.add(Facet(normal, offset))
        elif all(v >= offset for v in values):
            found.add(Facet(tuple(-n for n in normal), -offset))
    return tuple(sorted(found, key=lambda f: (f.normal, f.offset)))


# ---------------------------------------------------------------------------
# the dual simplex pair of the quintic story
# ---------------------------------------------------------------------------


def projective_space_fan_polytope() -> LatticePolytope:
    """Convex hull of e_1..e_4 and -(1,1,1,1): the primitive ray generators
    of the fan of four-dimensional projective space."""
    vertices = [tuple(1 if i == j else 0 for i in range(4)) for j in range(4)]
    vertices.append((-1, -1, -1, -1))
    return LatticePolytope(vertices)


def quintic_newton_polytope() -> LatticePolytope:
    """The reflexive simplex with vertices 5 e_j - (1,1,1,1) and
    -(1,1,1,1): degree-five monomials centered on x1 x2 x3 x4 x5."""
    vertices = [
        tuple(4 if i == j else -1 for i in range(4)) for j in range(4)
    ]
    vertices.append((-1, -1, -1, -1))
    return LatticePolytope(vertices)


# ---------------------------------------------------------------------------
# moduli counting and Gorenstein witnesses
# ---------------------------------------------------------------------------


def moduli_dimension(num_monomials: int, group_dimension: int) -> int:
    """Hypersurface moduli: monomial count minus the symmetry group dimension.

    Degenerate inputs (a count not exceeding the group dimension) are
    rejected rather than clamped.
    """
    n = int(num_monomials)
    g = int(group_dimension)
    if n <= g:
        raise ValueError(
            f"monomial count {n} does not exceed group dimension {g}; "
            "no moduli remain"
        )
    return n - g


@dataclass(frozen=True)
class GorensteinWitness:
    """Rational vectors with P mu = (1,...,1) and nu^t P = (1,...,1)."""

    mu: tuple
    nu: tuple
    pairing: Fraction


def _rows_of(matrix) -> list:
    rows = getattr(matrix, "rows", matrix)
    return [list(r) for r in rows]


def gorenstein_check(matrix) -> GorensteinWitness:
    """Solve the two witness systems for an exponent matrix.

    Free variables are set to zero, making the witness deterministic;
    either system being unsolvable raises ``InfeasibleWitnessError``.
    The pairing nu^t P mu measures the degree drop of the associated
    complete intersection.
    """
    rows = _rows_of(matrix)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    ones_rows = [Fraction(1)] * m
    ones_cols = [Fraction(1)] * n
    mu = solve_rational(rows, ones_rows)
    if mu is None:
        raise InfeasibleWitnessError("no rational mu with P mu = (1,...,1)")
    transpose = [list(col) for col in zip(*rows)]
    nu = solve_rational(transpose, ones_cols)
    if nu is None:
        raise InfeasibleWitnessError("no rational nu with nu^t P = (1,...,1)")
    p_mu = [sum(Fraction(rows[i][j]) * mu[j] for j in range(n)) for i in range(m)]
    pairing = sum((nu[i] * p_mu[i] for i in range(m)), Fraction(0))
    return GorensteinWitness(tuple(mu), tuple(nu), pairing)


def cy_dimension(matrix, witness: GorensteinWitness, d: int) -> int:
    """Dimension of the critical locus as a Calabi-Yau: d - 2 (nu^t P mu).

    The witness is re-validated against the matrix before use.
    """
    rows = _rows_of(matrix)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if len(witness.mu) != n or len(witness.nu) != m:
        raise InfeasibleWitnessError("witness shape does not match the matrix")
    for i in range(m):
        if sum(Fraction(rows[i][j]) * witness.mu[j] for j in range(n)) != 1:
            raise InfeasibleWitnessError("mu does not satisfy P mu = (1,...,1)")
    for j in range(n):
        if sum(witness.nu[i] * Fraction(rows[i][j]) for i in range(m)) != 1:
            raise InfeasibleWitnessError("nu does not satisfy nu^t P = (1,...,1)")
    recomputed = sum(
        (
            witness.nu[i] * Fraction(rows[i][j]) * witness.mu[j]
            for i in range(m)
            for j in range(n)
        ),
        Fraction(0),
    )
    if witness.pairing != recomputed:
        raise InfeasibleWitnessError(
            f"stored pairing {witness.pairing} disagrees with nu^t P mu = {recomputed}"
        )
    value = Fraction(d) - 2 * witness.pairing
    if value.denominator != 1:
        raise ValueError(f"pairing {witness.pairing} gives a non-integer dimension")
    return int(value)
