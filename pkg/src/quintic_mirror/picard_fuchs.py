"""Period operator of the quintic threefold and its boundary data.

The operator is D = theta^4 - 5 z (5 theta + 1)(5 theta + 2)(5 theta + 3)
(5 theta + 4) with theta = z d/dz, written as a sum of terms z^j p_j(theta)
with rational theta-polynomials p_j.  The series variable here is the one
in which the holomorphic solution sum (5n)!/(n!)^5 z^n has positive
coefficients; in this coordinate the non-toric degeneration sits at
z = 5^-5.

A single Frobenius computation over the nilpotent ring QQ[a]/(a^N)
produces the holomorphic solution together with its logarithmic partners:
the bundle Phi_a = sum_n A_n(a) z^(a+n) expands as
Phi^(0) + Phi^(1) a + Phi^(2) a^2 + ..., and component k is the plain
rational series multiplying a^k.

Monodromy matrices act on row vectors (gamma -> gamma M) throughout; this
orientation is what makes the displayed unipotent matrix at z = 0 come out
upper-triangular with bands 1, 1/2, 1/6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    QQ,
    ZETA5_FIELD,
    NilpotentRing,
    TruncatedSeries,
)
from .linalg import SquareExactMatrix

BASIS_LAMBDA_AT_ZERO = "lambda-power-basis-at-zero"
BASIS_IDEMPOTENT_AT_INFINITY = "idempotent-basis-at-infinity"
BASIS_POWER_AT_INFINITY = "alpha-power-basis-at-infinity"


def poly_mul(p, q) -> tuple:
    """Product of two rational polynomials given as low-to-high coefficients."""
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * Fraction(b)
    return tuple(out)


def eval_theta_poly(coeffs, x, ring):
    """Evaluate a rational theta-polynomial at a ring element, by Horner."""
    acc = ring.zero()
    for c in reversed(coeffs):
        acc = acc * x + ring.coerce(Fraction(c))
    return acc


@dataclass(frozen=True)
class PeriodOperator:
    """An operator sum_j z^j p_j(theta); terms[j] holds the coefficients of p_j."""

    terms: tuple

    @staticmethod
    def quintic() -> "PeriodOperator":
        """theta^4 - 5 z (5 theta + 1)(5 theta + 2)(5 theta + 3)(5 theta + 4)."""
        p0 = (Fraction(0),) * 4 + (Fraction(1),)
        p1 = (Fraction(1),)
        for k in range(1, 5):
            p1 = poly_mul(p1, (Fraction(k), Fraction(5)))
        p1 = tuple(Fraction(-5) * c for c in p1)
        return PeriodOperator((p0, p1))

    def apply(self, series: TruncatedSeries) -> TruncatedSeries:
        return apply_operator(self, series)

    def to_json(self) -> dict:
        from .exactnum import rational_str

        return {
            "version": 1,
            "theta_polynomials": [[rational_str(c) for c in t] for t in self.terms],
        }


def apply_operator(op: PeriodOperator, series: TruncatedSeries) -> TruncatedSeries:
    """Apply sum_j z^j p_j(theta) to x^shift * sum_n a_n x^n coefficientwise.

    The term z^j p_j(theta) sends a_m x^(shift+m) to
    p_j(shift + m) a_m x^(shift+m+j), so the residual coefficient at
    exponent shift + n is sum_j p_j(shift + n - j) a_{n-j}.
    """
    ring = series.ring
    s = series.shift
    out = []
    for n in range(series.order + 1):
        acc = ring.zero()
        for j, pj in enumerate(op.terms):
            if j > n:
                break
            x = s + ring.coerce(n - j)
            acc = acc + eval_theta_poly(pj, x, ring) * series.coeffs[n - j]
        out.append(acc)
    return TruncatedSeries(ring, tuple(out), s)


@dataclass(frozen=True)
class FrobeniusBundle:
    """The Frobenius solution Phi_a = sum_n A_n(a) z^(a+n) over QQ[a]/(a^N)."""

    ring: NilpotentRing
    series: TruncatedSeries

    @property
    def order(self) -> int:
        return self.series.order

    def component(self, k: int) -> TruncatedSeries:
        """The rational series multiplying a^k in the bundle."""
        if not 0 <= k < self.ring.modulus_degree:
            raise IndexError(f"component {k} outside 0..{self.ring.modulus_degree - 1}")
        return TruncatedSeries(
            QQ, tuple(c.coeffs[k] for c in self.series.coeffs), Fraction(0)
        )

    def to_json(self) -> dict:
        return {"version": 1, "series": self.series.to_json()}


def frobenius_at_zero(order: int, modulus_degree: int = 4) -> FrobeniusBundle:
    """Solve the quintic operator at z = 0 over QQ[a]/(a^modulus_degree).

    The coefficients A_n(a) = prod_{k=1}^{5n} (5a + k) / prod_{k=1}^{n}
    (a + k)^5 are built iteratively; A_0 = 1.  Setting a = 0 recovers the
    holomorphic coefficients (5n)!/(n!)^5.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if modulus_degree < 1:
        raise ValueError("modulus degree must be >= 1")
    ring = NilpotentRing(modulus_degree)
    alpha = ring.generator() if modulus_degree >= 2 else ring.zero()
    coeffs = [ring.one()]
    a_n = ring.one()
    for n in range(1, order + 1):
        num = ring.one()
        for k in range(5 * n - 4, 5 * n + 1):
            num = num * (alpha * 5 + k)
        den = (alpha + n) ** 5
        a_n = a_n * num * den.inverse()
        coeffs.append(a_n)
    series = TruncatedSeries(ring, tuple(coeffs), alpha)
    return FrobeniusBundle(ring, series)


def solutions_at_infinity(order: int) -> list:
    """The four solutions at z = infinity, as series in w = 1/z.

    Solution k (k = 1..4) is w^(k/5) * sum_m c_m w^m with
    c_m = [a (a+1) ... (a+m-1)]^5 / [(5a)(5a+1) ... (5a+5m-1)] at a = k/5;
    the returned series carries the exponent k/5 in its shift.  These
    exponents are exactly the roots of the indicial polynomial
    (5a - 1)(5a - 2)(5a - 3)(5a - 4).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    out = []
    for k in range(1, 5):
        alpha = Fraction(k, 5)
        coeffs = [Fraction(1)]
        c = Fraction(1)
        for m in range(1, order + 1):
            c = c * (alpha + m - 1) ** 5
            for i in range(5):
                c = c / (5 * alpha + 5 * (m - 1) + i)
            coeffs.append(c)
        out.append(TruncatedSeries.from_coefficients(QQ, coeffs, shift=alpha))
    return out


def indicial_at_infinity(alpha) -> Fraction:
    """(5a - 1)(5a - 2)(5a - 3)(5a - 4), whose roots are the exponents at infinity."""
    a = Fraction(alpha)
    out = Fraction(1)
    for k in range(1, 5):
        out *= 5 * a - k
    return out


def residual_factor_at_infinity(alpha) -> Fraction:
    """The coefficient of z^(-a+1) left over when the operator hits w^a-type data:
    -5 (-5a + 1)(-5a + 2)(-5a + 3)(-5a + 4)."""
    a = Fraction(alpha)
    out = Fraction(-5)
    for k in range(1, 5):
        out *= -5 * a + k
    return out


@dataclass(frozen=True)
class MonodromyMatrix:
    """A monodromy matrix together with the basis its entries refer to.

    Matrices act on row vectors: transporting gamma once around the
    marked point sends it to gamma * matrix.
    """

    matrix: SquareExactMatrix
    basis_tag: str

    def to_json(self) -> dict:
        return {
            "version": 1,
            "basis": self.basis_tag,
            "entries": self.matrix.to_json(),
        }


def monodromy_at_zero() -> MonodromyMatrix:
    """Monodromy around z = 0 in the basis 1, L, L^2, L^3 (L = log branch step).

    The loop multiplies the bundle by the exponential of the branch step,
    and the matrix is literally multiplication by exp(L) = sum L^k / k! in
    QQ[L]/(L^4): unipotent with superdiagonal bands 1, 1/2, 1/6.
    """
    ring = NilpotentRing(4)
    lam = ring.generator()
    e = ring.zero()
    fact = 1
    power = ring.one()
    for k in range(4):
        if k:
            power = power * lam
            fact *= k
        e = e + power * Fraction(1, fact)
    rows = []
    basis_elt = ring.one()
    for j in range(4):
        if j:
            basis_elt = basis_elt * lam
        rows.append((basis_elt * e).coeffs)
    matrix = SquareExactMatrix.from_rows(QQ, rows)
    return MonodromyMatrix(matrix, BASIS_LAMBDA_AT_ZERO)


def monodromy_at_infinity() -> MonodromyMatrix:
    """Monodromy around z = infinity in the idempotent basis: diag(zeta^1..zeta^4).

    Each solution w^(k/5) * (series in w) picks up the phase zeta_5^k when
    w winds once around 0, so the matrix is diagonal with the four
    primitive fifth roots of unity on the diagonal.  Its order is 5 and
    its determinant is zeta^10 = 1.
    """
    field = ZETA5_FIELD
    rows = [
        [field.zeta(k) if j == k - 1 else field.zero() for j in range(4)]
        for k in range(1, 5)
    ]
    matrix = SquareExactMatrix.from_rows(field, rows)
    return MonodromyMatrix(matrix, BASIS_IDEMPOTENT_AT_INFINITY)


def infinity_basis_change() -> SquareExactMatrix:
    """Row-convention base change from the power basis 1, a, a^2, a^3 to the
    idempotent basis at infinity: B[j][k-1] = (k/5)^j, a Vandermonde matrix.

    Coordinates transform as gamma_idem = gamma_power * B, so the power
    basis monodromy is B * diag(zeta^k) * B^-1.
    """
    field = ZETA5_FIELD
    rows = [
        [field.coerce(Fraction(k, 5) ** j) for k in range(1, 5)] for j in range(4)
    ]
    return SquareExactMatrix.from_rows(field, rows)


def monodromy_at_infinity_power_basis() -> MonodromyMatrix:
    """The infinity monodromy conjugated into the power basis 1, a, a^2, a^3."""
    b = infinity_basis_change()
    d = monodromy_at_infinity().matrix
    return MonodromyMatrix(b * d * b.inverse(), BASIS_POWER_AT_INFINITY)
