from __future__ import annotations

import json
import random
import time
from fractions import Fraction

from quintic_mirror import cli
from quintic_mirror.enumerative import (
    extract_instantons,
    quantum_ring,
    yukawa_normalized,
)
from quintic_mirror.exactnum import QQ, TruncatedSeries
from quintic_mirror.glsm import (
    ChargeFactorization,
    ExponentMatrix,
    basis_change,
    group_from_charges,
    invariant_coordinates,
    transpose_mirror,
    verify_factorization,
)
from quintic_mirror.kontsevich import (
    chern_from_adjunction,
    euler_number,
    jordan_profile,
    matrix_order,
    quintic_spherical,
    quintic_twist,
    twist_matrix,
)
from quintic_mirror.linalg import SquareExactMatrix, integer_kernel_basis
from quintic_mirror.picard_fuchs import (
    PeriodOperator,
    apply_operator,
    frobenius_at_zero,
    monodromy_at_infinity,
    monodromy_at_zero,
)
from quintic_mirror.syz import (
    VERTEX_TYPE_12,
    VERTEX_TYPE_21,
    UnipotentMonodromy3,
    VertexData,
    classify_vertex,
    k3_semistable_check,
    mirror_swap,
    quintic_fibration_summary,
    sl2_mirror_selfconjugacy,
)
from quintic_mirror.toric import (
    LatticePolytope,
    moduli_dimension,
    projective_space_fan_polytope,
    quintic_newton_polytope,
)


def _passed(tag: str) -> None:
    print(f"{tag}: PASS")


def test_criterion_01_instanton_numbers(capsys) -> None:
    started = time.monotonic()
    code = cli.main(["gw", "--format", "structured", "--dmax", "3"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["instanton_numbers"] == {"1": 2875, "2": 609250, "3": 317206375}
    table = extract_instantons(yukawa_normalized(12), 10)
    for d in range(1, 11):
        assert isinstance(table.n[d], int)
    assert table.n[1] == 2875
    assert table.n[2] == 609250
    assert table.n[3] == 317206375
    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    _passed("criterion 01 (instanton numbers, integrality, < 10 s)")


def test_criterion_02_transform_product() -> None:
    ts = quintic_twist() * quintic_spherical()
    assert (ts**5).is_identity()
    expected = SquareExactMatrix.from_rows(
        QQ,
        [
            [-4, 1, Fraction(1, 2), Fraction(1, 6)],
            [Fraction(-20, 3), 1, 1, Fraction(1, 2)],
            [-5, 0, 1, 1],
            [-5, 0, 0, 1],
        ],
    )
    assert ts == expected
    assert [ts.entry(i, 0) for i in range(4)] == [-4, Fraction(-20, 3), -5, -5]
    _passed("criterion 02 (fifth power of the twist product is the identity)")


def test_criterion_03_operator_residual() -> None:
    operator = PeriodOperator.quintic()
    bundle4 = frobenius_at_zero(50)
    assert apply_operator(operator, bundle4.series).is_zero()
    bundle5 = frobenius_at_zero(50, modulus_degree=5)
    residual = apply_operator(operator, bundle5.series)
    alpha4 = bundle5.ring.generator() ** 4
    assert residual.coefficient(0).coeffs == alpha4.coeffs
    for n in range(1, 51):
        assert residual.coefficient(n).is_zero()
    _passed("criterion 03 (operator residual through order 50)")


def test_criterion_04_monodromy_orders() -> None:
    at_inf = monodromy_at_infinity().matrix
    assert matrix_order(at_inf, 10) == 5
    at_zero = monodromy_at_zero().matrix
    assert at_zero == twist_matrix(1)
    assert jordan_profile(at_zero) == (3, 2, 1, 0)
    _passed("criterion 04 (monodromy orders and jordan profile)")


def test_criterion_05_polytope_duality() -> None:
    fan = projective_space_fan_polytope()
    newton = quintic_newton_polytope()
    assert fan.polar_dual() == newton
    assert newton.polar_dual() == fan
    assert len(newton.lattice_points()) == 126
    assert moduli_dimension(126, 25) == 101
    _passed("criterion 05 (polar duality, 126 points, dimension 101)")


def test_criterion_06_glsm_groups() -> None:
    p = ExponentMatrix.quintic()
    f = ChargeFactorization.quintic()
    assert verify_factorization(p, f).ok
    structure, generators = group_from_charges(f.t_rows)
    assert (structure.torus_rank, structure.torsion) == (1, ())
    assert generators == [(-5, 1, 1, 1, 1, 1)]
    p_hat, f_hat = transpose_mirror(p, f)
    assert verify_factorization(p_hat, f_hat).ok
    structure_hat, _ = group_from_charges(f_hat.t_rows)
    assert (structure_hat.torus_rank, structure_hat.torsion) == (1, (5, 5, 5))
    _passed("criterion 06 (gauge groups of both factorizations)")


def test_criterion_07_invariant_coordinate() -> None:
    p_hat = transpose_mirror(ExponentMatrix.quintic(), ChargeFactorization.quintic())[0]
    assert invariant_coordinates(p_hat) == [(-5, 1, 1, 1, 1, 1)]
    _passed("criterion 07 (invariant modulus coordinate exponents)")


def test_criterion_08_fibration_counts() -> None:
    summary = quintic_fibration_summary()
    assert (summary.v21, summary.v12, summary.edges) == (250, 50, 450)
    chi = euler_number(chern_from_adjunction())
    assert chi == -200
    assert chi == 2 * (1 - moduli_dimension(126, 25))
    assert summary.v21 - summary.v12 == -chi
    _passed("criterion 08 (graph counts against the euler number)")


def _shear_vertex(rng: random.Random) -> VertexData:
    while True:
        b = tuple(rng.randint(-4, 4) for _ in range(3))
        if any(b):
            break
    u, v = integer_kernel_basis([list(b)])
    while True:
        x1, y1, x2, y2 = (rng.randint(-3, 3) for _ in range(4))
        if x1 * y2 - x2 * y1 != 0:
            break
    a1 = tuple(x1 * p + y1 * q for p, q in zip(u, v))
    a2 = tuple(x2 * p + y2 * q for p, q in zip(u, v))
    a3 = tuple(-p - q for p, q in zip(a1, a2))
    mats = []
    for a in (a1, a2, a3):
        mats.append(
            [[(1 if i == j else 0) + a[i] * b[j] for j in range(3)] for i in range(3)]
        )
    return VertexData.from_rows_triple(*mats)


def _conjugated(v: VertexData, rng: random.Random) -> VertexData:
    rows = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    for _ in range(8):
        i, j = rng.randrange(3), rng.randrange(3)
        if i != j:
            q = rng.randint(-2, 2)
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    u = UnipotentMonodromy3.from_rows(rows)
    u_inv = u.inverse()
    return VertexData(tuple(u_inv * m * u for m in v.monodromies))


def test_criterion_09_swap_commutes_with_classification() -> None:
    rng = random.Random(20260822)
    swap = {VERTEX_TYPE_21: VERTEX_TYPE_12, VERTEX_TYPE_12: VERTEX_TYPE_21}
    count_21 = 0
    count_12 = 0
    for _ in range(105):
        vertex = _conjugated(_shear_vertex(rng), rng)
        label = classify_vertex(vertex)
        assert label == VERTEX_TYPE_21
        count_21 += 1
        mirrored = mirror_swap(vertex)
        assert classify_vertex(mirrored) == swap[label]
        count_12 += 1
        assert classify_vertex(mirror_swap(mirrored)) == label
    assert count_21 >= 100
    assert count_12 >= 100
    _passed("criterion 09 (classification commutes with the fiberwise swap)")


def test_criterion_10_k3_checks() -> None:
    assert k3_semistable_check([1] * 24)
    assert k3_semistable_check([12, 12])
    assert not k3_semistable_check([1] * 23)
    for k in range(1, 11):
        c = sl2_mirror_selfconjugacy(k)
        m = ((1, k), (0, 1))
        inv_t = ((1, 0), (-k, 1))
        c_inv = ((c[1][1], -c[0][1]), (-c[1][0], c[0][0]))

        def mul(a, b):
            return tuple(
                tuple(sum(a[i][t] * b[t][j] for t in range(2)) for j in range(2))
                for i in range(2)
            )

        assert mul(mul(c, inv_t), c_inv) == m
    _passed("criterion 10 (K3 multiplicity sum and self-conjugacy witnesses)")


def test_criterion_11_property_suites() -> None:
    rng = random.Random(20260822)

    # exact series round trips
    for _ in range(25):
        coeffs = [Fraction(1)] + [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(7)
        ]
        f = TruncatedSeries.from_coefficients(QQ, coeffs)
        assert (f * f.inverse()).coeffs == TruncatedSeries.one(QQ, 7).coeffs
        g = TruncatedSeries.from_coefficients(QQ, [0, 1] + coeffs[2:])
        ident = g.compose(g.reversion())
        assert ident.coeffs == tuple(
            Fraction(1) if n == 1 else Fraction(0) for n in range(ident.order + 1)
        )

    # quantum ring axioms
    ring = quantum_ring(3)
    basis = [ring.basis_element(k) for k in range(4)]
    for x in range(4):
        for y in range(4):
            for z in range(4):
                frob_left = ring.pairing(ring.product(basis[x], basis[y]), basis[z])
                frob_right = ring.pairing(basis[x], ring.product(basis[y], basis[z]))
                assert frob_left.coeffs == frob_right.coeffs
                assoc_left = ring.product(ring.product(basis[x], basis[y]), basis[z])
                assoc_right = ring.product(basis[x], ring.product(basis[y], basis[z]))
                for l_comp, r_comp in zip(assoc_left, assoc_right):
                    assert l_comp.coeffs == r_comp.coeffs

    # polarity involution
    fan = projective_space_fan_polytope()
    assert fan.polar_dual().polar_dual() == fan
    cross = LatticePolytope([(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert cross.polar_dual().polar_dual() == cross

    # factorization survives 100 unimodular basis changes
    p = ExponentMatrix.quintic()
    f = ChargeFactorization.quintic()
    for _ in range(100):
        rows = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
        for _ in range(8):
            i, j = rng.randrange(5), rng.randrange(5)
            if i != j:
                q = rng.randint(-2, 2)
                rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
        changed = basis_change(f, rows)
        report = verify_factorization(p, changed)
        assert report.ok
        structure, _ = group_from_charges(changed.t_rows)
        assert (structure.torus_rank, structure.torsion) == (1, ())
    _passed("criterion 11 (ring, series, polarity, and factorization properties)")
