from __future__ import annotations

import json
from fractions import Fraction

import pytest

from quintic_mirror import cli
from quintic_mirror.enumerative import IntegralityError

_SHEAR_TRIPLE = [
    [[1, 0, 1], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
    [[1, 0, -1], [0, 1, -1], [0, 0, 1]],
]


def _run(capsys, argv: list) -> tuple:
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write_json(tmp_path, name: str, payload) -> str:
    target = tmp_path / name
    target.write_text(json.dumps(payload, sort_keys=True))
    return str(target)


# -- happy paths -------------------------------------------------------------


def test_gw_table_lists_first_counts(capsys) -> None:
    code, out, err = _run(capsys, ["gw", "--dmax", "3"])
    assert code == 0
    assert err == ""
    rows = [line.split() for line in out.splitlines() if line and line[0] == " "]
    table = {int(d): int(n) for d, n in rows}
    assert table == {1: 2875, 2: 609250, 3: 317206375}


def test_gw_structured_document(capsys) -> None:
    code, out, err = _run(capsys, ["gw", "--format", "structured", "--dmax", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "quintic-mirror/1"
    assert doc["command"] == "gw"
    assert doc["instanton_numbers"] == {"1": 2875, "2": 609250, "3": 317206375}
    assert all(isinstance(n, int) for n in doc["instanton_numbers"].values())
    coeffs = doc["kappa"]["coefficients"]
    assert coeffs[0] == "5/1"
    assert coeffs[1] == "2875/1"


def test_periods_table_and_residual(capsys) -> None:
    code, out, err = _run(capsys, ["periods", "--order", "3"])
    assert code == 0
    assert "phi0" in out
    assert "120" in out
    assert "operator residual vanishes: yes" in out


def test_periods_structured_component_values(capsys) -> None:
    code, out, err = _run(capsys, ["periods", "--format", "structured", "--order", "2"])
    assert code == 0
    doc = json.loads(out)
    phi0 = doc["components"]["phi0"]["coefficients"]
    assert phi0 == ["1/1", "120/1", "113400/1"]
    assert doc["operator_residual_zero"] is True


def test_monodromy_orders(capsys) -> None:
    code, out, err = _run(capsys, ["monodromy", "--format", "structured"])
    assert code == 0
    doc = json.loads(out)
    matrices = doc["matrices"]
    assert matrices["at_zero"]["order"] is None
    assert matrices["at_zero"]["jordan_profile"] == [3, 2, 1, 0]
    assert matrices["at_infinity"]["order"] == 5
    assert matrices["at_infinity_power_basis"]["order"] == 5


def test_kontsevich_reports_order_five(capsys) -> None:
    code, out, err = _run(capsys, ["kontsevich"])
    assert code == 0
    assert "order of T*S: 5" in out
    assert "euler number: -200" in out


def test_polytope_builtin_summary(capsys) -> None:
    code, out, err = _run(capsys, ["polytope", "--format", "structured"])
    assert code == 0
    doc = json.loads(out)
    assert doc["reflexive"] is True
    assert doc["dual_lattice_point_count"] == 126
    assert doc["moduli_dimension"] == 101


def test_polytope_from_file_non_reflexive(capsys, tmp_path) -> None:
    path = _write_json(
        tmp_path, "stretched.json", {"points": [[2, 0], [0, 2], [-2, -2]]}
    )
    code, out, err = _run(capsys, ["polytope", "--in", path])
    assert code == 0
    assert "reflexive: no" in out


def test_glsm_transpose_groups(capsys) -> None:
    code, out, err = _run(capsys, ["glsm", "transpose"])
    assert code == 0
    assert "gauge group: U(1)" in out
    assert "mirror gauge group: U(1) x (Z_5)^3" in out
    generator_lines = [
        line for line in out.splitlines() if line.split() == ["-5", "1", "1", "1", "1", "1"]
    ]
    assert len(generator_lines) >= 2


def test_glsm_kahler_builtin(capsys) -> None:
    code, out, err = _run(capsys, ["glsm", "kahler", "--format", "structured"])
    assert code == 0
    doc = json.loads(out)
    assert doc["r"] == ["1", "0"]


def test_glsm_kahler_from_file(capsys, tmp_path) -> None:
    path = _write_json(
        tmp_path,
        "radii.json",
        {"magnitudes": [1.0, 1.0], "charges": [[1, 0], [0, 1]]},
    )
    code, out, err = _run(capsys, ["glsm", "kahler", "--in", path])
    assert code == 0
    assert "r: 0 0" in out


def test_syz_classify_round_trip(capsys, tmp_path) -> None:
    path = _write_json(tmp_path, "vertex.json", {"monodromies": _SHEAR_TRIPLE})
    code, out, err = _run(capsys, ["syz", "classify", "--in", path])
    assert code == 0
    assert "vertex type: type21" in out
    assert "d1=2 d2=1" in out


def test_syz_quintic_counts(capsys) -> None:
    code, out, err = _run(capsys, ["syz", "quintic-counts", "--format", "structured"])
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"] == {"v21": 250, "v12": 50, "edges": 450}


def test_syz_k3_builtin(capsys) -> None:
    code, out, err = _run(capsys, ["syz", "k3"])
    assert code == 0
    assert "fiber multiplicity sum: 24" in out
    assert "yes" in out


# -- exit codes and error reporting -----------------------------------------


def test_usage_error_from_bad_order(capsys) -> None:
    code, out, err = _run(capsys, ["periods", "--order", "0"])
    assert code == 1
    assert "error: usage:" in err


def test_usage_error_from_unknown_command(capsys) -> None:
    code, out, err = _run(capsys, ["not-a-command"])
    assert code == 1
    assert "error: usage:" in err


def test_usage_error_when_dmax_exceeds_order(capsys) -> None:
    code, out, err = _run(capsys, ["gw", "--order", "2", "--dmax", "5"])
    assert code == 1
    assert "below --dmax" in err


def test_input_error_for_missing_file(capsys, tmp_path) -> None:
    code, out, err = _run(capsys, ["syz", "classify", "--in", str(tmp_path / "no.json")])
    assert code == 2
    assert err.startswith("error: input:")


def test_input_error_for_bad_product(capsys, tmp_path) -> None:
    triple = [_SHEAR_TRIPLE[0], _SHEAR_TRIPLE[1], _SHEAR_TRIPLE[1]]
    path = _write_json(tmp_path, "bad.json", {"monodromies": triple})
    code, out, err = _run(capsys, ["syz", "classify", "--in", path])
    assert code == 2
    assert "error: input:" in err


def test_input_error_for_malformed_json(capsys, tmp_path) -> None:
    target = tmp_path / "broken.json"
    target.write_text("{not json")
    code, out, err = _run(capsys, ["polytope", "--in", str(target)])
    assert code == 2
    assert "error: input:" in err


def test_invariant_error_exits_three(capsys, monkeypatch) -> None:
    def explode(kappa, d_max):
        raise IntegralityError(2, Fraction(1, 2))

    monkeypatch.setattr(cli.enumerative, "extract_instantons", explode)
    code, out, err = _run(capsys, ["gw", "--dmax", "2"])
    assert code == 3
    assert err.startswith("error: invariant:")


# -- determinism -------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["gw", "--format", "structured", "--dmax", "3"],
        ["periods", "--order", "4"],
        ["monodromy", "--format", "structured"],
        ["glsm", "transpose", "--format", "structured"],
        ["kontsevich"],
    ],
)
def test_output_is_byte_deterministic(capsys, argv) -> None:
    first = _run(capsys, argv)
    second = _run(capsys, argv)
    assert first == second
    assert first[0] == 0


def test_structured_output_has_sorted_keys(capsys) -> None:
    code, out, err = _run(capsys, ["periods", "--format", "structured", "--order", "2"])
    doc = json.loads(out)
    assert out == json.dumps(doc, indent=2, sort_keys=True) + "\n"
