import math

import pytest

import gentaylor as gt


def test_operator_basics():
    op = gt.Operator(["0", "1"], (-7.0, 7.0))
    assert op.order == 2
    assert op.interval == (-7.0, 7.0)


def test_kernel_matches_sine():
    op = gt.Operator(["0", "1"], (-7.0, 7.0))
    xs = [0.0, 0.5, 1.0, 2.0]
    table = gt.kernel_table(op, xs, [0.0])
    for x, row in zip(xs, table):
        assert row[0] == pytest.approx(math.sin(x), abs=1e-9)


def test_fundamental_table_identity_data():
    op = gt.catalogue_operator("harmonic")
    rows = gt.fundamental_table(op, 0.0, [0.0, 1.0])
    assert rows[0] == pytest.approx([1.0, 0.0], abs=1e-12)
    assert rows[1] == pytest.approx([math.cos(1.0), math.sin(1.0)], abs=1e-9)


def test_reconstruct_closes():
    op = gt.catalogue_operator("harmonic")
    report = gt.reconstruct(op, "exp(x)", 0.0, 1.3)
    assert report["total"] == pytest.approx(math.exp(1.3), abs=1e-8)
    assert report["discrepancy"] < 1e-8
    assert report["initial_data_part"] + report["remainder_part"] == pytest.approx(
        report["total"], abs=1e-12
    )


def test_classical_taylor_matches_reconstruct():
    op = gt.catalogue_operator("pure_derivative_3")
    general = gt.reconstruct(op, "exp(x)", 0.0, 0.9)
    classical = gt.classical_taylor("exp(x)", 3, 0.0, 0.9)
    assert general["total"] == pytest.approx(classical["total"], abs=1e-9)


def test_solve_forced_oscillator():
    op = gt.Operator(["0", "1"], (-7.0, 7.0))
    xs = [0.0, math.pi / 2, math.pi]
    values = gt.solve(op, 0.0, [0.0, 0.0], "1", xs)
    for x, y in zip(xs, values):
        assert y == pytest.approx(1.0 - math.cos(x), abs=1e-8)


def test_solve_memory_tracks_cosh():
    op = gt.Operator(["0"], (-8.0, 8.0))
    result = gt.solve_memory(op, "1", None, 0.0, [1.0], 1.0, steps=200)
    for x, a, b in zip(result["nodes"], result["via_volterra"], result["direct"]):
        assert a == pytest.approx(math.cosh(x), abs=1e-4)
        assert b == pytest.approx(math.cosh(x), abs=1e-4)


def test_catalogue_and_verify():
    names = gt.catalogue_names()
    assert "harmonic" in names and "cosh_ide" in names
    results = gt.verify("harmonic")
    assert results and all(r["passed"] for r in results)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        gt.Operator(["$"], (0.0, 1.0))
    with pytest.raises(ValueError):
        gt.catalogue_operator("no_such_entry")
    with pytest.raises(ValueError):
        gt.load_problem("no/such/file.json")


def test_load_problem(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(
        '{"order": 2, "interval": [-7, 7], "coefficients": ["0", "1"],'
        ' "x0": 0, "init": [0, 0]}'
    )
    info = gt.load_problem(str(path))
    assert info["op"].order == 2
    assert info["x0"] == 0.0
    assert info["init"] == [0.0, 0.0]
    assert not info["has_memory_kernel"]
