import json

import pytest

from tropical_moduli import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_json(capsys):
    code, out, _ = run(
        ["enumerate", "--g", "1", "--w", "eps^3", "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["stratum_sizes"] == {"1": 1, "2": 3, "3": 1}
    assert len(data["classes"]) == 5
    assert all("aut_order" in rec for rec in data["classes"])


def test_enumerate_csv_and_table(capsys):
    code, out, _ = run(
        ["enumerate", "--g", "0", "--w", "1^4", "--format", "csv"], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert "edge_count" in lines[0].split(",")
    assert len(lines) == 4  # header + 3 classes
    code, out, _ = run(["enumerate", "--g", "0", "--w", "1^4"], capsys)
    assert code == 0
    assert "edge count 1: 3 classes" in out


def test_table_check_passes(capsys):
    code, out, _ = run(["table", "--check", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["checked"] is True
    assert data["mismatches"] == []
    assert data["table"]["g=1,n=3,m=2"] == 10
    assert data["table"]["g=0,n=2,m=1"] == "-"


def test_euler_both_agrees(capsys):
    code, out, _ = run(
        ["euler", "--g", "1", "--w", "1,1,eps", "--method", "both",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["direct"] == data["formula"] == 2
    assert data["agreement"] is True


def test_euler_heavy_light_preset(capsys):
    code, out, _ = run(
        ["euler", "--g", "0", "--heavy-light", "--n", "3", "--m", "2",
         "--method", "direct", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["direct"] == -3
    assert data["meta"]["eps"] == "1/3"


def test_homology_json(capsys):
    code, out, _ = run(
        ["homology", "--g", "1", "--w", "eps^3", "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["reduced_betti"] == [0, 0, 1]


def test_homology_subcomplex_point_like(capsys):
    code, out, _ = run(
        ["homology", "--g", "2", "--w", "1", "--filter", "lw",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["betti"][0] == 1
    assert all(b == 0 for b in data["betti"][1:])


def test_validation_errors_exit_two(capsys):
    # moduli condition fails: 2g - 2 + |w| = 0
    code, _, err = run(["euler", "--g", "0", "--w", "1,1"], capsys)
    assert code == 2
    assert err.strip()
    # malformed weight spec
    code, _, _ = run(["euler", "--g", "1", "--w", "2,1"], capsys)
    assert code == 2
    # heavy-light without --n/--m
    code, _, _ = run(["euler", "--g", "1", "--heavy-light"], capsys)
    assert code == 2


def test_budget_flag_and_env(capsys, monkeypatch):
    code, _, err = run(
        ["enumerate", "--g", "1", "--w", "1,1", "--budget", "2"], capsys
    )
    assert code == 2
    assert "budget" in err.lower()
    monkeypatch.setenv(cli.BUDGET_ENV_VAR, "2")
    code, _, err = run(["enumerate", "--g", "1", "--w", "1,1"], capsys)
    assert code == 2
    monkeypatch.setenv(cli.BUDGET_ENV_VAR, "100000")
    code, _, _ = run(["enumerate", "--g", "1", "--w", "1,1"], capsys)
    assert code == 0


def test_worker_determinism(capsys):
    argv = ["enumerate", "--g", "1", "--w", "1,1", "--format", "json"]
    _, serial, _ = run(argv, capsys)
    _, parallel, _ = run(argv + ["--workers", "2"], capsys)
    assert serial == parallel


def test_verify_passes(capsys):
    code, out, _ = run(
        ["verify", "--g-max", "1", "--format", "json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["failures"] == 0
    assert all(chk["pass"] for chk in data["checks"])
    names = {chk["check"] for chk in data["checks"]}
    assert "d_squared_zero" in names
    assert "contraction_closure" in names


def test_verify_detects_injected_sign_flip(capsys):
    code, _, err = run(
        ["verify", "--g-max", "1", "--inject-sign-flip", "--format", "json"],
        capsys,
    )
    assert code == 3
    assert "d_squared_zero" in err


def test_unknown_command_rejected(capsys):
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])
