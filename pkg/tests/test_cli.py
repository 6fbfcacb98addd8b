import json

from polysmooth import cli


def run_cli(capsys, argv):
    rc = cli.main(argv)
    out = capsys.readouterr().out
    return rc, out


def test_psi_subcommand(capsys):
    rc, out = run_cli(capsys, ["psi", "--poly", "t^2+1", "--x", "1000", "--u", "2"])
    assert rc == 0
    rec = json.loads(out)
    assert rec["psi"] == 22  # == psi_oracle(t^2+1, 1000, 31)
    assert rec["y"] == 31.0  # floor(1000^(1/2)) exactly
    assert rec["config"]["version"]
    assert 0 < rec["martin"] < 1
    assert rec["thm11_main_x"] > rec["psi"]


def test_psi_requires_bound(capsys):
    rc, _ = run_cli(capsys, ["psi", "--poly", "t^2+1", "--x", "100"])
    assert rc == 1


def test_bound_subcommand(capsys):
    rc, out = run_cli(capsys, ["bound", "--d", "2", "--g", "1", "--u", "1"])
    assert rc == 0
    rec = json.loads(out)
    assert abs(rec["gamma"] - 0.913967211436) < 1e-11
    assert abs(rec["cassels"] - 0.543016394282) < 1e-11


def test_bound_grid_csv(capsys):
    rc, out = run_cli(
        capsys,
        ["bound", "--d", "2,3", "--g", "1", "--u", "1,2", "--format", "csv"],
    )
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5  # header + 4 grid points


def test_dickman_csv(capsys):
    rc, out = run_cli(
        capsys,
        ["dickman", "--u-max", "3", "--step", "0.5", "--format", "csv"],
    )
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "u,rho"
    assert len(lines) == 8
    row2 = dict(zip(lines[0].split(","), lines[5].split(",")))
    assert abs(float(row2["rho"]) - 0.30685281944) < 1e-9


def test_omega_subcommand(capsys):
    rc, out = run_cli(capsys, ["omega", "--poly", "t^2+1", "--k", "10,4,1"])
    assert rc == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert [r["omega"] for r in recs] == [2, 0, 1]


def test_omega_factors_input(capsys):
    rc, out = run_cli(
        capsys, ["omega", "--factors", "[[0,1],[1,0,1]]", "--k", "10"]
    )
    assert rc == 0
    assert json.loads(out)["omega"] == 6  # roots of t(t^2+1) mod 10: 0,2,3,5,7,8


def test_vw_verify_single(capsys):
    rc, out = run_cli(
        capsys,
        ["vw-verify", "--poly", "t^2+1", "--x", "100", "--z", "25",
         "--y", "10", "--kappa", "2"],
    )
    assert rc == 0
    rec = json.loads(out)
    assert rec["verdict_2_1"] and rec["verdict_2_2"]
    assert rec["lemma31"]["verdict"]
    assert rec["t0"] == 2


def test_vw_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps([
        {"factors": [[1, 0, 1]], "x": 100, "z": 25, "y": 10},
        {"factors": [[1, 0, 1]], "x": 200, "z": 60, "y": 6, "depth": 2},
    ]))
    rc, out = run_cli(capsys, ["vw-verify", "--config", str(cfg)])
    assert rc == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert recs[0]["method"] == "prop21"
    assert recs[1]["method"] == "prop32"
    assert len(recs[1]["v_minus"]) == 2


def test_calpha_subcommand(capsys):
    rc, out = run_cli(capsys, ["calpha", "--m", "2", "--x", "3"])
    assert rc == 0
    assert json.loads(out)["count"] == 2


def test_calpha_window(capsys):
    rc, out = run_cli(capsys, ["calpha", "--m", "2", "--window", "100,50"])
    assert rc == 0
    rec = json.loads(out)
    assert rec["include_zero"] is True
    assert rec["lo"] == 101


def test_rb_subcommand(capsys):
    rc, out = run_cli(capsys, ["rb", "--b", "1", "--x", "10"])
    assert rc == 0
    assert json.loads(out)["count"] == 7


def test_rb_dump(capsys):
    rc, out = run_cli(capsys, ["rb", "--b", "1", "--x", "10", "--dump"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("b,n,pplus")
    assert len(lines) == 11


def test_arctan_subcommand(capsys):
    rc, out = run_cli(capsys, ["arctan", "--x", "10"])
    assert rc == 0
    assert json.loads(out)["count"] == 7


def test_domain_error_exit_code(capsys):
    rc, _ = run_cli(capsys, ["rb", "--b", "-4", "--x", "10"])
    assert rc == 1
    err = capsys.readouterr  # stderr captured separately above


def test_usage_error_exit_code(capsys):
    assert cli.main(["nonsense"]) == 2
    capsys.readouterr()


def test_schema_dump(capsys):
    for cmd in ["psi", "bound", "dickman", "omega", "vw-verify", "calpha",
                "rb", "arctan", "verify"]:
        argv = [cmd, "--schema"]
        # satisfy required arguments with dummies
        req = {
            "psi": ["--x", "1"],
            "bound": ["--d", "2", "--g", "1", "--u", "1"],
            "omega": ["--k", "1"],
            "calpha": ["--m", "2"],
            "rb": ["--b", "1", "--x", "1"],
            "arctan": ["--x", "1"],
        }
        rc, out = run_cli(capsys, argv + req.get(cmd, []))
        assert rc == 0
        assert json.loads(out)


def test_float_serialization_12_digits(capsys):
    rc, out = run_cli(capsys, ["bound", "--d", "2", "--g", "1", "--u", "1"])
    rec = json.loads(out)
    assert rec["gamma"] == float(f"{0.9139672114362374:.12g}")


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "psi.json"
    rc, _ = run_cli(
        capsys,
        ["psi", "--poly", "t", "--x", "100", "--y", "5", "--out", str(out_path)],
    )
    assert rc == 0
    rec = json.loads(out_path.read_text())
    assert rec["psi"] == 34
