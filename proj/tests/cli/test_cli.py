import csv
import json

import jsonschema
import pytest


def report_of(result):
    return json.loads(result.stdout)


def test_s2_ell4_torus_is_mixing(cli, schema):
    r = cli("check-mixing", "--space", "s2", "--ell", 4, "--basis", "torus", "--seed", 7)
    assert r.returncode == 0, r.stderr
    rep = report_of(r)
    jsonschema.validate(rep, schema("mixing_report.schema.json"))
    assert rep["verdict"] == "Mixing"
    assert rep["report"]["margin"] > 1e-6
    assert rep["config"]["seed"] == 7


def test_s2_ell2_is_not_mixing(cli, schema):
    r = cli("check-mixing", "--space", "s2", "--ell", 2, "--basis", "torus")
    assert r.returncode == 2
    rep = report_of(r)
    jsonschema.validate(rep, schema("mixing_report.schema.json"))
    assert rep["report"]["witness_g"] is None


def test_s3_exact_certificate(cli, schema):
    r = cli("check-mixing", "--space", "s3", "--ell", 2, "--exact")
    assert r.returncode == 0, r.stderr
    rep = report_of(r)
    jsonschema.validate(rep, schema("mixing_report.schema.json"))
    assert rep["exact"]["verdict"] == "Mixing"
    assert rep["exact"]["table_certificate"] and rep["exact"]["leading_certificate"]


def test_orbit_option(cli, schema):
    r = cli("check-mixing", "--space", "s2", "--ell", 4, "--orbit")
    assert r.returncode == 0
    rep = report_of(r)
    jsonschema.validate(rep, schema("mixing_report.schema.json"))
    assert rep["orbit"]["verdict"] == "Mixing"
    assert rep["orbit"]["converged"]


def test_given_element(cli, schema):
    r = cli("check-mixing", "--space", "s2", "--ell", 6, "--g", "0.3,1.1,-0.4")
    rep = report_of(r)
    jsonschema.validate(rep, schema("mixing_report.schema.json"))
    assert rep["report"]["samples_used"] == 1
    assert r.returncode in (0, 3)
    bad = cli("check-mixing", "--space", "s2", "--ell", 6, "--g", "0.3,1.1")
    assert bad.returncode == 1


@pytest.mark.parametrize("args", [("--space", "s2", "--ell", 3), ("--space", "s5", "--ell", 2),
                                  ("--space", "s2", "--ell", 4, "--basis", "weird"),
                                  ("--space", "s2", "--ell", 4, "--exact")])
def test_invalid_configurations_exit_1(cli, args):
    r = cli("check-mixing", *args)
    assert r.returncode == 1
    assert "error" in r.stderr


def test_results_independent_of_threads(cli):
    one = report_of(cli("check-mixing", "--space", "s2", "--ell", 8, "--basis", "random", "--threads", 1))
    four = report_of(cli("check-mixing", "--space", "s2", "--ell", 8, "--basis", "random", "--threads", 4))
    assert one["report"] == four["report"]


def read_rows(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def test_simulate_row_count_and_determinism(cli, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        r = cli("simulate", "--space", "s2", "--ell", 4, "--dist", "gaussian", "--c", 1, "--n", 1000, "--seed", 1,
                "--out", p)
        assert r.returncode == 0
    rows = read_rows(a)
    assert len(rows) == 5000
    assert list(rows[0].keys()) == ["sample_id", "k", "re", "im"]
    assert a.read_bytes() == b.read_bytes()


def test_uniform_disc_support(cli, tmp_path):
    p = tmp_path / "u.csv"
    assert cli("simulate", "--space", "s2", "--ell", 6, "--dist", "uniform-disc", "--r", 1, "--n", 500,
               "--out", p).returncode == 0
    for row in read_rows(p):
        if int(row["k"]) != 0:
            assert float(row["re"]) ** 2 + float(row["im"]) ** 2 <= 1.0 + 1e-15


def test_simulate_unwritable_path(cli):
    r = cli("simulate", "--n", 10, "--out", "/nonexistent-dir/x.csv")
    assert r.returncode == 1


def test_invariance_passes_on_gaussian_output(cli, schema, tmp_path):
    p = tmp_path / "g.csv"
    cli("simulate", "--space", "s2", "--ell", 4, "--dist", "gaussian", "--n", 10000, "--seed", 3, "--out", p)
    r = cli("test", "--kind", "invariance", "--in", p, "--space", "s2", "--ell", 4)
    assert r.returncode == 0, r.stdout
    jsonschema.validate(report_of(r), schema("test_report.schema.json"))


def test_invariance_rejects_uniform_disc_with_witness(cli, schema, tmp_path):
    p = tmp_path / "u.csv"
    cli("simulate", "--space", "s2", "--ell", 4, "--dist", "uniform-disc", "--r", 1, "--n", 10000, "--out", p)
    r = cli("test", "--kind", "invariance", "--in", p, "--space", "s2", "--ell", 4, "--witness")
    assert r.returncode == 2
    rep = report_of(r)
    jsonschema.validate(rep, schema("test_report.schema.json"))
    assert rep["report"]["alpha_decisions"]["0.001"]


def test_structure_on_bijoux_output(cli, schema, tmp_path):
    p = tmp_path / "b.csv"
    cli("simulate", "--dist", "bijoux", "--alpha", "0.6,0:0.48,0.64", "--n", 20000, "--out", p)
    r = cli("test", "--kind", "structure", "--in", p)
    assert r.returncode == 0
    rep = report_of(r)
    jsonschema.validate(rep, schema("test_report.schema.json"))
    alpha = [0.6, 0.48j, 0.64]
    pooled = rep["structure"]["pooled"]
    for i in range(3):
        for k in range(3):
            c = complex(*pooled["C_hat"][i][k])
            expected = alpha[i] * alpha[k].conjugate()
            assert abs(c - expected) < 4 * pooled["std_err"][i][k]


def test_gaussianity_and_phase(cli, schema, tmp_path):
    g, t = tmp_path / "g.csv", tmp_path / "t.csv"
    cli("simulate", "--space", "s2", "--ell", 4, "--dist", "gaussian", "--n", 5000, "--out", g)
    cli("simulate", "--space", "s2", "--ell", 4, "--dist", "two-point", "--n", 5000, "--out", t)
    ok = cli("test", "--kind", "gaussianity", "--in", g, "--k", 1)
    assert ok.returncode == 0
    jsonschema.validate(report_of(ok), schema("test_report.schema.json"))
    assert cli("test", "--kind", "gaussianity", "--in", t, "--k", 0).returncode == 2
    assert cli("test", "--kind", "phase", "--in", g, "--k", 2, "--phi", 1.0).returncode == 0


def test_malformed_csv_names_the_row(cli, tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("sample_id,k,re,im\n0,2,1.0,0.0\n0,1,oops,0.0\n")
    r = cli("test", "--kind", "phase", "--in", p)
    assert r.returncode == 1
    assert "line 3" in r.stderr


def entries(rep):
    return {(e["i"], e["k"]): e for e in rep["entries"]}


def test_demo_correlated_alpha(cli, schema):
    r = cli("demo-nonorthogonal", "--alpha", "0.7071067811865476,0.7071067811865476", "--n", 10000)
    assert r.returncode == 0
    rep = report_of(r)
    jsonschema.validate(rep, schema("demo_report.schema.json"))
    e = entries(rep)
    assert e[(0, 1)]["significant"]
    assert abs(complex(*e[(0, 1)]["C"]) - 0.5) < 4 * e[(0, 1)]["std_err"]


def test_demo_orthogonal_alpha(cli, schema):
    rep = report_of(cli("demo-nonorthogonal", "--alpha", "1,0", "--n", 10000))
    jsonschema.validate(rep, schema("demo_report.schema.json"))
    assert not entries(rep)[(0, 1)]["significant"]


def test_demo_small_n_and_bad_alpha(cli, schema, tmp_path):
    r = cli("demo-nonorthogonal", "--alpha", "1,1", "--n", 10, "--table", tmp_path / "t.csv")
    rep = report_of(r)
    jsonschema.validate(rep, schema("demo_report.schema.json"))
    assert rep["status"] == "insufficient n"
    assert not any(e["significant"] for e in rep["entries"])
    assert len(read_rows(tmp_path / "t.csv")) == 4
    assert cli("demo-nonorthogonal", "--alpha", "1").returncode == 1


def test_log_level_controls_stderr(cli):
    quiet = cli("check-mixing", "--space", "s2", "--ell", 4)
    loud = cli("check-mixing", "--space", "s2", "--ell", 4, env={"LOG_LEVEL": "debug"})
    assert quiet.stderr == ""
    assert "verdict" in loud.stderr
    assert quiet.stdout == loud.stdout


def test_report_written_to_file(cli, schema, tmp_path):
    out = tmp_path / "m.json"
    r = cli("check-mixing", "--space", "s3", "--ell", 1, "--out", out)
    assert r.returncode == 0
    assert "Mixing" in r.stdout
    jsonschema.validate(json.loads(out.read_text()), schema("mixing_report.schema.json"))
