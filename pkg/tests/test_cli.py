import json
import subprocess
import sys

from triality import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_expand_delta(capsys):
    code, out = run_cli(capsys, "expand", "Delta", "--order", "4")
    assert code == 0
    assert out.strip() == "Delta = q - 24*q^2 + 252*q^3"


def test_expand_b1_text(capsys):
    code, out = run_cli(capsys, "expand", "b1", "--order", "3")
    assert code == 0
    assert "(weight 8, degree 2)" in out
    assert "I2" in out


def test_expand_json_schema(capsys):
    code, out = run_cli(capsys, "expand", "K", "--order", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "invariant"
    assert payload["grading"] == {"degree": 2, "weight": 0}
    assert payload["exponent_lattice"] == 24
    assert payload["terms"] == [[[1, 0, 0, 0], [[0, "1/1"]]]]


def test_expand_unknown_name(capsys):
    code = cli.main(["expand", "nosuch"])
    err = capsys.readouterr().err
    assert code == 2
    assert "valid names" in err


def test_basis_cli(capsys):
    code, out = run_cli(capsys, "basis", "--weight", "12", "--degree", "2")
    assert code == 0
    assert "dimension 1" in out
    assert "a0*b1" in out
    code, out = run_cli(capsys, "basis", "--weight", "10", "--degree", "4")
    assert "dimension 0" in out
    code, out = run_cli(capsys, "basis", "--weight", "12", "--degree", "0")
    assert "dimension 2" in out


def test_dims_cli(capsys):
    code, out = run_cli(capsys, "dims", "--kmax", "12", "--mmax", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    entries = {(k, m): d for k, m, d in payload["entries"]}
    assert entries[(12, 2)] == 1
    assert entries[(12, 0)] == 2
    assert entries[(10, 4)] == 0


def test_generators_cli(capsys):
    code, out = run_cli(capsys, "generators")
    assert code == 0
    assert len(out.strip().splitlines()) == 15
    code, out = run_cli(capsys, "generators", "--json")
    payload = json.loads(out)
    assert payload["count"] == 15


def test_transvect_cli(capsys):
    code, out = run_cli(capsys, "transvect", "--left", "f", "--right", "f", "--index", "2")
    assert code == 0
    assert out.strip() == "2*alpha0*alpha2 - 1/2*alpha1^2"
    code, _ = run_cli(capsys, "transvect", "--left", "f^2", "--right", "g", "--index", "3")
    assert code == 0


def test_transvect_bad_index(capsys):
    code = cli.main(["transvect", "--left", "f", "--right", "f", "--index", "3"])
    assert code == 2


def test_membership_cli(capsys):
    code, out = run_cli(capsys, "membership", "a0*b1")
    assert code == 0
    assert "is a triality invariant" in out
    code, out = run_cli(capsys, "membership", "b1")
    assert code == 0
    assert "NOT" in out
    code, out = run_cli(capsys, "membership", "a0^3 - 27*b0^2", "--format", "json")
    assert json.loads(out)["is_triality_invariant"] is True


def test_membership_parse_error(capsys):
    code = cli.main(["membership", "a0 + $"])
    assert code == 2


def test_verify_series(capsys):
    code, out = run_cli(capsys, "verify", "series", "--order", "8")
    assert code == 0
    assert "0 failed" in out


def test_verify_unknown_suite(capsys):
    code = cli.main(["verify", "nosuch"])
    assert code == 2


def test_order_below_two_is_a_usage_error(capsys):
    code = cli.main(["expand", "Delta", "--order", "1"])
    assert code == 2


def test_verify_all_in_process(capsys):
    # order 25 shares the session caches built by the other tests
    code, out = run_cli(capsys, "verify", "all", "--order", "25")
    assert code == 0, out
    assert "FAIL" not in out


def test_cli_output_is_deterministic():
    cmd = [
        sys.executable,
        "-m",
        "triality.cli",
        "basis",
        "--weight",
        "16",
        "--degree",
        "4",
        "--format",
        "json",
    ]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout
