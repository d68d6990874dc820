import csv
import io
import math

import pytest

from phasebell.cli import main, parse_s_values


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_parse_s_values():
    assert parse_s_values("3") == (3,)
    assert parse_s_values("1,3,5") == (1, 3, 5)
    assert parse_s_values("1:9:2") == (1, 3, 5, 7, 9)
    assert parse_s_values("2:4") == (2, 3, 4)


def test_dist_binary(capsys):
    code, out, _ = run(capsys, "dist", "--state", "equal", "--s", "1", "--psi0", "0")
    assert code == 0
    r = rows(out)
    assert len(r) == 4
    got = {(int(x["mu1"]), int(x["mu2"])): float(x["p"]) for x in r}
    assert got[0, 0] == pytest.approx(0.5) and got[1, 1] == pytest.approx(0.5)
    assert got[0, 1] == 0.0 and got[1, 0] == 0.0


def test_dist_s0(capsys):
    code, out, _ = run(capsys, "dist", "--state", "equal", "--s", "0")
    assert code == 0
    assert out == "mu1,mu2,p\n0,0,1\n"


def test_dist_custom_file(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("0.5\n0.5\n0.5\n0.5\n")
    code, out, _ = run(capsys, "dist", "--state", "custom", "--coeffs", str(f), "--s", "3", "--psi0", "0")
    assert code == 0
    assert float(rows(out)[0]["p"]) == pytest.approx(0.25, abs=1e-15)


def test_bell_optimize_ideal(capsys):
    code, out, _ = run(capsys, "bell", "--state", "equal", "--s", "1", "--scheme", "equal", "--optimize")
    assert code == 0
    (r,) = rows(out)
    assert round(float(r["b_ch"]), 10) == 1.2071067812
    assert round(float(r["b_s"]), 10) == 2.8284271247
    assert round(float(r["psi0"]), 10) == 0.7853981634
    assert r["violates_ch"] == "true" and r["violates_s"] == "true"
    assert r["scheme"] == "equal"


def test_bell_equal_split_s3(capsys):
    _, out, _ = run(capsys, "bell", "--state", "equal", "--s", "3", "--scheme", "equal", "--optimize")
    assert rows(out)[0]["violates_ch"] == "false"


def test_bell_single_s3(capsys):
    _, out, _ = run(capsys, "bell", "--state", "equal", "--s", "3", "--scheme", "single", "--optimize")
    r = rows(out)[0]
    assert float(r["b_ch"]) == pytest.approx(1.19, abs=0.005)
    assert r["violates_ch"] == "true"


def test_bell_fixed_angle_tms(capsys):
    code, out, _ = run(capsys, "bell", "--state", "tms", "--lambda", "0.5", "--s", "1",
                       "--scheme", "equal", "--psi0", str(math.pi / 4))
    assert code == 0
    c0, c1 = math.sqrt(0.75), math.sqrt(0.75) * 0.5
    r = rows(out)[0]
    assert float(r["b_s"]) == pytest.approx(4 * math.sqrt(2) * c0 * c1, abs=1e-12)


def test_bell_circle_and_custom_scheme(capsys):
    code, out, _ = run(capsys, "bell", "--state", "circle", "--r", "1.2", "--s", "4",
                       "--scheme", "custom:0,2", "--psi0", "0.3", "--mode", "renorm")
    assert code == 0
    assert rows(out)[0]["scheme"] == "custom:0,2"


def test_sweep_s(capsys):
    code, out, _ = run(capsys, "sweep-s", "--s", "1:9:2", "--psi-points", "500")
    assert code == 0
    r = rows(out)
    assert [int(x["s"]) for x in r] == [1, 3, 5, 7, 9]
    assert round(float(r[0]["b_ch_max"]), 10) == 1.2071067812
    vals = [float(x["b_ch_max"]) for x in r]
    assert all(b <= a for a, b in zip(vals, vals[1:]))


def test_sweep_s_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "sweep-s", "--s", "1,3,5,7", "--psi-points", "300")
    _, parallel, _ = run(capsys, "sweep-s", "--s", "7,5,3,1", "--psi-points", "300", "--jobs", "2")
    assert serial == parallel


def test_sweep_lambda(capsys):
    code, out, _ = run(capsys, "sweep-lambda", "--s", "3", "--psi-points", "20", "--lambda-points", "10")
    assert code == 0
    r = rows(out)
    assert len(r) == 200
    zero = [float(x["b_ch"]) for x in r if float(x["lambda"]) == 0.0]
    assert len(zero) == 20
    assert all(b == pytest.approx(0.25, abs=1e-14) for b in zero)


def test_byte_stable_output(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert main(["sweep-lambda", "--s", "3,7", "--psi-points", "15", "--lambda-points", "7",
                     "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_lhv_check(capsys):
    code, out, _ = run(capsys, "lhv-check")
    assert code == 0
    assert out.splitlines()[1] == "2,1,PASS"


@pytest.mark.parametrize("argv", [
    ["bell", "--state", "equal", "--s", "1"],
    ["bell", "--state", "tms", "--s", "1", "--psi0", "0"],
    ["bell", "--state", "tms", "--lambda", "1.2", "--s", "1", "--psi0", "0"],
    ["dist", "--state", "custom", "--s", "1"],
    ["dist", "--state", "custom", "--coeffs", "/nonexistent/file", "--s", "1"],
    ["dist", "--state", "equal", "--s", "1,2"],
    ["bell", "--state", "equal", "--s", "3", "--scheme", "halves", "--psi0", "0"],
    ["sweep-lambda", "--state", "equal", "--s", "3"],
])
def test_flag_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("phasebell: error:")
    assert len(err.strip().splitlines()) == 1


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bell", "--s", "x"])
    assert exc.value.code == 2


def test_numeric_error_exit_1(tmp_path, capsys):
    f = tmp_path / "c.txt"
    f.write_text("0\n0\n1\n")
    code, _, err = run(capsys, "bell", "--state", "custom", "--coeffs", str(f), "--s", "1", "--psi0", "0.2")
    assert code == 1
    assert "numeric error" in err
