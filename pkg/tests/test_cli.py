"""Command-line surface: output shapes and exit codes, driven through main()."""

import subprocess
import sys

import pytest

from newmanpoly.cli import main
from newmanpoly.polynomial import IntPolynomial, NewmanPolynomial, parse_polynomial

LEHMER = "x^10-x^9+x^7-x^6+x^5-x^4+x^3-x+1"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mahler(capsys):
    code, out, _ = run(capsys, "mahler", LEHMER)
    assert code == 0
    assert out.strip() == "1.176280818"


def test_mahler_coefficient_list(capsys):
    code, out, _ = run(capsys, "mahler", "1", "1", "1")
    assert code == 0
    assert out.strip() == "1.000000000"


def test_positive_root(capsys):
    assert run(capsys, "positive-root", "-2", "1")[1].strip() == "yes"
    assert run(capsys, "positive-root", "x^2+x+1")[1].strip() == "no"


def test_encode_decode_round_trip(capsys):
    code, out, _ = run(capsys, "encode", "x^3+x+1")
    assert (code, out.strip()) == (0, "B")
    code, out, _ = run(capsys, "decode", "B")
    assert code == 0
    assert out.strip() == "1 1 0 1"


def test_decode_rejects_bad_hex(capsys):
    code, _, err = run(capsys, "decode", "0x1F")
    assert code == 1
    assert "error:" in err
    code, _, err = run(capsys, "decode", "A")
    assert code == 1
    assert "constant term" in err


def test_encode_rejects_non_newman(capsys):
    code, _, err = run(capsys, "encode", "x^2-1")
    assert code == 1
    assert "error:" in err


def test_find_multiple_worked_example(capsys):
    code, out, _ = run(capsys, "find-multiple", "x^16+x^15-x^11-x^8-x^5+x+1")
    assert code == 0
    kv = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert kv["status"] == "found"
    assert kv["total-degree"] == "38"
    product = IntPolynomial([int(t) for t in kv["product"].split()])
    cofactor = IntPolynomial([int(t) for t in kv["cofactor"].split()])
    assert kv["cofactor-degree"] == str(cofactor.degree)
    assert product == parse_polynomial("x^16+x^15-x^11-x^8-x^5+x+1") * cofactor
    assert NewmanPolynomial.from_hex(kv["product-hex"]).to_polynomial() == product


def test_find_multiple_not_found(capsys):
    code, out, _ = run(
        capsys, "find-multiple", LEHMER, "--power", "2", "--max-degree", "30"
    )
    assert code == 0
    kv = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert kv["status"] == "not-found"
    assert kv["frontier"] == "30"
    assert kv["unknown-degrees"] == "none"


def test_find_multiple_rejects_positive_real_root(capsys):
    code, _, err = run(capsys, "find-multiple", "-2", "1")
    assert code == 1
    assert "error:" in err


def test_certify_to_stdout(capsys):
    code, out, _ = run(capsys, "certify", "x^6-x^5-x^3+x^2+1")
    assert code == 0
    assert out.startswith("certv1\n")
    assert "kind: non-divisibility" in out


def test_certify_to_file(capsys, tmp_path):
    target = tmp_path / "cert.txt"
    code, out, _ = run(capsys, "certify", LEHMER, "--out", str(target))
    assert code == 0
    assert str(target) in out
    text = target.read_text()
    assert text.startswith("certv1\n")
    assert "kind: newman-witness" in text
    assert "witness-hex: " in text


def test_certify_without_usable_root(capsys):
    code, _, err = run(capsys, "certify", "x^2+x+1")
    assert code == 1
    assert "error:" in err


def test_certify_cap_option(capsys):
    code, out, _ = run(capsys, "certify", "x^10-x^8-x^5+x+1", "--cap", "10")
    assert code == 0
    assert "kind: inconclusive" in out
    assert "element cap" in out


def test_scan_list(capsys, tmp_path):
    listfile = tmp_path / "list.txt"
    listfile.write_text("2 1.000000000 1 1 1\n2 1.000000000 1 -1 1\n")
    out_dir = tmp_path / "results"
    code, out, _ = run(
        capsys,
        "scan-list",
        str(listfile),
        "--out-dir",
        str(out_dir),
        "--max-degree",
        "10",
    )
    assert code == 0
    kv = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert kv["entries"] == "2"
    assert kv["newman"] == "1"
    assert kv["found"] == "1"
    for name in ("newman.txt", "outputP.txt", "outputQ.txt", "outputD.txt"):
        assert (out_dir / name).exists()


def test_scan_list_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "scan-list", str(tmp_path / "absent.txt"))
    assert code == 1
    assert "error:" in err


def test_scan_list_bad_line(capsys, tmp_path):
    listfile = tmp_path / "bad.txt"
    listfile.write_text("2 1.0 2 1 2\n")
    code, _, err = run(capsys, "scan-list", str(listfile))
    assert code == 1
    assert "not monic" in err


def test_power_table(capsys):
    code, out, _ = run(
        capsys,
        "power-table",
        LEHMER,
        "--power",
        "2",
        "--min-deg",
        "59",
        "--max-deg",
        "59",
        "--hex",
    )
    assert code == 0
    rows = [l for l in out.strip().splitlines() if not l.startswith("#")]
    assert [int(r.split()[0]) for r in rows] == [59]
    g = parse_polynomial(LEHMER) ** 2
    degree, hexstr = rows[0].split()
    witness = NewmanPolynomial.from_hex(hexstr)
    assert witness.degree == 59
    _, rem = witness.to_polynomial().divrem(g)
    assert rem.is_zero()


def test_power_table_window_validation(capsys):
    code, _, err = run(
        capsys, "power-table", LEHMER, "--power", "2", "--min-deg", "9", "--max-deg", "5"
    )
    assert code == 2
    assert "min-deg" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "newmanpoly.cli", "encode", "x+1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
