"""Command-line surface: outputs, formats, exit codes."""

import csv
import io
import json
import re
import subprocess
import sys

import supercon.cli as cli
from supercon.cli import main
from supercon.congruences import CongruenceReport


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


MASK = re.compile(r'("elapsed_ms": )[0-9.]+|(\([0-9.]+ms\))|(,[0-9.]+)$', re.M)


def mask_times(text: str) -> str:
    return MASK.sub(lambda m: m.group(1) + "0" if m.group(1) else "T", text)


def test_gamma_example(capsys):
    code, out, _ = run(["gamma", "--p", "5", "--k", "3", "--x", "1"], capsys)
    assert code == 0
    assert out == "124 (m=1)\n"


def test_gamma_half(capsys):
    code, out, _ = run(["gamma", "--p", "5", "--k", "1", "--x", "1/2"], capsys)
    assert code == 0
    assert out.startswith("3 ")


def test_gamma_bad_argument(capsys):
    code, _, err = run(["gamma", "--p", "5", "--k", "3", "--x", "1/5"], capsys)
    assert code == 2
    assert "NonUnitDenominator" in err


def test_gamma_max_work_guard(capsys):
    code, _, err = run(["gamma", "--p", "97", "--k", "6", "--x", "1/3"], capsys)
    assert code == 2
    assert "max-work" in err


def test_eta_example(capsys):
    code, out, _ = run(["eta", "--limit", "3"], capsys)
    assert code == 0
    assert out == "1, 0, -4\n"


def test_eta_single_coefficient(capsys):
    code, out, _ = run(["eta", "--limit", "4", "--coeff", "2"], capsys)
    assert (code, out) == (0, "0\n")
    code, out, _ = run(["eta", "--limit", "1"], capsys)
    assert (code, out) == (0, "1\n")


def test_eta_coeff_past_limit(capsys):
    code, _, err = run(["eta", "--limit", "4", "--coeff", "9"], capsys)
    assert code == 2
    assert "LimitExceeded" in err


def test_pfq_exact_and_residue(capsys):
    code, out, _ = run(
        ["pfq", "--upper", "1/2,1/2,1/2,5/4", "--lower", "1,1,1/4",
         "--z", "-1", "--n", "2", "--p", "5", "--k", "3"],
        capsys,
    )
    assert code == 0
    assert out == "435/512\n5 (mod 125)\n"


def test_pfq_exact_only(capsys):
    code, out, _ = run(["pfq", "--upper", "1/2", "--lower", "1", "--n", "0"], capsys)
    assert (code, out) == (0, "1\n")


def test_pfq_needs_both_p_and_k(capsys):
    code, _, err = run(["pfq", "--upper", "1/2", "--lower", "1", "--n", "1", "--p", "5"], capsys)
    assert code == 2
    assert "--p and --k" in err


def test_identity_example(capsys):
    code, out, _ = run(
        ["identity", "--a", "1/4", "--b", "1/2", "--d", "1/4", "--n", "2"], capsys
    )
    assert code == 0
    assert out == "5/4 = 5/4, equal\n"


def test_identity_odd_n(capsys):
    code, out, _ = run(
        ["identity", "--a", "1/4", "--b", "1/2", "--d", "1/4", "--n", "3"], capsys
    )
    assert code == 0
    assert out == "0 = 0, equal\n"


def test_identity_pole_is_usage_error(capsys):
    # negative rationals need the = form, or argparse reads them as flags
    code, _, err = run(
        ["identity", "--a", "1/4", "--b=-1/2", "--d", "1/7", "--n", "4"], capsys
    )
    assert code == 2
    assert "PoleInRange" in err


def test_verify_json_records(capsys):
    code, out, _ = run(
        ["verify", "--id", "zudilin-1.2", "--primes", "5..11", "--format", "json"],
        capsys,
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["p"] for r in rows] == [5, 7, 11]
    for r in rows:
        assert list(r) == ["id", "p", "params", "modulus", "lhs", "rhs", "holds", "elapsed_ms"]
        assert r["holds"] is True


def test_verify_csv_header_and_rows(capsys):
    code, out, _ = run(
        ["verify", "--id", "kilbourn-1.1", "--primes", "5,7", "--format", "csv"],
        capsys,
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["id", "p", "params", "modulus", "lhs", "rhs", "holds", "elapsed_ms"]
    assert len(rows) == 3
    assert rows[1][0] == "kilbourn-1.1" and rows[1][6] == "true"


def test_verify_text_summary(capsys):
    code, out, _ = run(
        ["verify", "--id", "main-1.4", "--primes", "5,7", "--alpha", "0"], capsys
    )
    assert code == 0
    assert "mod 5^3" in out
    assert out.rstrip().endswith("2/2 hold")


def test_verify_writes_out_file(tmp_path, capsys):
    target = tmp_path / "reports.json"
    code, out, _ = run(
        ["verify", "--id", "gs-2.6", "--samples", "10", "--format", "json",
         "--out", str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""
    rows = [json.loads(line) for line in target.read_text().splitlines()]
    assert rows[0]["id"] == "gs-2.6" and rows[0]["holds"] is True


def test_verify_deterministic_bytes(capsys):
    argv = ["verify", "--id", "ff-3.2", "--primes", "5,7", "--pairs", "5",
            "--seed", "11", "--format", "json"]
    _, out1, _ = run(argv, capsys)
    _, out2, _ = run(argv, capsys)
    assert mask_times(out1) == mask_times(out2)
    _, out3, _ = run(argv + ["--jobs", "2"], capsys)
    assert mask_times(out1) == mask_times(out3)


def test_verify_rejects_composite_endpoint(capsys):
    code, _, err = run(["verify", "--id", "main-1.4", "--primes", "4..6"], capsys)
    assert code == 2
    assert "prime" in err


def test_verify_rejects_unknown_id(capsys):
    code, _, err = run(["verify", "--id", "main-9.9", "--primes", "5..7"], capsys)
    assert code == 2
    assert "unknown congruence" in err


def test_verify_max_work_guard(capsys):
    code, _, err = run(
        ["verify", "--id", "gamma-laws", "--primes", "5..97", "--max-work", "1000"],
        capsys,
    )
    assert code == 2
    assert "max-work" in err


def test_verify_exit_one_on_violation(monkeypatch, capsys):
    fake = [CongruenceReport("zudilin-1.2", 5, {}, 3, "1", "2", False, 0.1)]
    monkeypatch.setattr(cli, "sweep", lambda cfg: fake)
    code, out, _ = run(["verify", "--id", "zudilin-1.2", "--primes", "5,5"], capsys)
    assert code == 1
    assert "FAIL" in out


def test_usage_errors_exit_two(capsys):
    assert main([]) == 2
    assert main(["verify", "--format", "yaml"]) == 2
    assert main(["gamma", "--p", "5"]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert main(["verify", "--help"]) == 0
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supercon", "eta", "--limit", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1, 0, -4\n"
