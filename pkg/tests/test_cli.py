import json

import pytest

from hmdft.cli import main

EX15_POLY = "0,0,0,1,0,1,1,0,0,1,1,0,1"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_witness_found(capsys):
    code, out, _ = run(capsys, "witness", "--q", "2", "--n", "4", "--w", "2", "--c", "0")
    assert code == 0
    assert "x^4 + x + 1" in out


def test_witness_absent(capsys):
    code, out, _ = run(capsys, "witness", "--q", "2", "--n", "2", "--w", "1", "--c", "0")
    assert code == 1
    assert "None" in out


def test_hm_verify_excluded_tuple(capsys):
    code, out, _ = run(capsys, "hm-verify", "--q", "2", "--n", "2", "--w", "1", "--c", "0")
    assert code == 0
    assert "Excluded" in out


def test_hm_verify_json_grid(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run(capsys, "hm-verify", "--q", "2,3", "--n", "2:3",
                     "--format", "json", "--out", str(out_path))
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["summary"]["fail"] == 0
    assert all(r["passed"] or r["case_label"] == "Excluded" for r in payload["reports"])


def test_hm_verify_csv(capsys):
    code, out, _ = run(capsys, "hm-verify", "--q", "2", "--n", "4", "--format", "csv",
                       "--no-witness")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("q,n,w,c,")
    assert len(lines) == 1 + 4  # header + w in {1,2} x c in {0,1}


def test_factor_test_proven(capsys):
    code, out, _ = run(capsys, "factor-test", "--q", "2", "--n", "4",
                       "--poly", EX15_POLY)
    assert code == 0
    assert "Proven" in out


def test_factor_test_inconclusive(capsys):
    code, out, _ = run(capsys, "factor-test", "--q", "2", "--n", "4",
                       "--poly", "1,1,1")
    assert code == 1
    assert "Inconclusive" in out


def test_irred_test(capsys):
    code, out, _ = run(capsys, "irred-test", "--q", "2", "--poly", "1,1,0,0,1")
    assert code == 0 and "Proven" in out
    code, out, _ = run(capsys, "irred-test", "--q", "2", "--poly", "1,0,1,0,1")
    assert code == 1 and "Inconclusive" in out


def test_period_of_sequence(capsys):
    code, out, _ = run(capsys, "period", "--seq", "1,0,0,1,0,1,1,0,0,1,1,0,1,0,0")
    assert code == 0
    assert "r: 15" in out


def test_period_of_mask(capsys):
    code, out, _ = run(capsys, "period", "--q", "3", "--n", "2", "--w", "1", "--c", "0",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["r"] == 4 and payload["case_label"] == "III"


def test_delta_values(capsys):
    code, out, _ = run(capsys, "delta", "--q", "2", "--n", "4", "--w", "2", "--c", "0",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == [1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0]


def test_dft_of_delta_matches_sigma(capsys):
    from hmdft import make_field, primitive_element, sigma_eval

    code, out, _ = run(capsys, "dft", "--q", "2", "--n", "4", "--w", "2",
                       "--format", "json")
    assert code == 0
    values = json.loads(out)["values"]
    f16 = make_field(2, 4)
    z = primitive_element(f16)
    assert values == [sigma_eval(2, z ** k, 2, 4).code for k in range(15)]


def test_dft_roundtrip_seq(capsys):
    seq = "1,0,0,1,0,1,1,0,0,1,1,0,1,0,0"
    code, out, _ = run(capsys, "dft", "--q", "2", "--n", "4", "--seq", seq,
                       "--format", "json")
    assert code == 0
    fwd = json.loads(out)["values"]
    assert len(fwd) == 15


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["witness", "--q", "2"])
    assert exc.value.code == 2
    # domain errors exit 2 without a traceback
    code, _, err = run(capsys, "witness", "--q", "6", "--n", "2", "--w", "1", "--c", "0")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "factor-test", "--q", "2", "--n", "4", "--poly", "3,1")
    assert code == 2 and "error" in err


def test_period_needs_args(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["period"])
    assert exc.value.code == 2


def test_period_above_half_weight(capsys):
    # masks are defined for any w in [1, n]; claims only apply up to n/2
    code, out, _ = run(capsys, "period", "--q", "3", "--n", "2", "--w", "2", "--c", "1",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["r"] >= 1 and payload["threshold"] == 2


def test_dft_requires_source(capsys):
    code, _, err = run(capsys, "dft", "--q", "2", "--n", "4")
    assert code == 2 and "error" in err


def test_cap_flag(capsys):
    code, _, err = run(capsys, "witness", "--q", "7", "--n", "5", "--w", "1", "--c", "1",
                       "--cap", "100")
    assert code == 2 and "cap" in err
