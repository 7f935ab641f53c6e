import json

import pytest

from wallis_series.cli import CliConfig, load_config, main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_wallis_odd(capsys):
    code, out, _ = run(capsys, "wallis", "--n", "1", "--parity", "odd")
    assert code == 0 and out.splitlines()[0] == "2/3"


def test_wallis_even_labels_half_pi(capsys):
    code, out, _ = run(capsys, "wallis", "--n", "2", "--parity", "even")
    assert code == 0 and out.splitlines()[0] == "3/8 × π/2"


def test_wallis_zero(capsys):
    code, out, _ = run(capsys, "wallis", "--n", "0")
    assert code == 0 and out.splitlines()[0] == "1"


def test_wallis_negative_is_usage_error(capsys):
    code, _, err = run(capsys, "wallis", "--n", "-1")
    assert code == 2 and "--n" in err


def test_wallis_json(capsys):
    code, out, _ = run(capsys, "wallis", "--n", "3", "--parity", "even", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ratio"] == "5/16" and data["factor"] == "pi/2"


def test_integrate_sin(capsys):
    code, out, _ = run(capsys, "integrate", "--name", "sin")
    value = float(out.splitlines()[1].split()[1])
    assert code == 0 and round(value, 7) == 0.8932437 and "±" in out


def test_integrate_arsinh_note(capsys):
    code, out, _ = run(capsys, "integrate", "--name", "arsinh")
    value = float(out.splitlines()[1].split()[1])
    assert code == 0 and round(value, 7) == 0.9159656 and "Catalan's constant" in out


def test_integrate_unknown(capsys):
    code, _, err = run(capsys, "integrate", "--name", "nosuch")
    assert code == 2 and "nosuch" in err


def test_integrate_nonconvergence_prints_partial(capsys):
    code, out, _ = run(capsys, "integrate", "--name", "artanh", "--max-terms", "50")
    assert code == 3 and "partial" in out


def test_integrate_table_and_json_agree(capsys):
    _, table, _ = run(capsys, "integrate", "--name", "sec", "--tol", "1e-9")
    _, js, _ = run(capsys, "integrate", "--name", "sec", "--tol", "1e-9", "--format", "json")
    data = json.loads(js)
    series = table.splitlines()[1].split()
    assert float(series[1]) == data["series_value"]
    assert float(series[3]) == data["series_tail"]
    assert json.loads(json.dumps(data)) == data


def test_numbers(capsys):
    code, out, _ = run(capsys, "numbers", "bernoulli", "--count", "3")
    assert code == 0 and [line.split()[1] for line in out.splitlines()] == ["1/6", "1/30", "1/42"]
    code, out, _ = run(capsys, "numbers", "euler", "--count", "3", "--format", "json")
    assert [v["value"] for v in json.loads(out)["values"]] == ["1", "5", "61"]


def test_numbers_zero_count(capsys):
    code, _, _ = run(capsys, "numbers", "bernoulli", "--count", "0")
    assert code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--tol", "1e-8")
    assert code == 0 and "applications: 14/14 pass" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--tol", "1e-8", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["cases"]) == 14 and data["suite"]["pass"] is True


def test_verify_zero_tolerance(capsys):
    code, _, _ = run(capsys, "verify", "--tol", "0")
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import wallis_series.cli as cli

    class Failing:
        passed = False

        def to_table(self):
            return "suite FAIL"

    monkeypatch.setattr(cli, "run_all", lambda *a, **k: Failing())
    code, out, _ = run(capsys, "verify", "--tol", "1e-8")
    assert code == 1 and "FAIL" in out


def test_config_file(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "wallis.conf"
    cfg.write_text("# defaults\ntolerance = 1e-6\noutput_format = json\nmax_terms = 5000\n")
    config = load_config(str(cfg))
    assert config == CliConfig(tolerance=1e-6, max_terms=5000, output_format="json")
    monkeypatch.setenv("WALLIS_SERIES_CONFIG", str(cfg))
    code, out, _ = run(capsys, "integrate", "--name", "cos")
    assert code == 0 and json.loads(out)["series_tail"] <= 1e-6
    # flags override the file
    code, out, _ = run(capsys, "integrate", "--name", "cos", "--format", "table")
    assert out.startswith("name")


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.conf"
    cfg.write_text("colour = blue\n")
    with pytest.raises(ValueError):
        load_config(str(cfg))
    code, _, _ = run(capsys, "wallis", "--n", "1", "--config", str(cfg))
    assert code == 2
