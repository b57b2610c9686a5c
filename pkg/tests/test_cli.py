import json

import pytest

from qmark.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_surd_literal(self, capsys):
        code, out, _ = run(capsys, "eval", "--partition", "dyadic", "(-1+sqrt(5))/2")
        assert code == 0
        assert "partition: dyadic" in out
        assert "2/3" in out.splitlines()

    def test_unicode_minus(self, capsys):
        code, out, _ = run(capsys, "eval", "--partition", "dyadic", "(−1+sqrt(5))/2")
        assert code == 0
        assert "2/3" in out.splitlines()

    def test_rational(self, capsys):
        code, out, _ = run(capsys, "eval", "--partition", "harmonic", "1/3")
        assert code == 0
        assert "1/3" in out.splitlines()

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "eval", "--partition", "dyadic", "0")
        assert code == 0
        assert "0" in out.splitlines()

    def test_decimal_is_approximate(self, capsys):
        code, out, err = run(capsys, "eval", "--digits", "12", "0.5")
        assert code == 0
        assert "approximate" in err
        assert "~ 0.500000000000" in out

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "nonsense")
        assert code == 2
        assert "parse error" in err

    def test_domain_error_exit_3(self, capsys):
        code, _, err = run(capsys, "eval", "3/2")
        assert code == 3
        assert "domain error" in err


class TestInverse:
    def test_dyadic(self, capsys):
        code, out, _ = run(capsys, "inverse", "--partition", "dyadic", "2/5")
        assert code == 0
        assert "(-1+sqrt(2))/1" in out.splitlines()

    def test_harmonic(self, capsys):
        code, out, _ = run(capsys, "inverse", "--partition", "harmonic", "2/3")
        assert code == 0
        assert "(-1+sqrt(5))/2" in out.splitlines()

    def test_one(self, capsys):
        code, out, _ = run(capsys, "inverse", "1")
        assert code == 0
        assert "1" in out.splitlines()

    def test_depth_exhaustion_exit_4(self, capsys):
        code, _, err = run(capsys, "inverse", "--partition", "harmonic", "--depth", "1", "2/5")
        assert code == 4
        assert "--depth" in err

    def test_surd_input_rejected(self, capsys):
        code, _, _ = run(capsys, "inverse", "sqrt(2)/2")
        assert code == 3


class TestExpand:
    def test_cf_rational(self, capsys):
        code, out, _ = run(capsys, "expand", "cf", "2/3")
        assert code == 0
        assert out == "[1,2]\n"

    def test_cf_surd(self, capsys):
        code, out, _ = run(capsys, "expand", "cf", "(−1+sqrt(2))/1")
        assert code == 0
        assert out == "[;2]\n"

    def test_luroth(self, capsys):
        code, out, _ = run(capsys, "expand", "luroth", "--partition", "harmonic", "2/3")
        assert code == 0
        assert out.endswith("[;1]\n")

    def test_decimal_rejected(self, capsys):
        code, _, _ = run(capsys, "expand", "cf", "0.5")
        assert code == 3


class TestSample:
    def test_text_rows(self, capsys):
        code, out, _ = run(capsys, "sample", "2", "--partition", "dyadic")
        assert code == 0
        assert "1/2" in out

    def test_csv_includes_exact_columns(self, capsys):
        code, out, _ = run(capsys, "sample", "3", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,q_alpha,x_decimal,q_alpha_decimal"
        assert len(lines) == 5
        assert lines[1].startswith("0,0,")
        assert any(line.startswith("1/3,1/4,") for line in lines)

    def test_json_meta_and_rows(self, capsys):
        code, out, _ = run(capsys, "sample", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["meta"]["command"] == "sample"
        assert doc["meta"]["partition"] == "dyadic"
        assert len(doc["rows"]) == 3

    def test_output_file_and_figure(self, capsys, tmp_path):
        out_path = tmp_path / "stairs.csv"
        code, _, _ = run(
            capsys, "sample", "16", "--format", "csv", "--output", str(out_path)
        )
        assert code == 0
        assert out_path.exists()
        assert (tmp_path / "stairs.png").exists()

    def test_no_plot(self, capsys, tmp_path):
        out_path = tmp_path / "stairs.csv"
        code, _, _ = run(
            capsys, "sample", "4", "--format", "csv",
            "--output", str(out_path), "--no-plot",
        )
        assert code == 0
        assert out_path.exists()
        assert not (tmp_path / "stairs.png").exists()

    def test_byte_identical_reruns(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "sample", "8", "--format", "csv", "--output", str(a), "--no-plot")
        run(capsys, "sample", "8", "--format", "csv", "--output", str(b), "--no-plot")
        assert a.read_bytes() == b.read_bytes()


class TestExperiment:
    def test_conjugation_text(self, capsys):
        code, out, _ = run(
            capsys, "experiment", "conjugation", "--n", "50", "--seed", "7"
        )
        assert code == 0
        assert out == "failures: 0\n"

    def test_conjugation_json(self, capsys):
        code, out, _ = run(
            capsys, "experiment", "conjugation", "--n", "20", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["rows"] == [{"failures": "0"}]

    def test_measure_csv_file_and_figure(self, capsys, tmp_path):
        out_path = tmp_path / "measure.csv"
        code, _, _ = run(
            capsys, "experiment", "measure", "--grid", "20",
            "--partition", "harmonic", "--format", "csv", "--output", str(out_path),
        )
        assert code == 0
        header = out_path.read_text().splitlines()[0]
        assert header == "t,q_alpha,gauss_cdf,gap"
        assert (tmp_path / "measure.png").exists()

    def test_singularity_small_run(self, capsys, tmp_path):
        out_path = tmp_path / "sing.csv"
        code, _, _ = run(
            capsys, "experiment", "singularity", "--n", "30", "--seed", "1",
            "--h-values", "1/100,1/1000", "--format", "csv",
            "--output", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "h,median_quotient,fraction_below_0.1"
        assert len(lines) == 3
        assert (tmp_path / "sing.png").exists()

    def test_singularity_deterministic_output(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = [
            "experiment", "singularity", "--n", "25", "--seed", "3",
            "--h-values", "1/100,1/1000", "--format", "json", "--no-plot",
        ]
        run(capsys, *args, "--output", str(a))
        run(capsys, *args, "--output", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_bad_h_values_exit_2(self, capsys):
        code, _, _ = run(
            capsys, "experiment", "singularity", "--n", "5", "--h-values", "zebra"
        )
        assert code == 2


class TestUsage:
    def test_missing_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0

    def test_config_validation(self, capsys):
        code, _, err = run(capsys, "eval", "--precision", "32", "1/2")
        assert code == 3
        assert "--precision" in err
        code, _, _ = run(capsys, "eval", "--depth", "0", "1/2")
        assert code == 3

    def test_bad_partition_exit_2(self, capsys):
        code, _, _ = run(capsys, "eval", "--partition", "fibonacci", "1/2")
        assert code == 2
