"""CLI surface: schemas, determinism, figures, and exit-code categories."""

import csv
import os

import pytest

from indefspec.cli import (
    EXIT_BAD_ARGS,
    EXIT_NUMERICAL,
    EXIT_OK,
    main,
)


def _read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


class TestSaEigs:
    def test_schema_and_ordering(self, tmp_path):
        out = str(tmp_path / "sa.csv")
        rc = main(["sa-eigs", "--gamma", "2.5", "--bc", "dirichlet",
                   "--n-max", "8", "--method", "char_exact", "-o", out])
        assert rc == EXIT_OK
        header, rows = _read_csv(out)
        assert header == ["n", "lambda", "method", "residual"]
        assert len(rows) == 8
        lams = [float(r[1]) for r in rows]
        assert all(a > b for a, b in zip(lams, lams[1:]))
        assert all(r[2] == "char_exact" for r in rows)

    def test_deterministic_output(self, tmp_path):
        a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
        for out in (a, b):
            assert main(["sa-eigs", "--gamma", "2.5", "--n-max", "5",
                         "-o", out]) == EXIT_OK
        assert open(a, "rb").read() == open(b, "rb").read()

    def test_svg_rendered(self, tmp_path):
        out = str(tmp_path / "sa.csv")
        rc = main(["sa-eigs", "--gamma", "2.5", "--n-max", "5",
                   "--svg", "-o", out])
        assert rc == EXIT_OK
        svg = str(tmp_path / "sa.svg")
        assert os.path.exists(svg)
        assert b"<svg" in open(svg, "rb").read(2000)


class TestNsaEigs:
    def test_schema_and_predictions(self, tmp_path):
        out = str(tmp_path / "nsa.csv")
        rc = main(["nsa-eigs", "--gamma", "2.5", "--re-min", "0.04",
                   "--re-max", "0.12", "--quadrant", "1", "-o", out])
        assert rc == EXIT_OK
        header, rows = _read_csv(out)
        assert header == ["n", "re_mu", "im_mu", "residual",
                          "pred_D_re", "pred_D_im", "pred_N_re", "pred_N_im"]
        assert len(rows) >= 3
        for r in rows:
            re_mu, im_mu = float(r[1]), float(r[2])
            assert 0.04 <= re_mu <= 0.12
            assert im_mu > 0.0
            # both predictions land close to the located root
            assert abs(complex(re_mu, im_mu)
                       - complex(float(r[4]), float(r[5]))) < 0.5 * re_mu**2
            assert abs(complex(re_mu, im_mu)
                       - complex(float(r[6]), float(r[7]))) < 0.5 * re_mu**2


class TestCurves:
    def test_schema_and_values(self, tmp_path):
        out = str(tmp_path / "curves.csv")
        rc = main(["curves", "--gamma", "2.5", "--t-min", "0.001",
                   "--t-max", "0.1", "--points", "40", "-o", out])
        assert rc == EXIT_OK
        header, rows = _read_csv(out)
        assert header == ["t", "re_tau_minus", "im_tau_minus",
                          "re_tau_plus", "im_tau_plus"]
        assert len(rows) == 40
        for r in rows:
            # shared imaginary part of the two branches
            assert float(r[2]) == pytest.approx(float(r[4]), rel=1e-12)

    def test_bad_range(self, tmp_path):
        rc = main(["curves", "--gamma", "2.5", "--t-min", "0.5",
                   "--t-max", "0.1", "-o", str(tmp_path / "c.csv")])
        assert rc == EXIT_BAD_ARGS


class TestCompare:
    def test_asymptotic_column_second_order(self, tmp_path):
        out = str(tmp_path / "cmp.csv")
        rc = main(["compare", "--gamma", "2.5", "--n-max", "20", "-o", out])
        assert rc == EXIT_OK
        header, rows = _read_csv(out)
        assert header == ["n", "lambda_oracle", "lambda_char_exact",
                          "lambda_asymptotic", "rel_err_char_exact",
                          "rel_err_asymptotic"]
        assert len(rows) == 20
        errs = {int(r[0]): float(r[5]) for r in rows if r[5] != "nan"}
        assert errs[20] < errs[5] / 8.0  # faster than first order


class TestNonsym:
    def test_asymmetric_root_counts(self, tmp_path):
        out = str(tmp_path / "ns.csv")
        rc = main(["nonsym", "--gamma-plus", "5", "--gamma-minus", "1.5",
                   "--re-min", "0.02", "--re-max", "0.1", "-o", out])
        assert rc == EXIT_OK
        header, rows = _read_csv(out)
        assert header == ["quadrant", "re_mu", "im_mu", "residual"]
        right = [r for r in rows if r[0] == "I"]
        left = [r for r in rows if r[0] == "II"]
        assert len(left) > len(right) > 0


class TestSpecfunCheck:
    def test_diagnostics_pass(self, tmp_path):
        out = str(tmp_path / "sf.csv")
        rc = main(["specfun-check", "--gamma", "2.5", "-o", out])
        assert rc == EXIT_OK
        header, rows = _read_csv(out)
        assert header == ["check", "parameter", "c", "error"]
        wronskian = [float(r[3]) for r in rows if r[0] == "bessel_wronskian"]
        assert wronskian and max(wronskian) < 1e-10
        temme = [(float(r[1]), float(r[3])) for r in rows
                 if r[0] == "temme_vs_integral"]
        by_a = sorted(temme)
        assert by_a[-1][1] < by_a[0][1]


class TestExitCodes:
    def test_bad_arguments(self, tmp_path):
        assert main(["sa-eigs", "--gamma", "-1",
                     "-o", str(tmp_path / "x.csv")]) == EXIT_BAD_ARGS

    def test_numerical_failure(self, tmp_path):
        # two-term asymptotics turn nonpositive at n = 1 for gamma = 2.5
        rc = main(["sa-eigs", "--gamma", "2.5", "--n-max", "1",
                   "--method", "asymptotic", "-o", str(tmp_path / "x.csv")])
        assert rc == EXIT_NUMERICAL
