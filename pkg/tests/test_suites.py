"""
Named suites: selection per preset, folding of reports and the perturbation suite.
"""
import pytest

from qhopf.checks import format_report, summary_table
from qhopf.errors import FormatError
from qhopf.suites import DEFAULT_SUITES, SUITES, run_suite, suite_sigma, suites_for


class TestSelection:

    def test_defaults_by_preset(self):
        assert suites_for("trivial-z2") == DEFAULT_SUITES["trivial-z2"]
        assert suites_for("z2") == ("axioms", "category", "transmute", "bosonise", "chi", "sigma")
        assert suites_for("z2cubed") == ("axioms", "transmute", "chi", "sigma", "perturbation")
        assert suites_for("s3") == ("axioms", "transmute", "chi")
        assert suites_for("octonion-bosonisation") == ("octonion-bosonisation",)

    def test_every_default_is_registered(self):
        for names in DEFAULT_SUITES.values():
            assert set(names) <= set(SUITES)

    def test_explicit_names_win(self):
        assert suites_for("z2", ["chi"]) == ("chi",)

    def test_unknown_suite(self):
        with pytest.raises(FormatError, match="unknown suites"):
            suites_for("z2", ["axioms", "nope"])

    def test_unknown_preset(self):
        with pytest.raises(FormatError, match="unknown preset"):
            run_suite("z7")

    def test_sigma_needs_r(self):
        with pytest.raises(FormatError, match="r-function"):
            suite_sigma("s3")


class TestRuns:

    def test_trivial_z2_axioms(self):
        report = run_suite("trivial-z2", ["axioms"])
        assert report["passed"], format_report(report)
        assert report["parts"] == ["axioms"]
        assert all(name.startswith("axioms: ") for name in report["checks"])

    def test_informational_reports_are_carried(self):
        report = run_suite("z2", ["axioms", "transmute"], seed=3)
        assert report["passed"], format_report(report)
        assert report["seed"] == 3
        assert report["informational"]
        for info in report["informational"]:
            assert info["informational"] is True
            assert "agreement_pct" in summary_table(info).columns or not info["checks"]

    def test_category_on_z2(self):
        report = run_suite("z2", ["category"])
        assert report["passed"], format_report(report)
        assert any("pentagon" in name for name in report["checks"])
        assert any("hexagon" in name for name in report["checks"])

    def test_deterministic(self):
        a = run_suite("z2", ["chi"], seed=11)
        b = run_suite("z2", ["chi"], seed=11)
        assert a["checks"] == b["checks"]

    @pytest.mark.slow
    def test_sigma_on_z2(self):
        report = run_suite("z2", ["sigma"])
        assert report["passed"], format_report(report)

    @pytest.mark.slow
    def test_octonion_bosonisation(self):
        report = run_suite("octonion-bosonisation")
        assert report["passed"], format_report(report)


class TestPerturbationSuite:

    @pytest.mark.slow
    def test_every_negation_is_detected(self):
        report = run_suite("z2cubed", ["perturbation"])
        assert report["passed"], format_report(report)
        assert all("negated" in name for name in report["checks"])
        assert sum(c["checked"] for c in report["checks"].values()) == 20
        assert all(c["failed"] == 0 for c in report["checks"].values())
