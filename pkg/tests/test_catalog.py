import numpy as np
import pytest

from meanconvex import Interval, SamplePlan
from meanconvex.catalog import (AuditFinding, builtin_claims,
                                builtin_functions, make_function, run_audit)

PLAN = SamplePlan(grid_axis=9, grid_t=5, n_random=500)


class TestBuiltinFunctions:
    def test_expected_names_present(self):
        fs = builtin_functions()
        for name in ("square", "neg_square", "log", "neg_log", "cosh",
                     "arcsin", "arctan", "exp", "exp_neg", "reciprocal",
                     "reciprocal_log", "exp_reciprocal", "identity",
                     "affine", "power", "sqrt", "const"):
            assert name in fs

    def test_reciprocal_value(self):
        assert builtin_functions()["reciprocal"](4.0) == 0.25

    def test_cosh_domain_and_positivity(self):
        cosh = builtin_functions()["cosh"]
        assert not cosh.domain.bounded
        assert cosh.positive_on_domain

    def test_arcsin_unit_domain(self):
        arcsin = builtin_functions()["arcsin"]
        assert (arcsin.domain.lo, arcsin.domain.hi) == (0.0, 1.0)
        # positivity claim holds because 0 itself is excluded
        assert arcsin.positive_on_domain
        assert not arcsin.domain.contains(0.0)

    def test_neg_square_flagged_nonpositive(self):
        assert not builtin_functions()["neg_square"].positive_on_domain

    def test_stated_log_domain(self):
        log = builtin_functions()["log"]
        assert log.domain.lo == 1.0
        assert log.positive_on_domain


class TestMakeFunction:
    def test_power_parameter(self):
        cube = make_function("power", p=3.0)
        assert cube(2.0) == 8.0
        assert cube.name == "power[3]"

    def test_affine_parameters(self):
        f = make_function("affine", a=1.0, b=0.5)
        assert f(2.0) == 2.5

    def test_const_parameter(self):
        f = make_function("const", c=7.0)
        assert float(f(123.0)) == 7.0

    def test_default_lookup(self):
        assert make_function("square")(3.0) == 9.0

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            make_function("sinh")


class TestBuiltinClaims:
    def test_at_least_24_entries(self):
        assert len(builtin_claims()) >= 24

    def test_unique_keys(self):
        keys = [e.key for e in builtin_claims()]
        assert len(keys) == len(set(keys))

    def test_known_kinds_and_expectations(self):
        kinds = {"class", "extended-class", "theorem", "equality", "chain",
                 "hlawka", "direction-probe"}
        expectations = {"holds", "refuted", "equality", "suspect",
                        "domain-violation"}
        for e in builtin_claims():
            assert e.kind in kinds
            assert e.expected in expectations
            assert e.statement

    def test_every_equality_family_covered(self):
        keys = {e.key for e in builtin_claims() if e.kind == "equality"}
        assert len(keys) == 7

    def test_every_chained_corollary_covered(self):
        chains = {e.payload["corollary"] for e in builtin_claims()
                  if e.kind == "chain"}
        assert len(chains) == 13


class TestRunAudit:
    @pytest.fixture(scope="class")
    @staticmethod
    def findings():
        return run_audit(PLAN)

    def test_covers_every_entry(self, findings):
        assert len(findings) == len(builtin_claims())
        assert [f.key for f in findings] == [e.key for e in builtin_claims()]

    def test_no_disagreements(self, findings):
        bad = [f for f in findings if not f.agree]
        assert bad == [], [f"{f.key}: {f.outcome} ({f.detail})" for f in bad]

    def test_equality_residuals_tiny(self, findings):
        for f in findings:
            if f.kind == "equality":
                assert f.outcome == "equality"
                assert f.min_margin <= 1e-12

    def test_refuted_claims_detected(self, findings):
        refuted = {f.key for f in findings if f.outcome == "refuted"}
        assert "class/square-AA-concave" in refuted
        assert "theorem/AA-square-flipped" in refuted

    def test_domain_violations_detected(self, findings):
        flagged = {f.key for f in findings if f.outcome == "domain-violation"}
        assert "domain/neg-square-AG" in flagged
        assert "domain/log-unit-GG" in flagged
        assert "domain/neg-log-AH" in flagged

    def test_suspect_entries_measured_not_asserted(self, findings):
        probes = [f for f in findings if f.expected == "suspect"]
        assert probes
        for f in probes:
            assert f.outcome == "measured"
            assert f.agree

    def test_deterministic(self):
        assert run_audit(PLAN) == run_audit(PLAN)
