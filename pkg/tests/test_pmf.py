import json
import math

import numpy as np
import pytest

from knentropy import Pmf, degenerate, from_counts, mixture, product, uniform
from knentropy.errors import DistributionError, FormatError, ParameterError
from knentropy.pmf import from_csv_text, from_json_text, load


class TestValidation:
    def test_needs_at_least_one_atom(self):
        with pytest.raises(DistributionError):
            Pmf(())

    def test_labels_must_be_unique(self):
        with pytest.raises(DistributionError):
            Pmf((("a", 0.5), ("a", 0.5)))

    def test_rejects_negative_probability(self):
        with pytest.raises(DistributionError):
            Pmf((("a", -0.1), ("b", 1.1)))

    def test_rejects_bad_normalization(self):
        with pytest.raises(DistributionError):
            Pmf((("a", 0.5), ("b", 0.3)))

    def test_renormalize_option(self):
        p = Pmf.from_pairs([("a", 2.0), ("b", 6.0)], renormalize=True)
        assert p.probabilities == (0.25, 0.75)
        with pytest.raises(DistributionError):
            Pmf.from_pairs([("a", 2.0), ("b", 6.0)])

    def test_renormalize_still_rejects_negative_mass(self):
        with pytest.raises(DistributionError):
            Pmf.from_pairs([("a", -1.0), ("b", 2.0)], renormalize=True)

    def test_support_excludes_zero_atoms(self):
        p = Pmf((("a", 0.5), ("b", 0.0), ("c", 0.5)))
        assert p.support() == ("a", "c")
        assert p.restrict_to_support().labels == ("a", "c")
        assert len(p) == 3

    def test_probability_lookup(self):
        p = Pmf((("a", 0.25), ("b", 0.75)))
        assert p.probability("b") == 0.75
        with pytest.raises(KeyError):
            p.probability("missing")


class TestFromCounts:
    def test_symmetric_counts(self):
        assert from_counts([("a", 1), ("b", 1)]).probabilities == (0.5, 0.5)

    def test_hand_normalization(self):
        assert from_counts([("a", 1), ("b", 3)]).probabilities == (0.25, 0.75)

    def test_all_zero_counts_rejected(self):
        with pytest.raises(DistributionError):
            from_counts([("a", 0), ("b", 0)])

    def test_negative_count_rejected(self):
        with pytest.raises(DistributionError):
            from_counts([("a", -1), ("b", 2)])


class TestConstructors:
    def test_uniform(self):
        p = uniform(4)
        assert p.probabilities == (0.25, 0.25, 0.25, 0.25)
        with pytest.raises(DistributionError):
            uniform(0)

    def test_uniform_one_equals_degenerate(self):
        assert uniform(1).probabilities == degenerate("x0").probabilities == (1.0,)

    def test_degenerate_support(self):
        assert degenerate("a").support() == ("a",)


class TestProduct:
    def test_uniform_times_uniform(self):
        joint = product(uniform(2), uniform(2))
        assert joint.probabilities == (0.25, 0.25, 0.25, 0.25)

    def test_hand_multiplication_row_major(self):
        p = Pmf((("a", 0.25), ("b", 0.75)))
        r = Pmf((("x", 0.5), ("y", 0.5)))
        assert product(p, r).probabilities == (0.125, 0.125, 0.375, 0.375)

    def test_degenerate_factor_preserves_the_other(self):
        r = Pmf((("x", 0.3), ("y", 0.7)))
        joint = product(degenerate("a"), r)
        assert joint.probabilities == (0.3, 0.7)

    def test_marginalization_recovers_factors(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            np_, nr = rng.integers(2, 6), rng.integers(2, 6)
            wp = rng.dirichlet(np.ones(np_))
            wr = rng.dirichlet(np.ones(nr))
            p = Pmf(tuple((f"p{i}", float(v)) for i, v in enumerate(wp)))
            r = Pmf(tuple((f"r{j}", float(v)) for j, v in enumerate(wr)))
            joint = np.asarray(product(p, r).probabilities).reshape(np_, nr)
            assert np.max(np.abs(joint.sum(axis=1) - wp)) <= 1e-12
            assert np.max(np.abs(joint.sum(axis=0) - wr)) <= 1e-12


class TestMixture:
    def test_boundary_returns_first(self):
        f = Pmf((("a", 0.2), ("b", 0.8)))
        g = Pmf((("a", 0.6), ("b", 0.4)))
        assert mixture(f, g, 1.0).probabilities == f.probabilities

    def test_hand_combination_with_degenerate(self):
        got = mixture(uniform(2), degenerate("x0"), 0.5)
        assert got.probabilities == (0.75, 0.25)

    def test_idempotence(self):
        f = Pmf((("a", 0.2), ("b", 0.8)))
        for beta in (0.0, 0.3, 1.0):
            assert mixture(f, f, beta).probabilities == pytest.approx(f.probabilities, abs=1e-15)

    def test_label_union(self):
        f = Pmf((("a", 1.0),))
        g = Pmf((("b", 1.0),))
        m = mixture(f, g, 0.25)
        assert m.labels == ("a", "b")
        assert m.probabilities == (0.25, 0.75)

    def test_beta_outside_unit_interval(self):
        f = uniform(2)
        with pytest.raises(ParameterError):
            mixture(f, f, 1.5)

    def test_validity_for_random_betas(self):
        rng = np.random.default_rng(11)
        f = Pmf((("a", 0.1), ("b", 0.9)))
        g = Pmf((("a", 0.7), ("b", 0.3)))
        for _ in range(100):
            m = mixture(f, g, float(rng.uniform()))
            assert abs(math.fsum(m.probabilities) - 1.0) <= 1e-12


class TestIngestion:
    def test_csv_counts_detected(self):
        p = from_csv_text("a,1\nb,3\n")
        assert p.probabilities == (0.25, 0.75)

    def test_csv_probabilities_detected(self):
        p = from_csv_text("a,0.25\nb,0.75\n")
        assert p.probabilities == (0.25, 0.75)

    def test_csv_bad_number(self):
        with pytest.raises(FormatError):
            from_csv_text("a,one\n")

    def test_csv_bad_shape(self):
        with pytest.raises(FormatError):
            from_csv_text("a,1,2\n")

    def test_csv_empty(self):
        with pytest.raises(FormatError):
            from_csv_text("\n\n")

    def test_csv_probabilities_need_normalize(self):
        with pytest.raises(DistributionError):
            from_csv_text("a,0.5\nb,0.3\n")
        p = from_csv_text("a,0.5\nb,0.3\n", renormalize=True)
        assert p.probabilities == pytest.approx((0.625, 0.375), abs=1e-15)

    def test_json_counts(self):
        p = from_json_text(json.dumps({"a": 1, "b": 3}))
        assert p.probabilities == (0.25, 0.75)

    def test_json_probabilities(self):
        p = from_json_text(json.dumps({"a": 0.5, "b": 0.5}))
        assert p.probabilities == (0.5, 0.5)

    def test_json_rejects_non_numbers(self):
        with pytest.raises(FormatError):
            from_json_text(json.dumps({"a": "lots"}))
        with pytest.raises(FormatError):
            from_json_text(json.dumps({"a": True}))
        with pytest.raises(FormatError):
            from_json_text("[1, 2]")
        with pytest.raises(FormatError):
            from_json_text("{not json")

    def test_load_auto_detects(self, tmp_path):
        csv_path = tmp_path / "d.csv"
        csv_path.write_text("a,1\nb,1\n", encoding="utf-8")
        json_path = tmp_path / "d.json"
        json_path.write_text('{"a": 1, "b": 1}', encoding="utf-8")
        sniffed = tmp_path / "d.dat"
        sniffed.write_text('{"a": 2, "b": 2}', encoding="utf-8")
        for path in (csv_path, json_path, sniffed):
            assert load(path).probabilities == (0.5, 0.5)

    def test_load_unknown_format(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("a,1\n", encoding="utf-8")
        with pytest.raises(FormatError):
            load(path, fmt="xml")
