import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from knentropy import QParam, pseudo_add, pseudo_sum, q_exp, q_log
from knentropy.errors import DomainError, ParameterError

QS = [0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0]

q_values = st.floats(min_value=0.05, max_value=5.0, allow_nan=False)


class TestQParam:
    def test_rejects_nonpositive_values(self):
        for bad in (0.0, -1.0, -0.5, float("nan"), float("inf")):
            with pytest.raises(ParameterError):
                QParam(bad)

    def test_classical_band(self):
        assert QParam(1.0).is_classical()
        assert QParam(1.0 + 5e-9).is_classical()
        assert QParam(1.0 - 5e-9).is_classical()
        assert not QParam(1.0 + 1e-7).is_classical()
        assert not QParam(2.0).is_classical()

    def test_custom_tolerance(self):
        assert QParam(1.01, classical_tolerance=0.05).is_classical()
        with pytest.raises(ParameterError):
            QParam(2.0, classical_tolerance=-1e-3)


class TestQLog:
    def test_unit_argument_is_zero_for_any_q(self):
        for q in QS:
            assert q_log(1.0, q) == 0.0

    def test_hand_value_at_q2(self):
        # (2**-1 - 1) / (1 - 2) = 0.5
        assert q_log(2.0, 2.0) == pytest.approx(0.5, abs=1e-15)

    def test_classical_limit_is_natural_log(self):
        assert q_log(math.e, 1.0) == pytest.approx(1.0, abs=1e-15)
        assert q_log(10.0, 1.0) == pytest.approx(math.log(10.0), abs=1e-15)

    def test_rejects_nonpositive_arguments(self):
        for bad in (0.0, -1.0, -1e-300):
            with pytest.raises(DomainError):
                q_log(bad, 2.0)

    def test_continuity_across_the_classical_point(self):
        for x in (0.1, 0.5, 2.0, 10.0):
            for q in (1.0 - 1e-6, 1.0 + 1e-6):
                assert abs(q_log(x, q) - math.log(x)) <= 1e-5


class TestQExp:
    def test_identity_at_zero(self):
        for q in QS:
            assert q_exp(0.0, q) == pytest.approx(1.0, abs=1e-15)

    def test_hand_value_at_q2(self):
        # (1 - 0.5)**(1 / (1 - 2)) = 2
        assert q_exp(0.5, 2.0) == pytest.approx(2.0, rel=1e-15)

    def test_classical_limit(self):
        assert q_exp(1.0, 1.0) == pytest.approx(math.e, rel=1e-15)

    def test_domain_error_outside_real_branch(self):
        with pytest.raises(DomainError):
            q_exp(1.0, 3.0)  # 1 + (1-3)*1 = -1
        with pytest.raises(DomainError):
            q_exp(-3.0, 0.5)  # 1 + 0.5*(-3) = -0.5


@settings(max_examples=200, deadline=None)
@given(x=st.floats(min_value=1e-6, max_value=1e6), q=q_values)
def test_q_exp_inverts_q_log(x, q):
    # x**(1-q) must stay well inside double range: once the deformed log
    # saturates against its cap 1/(q-1), the stored value can no longer carry
    # x and no inverse can recover it
    assume(abs((1.0 - q) * math.log(x)) <= 12.0)
    assert q_exp(q_log(x, q), q) == pytest.approx(x, rel=1e-10)


def test_q_exp_round_trip_degrades_gracefully_near_saturation():
    # far outside the well-represented region the round trip stays sane even
    # though the 1e-10 contract is no longer information-theoretically possible
    for q, x, rel in ((2.0, 1e3, 1e-12), (2.0, 1e4, 1e-11), (5.0, 1e3, 1e-4)):
        assert q_exp(q_log(x, q), q) == pytest.approx(x, rel=rel)


@settings(max_examples=200, deadline=None)
@given(
    x=st.floats(min_value=1e-4, max_value=1e4),
    y=st.floats(min_value=1e-4, max_value=1e4),
    q=q_values,
)
def test_q_log_turns_products_into_pseudo_sums(x, y, q):
    lhs = q_log(x * y, q)
    rhs = pseudo_add(q_log(x, q), q_log(y, q), q)
    assert abs(lhs - rhs) <= 1e-10 * (1.0 + abs(lhs))


class TestPseudoAdd:
    def test_zero_is_the_identity(self):
        for q in QS:
            for x in (-3.0, 0.0, 0.7, 42.0):
                assert pseudo_add(x, 0.0, q) == x

    def test_hand_value_at_q2(self):
        # 1 + 1 + (1-2)*1*1 = 1
        assert pseudo_add(1.0, 1.0, 2.0) == 1.0

    def test_classical_limit_is_plain_addition(self):
        assert pseudo_add(2.0, 3.0, 1.0) == 5.0

    @settings(max_examples=200, deadline=None)
    @given(
        x=st.floats(min_value=-10, max_value=10),
        y=st.floats(min_value=-10, max_value=10),
        q=q_values,
    )
    def test_commutativity_is_exact(self, x, y, q):
        assert pseudo_add(x, y, q) == pseudo_add(y, x, q)

    @settings(max_examples=200, deadline=None)
    @given(
        x=st.floats(min_value=-10, max_value=10),
        y=st.floats(min_value=-10, max_value=10),
        z=st.floats(min_value=-10, max_value=10),
        q=st.floats(min_value=0.05, max_value=2.0),
    )
    def test_associativity_within_float_noise(self, x, y, z, q):
        left = pseudo_add(pseudo_add(x, y, q), z, q)
        right = pseudo_add(x, pseudo_add(y, z, q), q)
        assert abs(left - right) <= 1e-12


class TestPseudoSum:
    def test_single_element(self):
        assert pseudo_sum([3.25], 2.0) == 3.25

    def test_fold_of_ones_at_q2(self):
        # 1 (+) 1 = 1, then 1 (+) 1 = 1 again
        assert pseudo_sum([1.0, 1.0, 1.0], 2.0) == 1.0

    def test_classical_sum(self):
        assert pseudo_sum([1.0, 2.0, 3.0], 1.0) == 6.0

    def test_empty_sequence_is_an_error(self):
        with pytest.raises(ValueError):
            pseudo_sum([], 2.0)

    def test_matches_q_log_of_product_of_q_exps(self):
        q = 0.7
        xs = [0.2, 0.4, 0.1]
        prod = 1.0
        for x in xs:
            prod *= q_exp(x, q)
        assert pseudo_sum(xs, q) == pytest.approx(q_log(prod, q), abs=1e-12)
