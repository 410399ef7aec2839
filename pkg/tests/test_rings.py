import pytest
from hypothesis import given, settings, strategies as st

from qkc.rings import (
    ConfigError,
    DivisibilityError,
    GroupRingElement,
    NovikovFraction,
    NovikovSeries,
    QExtElement,
    ZLaurentElement,
    exact_div,
    geometric_inverse,
    ring_arith,
    specialize_Q_zero,
)


def e(n, *exps):
    return GroupRingElement.monomial(n, exps)


def test_inverse_monomials_cancel():
    assert ring_arith(e(2, 1, 0), e(2, -1, 0), "mul") == GroupRingElement.one(2)


def test_truncated_geometric_identity():
    one = NovikovSeries.one(1, trunc=2)
    q1 = NovikovSeries.variable(1, 1, trunc=2)
    assert (one - q1) * (one + q1 + q1 * q1) == one


def test_distributivity_example():
    a = e(1, 1)
    assert a * (e(1, 1) + e(1, -1)) == e(1, 2) + GroupRingElement.one(1)


def test_rank_mismatch_is_config_error():
    with pytest.raises(ConfigError):
        ring_arith(e(1, 1), e(2, 1, 0), "add")


def test_trunc_mismatch_is_config_error():
    with pytest.raises(ConfigError):
        NovikovSeries.one(1, trunc=2) + NovikovSeries.one(1, trunc=3)


def test_geometric_inverse_example():
    g = geometric_inverse(1, 1, 3)
    q1 = NovikovSeries.variable(1, 1, trunc=3)
    expect = NovikovSeries.one(1, 3) + q1 + q1 ** 2 + q1 ** 3
    assert g == expect
    assert (NovikovSeries.one(1, 3) - q1) * g == NovikovSeries.one(1, 3)


def test_phi_style_factor_expansion():
    # 1 + Q_1 Q_2 / (1 - Q_1) at n=2, D=3
    d = 3
    f = NovikovSeries.one(2, d) + (
        NovikovSeries.monomial(2, (1, 1), trunc=d) * geometric_inverse(2, 1, d))
    q1 = NovikovSeries.variable(2, 1, trunc=d)
    q2 = NovikovSeries.variable(2, 2, trunc=d)
    assert f == NovikovSeries.one(2, d) + q1 * q2 + q1 * q1 * q2


def test_exact_div_factorization():
    n = 2
    a = GroupRingElement.one(n) - e(n, 2, 2)
    d = GroupRingElement.one(n) - e(n, 1, 1)
    assert exact_div(a, d) == GroupRingElement.one(n) + e(n, 1, 1)


def test_exact_div_geometric_block():
    # (e^{-2 eps1} - e^{-2 eps2}) / (1 - e^{eps1 - eps2})
    n = 2
    a = e(n, -2, 0) - e(n, 0, -2)
    d = GroupRingElement.one(n) - e(n, 1, -1)
    assert exact_div(a, d) == e(n, -2, 0) * (GroupRingElement.one(n) + e(n, 1, -1))


def test_exact_div_failure():
    n = 1
    with pytest.raises(DivisibilityError):
        exact_div(GroupRingElement.one(n), GroupRingElement.one(n) - e(n, 1))


def test_exact_div_monomial():
    n = 2
    a = e(n, 3, 1) * 4
    assert exact_div(a, e(n, 1, 1) * 2) == e(n, 2, 0) * 2
    with pytest.raises(DivisibilityError):
        exact_div(e(n, 0, 0) * 3, e(n, 0, 0) * 2)


def test_specialize_Q_zero_example():
    n = 1
    one = NovikovSeries.one(n, None)
    q1 = NovikovSeries.variable(n, 1, None)
    f = (ZLaurentElement.monomial(n, (1,), one - q1)
         + ZLaurentElement.monomial(n, (-1,), one))
    g = specialize_Q_zero(f)
    expect = (ZLaurentElement.monomial(n, (1,), one)
              + ZLaurentElement.monomial(n, (-1,), one))
    assert g == expect
    assert specialize_Q_zero(ZLaurentElement.constant(n, one)) == \
        ZLaurentElement.constant(n, one)


def test_fraction_arithmetic_and_equality():
    n = 2
    half1 = NovikovFraction.geometric(n, 1)
    one = NovikovFraction.one(n)
    q1 = NovikovSeries.variable(n, 1)
    # 1/(1-Q1) - Q1/(1-Q1) = 1
    num_q = NovikovFraction(n, q1, (1, 0))
    assert half1 - num_q == one
    # truncation matches geometric_inverse
    assert half1.truncate(5) == geometric_inverse(n, 1, 5)
    # cross-multiplied equality with differing denominators
    lhs = NovikovFraction(n, NovikovSeries.one(n) - q1, (1, 0))
    assert lhs == one


def test_render_is_stable():
    n = 2
    x = e(n, 1, 0) - e(n, 0, -1) * 2
    assert x.render() == "-2*e[0,-1] + e[1,0]"
    s = NovikovSeries.monomial(n, (2, 0), coeff=QExtElement.monomial(n, (0, 0), qexp=1))
    assert s.render() == "(q)*Q1^2"


grp = st.builds(
    lambda terms: GroupRingElement(2, {k: v for k, v in terms}),
    st.lists(st.tuples(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
        st.integers(-5, 5)), max_size=5),
)


@settings(max_examples=80, deadline=None)
@given(grp, grp, grp)
def test_ring_axioms_group_ring(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(grp, st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
def test_exact_div_roundtrip(a, m1, m2, n1, n2):
    d = GroupRingElement(2, {(m1, m2): 1}) - GroupRingElement(2, {(n1, n2): 1})
    if d.is_zero():
        return
    assert exact_div(a * d, d) == a


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 16))
def test_geometric_inverse_two_sided(j, d):
    n = 3
    g = geometric_inverse(n, j, d)
    one = NovikovSeries.one(n, d)
    factor = one - NovikovSeries.variable(n, j, d)
    assert factor * g == one
    assert g * factor == one


nov = st.builds(
    lambda terms: NovikovSeries(
        1, None, {(k,): QExtElement.monomial(1, (w,), coeff=c)
                  for k, w, c in terms if c}),
    st.lists(st.tuples(st.integers(0, 3), st.integers(-2, 2),
                       st.integers(-4, 4)), max_size=4),
)


@settings(max_examples=60, deadline=None)
@given(nov, nov)
def test_specialization_is_ring_hom(a, b):
    fa = ZLaurentElement.monomial(1, (1,), a) if not a.is_zero() else ZLaurentElement.zero(1)
    fb = ZLaurentElement.monomial(1, (1,), b) if not b.is_zero() else ZLaurentElement.zero(1)
    assert specialize_Q_zero(fa + fb) == specialize_Q_zero(fa) + specialize_Q_zero(fb)
    assert specialize_Q_zero(fa * fb) == specialize_Q_zero(fa) * specialize_Q_zero(fb)
