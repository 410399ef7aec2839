import itertools
from math import comb

import pytest

from qkc.qkpres import (
    CoeffFunctionTable,
    check_coefficient_factorization,
    elementary_z,
    eta,
    f_poly,
    ideal_generators,
    phi_Q,
    schubert_poly,
    to_semimod,
    zeta,
)
from qkc.relations import elementary_E
from qkc.rings import (
    ConfigError,
    GroupRingElement,
    NovikovFraction,
    NovikovSeries,
    ZLaurentElement,
    specialize_Q_zero,
)
from qkc.semimod import SemiModElement, ff, universe


def q_mono(n, a, b):
    return NovikovSeries.monomial(
        n, tuple(1 if a <= t <= b else 0 for t in range(1, n + 1)))


def frac(s):
    return NovikovFraction.from_series(s)


def test_zeta_table_example():
    n = 4
    I = {2, 3, -3, -1}
    one = NovikovSeries.one(n)
    assert zeta(n, I, 3) == frac(one - q_mono(n, 3, 3))
    expect_4bar = NovikovFraction(
        n, one - q_mono(n, 3, 3) + q_mono(n, 3, 4), (0, 0, 1, 0))
    assert zeta(n, I, -4) == expect_4bar
    assert zeta(n, I, 1) == frac(one)
    assert zeta(n, I, 2) == frac(one)
    assert zeta(n, I, 4) == frac(one)
    # these two follow the printed definition; the example table disagrees
    assert zeta(n, I, -3) == frac(one - q_mono(n, 2, 2))
    assert zeta(n, I, -2) == frac(one)
    assert zeta(n, I, -1) == frac(one)


def test_empty_set_gives_trivial_factors():
    n = 3
    one = frac(NovikovSeries.one(n))
    for j in universe(n):
        assert zeta(n, (), j) == one
        assert eta(n, (), j) == one
        assert phi_Q(n, (), j) == one


def test_zeta_eta_phi_pointwise():
    for n in (1, 2, 3):
        for name, ok, _ in check_coefficient_factorization(n):
            assert ok, (n, name)
    # and in truncated mode
    table = CoeffFunctionTable(2, {1, -1}, trunc=5)
    assert table.product_identity_holds()


def test_q_zero_specialization_of_factors():
    n = 2
    for I in ({1}, {1, 2}, {2, -2}, {-1, -2}):
        for j in universe(n):
            for fn in (zeta, phi_Q):
                value = fn(n, I, j, trunc=4)
                assert value.degree_zero_part() == value.degree_zero_part() * 1
                assert not value.degree_zero_part().is_zero()


def test_f_small_cases():
    n = 1
    one = NovikovSeries.one(n)
    expect = (ZLaurentElement.monomial(n, (1,), frac(one - q_mono(n, 1, 1)))
              + ZLaurentElement.monomial(n, (-1,), frac(one)))
    assert f_poly(n, 1) == expect
    assert f_poly(n, 0) == ZLaurentElement.constant(n, frac(one))
    with pytest.raises(ConfigError):
        f_poly(2, 1, "upper")


def test_specialization_is_elementary():
    for n in (1, 2, 3):
        for l in range(2 * n + 1):
            lhs = specialize_Q_zero(f_poly(n, l))
            assert lhs == specialize_Q_zero(elementary_z(n, l)), (n, l)


def test_specialized_term_count():
    for n in (1, 2, 3, 4):
        for l in range(2 * n + 1):
            spec = specialize_Q_zero(f_poly(n, l))
            total = 0
            for _, c in spec.sorted_terms():
                (qe, exps), v = c.degree_zero_part().sorted_terms()[0]
                total += v
            assert total == comb(2 * n, l), (n, l)


def test_ideal_generators():
    n = 2
    gens = ideal_generators(n)
    assert len(gens) == n
    for l, g in enumerate(gens, start=1):
        spec = specialize_Q_zero(g)
        classical = specialize_Q_zero(
            elementary_z(n, l)
            - ZLaurentElement.constant(
                n, NovikovFraction.one(n) * elementary_E(n, l)))
        assert spec == classical
    n = 1
    g, = ideal_generators(n)
    one = NovikovSeries.one(n)
    expect = (ZLaurentElement.monomial(n, (1,), frac(one - q_mono(n, 1, 1)))
              + ZLaurentElement.monomial(n, (-1,), frac(one))
              - ZLaurentElement.constant(
                  n, frac(one) * elementary_E(n, 1)))
    assert g == expect


def test_schubert_poly():
    n = 2
    e1_inv = GroupRingElement.monomial(n, (-1, 0), -1)
    expect = (f_poly(n, 0, "upper", 1)
              + f_poly(n, 1, "upper", 1) * e1_inv)
    assert schubert_poly(n, 1) == expect
    assert schubert_poly(n, n, "barred") == schubert_poly(n, n, "upper")
    with pytest.raises(ConfigError):
        schubert_poly(n, 0)


def test_to_semimod_basics():
    n = 2
    one = ZLaurentElement.constant(n, NovikovFraction.one(n))
    assert to_semimod(one) == SemiModElement.one(n)
    z1 = ZLaurentElement.monomial(n, (1, 0), NovikovFraction.one(n))
    z1_inv = ZLaurentElement.monomial(n, (-1, 0), NovikovFraction.one(n))
    assert to_semimod(z1 * z1_inv) == SemiModElement.one(n)


def test_to_semimod_matches_module_elements():
    for n in (1, 2):
        for l in range(2 * n + 1):
            assert to_semimod(f_poly(n, l)) == ff(n, l), (n, l)
        for k in range(1, n + 1):
            for l in range(k + 1):
                assert to_semimod(f_poly(n, l, "upper", k)) \
                    == ff(n, l, "upper", k)
            for l in range(2 * n - k + 1):
                assert to_semimod(f_poly(n, l, "barred", k)) \
                    == ff(n, l, "barred", k)


def test_to_semimod_truncated_mode():
    n, trunc = 2, 6
    for l in range(2 * n + 1):
        assert to_semimod(f_poly(n, l, trunc=trunc)) == ff(n, l, trunc=trunc)


def test_image_symmetry():
    for n in (1, 2):
        for l in range(n + 1):
            lhs = to_semimod(f_poly(n, n + l))
            assert lhs == to_semimod(f_poly(n, n - l))
