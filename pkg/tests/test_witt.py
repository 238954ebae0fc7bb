import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from cycwitt import roots
from cycwitt.arith import euler_phi, mobius, ramanujan_sum
from cycwitt.witt import (
    ONE,
    ZERO,
    WittElement,
    add,
    basis_mul,
    f0,
    frobenius,
    hom_classify,
    inner,
    integral,
    mul,
    neg,
    parseval_check,
    phi,
    scale,
    t_m,
    trace,
    verschiebung,
    zeta_partial_check,
)

elements = st.dictionaries(
    st.integers(min_value=1, max_value=36),
    st.integers(min_value=-9, max_value=9),
    max_size=4,
).map(WittElement)


def test_element_canonical_form():
    assert WittElement({2: 0, 3: 1}) == phi(3)
    assert WittElement({}) == ZERO
    assert phi(2) - phi(2) == ZERO
    assert (2 * ONE + 3 * ONE).coeff(1) == 5
    assert scale(-2, phi(6) + ONE) == -2 * phi(6) - 2 * ONE
    assert add(phi(2), neg(phi(2))) == ZERO
    with pytest.raises(ValueError):
        WittElement({0: 1})


def test_serialized_pairs_roundtrip():
    w = 3 * phi(6) - 2 * ONE + phi(4)
    assert w.to_pairs() == [[1, -2], [4, 1], [6, 3]]
    assert WittElement.from_pairs(w.to_pairs()) == w


def test_basis_mul_examples():
    assert basis_mul(2, 3) == phi(6)
    assert basis_mul(2, 2) == ONE
    assert basis_mul(8, 4) == 2 * phi(8)
    assert basis_mul(6, 4) == phi(12)
    assert basis_mul(5, 5) == 3 * phi(5) + 4 * ONE


def test_mul_examples():
    x = 4 * phi(9) - 2 * ONE
    assert mul(ONE, x) == x
    d = phi(2) - ONE
    assert mul(d, d) == 2 * ONE - 2 * phi(2)
    assert mul(phi(5), phi(5)) == 3 * phi(5) + 4 * ONE


@settings(max_examples=150)
@given(elements, elements, elements)
def test_ring_laws(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)
    assert mul(ONE, a) == a


def test_oracle_equivalence_small():
    for n in range(1, 25):
        on = roots.orbit(n)
        for m in range(n, 25):
            closed = basis_mul(n, m)
            literal = roots.to_witt(roots.product(on, roots.orbit(m)))
            assert closed == literal, (n, m)


def test_products_stay_inside_divisor_span():
    # the span of the divisor classes of N is closed under multiplication
    from cycwitt.arith import divisors

    for big_n in (12, 36, 60):
        ds = divisors(big_n)
        for a in ds:
            for b in ds:
                assert set(basis_mul(a, b).support) <= set(ds), (big_n, a, b)


def test_frobenius_examples():
    assert frobenius(3, phi(4)) == phi(4)
    assert frobenius(2, phi(4)) == 2 * phi(2)
    assert frobenius(2, phi(2)) == ONE
    assert frobenius(6, phi(4)) == 2 * phi(2)


def test_frobenius_zero_routes_to_root_count():
    w = 2 * phi(12) - phi(3)
    assert frobenius(0, w) == f0(w) * ONE
    assert f0(w) == 2 * euler_phi(12) - euler_phi(3)


def test_frobenius_multiplicative_family():
    for n in (1, 2, 8, 12, 35, 48):
        for m1 in range(1, 13):
            for m2 in range(1, 13):
                lhs = frobenius(m1, frobenius(m2, phi(n)))
                assert lhs == frobenius(m1 * m2, phi(n))


@settings(max_examples=60)
@given(elements, elements, st.integers(min_value=1, max_value=30))
def test_frobenius_is_ring_map(a, b, m):
    assert frobenius(m, mul(a, b)) == mul(frobenius(m, a), frobenius(m, b))
    assert frobenius(m, a + b) == frobenius(m, a) + frobenius(m, b)


def test_frobenius_on_multiples_of_index():
    for n in range(1, 49):
        for k in range(1, 5):
            assert frobenius(k * n, phi(n)) == euler_phi(n) * ONE


def test_verschiebung_examples():
    w = phi(3) - 2 * ONE
    assert verschiebung(1, w) == w
    assert verschiebung(2, phi(3)) == phi(6)
    assert verschiebung(2, phi(2)) == phi(4)


def test_verschiebung_pairs_with_frobenius_on_image_pairs():
    # the adjunction identity holds against the image of V_m: pairing
    # phi(m*n) with phi(n) transports across the two operators
    for n in range(1, 25):
        for m in range(1, 9):
            assert inner(frobenius(m, phi(m * n)), phi(n)) == inner(
                phi(m * n), verschiebung(m, phi(n))
            )


def test_verschiebung_is_not_the_full_adjoint():
    # pinned counterexample: F_3 fixes phi(4), so the left side pairs
    # phi(4) with itself, while V_3 phi(4) = phi(12) is orthogonal to phi(4)
    assert inner(frobenius(3, phi(4)), phi(4)) == 2
    assert inner(phi(4), verschiebung(3, phi(4))) == 0
    # the defect vanishes exactly on the image pairs checked above; the
    # true adjoint of F_3 on phi(4) is phi(4) + phi(12):
    for k in (1, 2, 3, 4, 6, 12, 24):
        assert inner(frobenius(3, phi(k)), phi(4)) == inner(
            phi(k), phi(4) + phi(12)
        )


def test_trace_examples():
    assert trace(ONE) == 1
    assert trace(phi(6)) == 1
    assert trace(mul(phi(2), phi(2))) == 1


def test_trace_and_f0_are_ring_maps():
    rng = random.Random(11)
    for _ in range(50):
        a = WittElement({rng.randint(1, 20): rng.randint(-5, 5) for _ in range(3)})
        b = WittElement({rng.randint(1, 20): rng.randint(-5, 5) for _ in range(3)})
        assert trace(mul(a, b)) == trace(a) * trace(b)
        assert f0(mul(a, b)) == f0(a) * f0(b)


def test_t_m_examples():
    for n in range(1, 40):
        assert t_m(1, phi(n)) == mobius(n)
    assert t_m(2, phi(4)) == -2
    assert t_m(0, phi(12)) == 4
    for n in range(1, 30):
        for m in range(0, 30):
            assert t_m(m, phi(n)) == ramanujan_sum(n, m)


def test_integral_and_inner():
    assert integral(ONE) == 1
    assert integral(phi(5)) == 0
    assert integral(3 * ONE - 7 * phi(8)) == 3
    assert inner(phi(3), phi(3)) == 2
    assert inner(phi(3), phi(5)) == 0
    x = 5 * phi(7) - 2 * ONE
    assert inner(ONE, x) == integral(x)
    for n in range(1, 20):
        for m in range(1, 20):
            assert inner(phi(n), phi(m)) == (euler_phi(n) if n == m else 0)


def test_averaged_traces_recover_integral():
    # over a full period the trace averages of the power operators
    # project onto the coefficient of phi(1)
    for big_n in (1, 6, 12, 20):
        rng = random.Random(big_n)
        from cycwitt.arith import divisors

        w = WittElement({d: rng.randint(-4, 4) for d in divisors(big_n)})
        total = sum(t_m(m, w) for m in range(1, big_n + 1))
        assert total == big_n * integral(w)


def test_parseval_examples():
    assert parseval_check(1).ok
    rep = parseval_check(6)
    assert rep.ok and rep.pairs_checked == 16
    assert sum(ramanujan_sum(6, z) ** 2 for z in range(1, 7)) == 12
    assert parseval_check(12).ok


def test_zeta_partial_check_against_pi():
    # classical value 6/pi^2 computed independently of the module's zeta
    rep = zeta_partial_check(1, 2, 30_000, 1e-2)
    assert rep.ok
    assert abs(rep.partial_sum - 6 / math.pi**2) < 1e-2
    assert rep.tail_bound < 1e-3


def test_zeta_partial_check_rejects_bad_input():
    with pytest.raises(ValueError):
        zeta_partial_check(1, 1, 100, 1.0)
    with pytest.raises(ValueError):
        zeta_partial_check(0, 3, 100, 1.0)


def test_zeta_report_carries_both_values_on_failure():
    rep = zeta_partial_check(1, 3, 50, 1e-15)
    assert not rep.ok
    assert rep.partial_sum != rep.reference


def test_hom_classify_small():
    homs = hom_classify(2, 1)
    assert sorted(h[2] for h in homs) == [-1, 1]
    homs = hom_classify(3, 1)
    assert sorted(h[3] for h in homs) == [-1, 2]
    for p in (2, 3):
        for k in (1, 2):
            assert len(hom_classify(p, k)) == k + 1


def test_hom_classify_values_match_trace_family():
    for p in (2, 3):
        k = 2
        homs = {tuple(h[p**i] for i in range(k + 1)) for h in hom_classify(p, k)}
        fam = set()
        for i in range(k):
            fam.add(tuple(t_m(p**i, phi(p**j)) for j in range(k + 1)))
        fam.add(tuple(f0(phi(p**j)) for j in range(k + 1)))
        assert homs == fam


def test_hom_classify_rejects_bad_input():
    with pytest.raises(ValueError):
        hom_classify(4, 1)
    with pytest.raises(ValueError):
        hom_classify(2, 0)
