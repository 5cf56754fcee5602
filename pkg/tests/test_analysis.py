import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tribent.analysis import (
    BentType,
    HypothesisError,
    NotBentError,
    Regularity,
    TernaryFunction,
    bent_profile,
    coset_structure,
    decode_coefficient,
    expected_preimage_sizes,
    expected_s0_minus_s1,
    is_bent,
    is_dual_bent,
    is_plateaued,
    preimage_sets,
    s0_s1,
    walsh_point,
    walsh_spectrum,
)
from tribent.constructions import QuadraticForm, quadratic_function
from tribent.core import Eisenstein, encode, neg_point, size, span
from tribent.fixtures import get_fixture

from conftest import naive_spectrum_pair, random_function


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------

def test_walsh_point_constant():
    f = TernaryFunction.constant(1, 0)
    assert walsh_point(f, 0) == Eisenstein(3, 0)


def test_walsh_point_linear():
    f = TernaryFunction(1, [0, 1, 2])
    assert walsh_point(f, 0) == Eisenstein(0, 0)
    assert walsh_point(f, 1) == Eisenstein(3, 0)


def test_walsh_point_square():
    f = TernaryFunction(1, [0, 1, 1])
    assert walsh_point(f, 0) == Eisenstein(1, 2)  # 1 + 2w = i*sqrt(3)


def test_spectrum_constant_n2():
    f = TernaryFunction.constant(2, 0)
    sp = walsh_spectrum(f)
    assert sp.value(0) == Eisenstein(9, 0)
    assert all(sp.value(a).is_zero() for a in range(1, 9))


def test_fast_equals_pointwise_random():
    rng = np.random.default_rng(42)
    for n in (1, 2, 3, 4, 5):
        for _ in range(10 if n < 5 else 3):
            f = random_function(rng, n)
            sp = walsh_spectrum(f)
            for a in range(size(n)):
                assert sp.value(a) == walsh_point(f, a)


def test_fast_equals_matrix_oracle():
    rng = np.random.default_rng(7)
    for n in (2, 3, 5):
        f = random_function(rng, n)
        sp = walsh_spectrum(f)
        oa, ob = naive_spectrum_pair(f)
        assert np.array_equal(sp.coeff_1, oa)
        assert np.array_equal(sp.coeff_w, ob)


@given(st.lists(st.integers(0, 2), min_size=27, max_size=27))
@settings(max_examples=50)
def test_parseval_holds_for_everything(table):
    f = TernaryFunction(3, table)
    assert walsh_spectrum(f).parseval_total() == 3 ** 6


# ---------------------------------------------------------------------------
# Coefficient decoding
# ---------------------------------------------------------------------------

def test_decode_even_dimension():
    assert decode_coefficient(Eisenstein(9, 0), 4) == (1, 0)
    assert decode_coefficient(Eisenstein(0, -9), 4) == (-1, 1)


def test_decode_odd_dimension():
    assert decode_coefficient(Eisenstein(1, 2), 1) == (1, 0)


def test_decode_rejects_wrong_norm():
    with pytest.raises(ValueError):
        decode_coefficient(Eisenstein(2, 0), 2)


def test_decode_all_candidates_roundtrip():
    from tribent.core import omega_pow
    for n in (2, 3):
        for j in range(3):
            for sgn in (1, -1):
                if n % 2 == 0:
                    w = omega_pow(j) * (sgn * 3 ** (n // 2))
                else:
                    w = (omega_pow(j + 1) - omega_pow(j + 2)) * (sgn * 3 ** ((n - 1) // 2))
                assert decode_coefficient(w, n) == (sgn, j)


# ---------------------------------------------------------------------------
# Profiles
# ---------------------------------------------------------------------------

def test_square_is_weakly_regular_plus():
    f = TernaryFunction(1, [0, 1, 1])
    p = bent_profile(f)
    assert p.type is BentType.PLUS
    assert p.regularity is Regularity.WEAKLY_REGULAR
    assert p.b_minus == frozenset()


def test_not_bent_carries_witness():
    f = TernaryFunction(1, [0, 1, 2])  # linear, spectrum has zeros
    with pytest.raises(NotBentError) as exc:
        bent_profile(f)
    assert 0 <= exc.value.witness < 3
    assert exc.value.norm_sq != 3


def test_flagship_profile(flagship):
    p = bent_profile(flagship)
    assert p.type is BentType.PLUS
    assert p.regularity is Regularity.NON_WEAKLY_REGULAR
    expected = frozenset(x + 81 * 0 + 243 * z for x in range(81) for z in range(3))
    assert p.b_plus == expected
    assert p.b_plus | p.b_minus == frozenset(range(729))
    assert not (p.b_plus & p.b_minus)


def test_minus_type_fixture(built_fixtures):
    p = bent_profile(built_fixtures["code756"])
    assert p.type is BentType.MINUS
    assert 0 in p.b_minus
    # minus side is (all of F_3^6) x {0} x F_3
    expected = frozenset(x + 729 * 0 + 2187 * z for x in range(729) for z in range(3))
    assert p.b_minus == expected


def test_is_bent_quick():
    assert is_bent(TernaryFunction(1, [0, 1, 1]))
    assert not is_bent(TernaryFunction(1, [0, 0, 0]))


def test_dual_bent_cases(flagship, built_fixtures):
    ok, dp = is_dual_bent(flagship)
    assert ok and dp is not None
    ok2, _ = is_dual_bent(built_fixtures["trace14"])
    assert not ok2
    # weakly regular bent functions always have bent duals
    q = quadratic_function(QuadraticForm((1, 2, 2)))
    ok3, _ = is_dual_bent(q)
    assert ok3


def test_plateaued():
    assert is_plateaued(TernaryFunction.constant(1, 0)) == 1
    assert is_plateaued(TernaryFunction(1, [0, 1, 1])) == 0
    f = TernaryFunction.from_callable(2, lambda c: c[0] ** 2)
    assert is_plateaued(f) == 1
    # mixed levels: not plateaued
    g = TernaryFunction(2, [0, 1, 1, 0, 0, 0, 0, 0, 0])
    assert is_plateaued(g) is None


def test_evenness_helpers():
    f = TernaryFunction(1, [0, 1, 1])
    assert f.is_even()
    g = TernaryFunction(1, [0, 1, 2])
    assert not g.is_even()
    assert g.negated().table.tolist() == [0, 2, 1]
    assert g.reflected().table.tolist() == [0, 2, 1]


# ---------------------------------------------------------------------------
# Dual sums and pre-images
# ---------------------------------------------------------------------------

def test_s0_s1_weakly_regular_side_vanishes():
    f = quadratic_function(QuadraticForm((1, 2)))
    p = bent_profile(f)
    assert p.b_minus == frozenset() or p.b_plus == frozenset()
    for y in range(9):
        s0, s1 = s0_s1(f, y, p)
        vanished = s1 if p.b_minus == frozenset() else s0
        assert vanished.is_zero()


def test_s0_s1_identity_on_flagship(flagship):
    p = bent_profile(flagship)
    s0, s1 = s0_s1(flagship, 0, p)
    assert s0 - s1 == Eisenstein(27, 0)
    for y in (1, 40, 333, 728):
        s0, s1 = s0_s1(flagship, y, p)
        assert s0 - s1 == expected_s0_minus_s1(flagship, y)


def test_s0_s1_identity_odd_dimension(built_fixtures):
    f = built_fixtures["code270-a"]
    p = bent_profile(f)
    s0, s1 = s0_s1(f, 0, p)
    assert s0 - s1 == Eisenstein(-27, -54)
    assert s0 - s1 == expected_s0_minus_s1(f, 0)


def test_preimage_sets_partition(flagship):
    p = bent_profile(flagship)
    pre = preimage_sets(p)
    union = frozenset()
    for i in range(3):
        union |= pre.plus[i] | pre.minus[i]
    assert union == frozenset(range(729))
    assert frozenset().union(*pre.plus.values()) == p.b_plus
    assert frozenset().union(*pre.minus.values()) == p.b_minus


@pytest.mark.parametrize("name,side,value,expect", [
    ("code98-a", "plus", 0, 99),     # n=6, r=5
    ("code270-a", "plus", 2, 270),   # n=7, r=6
    ("code756", "minus", 2, 756),    # n=8, r=7
    ("code36", "minus", 1, 36),      # n=5, r=4
])
def test_preimage_sizes_match_closed_forms(built_fixtures, name, side, value, expect):
    f = built_fixtures[name]
    p = bent_profile(f)
    pre = preimage_sets(p)
    sets = pre.plus if side == "plus" else pre.minus
    assert len(sets[value]) == expect
    r = span(p.type_side(), f.n).dim
    want = expected_preimage_sizes(f.n, r, f(0), p.type)
    for i in range(3):
        assert len(sets[i]) == want[i]


def test_even_functions_have_symmetric_sides(built_fixtures):
    for name in ("code98-a", "code36", "trace36"):
        f = built_fixtures[name]
        p = bent_profile(f)
        for sset in (p.b_plus, p.b_minus):
            assert sset == frozenset(neg_point(x, f.n) for x in sset)


def test_dual_value_and_parity_of_dual(flagship):
    p = bent_profile(flagship)
    assert p.dual(0) == flagship(0)
    assert p.dual.is_even()


def test_dual_involution(flagship):
    p = bent_profile(flagship)
    dp = bent_profile(p.dual)
    assert dp.dual == flagship


# ---------------------------------------------------------------------------
# Coset structure
# ---------------------------------------------------------------------------

def test_coset_structure_flagship(flagship):
    p = bent_profile(flagship)
    cs = coset_structure(flagship, p)
    assert cs.coset_union_ok and cs.constant_ok
    r = cs.subspace.dim
    assert len(cs.i_plus) == 3 ** (2 * r - flagship.n)
    assert len(cs.dual_profile.b_plus) == 3 ** r


def test_coset_structure_minus_side(built_fixtures):
    f = built_fixtures["code756"]
    p = bent_profile(f)
    cs = coset_structure(f, p)
    assert cs.coset_union_ok and cs.constant_ok
    assert len(cs.dual_profile.b_minus) == 3 ** cs.subspace.dim


def test_coset_structure_rejects_weakly_regular():
    f = quadratic_function(QuadraticForm((1, 2, 1, 1)))
    p = bent_profile(f)
    with pytest.raises(HypothesisError):
        coset_structure(f, p)
