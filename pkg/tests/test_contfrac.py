import random
from fractions import Fraction

import pytest

from hankelmod2.closedform import T_int, favard_st
from hankelmod2.contfrac import (
    CFSpec,
    IDENTITIES,
    InsufficientDepthError,
    cf_expand,
    target_series,
    verify_identity,
)
from hankelmod2.exactring import TruncatedSeries
from hankelmod2.hankel import SequenceRule, build_matrix, det_oracle
from hankelmod2.seq import grs_r


def catalan_prefix(n):
    # independent convolution oracle: C_0 = 1, C_{k+1} = sum C_i C_{k-i}
    c = [1]
    for k in range(n - 1):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c


def test_catalan_expansion():
    spec = CFSpec.s_fraction([1] * 5)
    assert cf_expand(spec, 5) == TruncatedSeries(catalan_prefix(5), 5)
    assert catalan_prefix(5) == [1, 1, 2, 5, 14]


def test_s_fraction_with_T_coefficients():
    spec = CFSpec.s_fraction([T_int(k) for k in range(33)])
    assert cf_expand(spec, 33) == target_series(33)


def test_j_fraction_with_favard_coefficients():
    pairs = [favard_st(k) for k in range(17)]
    spec = CFSpec.j_fraction([s for s, _ in pairs], [t for _, t in pairs])
    assert cf_expand(spec, 33) == target_series(33)


def test_target_series_examples():
    plain = target_series(8)
    assert list(plain.coeffs) == [1, 1, 0, 1, 0, 0, 0, 1]
    alt = target_series(8, alternating=True)
    assert list(alt.coeffs) == [1, -1, 0, 1, 0, 0, 0, -1]
    assert list(target_series(1).coeffs) == [1]


def test_verify_identities_at_64():
    assert verify_identity("eq217", 64)
    assert verify_identity("eq228", 64)
    assert verify_identity("eq08", 64)
    assert set(IDENTITIES) == {"eq217", "eq228", "eq08"}


def test_verify_identity_guards():
    with pytest.raises(ValueError):
        verify_identity("eq217", 200)
    with pytest.raises(ValueError):
        verify_identity("nope", 16)


def test_eq08_displayed_sign_prefix():
    # the four displayed levels of the alternating fraction: +z, -z, +z, -z
    assert [grs_r(n) * grs_r(n + 2) for n in range(4)] == [1, -1, 1, -1]
    # ... but the pattern is not strictly periodic further out
    assert grs_r(4) * grs_r(6) == -1


def test_depth_guard():
    with pytest.raises(InsufficientDepthError):
        cf_expand(CFSpec.s_fraction([1, 1, 1]), 4)
    with pytest.raises(InsufficientDepthError):
        cf_expand(CFSpec.j_fraction([0, 0], [1, 1]), 5)
    # j-fraction needs only ceil(N/2) levels
    assert cf_expand(CFSpec.j_fraction([0, 0], [1, 1]), 4).order == 4


def test_depth_sufficiency_randomized():
    rng = random.Random(20210 + 42)
    for _ in range(25):
        n = rng.randrange(4, 24)
        coeffs = [rng.choice((1, -1)) for _ in range(n + 3)]
        base = cf_expand(CFSpec.s_fraction(coeffs[:n]), n)
        deeper = cf_expand(CFSpec.s_fraction(coeffs), n)
        assert base == deeper


def test_cfspec_validation():
    with pytest.raises(ValueError):
        CFSpec("q", (Fraction(1),))
    with pytest.raises(ValueError):
        CFSpec("s", ())
    with pytest.raises(ValueError):
        CFSpec("j", (Fraction(1),), ())
    with pytest.raises(ValueError):
        CFSpec("s", (Fraction(1),), (Fraction(1),))


def test_favard_t_matches_hankel_ratios():
    # t_n = H_n H_{n+2} / H_{n+1}^2 for the plain unit-rule moments
    dets = [det_oracle(build_matrix(SequenceRule("unit", 0), n)) for n in range(23)]
    for n in range(21):
        ratio = Fraction(dets[n] * dets[n + 2], dets[n + 1] ** 2)
        assert ratio == favard_st(n)[1], n
