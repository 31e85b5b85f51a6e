import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzyvmf.errors import DomainError
from fuzzyvmf.metrics import TNorm, tnorm_apply

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def test_examples():
    assert tnorm_apply(TNorm.PRODUCT, 0.5, 1.0) == 0.5
    assert tnorm_apply(TNorm.PRODUCT, 0.5, 0.5) == 0.25
    assert tnorm_apply(TNorm.MINIMUM, 0.3, 0.7) == 0.3
    assert tnorm_apply('minimum', 0.7, 0.3) == 0.3


@pytest.mark.parametrize('a, b', [(-0.1, 0.5), (0.5, 1.5), (float('nan'), 0.5)])
def test_outside_unit_interval(a, b):
    with pytest.raises(DomainError):
        TNorm.PRODUCT.apply(a, b)


def test_fold():
    assert TNorm.PRODUCT.fold([]) == 1.0
    assert TNorm.PRODUCT.fold([0.5, 0.5, 0.5]) == 0.125
    assert TNorm.MINIMUM.fold([0.9, 0.2, 0.4]) == 0.2


@pytest.mark.parametrize('tnorm', list(TNorm))
@given(a=unit, b=unit)
def test_identity_and_commutativity(tnorm, a, b):
    assert tnorm.apply(a, 1.0) == a
    assert tnorm.apply(a, b) == tnorm.apply(b, a)
    assert 0.0 <= tnorm.apply(a, b) <= min(a, b)


@pytest.mark.parametrize('tnorm', list(TNorm))
@given(a=unit, b=unit, c=unit)
def test_associativity(tnorm, a, b, c):
    left = tnorm.apply(tnorm.apply(a, b), c)
    right = tnorm.apply(a, tnorm.apply(b, c))
    assert left == pytest.approx(right, abs=1e-15)


@pytest.mark.parametrize('tnorm', list(TNorm))
@given(a=unit, b=unit, c=unit, d=unit)
def test_monotone(tnorm, a, b, c, d):
    lo_a, hi_a = sorted((a, c))
    lo_b, hi_b = sorted((b, d))
    assert tnorm.apply(lo_a, lo_b) <= tnorm.apply(hi_a, hi_b)
