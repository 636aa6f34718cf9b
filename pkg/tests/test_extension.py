from fractions import Fraction

import mpmath
import pytest

from dtuples.errors import IncompatibleError, InputError
from dtuples.extension import (
    compute_e,
    gap_check,
    gap_lower_bounds,
    lemma1_defect,
    regular_fourth,
)
from dtuples.families import d1_quadruple
from dtuples.tuples import verify

from generators import chain_quadruples, graph_quadruples, random_triples


@pytest.mark.parametrize(
    "triple, n, exyz",
    [
        ((1, 3, 8), 1, (0, -1, -1, 1)),
        ((1, 33, 68), 256, (0, -256, -256, 256)),
        ((1, 3, 120), 1, (8, -3, -5, 31)),
    ],
)
def test_compute_e_examples(triple, n, exyz):
    data = compute_e(triple, n)
    assert (data.e, data.x, data.y, data.z) == exyz
    assert data.identities_hold()


def test_compute_e_rejects_non_triple():
    with pytest.raises(IncompatibleError):
        compute_e((1, 2, 3), 1)


def test_compute_e_identities_random():
    for n, triple in random_triples(7, 300):
        data = compute_e(triple, n)
        assert all(data.square_identities()), (n, triple)
        assert data.reconstruction_identity(), (n, triple)


@pytest.mark.parametrize(
    "triple, n, fourth",
    [((1, 3, 8), 1, [120]), ((1, 33, 105), 256, [320]), ((33, 105, 320), 256, [18240])],
)
def test_regular_fourth_examples(triple, n, fourth):
    assert regular_fourth(triple, n) == fourth


def test_regular_fourth_outputs_verify():
    for n, triple in random_triples(11, 300):
        for d in regular_fourth(triple, n):
            assert d > max(triple)
            assert verify(n, triple + (d,)).valid


def test_gap_check_examples():
    g = gap_check((1, 3, 8, 120), 1)
    assert g.applicable_lemma4 and g.lemma4_holds
    assert g.d_bound_lemma4 == Fraction(3847 * 24, 1000)
    assert not g.applicable_lemma5

    g = gap_check((1, 33, 68, 105), 256)
    assert not g.applicable_lemma4 and not g.applicable_lemma5

    assert verify(1, d1_quadruple(2).elements).valid
    g = gap_check((2, 4, 12, 420), 1)
    assert g.applicable_lemma4 and g.lemma4_holds and not g.violations


def test_gap_check_rejects_non_quadruple():
    with pytest.raises(InputError):
        gap_check((1, 2, 3, 4), 1)


def test_gap_principles_on_generated_quadruples():
    quads = chain_quadruples(3, 150) + graph_quadruples([-6, -3, 2, 3, 5, 9], 8000)
    applied4 = applied5 = 0
    for n, q in quads:
        g = gap_check(q, n)
        assert not g.violations, (n, q, g.violations)
        applied4 += g.applicable_lemma4
        applied5 += g.applicable_lemma5
    assert applied4 > 0 and applied5 > 0


def test_gap_lower_bounds_single_step():
    assert gap_lower_bounds(8, 9, 2, 1) == [Fraction(69246, 1000)]
    assert gap_lower_bounds(8, 9, -2, 1) == [Fraction(69246, 1000)]


def test_gap_lower_bounds_unit_seeds():
    c = Fraction(3847, 1000)
    # exponents of c follow the Fibonacci numbers: c, c*c*1, c*c^2*c
    assert gap_lower_bounds(1, 1, 1, 3) == [c, c**2, c**4]


@pytest.mark.parametrize("m", range(1, 11))
def test_gap_chain_reaches_threshold(m):
    a2 = m**3
    bounds = gap_lower_bounds(a2, a2, m, 9)
    # 8th value bounds a_11, 9th bounds a_12
    assert bounds[7] > a2**11 * m**11
    assert bounds[8] > a2**11 * m**11


def test_lemma1_fermat():
    res = lemma1_defect(1, 3, 8, 120, 1)
    with mpmath.workdps(40):
        d1 = abs(mpmath.sqrt(mpmath.mpf(9) / 8) - mpmath.mpf(99) / 93)
        d2 = abs(mpmath.sqrt(mpmath.mpf(25) / 24) - mpmath.mpf(95) / 93)
    assert abs(res.defect1 - d1) < mpmath.mpf(10) ** -35
    assert abs(res.defect2 - d2) < mpmath.mpf(10) ** -35
    with mpmath.workdps(40):
        assert abs(res.bound - mpmath.mpf(8) / 961) < mpmath.mpf(10) ** -35
    assert res.holds
    assert round(float(res.defect1), 5) == 0.00386
    assert round(float(res.defect2), 5) == 0.00088


def test_lemma1_quintuple_tail():
    # {1, 33, 105, 320} has ac = 105 <= 256, so use the upper four elements
    res = lemma1_defect(33, 105, 320, 18240, 256)
    assert res.holds


def test_lemma1_precondition():
    with pytest.raises(InputError):
        lemma1_defect(1, 33, 105, 320, 256)
    with pytest.raises(InputError):
        lemma1_defect(1, 3, 8, 121, 1)


def test_lemma1_on_generated_quadruples():
    checked = 0
    for n, (a, b, c, d) in chain_quadruples(5, 150):
        if a * c > n:
            assert lemma1_defect(a, b, c, d, n).holds, (n, a, b, c, d)
            checked += 1
    assert checked > 100
