import itertools
from fractions import Fraction

import pytest

from schubhorn import horn, lr
from schubhorn.core import ProblemTuple, SchubertIndex, all_indices, expected_dim, parse_problem
from schubhorn.parabolic import (
    HNCertificate,
    ParabolicData,
    SemistableVerdict,
    full_slope,
    hn_certificate,
    is_semistable,
    slope,
    weights_from_problem,
)

E1 = parse_problem("1,4;2,3@4")
E2 = parse_problem("1,4;2,4@4")


def test_weights_from_problem():
    data = weights_from_problem(E1)
    assert data.weights == ((2, 0), (1, 1))
    assert data.level == 2
    fund = ProblemTuple(2, 4, (SchubertIndex(4, (3, 4)),) * 2)
    assert weights_from_problem(fund).weights == ((0, 0), (0, 0))
    pt = ProblemTuple(2, 4, (SchubertIndex(4, (1, 2)),))
    assert weights_from_problem(pt).weights == ((2, 2),)


def test_slope_values():
    data = weights_from_problem(E1)
    k = (SchubertIndex(2, (1,)), SchubertIndex(2, (2,)))
    assert slope(data, 1, k) == Fraction(3)
    assert full_slope(data) == Fraction(2)
    zeros = ParabolicData(2, 2, ((0, 0), (0, 0)), 2)
    assert slope(zeros, 1, k) == 0


def test_weight_validation():
    with pytest.raises(ValueError):
        ParabolicData(2, 1, ((0, 1),), 2)  # must weakly decrease
    with pytest.raises(ValueError):
        ParabolicData(2, 2, ((1, 0),), 2)  # one row per factor


def test_is_semistable_examples():
    assert not is_semistable(weights_from_problem(E1))
    assert is_semistable(weights_from_problem(E2))
    zeros = ParabolicData(2, 2, ((0, 0), (0, 0)), 0)
    assert is_semistable(zeros)


def test_full_slope_bounded_by_level():
    # whenever the codimension condition holds, the full-space slope is at
    # most the level
    for s in (2, 3):
        for kt in itertools.product(all_indices(2, 5), repeat=s):
            p = ProblemTuple(2, 5, kt)
            if expected_dim(p) < 0:
                continue
            data = weights_from_problem(p)
            assert full_slope(data) <= data.level


def test_hn_certificate_worked_example():
    cert = hn_certificate(E1)
    assert isinstance(cert, HNCertificate)
    assert cert.contradictor.d == 1
    assert [k.encode() for k in cert.contradictor.ktuple] == ["1", "2"]
    assert cert.violated.value == 1
    assert cert.point_check == 1
    assert [k.encode() for k in cert.ltuple] == ["1", "3"]


def test_hn_semistable_verdict():
    assert isinstance(hn_certificate(E2), SemistableVerdict)


def test_hn_codim_condition_route():
    bad = ProblemTuple(2, 4, (SchubertIndex(4, (1, 2)),) * 2)
    cert = hn_certificate(bad)
    assert isinstance(cert, HNCertificate)
    assert cert.contradictor.d == 2
    assert cert.violated.value == -expected_dim(bad) > 0
    assert cert.point_check == 1


def test_semistable_equals_horn_on_top_degree():
    for r, n in [(2, 4), (2, 5)]:
        for s in (2, 3):
            for kt in itertools.product(all_indices(r, n), repeat=s):
                p = ProblemTuple(r, n, kt)
                if expected_dim(p) != 0:
                    continue
                assert (is_semistable(weights_from_problem(p))
                        == horn.horn_decide(p).nonzero), p.encode()


def test_certificates_for_all_zero_top_tuples():
    for r, n in [(2, 4), (2, 5)]:
        for s in (2, 3):
            for kt in itertools.product(all_indices(r, n), repeat=s):
                p = ProblemTuple(r, n, kt)
                if expected_dim(p) != 0:
                    continue
                if lr.intersection_number(p).count != 0:
                    continue
                cert = hn_certificate(p)
                assert isinstance(cert, HNCertificate)
                assert cert.violated.value > 0
                sub = ProblemTuple(cert.contradictor.d, r, cert.contradictor.ktuple)
                assert lr.intersection_number(sub) == (1, True)


def test_scale_equivariance_of_argmax():
    # scaling every weight scales every slope, so the selected contradictor
    # is unchanged
    for scale in (2, 3):
        for p in (E1, parse_problem("1,3;1,4;2,4@4")):
            base = hn_certificate(p)
            if not isinstance(base, HNCertificate):
                continue
            data = weights_from_problem(p)
            scaled = ParabolicData(
                data.r, data.s,
                tuple(tuple(scale * w for w in row) for row in data.weights),
                scale * data.level)
            assert slope(scaled, base.contradictor.d, base.contradictor.ktuple) \
                == scale * base.contradictor.slope
            cands = [(d, kt, mu) for d, kt, mu in
                     _destab(scaled)]
            best = min(cands, key=lambda c: (-c[2], -c[0], tuple(k.elems for k in c[1])))
            assert best[0] == base.contradictor.d
            assert best[1] == base.contradictor.ktuple


def _destab(data):
    from schubhorn.parabolic import destabilizing_tuples
    return destabilizing_tuples(data)
