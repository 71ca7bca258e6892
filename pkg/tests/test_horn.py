import itertools

import pytest

from schubhorn.core import ProblemTuple, SchubertIndex, all_indices, expected_dim, horn_lhs, parse_problem
from schubhorn import lr
from schubhorn.horn import (
    DepthExceeded,
    build_table,
    enumerate_inequalities,
    horn_decide,
)


def test_contrasting_pair():
    v = horn_decide(parse_problem("1,4;2,3@4"))
    assert not v.nonzero
    assert v.witness.d == 1
    assert [k.encode() for k in v.witness.ktuple] == ["1", "2"]
    assert v.witness.value == 1
    assert horn_decide(parse_problem("1,4;2,4@4")).nonzero
    for mode in ("B", "C"):
        assert not horn_decide(parse_problem("1,4;2,3@4"), mode).nonzero


def test_fundamental_tuple():
    fund = ProblemTuple(2, 4, (SchubertIndex(4, (3, 4)),) * 4)
    assert horn_decide(fund).nonzero


def test_table_base_case():
    for r, s in [(1, 2), (2, 2), (3, 3)]:
        t = build_table(r, r, s)
        assert len(t.tuples) == 1
        assert t.point_tuples == t.tuples
        assert t.tuples[0][0].elems == tuple(range(1, r + 1))


def test_table_matches_oracle():
    for d, r, s in [(1, 2, 2), (1, 3, 3), (2, 3, 2)]:
        table = build_table(d, r, s)
        expected_tuples = set()
        expected_points = set()
        for kt in itertools.product(all_indices(d, r), repeat=s):
            p = ProblemTuple(d, r, kt)
            if lr.is_nonzero_product(p):
                expected_tuples.add(kt)
                num = lr.intersection_number(p)
                if num.top_degree and num.count == 1:
                    expected_points.add(kt)
        assert set(table.tuples) == expected_tuples
        assert set(table.point_tuples) == expected_points


def test_table_self_consistency():
    table = build_table(2, 4, 2)
    for kt in table.tuples:
        assert horn_decide(ProblemTuple(2, 4, kt)).nonzero


def test_enumerate_inequalities():
    labels = enumerate_inequalities(1, 3, 2)
    assert len(labels) == 1 and labels[0][0] == 1  # just the codimension condition
    b = enumerate_inequalities(2, 4, 2, "B")
    c = enumerate_inequalities(2, 4, 2, "C")
    assert set(c) <= set(b)
    b36 = enumerate_inequalities(3, 6, 3, "B")
    c36 = enumerate_inequalities(3, 6, 3, "C")
    assert set(c36) < set(b36)


def test_witness_is_self_certifying():
    for s in (2, 3):
        for kt in itertools.product(all_indices(2, 4), repeat=s):
            p = ProblemTuple(2, 4, kt)
            v = horn_decide(p)
            if v.nonzero:
                assert v.witness is None
            else:
                assert v.witness.value > 0
                members = build_table(v.witness.d, 2, s).tuples
                assert v.witness.ktuple in members


def test_monotonicity():
    for kt in itertools.product(all_indices(2, 4), repeat=2):
        p = ProblemTuple(2, 4, kt)
        if not horn_decide(p).nonzero:
            continue
        for j, index in enumerate(kt):
            for a in range(2):
                raised = list(index.elems)
                raised[a] += 1
                if raised[a] > 4 or raised[a] in index.elems:
                    continue
                new = list(kt)
                new[j] = SchubertIndex(4, tuple(sorted(raised)))
                assert horn_decide(ProblemTuple(2, 4, tuple(new))).nonzero


def test_duality_invariance():
    from schubhorn.core import dual_problem
    for s in (2, 3):
        for kt in itertools.product(all_indices(2, 4), repeat=s):
            p = ProblemTuple(2, 4, kt)
            assert horn_decide(p).nonzero == horn_decide(dual_problem(p)).nonzero


def test_depth_bound():
    big = ProblemTuple(8, 9, (SchubertIndex(9, tuple(range(1, 9))),))
    with pytest.raises(DepthExceeded):
        horn_decide(big)
    with pytest.raises(DepthExceeded):
        build_table(1, 8, 2)
    assert horn_decide(big, depth_bound=8) is not None


def test_full_tuple_inequality_is_codim_condition():
    p = parse_problem("1,4;2,3@4")
    (d, kt) = enumerate_inequalities(2, 4, 2)[-1]
    assert d == 2
    assert horn_lhs(p, d, kt).value == -expected_dim(p)
