import math

import pytest
from hypothesis import given, settings

from hyperschur.hypercomb import (
    HYPER,
    PLAIN,
    GroupElement,
    Hypercomposition,
    LabelTuple,
    act,
    base_tuple,
    enumerate_hypercompositions,
    enumerate_tuples,
    group_elements,
    group_order,
    labelling_function,
    stabilizer_order,
    tuple_labels,
)

from strategies import group_and_tuple, objects


def test_objects_degree_two_in_order():
    assert [o.parts for o in enumerate_hypercompositions(2)] == [(4,), (1, 2, 1), (2, 0, 2), (1, 1, 0, 1, 1)]


@pytest.mark.parametrize("n, count", [(1, 2), (2, 4), (3, 8), (4, 16)])
def test_object_counts(n, count):
    objs = enumerate_hypercompositions(n)
    assert len(objs) == count == len(set(objs))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_plain_object_count(n):
    assert len(enumerate_hypercompositions(n, PLAIN)) == 2 ** (n - 1)


@pytest.mark.parametrize("bad", [(1, 2), (1, 1, 2), (2, 1, 1), (0, 2, 0), (1, 3, 1), (0,)])
def test_invalid_hypercompositions(bad):
    with pytest.raises(ValueError):
        Hypercomposition(bad)


def test_parse_round_trip():
    lam = Hypercomposition.parse("(1, 2, 1)")
    assert str(lam) == "(1,2,1)" and Hypercomposition.parse(str(lam)) == lam
    with pytest.raises(ValueError):
        Hypercomposition.parse("(1,a,1)")


def test_labelling_function():
    lam = Hypercomposition((1, 2, 1))
    assert [labelling_function(lam, p) for p in range(1, 5)] == [1, 2, 2, 3]
    assert labelling_function(Hypercomposition((2, 0, 2)), 3) == 3
    with pytest.raises(ValueError):
        labelling_function(lam, 5)


def test_tuples_of_121():
    assert tuple_labels(Hypercomposition((1, 2, 1))) == ((1, 2, 2, 3), (2, 1, 3, 2), (2, 3, 1, 2), (3, 2, 2, 1))


def test_base_tuple_first():
    for lam in enumerate_hypercompositions(3) + enumerate_hypercompositions(3, PLAIN):
        assert tuple_labels(lam)[0] == base_tuple(lam)
        assert list(tuple_labels(lam)) == sorted(tuple_labels(lam))


def test_label_tuple_validation():
    lam = Hypercomposition((1, 2, 1))
    with pytest.raises(ValueError):
        LabelTuple((1, 2, 3, 2), lam)
    assert len(enumerate_tuples(lam, HYPER)) == 4


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("mode", [HYPER, PLAIN])
def test_orbit_stabilizer(n, mode):
    for lam in enumerate_hypercompositions(n, mode):
        assert len(tuple_labels(lam)) * stabilizer_order(lam) == group_order(n, mode)


def test_group_enumeration():
    elems = list(group_elements(3))
    assert len(elems) == len(set(elems)) == 48
    assert len(list(group_elements(3, PLAIN))) == 6


def test_group_cap_env(monkeypatch):
    monkeypatch.setenv("HYPERSCHUR_GROUP_CAP", "10")
    with pytest.raises(ValueError):
        list(group_elements(3))


def test_non_symmetric_permutation_rejected():
    with pytest.raises(ValueError):
        GroupElement((2, 1, 3, 4))


def test_generators_generate():
    n = 3
    gens = [GroupElement.generator(i, n) for i in range(1, n + 1)]
    seen = {GroupElement.identity(2 * n)}
    frontier = list(seen)
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = s * g
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    assert len(seen) == group_order(n)


def test_action_transitive_on_tuples():
    lam = Hypercomposition((1, 2, 1))
    base = base_tuple(lam)
    assert {act(g, base) for g in group_elements(2)} == set(tuple_labels(lam))


@settings(max_examples=60, deadline=None)
@given(group_and_tuple())
def test_action_is_a_left_action(data):
    lam, g, h, t = data
    assert act(g, act(h, t)) == act(g * h, t)
    assert act(GroupElement.identity(len(t), lam.mode), t) == t
    assert act(g, t) in set(tuple_labels(lam))


@settings(max_examples=40, deadline=None)
@given(objects())
def test_stabilizer_formula(lam):
    stab = sum(1 for g in group_elements(lam.degree, lam.mode) if act(g, base_tuple(lam)) == base_tuple(lam))
    assert stab == stabilizer_order(lam)
    if lam.mode is PLAIN:
        assert stab == math.prod(math.factorial(p) for p in lam.parts)
