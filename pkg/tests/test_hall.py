import re
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilmult.hall import (
    DEFAULT_ENUM_CAP,
    CapExceeded,
    bracket,
    enumerate_basic,
    enumeration_cap,
    leaf,
    parse_commutator,
)
from nilmult.witt import witt_count

# ---------------------------------------------------------------------------
# Independent oracle: nested-tuple trees, own ordering, own Hall check.  Only
# the rendered-string format is shared with the implementation under test.
# ---------------------------------------------------------------------------


def _weight(tree):
    return 1 if isinstance(tree, int) else _weight(tree[0]) + _weight(tree[1])


def _render(tree):
    if isinstance(tree, int):
        return f"x{tree}"
    return f"[{_render(tree[0])},{_render(tree[1])}]"


def _key(tree):
    pieces = re.split(r"(\d+)", _render(tree))
    return (_weight(tree), tuple(int(p) if i % 2 else p for i, p in enumerate(pieces)))


def _all_trees(weight, letters):
    if weight == 1:
        yield from range(1, letters + 1)
        return
    for left_weight in range(1, weight):
        for u in _all_trees(left_weight, letters):
            for v in _all_trees(weight - left_weight, letters):
                yield (u, v)


def _is_hall(tree):
    if isinstance(tree, int):
        return True
    u, v = tree
    if not (_is_hall(u) and _is_hall(v)):
        return False
    if not _key(u) > _key(v):
        return False
    if not isinstance(u, int) and _key(v) < _key(u[1]):
        return False
    return True


def brute_force_hall_set(weight, letters):
    return {_render(t) for t in _all_trees(weight, letters) if _is_hall(t)}


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def test_weight_one_is_the_alphabet():
    assert [c.rendered for c in enumerate_basic(1, 3)] == ["x1", "x2", "x3"]


def test_weight_two_on_two_letters():
    assert [c.rendered for c in enumerate_basic(2, 2)] == ["[x2,x1]"]


def test_weight_three_on_two_letters():
    assert [c.rendered for c in enumerate_basic(3, 2)] == [
        "[[x2,x1],x1]",
        "[[x2,x1],x2]",
    ]


def test_weight_two_on_three_letters():
    assert [c.rendered for c in enumerate_basic(2, 3)] == [
        "[x2,x1]",
        "[x3,x1]",
        "[x3,x2]",
    ]


@pytest.mark.parametrize(
    "weight, letters",
    [(w, t) for w in range(1, 6) for t in range(1, 4)] + [(6, 2), (6, 1)],
)
def test_matches_brute_force(weight, letters):
    enumerated = [c.rendered for c in enumerate_basic(weight, letters)]
    assert len(set(enumerated)) == len(enumerated)
    assert set(enumerated) == brute_force_hall_set(weight, letters)


def _as_tuple_tree(commutator):
    if commutator.is_leaf:
        return commutator.letter
    u, v = commutator.parts
    return (_as_tuple_tree(u), _as_tuple_tree(v))


@pytest.mark.parametrize("weight, letters", [(6, 3), (7, 2), (4, 4)])
def test_every_element_passes_the_independent_validator(weight, letters):
    # beyond brute-force reach: check the Hall condition node by node
    level = enumerate_basic(weight, letters)
    assert len({c.rendered for c in level}) == len(level) == witt_count(weight, letters)
    for c in level:
        assert _is_hall(_as_tuple_tree(c)), c.rendered


def test_counts_agree_with_witt():
    for w in range(1, 7):
        for t in range(1, 5):
            assert len(enumerate_basic(w, t)) == witt_count(w, t), (w, t)


def test_empty_alphabet_and_single_letter():
    assert enumerate_basic(1, 0) == []
    assert enumerate_basic(4, 0) == []
    assert enumerate_basic(2, 1) == []
    assert enumerate_basic(5, 1) == []


@pytest.mark.parametrize("weight", [1, 2, 3, 4])
def test_alphabet_monotonicity(weight):
    for t in range(1, 4):
        smaller = {c.rendered for c in enumerate_basic(weight, t)}
        larger = {c.rendered for c in enumerate_basic(weight, t + 1)}
        assert smaller <= larger


def test_enumeration_is_sorted_and_fresh():
    first = enumerate_basic(4, 3)
    assert first == sorted(first)
    second = enumerate_basic(4, 3)
    assert first == second and first is not second


def test_wide_alphabets_order_letters_numerically():
    letters = [c.rendered for c in enumerate_basic(1, 12)]
    assert letters == [f"x{i}" for i in range(1, 13)]
    # x10 sorts after x9, so [x10,..] pairs follow every [x9,..] pair
    pairs = [c.rendered for c in enumerate_basic(2, 11)]
    assert pairs == [
        f"[x{j},x{i}]" for j in range(2, 12) for i in range(1, j)
    ]


# ---------------------------------------------------------------------------
# Accessors and parsing
# ---------------------------------------------------------------------------


def test_accessors():
    c = bracket(bracket(leaf(3), leaf(1)), leaf(1))
    assert c.rendered == "[[x3,x1],x1]"
    assert c.weight == 3
    assert c.max_letter() == 3
    assert c.distinct_letters() == frozenset((1, 3))
    assert c.letter_multiset() == Counter({1: 2, 3: 1})
    assert leaf(2).rendered == "x2"
    assert leaf(2).max_letter() == 2
    assert str(bracket(leaf(2), leaf(1))) == "[x2,x1]"


def test_letter_multiset_sums_to_weight():
    for c in enumerate_basic(5, 3):
        assert sum(c.letter_multiset().values()) == c.weight == 5
        assert set(c.letter_multiset()) == set(c.distinct_letters())


def test_weight_two_plus_needs_two_letters():
    for w in (2, 3, 4):
        for c in enumerate_basic(w, 3):
            assert len(c.distinct_letters()) >= 2


def test_parse_round_trip_examples():
    for text in ("x1", "x17", "[x2,x1]", "[[x2,x1],[x3,x1]]"):
        assert parse_commutator(text).rendered == text


def test_parse_round_trips_every_enumerated_commutator():
    for c in enumerate_basic(5, 3):
        assert parse_commutator(c.rendered) == c


@pytest.mark.parametrize("bad", ["", "x", "x0", "[x1]", "[x2,x1", "x1,x2", "[x2,x1]]"])
def test_parse_rejects_junk(bad):
    with pytest.raises(ValueError):
        parse_commutator(bad)


def test_leaf_index_must_be_positive():
    with pytest.raises(ValueError):
        leaf(0)


# ---------------------------------------------------------------------------
# Ordering
# ---------------------------------------------------------------------------


def test_total_order_is_weight_major():
    a = leaf(9)
    b = bracket(leaf(2), leaf(1))
    assert a < b
    assert b > a
    assert bracket(leaf(3), leaf(1)) < bracket(leaf(3), leaf(2))


@given(st.integers(1, 4), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_enumeration_respects_the_dataclass_order(weight, letters):
    level = enumerate_basic(weight, letters)
    assert all(a < b for a, b in zip(level, level[1:]))


# ---------------------------------------------------------------------------
# Cap handling
# ---------------------------------------------------------------------------


def test_cap_exceeded():
    with pytest.raises(CapExceeded) as exc_info:
        enumerate_basic(4, 3, cap=17)
    err = exc_info.value
    assert (err.weight, err.letters, err.count, err.cap) == (4, 3, 18, 17)
    assert enumerate_basic(4, 3, cap=18)  # equal to the cap is allowed


def test_default_cap(monkeypatch):
    monkeypatch.delenv("NILMULT_ENUM_CAP", raising=False)
    assert enumeration_cap() == DEFAULT_ENUM_CAP


def test_env_var_overrides_cap(monkeypatch):
    monkeypatch.setenv("NILMULT_ENUM_CAP", "5")
    assert enumeration_cap() == 5
    with pytest.raises(CapExceeded):
        enumerate_basic(4, 3)
    monkeypatch.setenv("NILMULT_ENUM_CAP", "0")
    with pytest.raises(ValueError):
        enumeration_cap()
    monkeypatch.setenv("NILMULT_ENUM_CAP", "lots")
    with pytest.raises(ValueError):
        enumeration_cap()


def test_validation():
    with pytest.raises(ValueError):
        enumerate_basic(0, 2)
    with pytest.raises(ValueError):
        enumerate_basic(2, -1)
