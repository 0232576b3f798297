import pytest
from hypothesis import given, strategies as st

from chargroupoid.groups import (
    GroupSizeError,
    GroupValidationError,
    center,
    centralizer,
    cycle_label,
    from_cayley_table,
    from_permutation_generators,
    group_from_descriptor,
    named_group,
)

TEST_GROUPS = ["C2", "C4", "S3", "D4", "Q8", "A4", "S4"]
# (order, number of conjugacy classes), from the standard character tables
EXPECTED = {"C2": (2, 2), "C4": (4, 4), "S3": (6, 3), "D4": (8, 5), "Q8": (8, 5), "A4": (12, 4), "S4": (24, 5)}


@pytest.mark.parametrize("name", TEST_GROUPS)
def test_order_and_class_count(name):
    g = named_group(name)
    assert (g.order, len(g.conjugacy)) == EXPECTED[name]


def test_s3_labels_in_discovery_order():
    assert named_group("S3").labels == ("e", "(12)", "(123)", "(23)", "(13)", "(132)")


def test_s3_classes():
    g = named_group("S3")
    lab = g.labels
    assert [sorted(lab[x] for x in c) for c in g.conjugacy.classes] == [
        ["e"], ["(12)", "(13)", "(23)"], ["(123)", "(132)"],
    ]


def test_permutation_product_is_right_to_left():
    g = named_group("S3")
    a, b = g.element("(12)"), g.element("(23)")
    # (12)(23) sends 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert g.labels[g.mul(a, b)] == "(123)"


def test_quaternion_relations():
    g = named_group("Q8")
    i, j, k, m1 = (g.element(x) for x in ("i", "j", "k", "-1"))
    assert g.mul(i, j) == k
    assert g.mul(j, i) == g.mul(m1, k)
    assert g.mul(i, i) == m1
    assert sorted(g.labels[x] for x in center(g)) == ["-1", "1"]


def test_cycle_label():
    assert cycle_label([0, 1, 2]) == "e"
    assert cycle_label([1, 2, 0, 3]) == "(123)"
    assert cycle_label(list(range(9, -1, -1))) == "(1,10)(2,9)(3,8)(4,7)(5,6)"


def test_cayley_table_identity_moved_to_zero():
    # Z/3 written with the identity at position 2
    g = from_cayley_table([[1, 2, 0], [2, 0, 1], [0, 1, 2]], ["a", "b", "e"])
    assert g.labels[0] == "e"
    assert g.product[0] == (0, 1, 2)


@pytest.mark.parametrize("table, message", [
    ([[0, 1], [1, 1]], "row 1"),
    ([[0, 1], [0, 1]], "column 0"),
    ([[0, 1, 2], [1, 0, 2], [2, 2, 0]], "row 2"),
    ([[0, 2], [1, 0]], r"outside \[0, 2\)"),
])
def test_invalid_tables_name_the_failure(table, message):
    with pytest.raises(GroupValidationError, match=message):
        from_cayley_table(table)


def test_non_associative_latin_square_is_rejected():
    # a loop of order 5 with identity 0 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupValidationError, match="associative"):
        from_cayley_table(table)


def test_size_cap():
    with pytest.raises(GroupSizeError):
        named_group("S6", max_order=100)
    with pytest.raises(GroupSizeError):
        from_permutation_generators(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], max_order=50)


def test_unknown_names_and_descriptors():
    with pytest.raises(GroupValidationError):
        named_group("X7")
    with pytest.raises(GroupValidationError):
        group_from_descriptor({"kind": "lattice"})
    with pytest.raises(GroupValidationError):
        group_from_descriptor({"kind": "permutation", "degree": 3, "generators": [[0, 0, 1]]})


def test_descriptor_kinds_agree():
    a = group_from_descriptor({"kind": "named", "name": "S3"})
    b = group_from_descriptor({"kind": "permutation", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})
    c = group_from_descriptor({"kind": "cayley", "table": [list(r) for r in a.product]})
    assert a.order == b.order == c.order == 6
    assert a.product == c.product
    assert len(b.conjugacy) == 3


@pytest.mark.parametrize("name", TEST_GROUPS)
def test_group_axioms_hold(name):
    g = named_group(name)
    n = g.order
    p = g.product
    for a in range(n):
        assert p[0][a] == p[a][0] == a
        assert p[a][g.inv(a)] == 0
        for b in range(n):
            for c in range(n):
                assert p[p[a][b]][c] == p[a][p[b][c]]


@pytest.mark.parametrize("name", TEST_GROUPS)
def test_class_equation(name):
    g = named_group(name)
    for rep, cls in zip(g.conjugacy.representatives, g.conjugacy.classes):
        assert len(cls) * len(centralizer(g, rep)) == g.order


@given(st.sampled_from(TEST_GROUPS), st.data())
def test_conjugation_preserves_class(name, data):
    g = named_group(name)
    a = data.draw(st.integers(0, g.order - 1))
    v = data.draw(st.integers(0, g.order - 1))
    assert g.conjugacy.class_of[g.conj(v, a)] == g.conjugacy.class_of[a]
