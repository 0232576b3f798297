import pytest

from chargroupoid.presented import (
    Edge,
    PresentationError,
    Quiver,
    parallel_pair,
    presentation_from_descriptor,
    relation_matrix,
    rose,
    validate_presentation,
)


def square():
    q = Quiver(("x", "y", "z"), (Edge("a", "x", "y"), Edge("b", "y", "z"), Edge("c", "x", "z")))
    return validate_presentation(q, [[("a", 1), ("b", 1), ("c", -1)]])


def test_rose_has_no_tree_edges():
    g = rose(3)
    assert g.spanning_forest() == ((),)
    assert g.non_tree_edges == (0, 1, 2)


def test_parallel_pair_tree():
    g = parallel_pair()
    assert g.spanning_forest() == ((0,),)
    assert g.tree_path(0, 1) == {0: 1}
    assert g.tree_path(1, 0) == {0: -1}


def test_tree_path_follows_reversed_edges():
    g = square()
    # tree from x: a then c; y -> z goes back along a and out along c
    assert g.spanning_forest() == ((0, 2),)
    assert g.tree_path(1, 2) == {0: -1, 2: 1}


def test_relation_matrix():
    assert relation_matrix(square()).to_dense() == [[1, 1, -1]]


def test_components_of_disconnected_quiver():
    q = Quiver(("p", "q", "r"), (Edge("e", "r", "p"),))
    g = validate_presentation(q, [])
    assert g.components == ((0, 2), (1,))
    assert g.component_edges == ((0,), ())


@pytest.mark.parametrize("objects, edges, relations, message", [
    (("x", "x"), (), [], "duplicate object"),
    (("x",), (Edge("a", "x", "x"), Edge("a", "x", "x")), [], "duplicate edge"),
    (("x",), (Edge("a", "x", "y"),), [], "dangling"),
    (("x",), (Edge("a", "x", "x"),), [[("b", 1)]], "unknown edge"),
    (("x",), (Edge("a", "x", "x"),), [[("a", 2)]], "exponent"),
    (("x", "y"), (Edge("a", "x", "y"), Edge("b", "x", "y")), [[("a", 1), ("b", 1)]], "position 1.*not composable"),
    (("x", "y"), (Edge("a", "x", "y"),), [[("a", 1)]], "not closed"),
])
def test_validation_errors(objects, edges, relations, message):
    with pytest.raises(PresentationError, match=message):
        validate_presentation(Quiver(objects, edges), relations)


def test_descriptor_parsing():
    g = presentation_from_descriptor({
        "objects": ["x", "y"],
        "edges": [{"name": "a", "src": "x", "dst": "y"}, {"name": "b", "src": "x", "dst": "y"}],
        "relations": [[["a", 1], ["b", -1]]],
    })
    assert relation_matrix(g).to_dense() == [[1, -1]]
    with pytest.raises(PresentationError, match="malformed"):
        presentation_from_descriptor({"edges": []})
    with pytest.raises(PresentationError):
        presentation_from_descriptor([1, 2])
