import random

import pytest
from hypothesis import given, strategies as st

from chargroupoid.action import ActionGroupoid, CompositionError, Morphism, TwoCell
from chargroupoid.groups import centralizer, named_group

TEST_GROUPS = ["C2", "C4", "S3", "D4", "Q8", "A4", "S4"]


@pytest.fixture(scope="module")
def s3():
    g = named_group("S3")
    return g, ActionGroupoid(g)


def test_source_and_target_by_hand(s3):
    g, gpd = s3
    t, c = g.element("(12)"), g.element("(123)")
    m = Morphism(u=g.mul(t, c), v=t)
    # source v^-1 u = c, target u v^-1 = t c t^-1
    assert gpd.source(m) == c
    assert g.labels[gpd.target(m)] == "(132)"


def test_composition_formula(s3):
    g, gpd = s3
    a = g.element("(123)")
    t = g.element("(12)")
    phi = gpd.morphism_from(a, t)
    psi = gpd.morphism_from(gpd.target(phi), g.element("(23)"))
    comp = gpd.compose(phi, psi)
    assert comp == Morphism(g.mul(psi.u, phi.v), g.mul(psi.v, phi.v))
    assert gpd.source(comp) == a and gpd.target(comp) == gpd.target(psi)


def test_non_composable_pair_raises(s3):
    g, gpd = s3
    phi = gpd.identity_at(g.element("(12)"))
    psi = gpd.identity_at(g.element("(123)"))
    with pytest.raises(CompositionError, match="target"):
        gpd.compose(phi, psi)


def test_hom_set_sizes_and_order(s3):
    g, gpd = s3
    t = g.element("(12)")
    homs = gpd.hom_set(t, g.element("(13)"))
    assert len(homs) == 2
    assert [m.v for m in homs] == sorted(m.v for m in homs)
    assert gpd.hom_set(t, g.element("(123)")) == []


def test_loops_are_centralizer_pairs(s3):
    g, gpd = s3
    c = g.element("(123)")
    assert gpd.loops(c) == [Morphism(g.mul(z, c), z) for z in centralizer(g, c)]


def test_canonical_index_order(s3):
    g, gpd = s3
    for k, m in enumerate(gpd.morphisms):
        assert gpd.index(m) == k == m.v * g.order + m.u


@pytest.mark.parametrize("name", TEST_GROUPS)
def test_components_are_conjugacy_classes(name):
    g = named_group(name)
    gpd = ActionGroupoid(g)
    assert [c for _, c in gpd.components()] == list(g.conjugacy.classes)
    for comp, members in zip(gpd.component_morphisms, g.conjugacy.classes):
        assert len(members) * g.order == len(comp)


@pytest.mark.parametrize("name", TEST_GROUPS)
def test_groupoid_laws(name):
    g = named_group(name)
    gpd = ActionGroupoid(g)
    for m in gpd.morphisms:
        a, b = gpd.source(m), gpd.target(m)
        assert gpd.compose(gpd.identity_at(a), m) == m
        assert gpd.compose(m, gpd.identity_at(b)) == m
        inv = gpd.inverse_morphism(m)
        assert gpd.compose(m, inv) == gpd.identity_at(a)
        assert gpd.compose(inv, m) == gpd.identity_at(b)


@pytest.mark.parametrize("name", TEST_GROUPS)
def test_hom_set_size_is_centralizer_order(name):
    g = named_group(name)
    gpd = ActionGroupoid(g)
    for cls in g.conjugacy.classes:
        a = cls[0]
        for b in cls:
            assert len(gpd.hom_set(a, b)) == len(centralizer(g, a))


def test_composition_associative_on_random_triples():
    g = named_group("S4")
    gpd = ActionGroupoid(g)
    rnd = random.Random(20240)
    for _ in range(200):
        a = rnd.randrange(g.order)
        f = gpd.morphism_from(a, rnd.randrange(g.order))
        h = gpd.morphism_from(gpd.target(f), rnd.randrange(g.order))
        k = gpd.morphism_from(gpd.target(h), rnd.randrange(g.order))
        assert gpd.compose(gpd.compose(f, h), k) == gpd.compose(f, gpd.compose(h, k))


@pytest.mark.parametrize("name", TEST_GROUPS)
def test_spanning_subgroupoid(name):
    g = named_group(name)
    gpd = ActionGroupoid(g)
    chosen = {gpd.morphisms[k] for k in gpd.spanning_set}
    pairs = {(gpd.source(m), gpd.target(m)) for m in chosen}
    # exactly one per hom-set
    assert len(pairs) == len(chosen) == sum(len(c) ** 2 for c in g.conjugacy.classes)
    for m in chosen:
        assert gpd.inverse_morphism(m) in chosen
        for m2 in chosen:
            if gpd.target(m) == gpd.source(m2):
                assert gpd.compose(m, m2) in chosen
    for a in range(g.order):
        assert gpd.identity_at(a) in chosen


def test_spanning_representative_across_components(s3):
    g, gpd = s3
    with pytest.raises(CompositionError):
        gpd.spanning_representative(g.element("(12)"), g.element("(123)"))


def test_two_cells(s3):
    g, gpd = s3
    t = g.element("(12)")
    f = gpd.morphism_from(t, 0)
    h = gpd.morphism_from(t, t)
    assert gpd.two_cell(f, h) == TwoCell(f, h)
    other = gpd.morphism_from(t, g.element("(123)"))
    assert gpd.two_cell(f, other) is None
    with pytest.raises(CompositionError):
        gpd.vcompose(TwoCell(f, h), TwoCell(f, h))


@st.composite
def quadruple(draw):
    """Cells alpha: f=>f', alpha2: f'=>f'' and beta, beta2 on the next hom-set."""
    g = named_group("S3")
    gpd = ActionGroupoid(g)
    a = draw(st.integers(0, g.order - 1))
    b = g.conj(draw(st.integers(0, g.order - 1)), a)
    c = g.conj(draw(st.integers(0, g.order - 1)), b)
    left = gpd.hom_set(a, b)
    right = gpd.hom_set(b, c)
    f = [draw(st.sampled_from(left)) for _ in range(3)]
    h = [draw(st.sampled_from(right)) for _ in range(3)]
    return gpd, f, h


@given(quadruple())
def test_interchange_law(q):
    gpd, f, h = q
    a1, a2 = TwoCell(f[0], f[1]), TwoCell(f[1], f[2])
    b1, b2 = TwoCell(h[0], h[1]), TwoCell(h[1], h[2])
    lhs = gpd.vcompose(gpd.hcompose(a1, b1), gpd.hcompose(a2, b2))
    rhs = gpd.hcompose(gpd.vcompose(a1, a2), gpd.vcompose(b1, b2))
    assert lhs == rhs


@given(quadruple())
def test_identity_cells(q):
    gpd, f, h = q
    alpha = TwoCell(f[0], f[1])
    assert gpd.vcompose(gpd.identity_cell(f[0]), alpha) == alpha
    assert gpd.vcompose(alpha, gpd.identity_cell(f[1])) == alpha
    ident_b = gpd.identity_cell(gpd.identity_at(gpd.target(f[0])))
    assert gpd.hcompose(alpha, ident_b) == alpha
