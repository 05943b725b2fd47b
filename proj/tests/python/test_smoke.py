"""Smoke tests for the python bindings."""

import pytest

import monext


def test_monoid_basics():
    z2 = monext.cyclic(2)
    assert len(z2) == 2
    assert monext.is_group(z2)
    assert monext.is_commutative(z2)

    meet = monext.chain(2)
    assert not monext.is_group(meet)
    assert monext.units(meet) == [0]

    with pytest.raises(monext.MonextError):
        monext.validate_monoid(2, 1, [0, 1, 1, 0])


def test_semidirect_and_extraction():
    h = monext.chain(2)
    n = monext.cyclic(2)
    zero = monext.Action(h, n, [0, 1, 0, 0])
    d = monext.semidirect(zero)
    cls = monext.classify(d)
    assert cls.is_schreier_split
    assert cls.is_special_schreier
    assert cls.is_leech_normal is False
    assert monext.extract_action(d).alpha == zero.alpha


def test_relaxed_round_trip():
    h = monext.chain(2)
    n = monext.cyclic(2)
    rel = monext.Relaxation(h, n, [0, 1, 0, 0])
    ra = monext.RelaxedAction(rel, [0, 1, 0, 0])
    d = monext.relaxed_semidirect(ra.rel, ra.alpha)
    assert d.g.size == 3
    cls = monext.classify(d)
    assert cls.is_weakly_schreier_split
    assert not cls.is_schreier_split
    assert cls.is_leech_normal is True

    back = monext.extract_relaxed_action(d)
    assert back.rel == rel
    assert monext.relaxed_actions_equal(back, ra)


def test_cohomology():
    z2 = monext.cyclic(2)
    trivial = monext.Action(z2, z2, [0, 1, 0, 1])
    res = monext.h2(trivial)
    assert res.cocycle_count == 2
    assert res.coboundary_count == 1
    assert res.h2_order == 2

    z3 = monext.cyclic(3)
    assert monext.h2(monext.Action(z2, z3, [0, 1, 2, 0, 1, 2])).h2_order == 1


def test_baer_sum():
    z2 = monext.cyclic(2)
    z4 = monext.cyclic(4)
    d1 = monext.ExtensionDiagram(
        z2, z4, z2,
        monext.MonoidHom(z2, z4, [0, 2]),
        monext.MonoidHom(z4, z2, [0, 1, 0, 1]))
    total = monext.baer_sum(d1, d1)
    klein = monext.direct_product(z2, z2)
    assert monext.find_isomorphism(total.g, klein) is not None


def test_census():
    cat = monext.enumerate_monoids(3)
    assert len(cat.monoids) == 7

    census = monext.enumerate_ws_split_extensions(
        monext.cyclic(2), monext.chain(2))
    assert census.class_count == 3

    report = monext.census_check(monext.cyclic(2), monext.cyclic(2))
    assert report.ok()
    assert report.checked_cohomology


def test_artin_glueing():
    two = monext.chain(2)
    d = monext.artin_glueing(two, two, [0, 1])
    assert d.g.size == 3
    assert monext.classify(d).is_weakly_schreier_split


def test_documents_round_trip():
    text = '{"kind":"monoid","size":2,"identity":0,"table":[[0,1],[1,1]]}'
    normalized = monext.parse_document_text(text)
    assert monext.parse_document_text(normalized) == normalized


def test_fixture_documents_round_trip():
    import glob
    import os

    fixtures = os.environ.get("MONEXT_FIXTURES")
    if not fixtures:
        pytest.skip("MONEXT_FIXTURES not set")
    paths = sorted(glob.glob(os.path.join(fixtures, "*.json")))
    assert paths
    for path in paths:
        normalized = monext.parse_document_file(path)
        assert monext.parse_document_text(normalized) == normalized
