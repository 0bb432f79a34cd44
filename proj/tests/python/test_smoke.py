"""Smoke tests for the python bindings."""

import pytest

import bergetool as bt


def test_star_construction_and_roundtrip():
    h = bt.r_star(7, 3)
    assert h.n == 7 and h.r == 3 and h.edge_count() == 5
    text = bt.write_hgr(h)
    back = bt.read_hgr(text)
    assert bt.write_hgr(back) == text
    assert back.edges[0] == [1, 2, 3]


def test_validate_and_shadow():
    h = bt.Hypergraph(3, 5, [[1, 2, 3], [1, 2, 4], [1, 2, 5]])
    assert bt.validate(h) == []
    assert len(bt.two_shadow(h)) == 7
    assert bt.incidence_degrees(h) == [3, 3, 1, 1, 1]
    blocks, cuts = bt.shadow_blocks(bt.Hypergraph(3, 5, [[1, 2, 3], [3, 4, 5]]))
    assert blocks == [[1, 2, 3], [3, 4, 5]] and cuts == [3]


def test_detectors():
    star = bt.r_star(7, 3)
    length, cycle = bt.longest_berge_cycle(star)
    assert length == 2 and bt.verify_cycle(star, cycle)
    assert bt.find_berge_cycle_at_least(star, 3) is None
    path = bt.find_berge_path(star, 3)
    assert path is not None and bt.verify_path(star, path)
    pinned = bt.find_berge_path(
        bt.Hypergraph(3, 4, [[1, 2, 3], [1, 2, 4]]), 2, (3, 4)
    )
    assert pinned.vertices[0] == 3 and pinned.vertices[-1] == 4


def test_canonical_form_identifies_isomorphs():
    a = bt.canonical_form(bt.Hypergraph(3, 4, [[1, 2, 3], [1, 2, 4]]))
    b = bt.canonical_form(bt.Hypergraph(3, 4, [[1, 3, 4], [2, 3, 4]]))
    assert a.edges == b.edges


def test_extremal_values():
    assert bt.extremal_value(7, 3, 3, "cycles") == 5
    assert bt.extremal_value(11, 5, 4, "cycles") == 6
    assert bt.extremal_value(7, 4, 3, "cycles", True) == 4
    with pytest.raises(bt.UnsupportedRegimeError):
        bt.extremal_value(7, 4, 3, "cycles")


def test_census_and_enumeration():
    res = bt.turan_census(5, 3, 3, "cycles")
    assert res.value == 3 and res.formula == 3 and res.exhaustive
    classes = bt.enumerate_extremal(7, 3, 3, "cycles")
    assert len(classes) == 1
    assert bt.recognize(classes[0])["kind"] == "r-star"


def test_witness_roundtrip():
    star = bt.r_star(7, 3)
    rep = bt.find_witness(star, 3, 1)
    assert not rep.fallback_used
    assert rep.witness.tag == bt.Witness.Case.III
    ok, violations = bt.verify_witness(star, 3, 1, rep.witness)
    assert ok and violations == []


def test_witness_precondition_error():
    cyclic = bt.Hypergraph(3, 6, [[1, 2, 3], [3, 4, 5], [1, 5, 6]])
    with pytest.raises(bt.PreconditionError):
        bt.find_witness(cyclic, 3, 1)


def test_apex_and_recognize():
    h = bt.Hypergraph(3, 5, [[1, 2, 3], [3, 4, 5]])
    wide = bt.apex_extend(h)
    assert wide.r == 4 and wide.n == 6
    assert all(6 in e for e in wide.edges)
    rec = bt.recognize(bt.block_tree_chain(2, 4, 3, 3))
    assert rec["kind"] == "block-tree" and rec["s"] == 4 and rec["mu"] == 2


def test_jackson():
    verdict, length = bt.jackson_check(5, [[1, 2, 3, 4, 5]] * 5, 3)
    assert verdict == "cycle_found" and length >= 6
    verdict, _ = bt.jackson_check(5, [[1, 2]] * 5, 3)
    assert verdict == "premise_fails"
