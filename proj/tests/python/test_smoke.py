import pytest

import blchang


def test_lukasiewicz_operations():
    a = blchang.algebra("lukasiewicz:4")
    assert a.elements() == ["0", "1/3", "2/3", "1"]
    assert a.otimes("2/3", "2/3") == "1/3"
    assert a.add("2/3", "2/3") == "1"
    assert a.neg("1/3") == "2/3"
    assert a.is_mv and a.is_chain and len(a) == 4
    assert a.validate()["ok"]


def test_corrupted_table_fails_with_witness():
    text = blchang.algebra("L4").to_blalg().replace("  0 0 0 1/3", "  0 0 1/3 1/3", 1)
    report = blchang.parse_blalg(text, "corrupted").validate()
    assert not report["ok"]
    assert report["failing"][0]["id"] == "monoid.comm"


def test_mv_center_and_good_sequences():
    a = blchang.algebra("tower(L3,L2)")
    assert a.mv_center().elements() == ["0", "1/2", "1"]
    assert a.good_seqs(max_len=2) == ["(0)", "(1/2)", "(c1:0)", "(1)", "(1,1/2)", "(1,c1:0)", "(1^2)"]


def test_godel_chang_group():
    G = blchang.ChangGroup(blchang.algebra("godel:q"))
    g = G.make("(1,1/3)", "(2/3)")
    assert G.godel_to_int(g) == 1
    assert G.godel_to_int(G.add(g, g)) == 2
    assert G.eq(G.add(g, G.neg(g)), G.zero()) == "Equal"


def test_product_chang_group():
    G = blchang.ChangGroup(blchang.algebra("product:q"))
    assert G.cancellative == "true"
    assert G.product_iso(G.make("(1/4)", "(1/2)")) == (0, "1/2")
    with pytest.raises(blchang.UnsupportedShape):
        G.godel_to_int(G.unit())


def test_gamma_and_homs():
    a = blchang.gamma("Z(u=3)")
    assert a.elements() == ["0", "1", "2", "3"]
    assert blchang.homs(blchang.algebra("L4"), blchang.algebra("G3")) == []
    [f] = blchang.homs(blchang.gamma("prod(Z(u=1),Z(u=2))"), blchang.algebra("G3"))
    assert f["collapse_applies"] and f["collapse_holds"]


def test_counterexample_and_suite():
    found = blchang.counterexample("~~x = x", [blchang.algebra("G3")])
    assert found["assignment"] == {"x": "1/2"}
    assert blchang.counterexample("x*y = y*x", [blchang.algebra("L4")]) is None
    report = blchang.run_suite("S9", sizes=3, samples=200)
    assert report["suite"] == "S9"
    assert all(p["failures"] == 0 for p in report["properties"])


def test_parse_errors():
    with pytest.raises(ValueError):
        blchang.algebra("tower(L3")
    with pytest.raises(blchang.ParseError):
        blchang.gamma("Z(u=")
