import pytest

import token_alpha as ta


def test_closed_forms():
    assert ta.alpha_closed_form(ta.FamilySpec.fan(2, 3)) == 4
    assert ta.alpha_closed_form(ta.FamilySpec.path(7)) == 12
    assert ta.alpha_closed_form(ta.FamilySpec.complete_bipartite(3, 7)) == 24
    joined = ta.FamilySpec.join(ta.FamilySpec.path(3), ta.FamilySpec.path(3))
    assert ta.alpha_closed_form(joined) is None


def test_token_graph():
    tg = ta.build_f2(ta.generate(ta.FamilySpec.path(3)))
    assert tg.order == 3
    assert tg.pairs == [(0, 1), (0, 2), (1, 2)]
    assert tg.graph.edges == [(0, 1), (1, 2)]
    assert tg.index_of(2, 1) == 2


def test_solver():
    g = ta.generate(ta.FamilySpec.cycle(5))
    assert ta.alpha_f2(g) == 5
    r = ta.max_independent_set(ta.build_f2(g).graph)
    assert r["size"] == 5
    assert len(r["witness"]) == 5
    assert not r["budget_exceeded"]


def test_parity_construction():
    pairs = ta.path_union_independent_set([3, 2])
    assert len(pairs) == 6
    base = ta.generate(ta.FamilySpec.path_union([3, 2]))
    assert ta.pairs_independent(base, pairs)


def test_check_and_lemma():
    row = ta.check(ta.FamilySpec.fan(2, 3))
    assert row["formula"] == row["construction"] == row["solver"] == 4
    assert row["exceptional"]
    assert row["verdict"] == "AGREE"
    report = ta.lemma_check(3, "path", 4, trials=50, seed=1)
    assert report["holds"] == report["trials"] == 50


def test_graph_io_and_errors():
    g = ta.read_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == ta.generate(ta.FamilySpec.complete(3))
    assert g.to_edge_list() == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n"
    with pytest.raises(ta.Error):
        ta.read_graph("p 3 1\ne 0 9\n")
    with pytest.raises(ta.Error):
        ta.Graph(2, [(0, 0)])
    with pytest.raises(ta.Error):
        ta.check(ta.FamilySpec.fan(0, 3))
