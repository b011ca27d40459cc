import math
import os
from pathlib import Path

import pytest

import toricheap as th

DATA = Path(os.environ.get("TORICHEAP_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def graph(name):
    return th.CoxeterGraph.load(str(DATA / "graphs" / f"{name}.json"))


def test_graph_loading():
    g = graph("b2")
    assert g.rank == 3
    assert g.generators == ["s1", "s2", "s3"]
    assert g.m("s1", "s2") == 4
    assert g.m("s1", "s3") == 2
    assert g.is_finite_type()
    inf = th.CoxeterGraph.from_json('{"generators": ["a", "b"], "bonds": [["a", "b", "inf"]]}')
    assert math.isinf(inf.m("a", "b"))


def test_running_example():
    g = graph("b2")
    w = "s3 s1 s2 s1 s2"
    assert th.is_reduced(g, w)
    assert len(th.reduced_words(g, w)) == 3
    report = th.classify(g, w)
    assert report["fauxCfc"] and report["tfc"] and not report["fc"]
    assert report["counts"]["toricallyReducedWords"] == 10
    assert len(th.rtor_cyclic_class(g, w)) == 2
    assert len(th.torically_equivalent_elements(g, w)) == 4
    assert th.verdict(g, w) == "fauxCFC"


def test_normal_form_and_conjugate():
    assert th.normal_form(graph("a3"), "s3s1s2s1s2") == "s3 s2 s1"
    b2 = graph("b2")
    assert th.conjugate(b2, "s2 s3", "s3 s2 s1 s2") == "s2 s1"
    assert not th.is_torically_reduced(b2, "s3 s2 s1 s2")


def test_affine_a3_coxeter_element():
    g = graph("affine_a3")
    assert len(th.ltor(g, "s1 s3 s2 s4")) == 4
    assert th.ltor(g, "s1 s3 s2 s4") == th.ctor_class(g, "s1 s3 s2 s4")
    assert len(th.rtor_words(g, "s1 s3 s2 s4")) == 16
    assert sorted(len(c) for c in th.coxeter_conjugacy_classes(g)) == [4, 4, 6]


def test_tutte_counts():
    c4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
    assert th.tutte(4, c4, 2, 0) == 14 == th.acyclic_orientation_count(4, c4)
    assert sorted(th.toric_class_sizes(4, c4)) == [4, 4, 6]
    k6 = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    assert th.tutte(6, k6, 2, 0) == 720
    assert th.tutte(6, k6, 1, 0) == 120


def test_probes():
    g = graph("affine_c2")
    probe = th.logarithmic_probe(g, "s0 s1 s0 s1 s2", 3)
    assert probe["violation"] == 2
    assert probe["power_lengths"][1] == 8
    report = th.conjecture_probe(graph("ex73iii"), "ststaba")
    assert report["nonTheorem"] is True
    assert report["consistent"] is True


def test_errors():
    g = graph("b2")
    with pytest.raises(th.Error):
        th.rtor_cyclic_class(g, "s3 s2 s1 s2")
    with pytest.raises(th.Error):
        th.is_reduced(g, "s9")
    with pytest.raises(th.Error):
        th.CoxeterGraph.load("/nonexistent.json")
