import os
from pathlib import Path

import pytest

import pst

ROOT = Path(os.environ.get("PST_SOURCE_DIR", Path(__file__).resolve().parents[2]))


@pytest.fixture(scope="module")
def corpus():
    c = pst.Corpus()
    for name in ("foundations.pst", "appendixA.pst", "topology.pst"):
        assert c.load_file(ROOT / "corpus" / name) == []
    return c


def test_symbols_and_labels(corpus):
    symbols = corpus.symbols()
    assert len(symbols) == 56
    assert corpus.label("FCN") == "FS.2.58"


def test_translation(corpus):
    assert corpus.dzfc_latex("FS.2.58").startswith(r"\mathop{\mathtt{FCN}}[f] \leftrightarrow f = (\iota z_{0})")
    tree = corpus.dzfc("FCN")
    assert tree["symbol"] == "FCN"
    assert "FCN" in corpus.translate("FCN")


def test_measures(corpus):
    assert corpus.measure("FCN", "partial") == {"length": 29, "depth": 3, "alt_depth": 2}
    assert corpus.measure("Krealtop")["length"] == 25057
    assert corpus.dag("\\varpi_{0}") == (1, 0)
    report = corpus.report()
    assert len(report["definitions"]) == 56
    assert report["groups"]["All"]["pst_depth"]["max"] >= 3


def test_expand_and_budget(corpus):
    assert "FCN" not in corpus.expand("FCN")
    with pytest.raises(pst.BudgetExceeded):
        corpus.expand("Krealtop", budget=100)
    with pytest.raises(ValueError):
        corpus.expand("FCN", mode="sideways")


def test_natural_language(corpus):
    lexicon = (ROOT / "corpus" / "fixture.lexicon").read_text(encoding="utf-8")
    text = corpus.render_nl("FINERTOP", lexicon)
    assert "are topological spaces" in text
    with pytest.raises(pst.RenderError):
        corpus.render_nl("FINERTOP", "")


def test_errors():
    c = pst.Corpus()
    errors = c.load("DEFINITION X.1: 1-ary relation P. P[x] \\iff x \\in \\wedge.")
    assert len(errors) == 1 and errors[0][0] == "X.1"
    with pytest.raises(pst.UnknownDefinition):
        c.translate("P")
    with pytest.raises(pst.PstError):
        c.translate("P")


def test_lexicon_parse():
    entries = pst.parse_lexicon("\\wp:1@\n  symb:$\\wp(#^0)$@\n  word:the power set of #0@@\n")
    assert entries == {"\\wp": {"symb": "$\\wp(#^0)$", "word": "the power set of #0"}}
    with pytest.raises(pst.LexiconError):
        pst.parse_lexicon("A:1@\n  colour:red@@\n")
