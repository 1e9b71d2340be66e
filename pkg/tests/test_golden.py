import pytest

from weighted_links.golden import GoldenCorpusError, default_corpus_path, load_golden_corpus

CORPUS = load_golden_corpus(default_corpus_path())


def test_corpus_contents():
    by_key = {(c.weights, c.degree): c for c in CORPUS}
    assert by_key[(1, 2, 3, 5), 10].expected["betti2"] == 8
    assert by_key[(1, 2, 3, 5), 10].expected["milnor_number"] == 84
    assert by_key[(1, 1, 1, 1), 2].expected["betti2"] == 1
    assert {c.provenance for c in CORPUS} <= {"published", "derived", "trivial"}
    assert all(c.citation for c in CORPUS)


@pytest.mark.parametrize("case", CORPUS, ids=lambda c: f"{c.weights}-{c.degree}")
def test_replay(case):
    assert case.mismatches() == {}


def test_empty_corpus_warns(tmp_path):
    p = tmp_path / "empty.jsonl"
    p.write_text("\n")
    with pytest.warns(UserWarning, match="empty"):
        assert load_golden_corpus(p) == []


@pytest.mark.parametrize("bad, lineno", [
    ('{"weights": [1,1,1,1], "degree": 2, "provenance": "trivial", "citation": "x"}\n{oops', 2),
    ('\n\n{"weights": [1,1,1,1], "degree": 2, "citation": "x"}', 3),
    ('{"weights": [1,1,1,1], "degree": 2, "provenance": "guess", "citation": "x"}', 1),
    ('{"weights": [1,1,1,1], "degree": 2, "provenance": "trivial", "citation": "x", "colour": 1}', 1),
    ('[1, 2]', 1),
])
def test_parse_errors_name_line(tmp_path, bad, lineno):
    p = tmp_path / "bad.jsonl"
    p.write_text(bad)
    with pytest.raises(GoldenCorpusError, match=f"line {lineno}:") as info:
        load_golden_corpus(p)
    assert info.value.lineno == lineno


def test_mismatch_reported(tmp_path):
    p = tmp_path / "wrong.jsonl"
    p.write_text('{"weights": [1,1,1,1], "degree": 2, "betti2": 2, "provenance": "trivial", "citation": "x"}\n')
    (case,) = load_golden_corpus(p)
    assert case.mismatches() == {"betti2": (2, 1)}
