from fractions import Fraction
from pathlib import Path

import pytest

from ctrlset.control import all_input
from ctrlset.errors import ParseError
from ctrlset.formats import (
    LabelMap,
    input_digest,
    make_document,
    parse_edge_list,
    read_report,
    write_edge_list,
    write_report,
)
from ctrlset.generators import GenSpec, generate
from ctrlset.graph import build_graph

DATA = Path(__file__).parent / "data"
STAR_TEXT = b"0 1\n0 2\n"


def test_parse_comment_and_path():
    g, labels = parse_edge_list(b"# comment\n1 2\n2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]
    assert labels.labels == ["1", "2", "3"]


def test_parse_string_labels_tabs():
    g, labels = parse_edge_list("a\tb\nb\ta\n")
    assert g.edges() == [(0, 1), (1, 0)]
    assert labels.id_of("b") == 1


def test_parse_blank_lines_and_mixed_whitespace():
    g, _ = parse_edge_list(b"\n  \n1 \t 2\r\n# x\n2  1\n")
    assert g.num_edges == 2


def test_parse_labels_verbatim():
    _, labels = parse_edge_list(b"A a\n")
    assert labels.labels == ["A", "a"]


def test_parse_wrong_token_count():
    with pytest.raises(ParseError) as exc:
        parse_edge_list(b"1 2 3\n")
    assert exc.value.line == 1


def test_parse_error_line_number_counts_comments():
    with pytest.raises(ParseError, match="line 3"):
        parse_edge_list(b"# c\n1 2\n7\n")


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_edge_list(b"# only a comment\n\n")


def test_parse_from_file_object(tmp_path):
    p = tmp_path / "g.txt"
    p.write_bytes(b"1 2\n2 3\n")
    with p.open("rb") as fh:
        g, _ = parse_edge_list(fh)
    assert g.num_edges == 2


def test_first_appearance_order():
    _, labels = parse_edge_list(b"9 3\n3 1\n")
    assert labels.labels == ["9", "3", "1"]


@pytest.mark.parametrize("spec", [GenSpec("er", 500, 4, seed=1), GenSpec("scale_free", 2000, 6, seed=2)])
def test_generate_write_parse_round_trip(spec):
    g = generate(spec)
    h, labels = parse_edge_list(write_edge_list(g))
    # isolated nodes do not appear in an edge list, so compare through labels
    relabelled = build_graph(g.n, [(int(labels.label_of(u)), int(labels.label_of(v))) for u, v in h.edges()])
    assert relabelled == g


def test_round_trip_identity_labels():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert parse_edge_list(write_edge_list(g))[0] == g


def _star_doc(elapsed=0.0):
    g, labels = parse_edge_list(STAR_TEXT)
    return make_document(all_input(g), labels, elapsed, input_digest(STAR_TEXT), version="0.1.0")


def test_star_report_golden():
    assert write_report(_star_doc(), "json") == (DATA / "star_report.json").read_bytes()
    assert write_report(_star_doc(), "csv") == (DATA / "star_report.csv").read_bytes()


def test_star_report_fields():
    text = write_report(_star_doc()).decode()
    assert '"possible_inputs": ["0", "1", "2"]' in text
    assert '"n_pd": 1.000000' in text


def test_perfect_matching_report():
    g, labels = parse_edge_list(b"0 1\n1 0\n")
    doc = make_document(all_input(g), labels, 1.5, "sha256:x")
    text = write_report(doc).decode()
    assert '"perfect_matching": true' in text
    assert '"n_pd": 0.000000' in text


def test_key_order():
    import json

    obj = json.loads(write_report(_star_doc()))
    assert list(obj) == [
        "n", "l", "matching_size", "mis", "possible_inputs", "n_pd",
        "perfect_matching", "method", "elapsed_ms", "version", "input_digest",
    ]


def test_byte_stable():
    assert write_report(_star_doc(3.25)) == write_report(_star_doc(3.25))


@pytest.mark.parametrize("fmt", ["json", "csv"])
@pytest.mark.parametrize("elapsed", [0.0, 1.2345678901, 123456.5])
def test_report_round_trip(fmt, elapsed):
    doc = _star_doc(elapsed)
    back = read_report(write_report(doc, fmt), fmt)
    assert back == doc
    assert back.n_pd == Fraction(1)


def test_csv_empty_sets_round_trip():
    g, labels = parse_edge_list(b"0 1\n1 0\n")
    doc = make_document(all_input(g), labels, 0.0, "sha256:x")
    assert read_report(write_report(doc, "csv"), "csv") == doc


def test_identity_label_map():
    m = LabelMap.identity(3)
    assert m.labels == ["0", "1", "2"] and m.id_of("2") == 2
