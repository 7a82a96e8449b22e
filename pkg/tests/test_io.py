import logging

import pytest
from conftest import hypergraphs
from hypothesis import given, settings

from mssc.errors import ParseError, UncoverableError
from mssc.hypergraph import Hypergraph
from mssc.io import (
    format_instance,
    format_solution,
    parse_edge_list,
    parse_instance,
    parse_solution,
    read_instance,
    write_instance,
)

K3_TEXT = "c triangle\np hg 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_parse_k3():
    H = parse_instance(K3_TEXT)
    assert H == Hypergraph(3, [(1, 2), (1, 3), (2, 3)])


@given(hypergraphs())
@settings(max_examples=100)
def test_instance_round_trip(H):
    assert parse_instance(format_instance(H, ["x"])) == H


def test_file_round_trip(tmp_path):
    H = parse_instance(K3_TEXT)
    write_instance(tmp_path / "k3.hg", H, ["hello"])
    assert read_instance(tmp_path / "k3.hg") == H
    assert (tmp_path / "k3.hg").read_text().startswith("c hello\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("p hg 3 1\ne 1 x\n", 2),
        ("e 1 2\np hg 3 1\n", 1),
        ("p hg 3 1\ne 1 4\n", 2),
        ("p hg 3\n", 1),
        ("p hg 3 1\nq 1\n", 2),
        ("p hg 3 1\np hg 3 1\ne 1\n", 2),
    ],
)
def test_malformed_lines_are_numbered(text, line):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.lineno == line
    assert str(info.value).startswith(f"line {line}:")


def test_count_mismatch_and_missing_header():
    with pytest.raises(ParseError):
        parse_instance("p hg 3 2\ne 1 2\n")
    with pytest.raises(ParseError):
        parse_instance("c nothing\n")


def test_empty_edge_is_uncoverable():
    with pytest.raises(UncoverableError):
        parse_instance("p hg 2 1\ne\n")


def test_duplicates_merged_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        H = parse_instance("p hg 3 2\ne 1 2\ne 2 1\n")
    assert H.num_edges == 1
    assert "duplicate" in caplog.text


def test_solution_round_trip():
    text = format_solution((1, 2), 4, decision="yes", stats={"tau": 2})
    assert text == "yes\ns cost=4 k=2\no 1 2\nstats tau=2\n"
    sol = parse_solution(text)
    assert (sol.cost, sol.k, sol.ordering, sol.decision) == (4, 2, (1, 2), "yes")
    assert sol.stats == {"tau": "2"}
    assert parse_solution("no\n").ordering is None


def test_solution_rejects_garbage():
    with pytest.raises(ParseError):
        parse_solution("s cost=four k=2\n")
    with pytest.raises(ParseError):
        parse_solution("o 1 a\n")
    with pytest.raises(ParseError):
        parse_solution("hello\n")


def test_edge_list():
    G = parse_edge_list("3 2\n1 2\n2 3\n")
    assert (G.n, G.m) == (3, 2)
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n1 2\n")
    with pytest.raises(ParseError):
        parse_edge_list("3 1\n1 1\n")
