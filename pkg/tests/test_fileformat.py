"""Text file format: parsing, canonical printing, round-trips."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import covdata
from covpart import (
    NotACovering,
    ParseError,
    UnprintableLabel,
    build_covering,
    canonical_form,
    format_covering,
    parse_covering_file,
    parse_covering_text,
    random_covering,
    write_covering,
)
from strategies import coverings

SAMPLE = """\
# a comment
universe: 1 2 3 4

1 2 3
1 2
# another comment
3 4
4
"""


def test_parse_with_declared_universe():
    c, warns = parse_covering_text(SAMPLE)
    assert warns == []
    assert c.universe.labels == ("1", "2", "3", "4")
    assert c.masks() == covdata.nested_chain().masks()


def test_parse_inferred_universe_first_appearance_order():
    c, _ = parse_covering_text("b a\nc a\n")
    assert c.universe.labels == ("b", "a", "c")


def test_parse_duplicate_blocks_warn_with_line_numbers():
    c, warns = parse_covering_text("1 2\n3\n2 1\n")
    assert len(warns) == 1
    assert "line 3" in warns[0] and "line 1" in warns[0]
    assert len(c.blocks) == 2


def test_parse_unknown_label_reports_line():
    with pytest.raises(ParseError, match="line 3"):
        parse_covering_text("universe: 1 2\n1\n1 9\n")


def test_parse_universe_line_must_be_first():
    with pytest.raises(ParseError, match="first"):
        parse_covering_text("1 2\nuniverse: 1 2\n")
    with pytest.raises(ParseError, match="first"):
        parse_covering_text("universe: 1\nuniverse: 1\n")


def test_parse_empty_inputs():
    with pytest.raises(ParseError, match="no blocks"):
        parse_covering_text("")
    with pytest.raises(ParseError, match="no blocks"):
        parse_covering_text("# only comments\n\n")
    with pytest.raises(ParseError, match="no elements"):
        parse_covering_text("universe:\n1\n")


def test_parse_declared_universe_must_be_covered():
    with pytest.raises(NotACovering):
        parse_covering_text("universe: 1 2 3\n1 2\n")


def test_parse_repeated_universe_label():
    with pytest.raises(ParseError, match="repeats"):
        parse_covering_text("universe: 1 1\n1\n")


def test_format_golden():
    text = format_covering(covdata.nested_chain())
    assert text == "universe: 1 2 3 4\n1 2\n1 2 3\n3 4\n4\n"


def test_format_rejects_unprintable_labels():
    c = build_covering(["a b"], [["a b"]])
    with pytest.raises(UnprintableLabel):
        format_covering(c)
    c2 = build_covering(["#x"], [["#x"]])
    with pytest.raises(UnprintableLabel):
        format_covering(c2)


def test_round_trip_fixtures():
    for make in (
        covdata.nested_chain,
        covdata.two_overlap,
        covdata.chain_three,
        covdata.nonuniform_partition,
        covdata.reducible_family,
        covdata.triangle,
    ):
        c = make()
        parsed, warns = parse_covering_text(format_covering(c))
        assert warns == []
        assert parsed == canonical_form(c)


def test_write_and_parse_file(tmp_path):
    path = tmp_path / "c.txt"
    c = covdata.chain_three()
    write_covering(c, path)
    parsed, _ = parse_covering_file(path)
    assert parsed == canonical_form(c)
    assert path.read_bytes().endswith(b"\n")


@given(coverings())
def test_round_trip_random(c):
    parsed, warns = parse_covering_text(format_covering(c))
    assert warns == []
    assert parsed == canonical_form(c)


@given(st.integers(1, 12), st.integers(1, 6), st.integers(0, 2**32))
def test_round_trip_generated(n, m, seed):
    c = random_covering(n, min(m, n), 0.3, seed)
    parsed, _ = parse_covering_text(format_covering(c))
    assert parsed == c  # generator output is already canonical
