"""Catalog (.oa) and ket text formats: round-trips and error reporting."""

import cmath

import numpy as np
import pytest

from kuniform import (
    OrthogonalArray,
    ParameterMismatch,
    ParseError,
    PureState,
    Unsupported,
    parse_catalog,
    parse_ket,
    parse_oa_file,
    write_ket,
    write_oa_file,
)


# ---------------------------------------------------------------------------
# catalog round-trips
# ---------------------------------------------------------------------------

def test_every_oa_fixture_round_trips(fixtures_dir):
    for path in sorted(fixtures_dir.glob("*.oa")):
        first = parse_oa_file(path.read_text())
        again = parse_oa_file(write_oa_file(first))
        assert again.rows == first.rows
        assert again.levels == first.levels


def test_every_ket_fixture_round_trips(fixtures_dir):
    for path in sorted(fixtures_dir.glob("*.ket")):
        first = parse_ket(path.read_text())
        again = parse_ket(write_ket(first))
        assert again.words == first.words
        assert np.allclose(again.phases, first.phases, atol=1e-12)
        assert again.qudits == first.qudits


def test_header_strength_is_optional():
    arr = parse_oa_file("oa 2 2 2\n01\n10\n")
    assert arr.strength is None
    text = write_oa_file(arr)
    assert text.splitlines()[0] == "oa 2 2 2 1"  # computed maximum


def test_declared_strength_is_kept_by_writer():
    text = "oa 4 3 2 1\n000\n011\n101\n110\n"
    arr = parse_oa_file(text)
    assert arr.strength == 1  # declared, even though rows support 2
    assert write_oa_file(arr).splitlines()[0] == "oa 4 3 2 1"


def test_comments_are_collected():
    doc = parse_catalog("# top note\noa 2 2 2 1  # trailing ignored\n01\n10\n")
    assert doc.comments == ("top note",)
    assert doc.rows == ("01", "10")
    assert doc.strength == 1


def test_base36_symbols_round_trip():
    rows = tuple((i,) for i in range(11))
    arr = OrthogonalArray(rows=rows, levels=11)
    text = write_oa_file(arr)
    assert "a" in text.splitlines()[-1]
    assert parse_oa_file(text).rows == rows


def test_writer_rejects_unencodable_levels():
    arr = OrthogonalArray(rows=((0,), (36,)), levels=37)
    with pytest.raises(Unsupported):
        write_oa_file(arr)


# ---------------------------------------------------------------------------
# catalog validation failures
# ---------------------------------------------------------------------------

def test_declared_strength_must_hold():
    with pytest.raises(ParameterMismatch):
        parse_oa_file("oa 2 2 2 2\n01\n10\n")


def test_declared_counts_must_match():
    with pytest.raises(ParameterMismatch):
        parse_oa_file("oa 3 2 2 1\n01\n10\n")
    with pytest.raises(ParameterMismatch):
        parse_oa_file("oa 2 3 2 1\n01\n10\n")
    with pytest.raises(ParameterMismatch):
        parse_oa_file("oa 2 2 2 1\n02\n20\n")


def test_catalog_parse_errors_carry_location():
    with pytest.raises(ParseError) as exc:
        parse_oa_file("not a header\n01\n")
    assert exc.value.line == 1
    with pytest.raises(ParseError) as exc:
        parse_oa_file("oa 2 2 2 1\n0$\n10\n")
    assert (exc.value.line, exc.value.column) == (2, 2)
    with pytest.raises(ParseError) as exc:
        parse_oa_file("oa x 2 2 1\n01\n")
    assert exc.value.line == 1
    with pytest.raises(ParseError):
        parse_oa_file("")
    with pytest.raises(ParseError):
        parse_oa_file("oa 2 2 2 1\n")  # no rows


# ---------------------------------------------------------------------------
# ket parsing
# ---------------------------------------------------------------------------

def test_parse_ket_accepts_flexible_layout():
    st = parse_ket(" +|01>\n  -|10>   # comment\n")
    assert st.words == ("01", "10")
    assert st.phases == ((1 + 0j), (-1 + 0j))
    assert st.levels == 2


def test_parse_ket_leading_sign_is_optional():
    st = parse_ket("|00> -|11>")
    assert st.phases == ((1 + 0j), (-1 + 0j))


def test_parse_ket_infers_levels_from_symbols():
    assert parse_ket("+|012>").levels == 3
    assert parse_ket("+|000>").levels == 2  # at least 2
    assert parse_ket("+|01>", levels=4).levels == 4


def test_parse_ket_phase_tags():
    st = parse_ket("+e^{i1.5707963267948966}|0> +|1>")
    assert st.phases[0] == pytest.approx(1j, abs=1e-12)
    st = parse_ket("-e^{i0.5}|0> +|1>")
    assert st.phases[0] == pytest.approx(-cmath.exp(0.5j), abs=1e-12)


def test_write_ket_uses_phase_tags_beyond_signs():
    st = PureState(1, 2, (("0", cmath.exp(0.25j)), ("1", -1.0)))
    text = write_ket(st)
    assert "e^{i" in text and "-|1>" in text
    again = parse_ket(text)
    assert np.allclose(again.phases, st.phases, atol=1e-12)


def test_parse_ket_errors_carry_location():
    with pytest.raises(ParseError) as exc:
        parse_ket("+|01> +|1")
    assert exc.value.line == 1
    with pytest.raises(ParseError) as exc:
        parse_ket("+01>")
    assert exc.value.column == 2
    with pytest.raises(ParseError):
        parse_ket("+|>")
    with pytest.raises(ParseError):
        parse_ket("+e^{x}|0>")
    with pytest.raises(ParseError):
        parse_ket("+e^{i0.5|0>")
    with pytest.raises(ParseError):
        parse_ket("")
    with pytest.raises(ParseError):
        parse_ket("# only a comment\n")
    with pytest.raises(ParseError):
        parse_ket("+|01> +|100>")  # ragged words


def test_parse_ket_rejects_symbol_beyond_explicit_levels():
    from kuniform import ParameterViolation
    with pytest.raises(ParameterViolation):
        parse_ket("+|02>", levels=2)
