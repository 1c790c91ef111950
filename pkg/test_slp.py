import pytest
from hypothesis import given, strategies as st

from slpseq.core.slp import (
    Concat,
    Slp,
    Terminal,
    build_slp_from_text,
    chain_slp_from_text,
    doubling_slp,
    expand,
    fibonacci_slp,
    parse_slp,
    power_slp,
    serialize_slp,
    slp_info,
    symbol_length,
)
from slpseq.errors import PatternError, SlpFormatError, TooLongError


def test_parse_two_terminal_concat():
    slp = parse_slp("1='a'\n2='b'\n3=1 2\nroot 3")
    assert expand(slp) == "ab"
    assert slp.text_length == 2
    assert slp.statement_count == 3


def test_parse_doubling():
    slp = parse_slp("1='a'\n2=1 1\n3=2 2\nroot 3")
    assert expand(slp) == "aaaa"
    assert slp.text_length == 4


def test_parse_rejects_self_reference():
    with pytest.raises(SlpFormatError, match="self reference"):
        parse_slp("1='a'\n2=2 1\nroot 2")


@pytest.mark.parametrize(
    "source, message",
    [
        ("1='a'\n2=1 3\n3='b'\n", "forward reference"),
        ("1='a'\n1='b'\n", "duplicate"),
        ("2='a'\n1='b'\n", "must increase"),
        ("1='a'\nroot 1\n2=1 1\n", "last statement"),
        ("1='a'\nroot 7\n", "not a declared symbol"),
        ("1='ab'\n", "single character"),
        ("1 = 1\n", "two ids"),
        ("hello\n", "malformed"),
        ("# only a comment\n", "missing"),
    ],
)
def test_parse_errors(source, message):
    with pytest.raises(SlpFormatError, match=message):
        parse_slp(source)


def test_parse_error_carries_line_number():
    with pytest.raises(SlpFormatError) as excinfo:
        parse_slp("# header\n1='a'\n2=1 9\n")
    assert excinfo.value.line_number == 3
    assert "line 3" in excinfo.value.message


def test_parse_comments_gaps_and_default_root():
    slp = parse_slp("# comment\n\n10 = 'x'\n20 = 'y'\n35 = 10 20\n")
    assert slp.root == 3
    assert slp.statements == (Terminal("x"), Terminal("y"), Concat(1, 2))
    assert expand(slp) == "xy"


def test_parse_escaped_terminals():
    slp = parse_slp("1 = '\\n'\n2 = '''\n3 = '\\u00e9'\n4 = 1 2\n5 = 4 3\n")
    assert expand(slp) == "\n'\u00e9"


@pytest.mark.parametrize("separator", ["\u2028", "\u2029", "\u0085", "\x0b", "\x1e"])
def test_unicode_line_separators_round_trip(separator):
    slp = build_slp_from_text(f"a{separator}b")
    assert parse_slp(serialize_slp(slp)) == slp
    assert expand(parse_slp(serialize_slp(slp))) == f"a{separator}b"


def test_crlf_source_lines():
    slp = parse_slp("1 = 'a'\r\n2 = 1 1\r\nroot 2\r\n")
    assert expand(slp) == "aa"


@pytest.mark.parametrize("token", ["²", "٣", "-1", "0"])
def test_parse_rejects_non_ascii_and_non_positive_ids(token):
    with pytest.raises(SlpFormatError, match="positive integer id"):
        parse_slp(f"1 = 'a'\n2 = 1 {token}\nroot 2\n")


def test_unreferenced_statements_are_allowed(capsys):
    slp = parse_slp("1='a'\n2='b'\n3=1 1\nroot 3")
    assert slp.unreferenced() == [2]
    assert expand(slp) == "aa"
    assert "unreferenced" in capsys.readouterr().err


def test_symbol_lengths():
    assert symbol_length(doubling_slp("a", 60), 61) == 2**60
    assert symbol_length(fibonacci_slp(), 6) == 8
    assert symbol_length(fibonacci_slp(), 1) == 1


def test_expand_fibonacci_and_terminal():
    slp = fibonacci_slp()
    assert expand(slp, 6, max_len=100) == "abaababa"
    assert expand(parse_slp("1='a'"), max_len=1) == "a"


def test_expand_too_long():
    with pytest.raises(TooLongError) as excinfo:
        expand(doubling_slp("a", 60), max_len=10**6)
    assert excinfo.value.length == 2**60
    assert excinfo.value.exit_code == 1


def test_expand_deep_chain():
    text = "abc" * 20_000
    slp = chain_slp_from_text(text)
    assert slp.depth() == len(text)
    assert expand(slp, max_len=len(text)) == text


def test_build_from_text_examples():
    assert build_slp_from_text("ab").statement_count == 3
    assert expand(build_slp_from_text("baabcbca")) == "baabcbca"
    assert build_slp_from_text("a").statement_count == 1
    with pytest.raises(PatternError):
        build_slp_from_text("")


def test_build_shares_repeated_pairs():
    slp = build_slp_from_text("ab" * 64)
    assert slp.statement_count == 2 + 7
    assert slp.depth() == 8


def test_chain_and_power_builders():
    chain = chain_slp_from_text("baabcabcabaca")
    assert expand(chain) == "baabcabcabaca"
    assert chain.depth() == 13
    assert power_slp("ab", 59).text_length == 2**60
    assert expand(power_slp("abc", 3)) == "abc" * 8


def test_slp_info():
    info = slp_info(fibonacci_slp())
    assert info == {"mbar": 6, "m": 8, "root": 6, "depth": 5, "alphabet": "ab", "unreferenced": 0}


def test_serialize_round_trips():
    for slp in (fibonacci_slp(), doubling_slp("a", 60), build_slp_from_text("baabcbca")):
        text = serialize_slp(slp)
        again = parse_slp(text)
        assert again == slp
        assert serialize_slp(again) == text


def test_from_statements_validates():
    with pytest.raises(SlpFormatError):
        Slp.from_statements([])
    with pytest.raises(SlpFormatError):
        Slp.from_statements([Terminal("a"), Concat(1, 3)])
    with pytest.raises(SlpFormatError):
        Slp.from_statements([Terminal("a")], root=2)


@given(st.text(min_size=1, max_size=60))
def test_build_expands_to_text(text):
    slp = build_slp_from_text(text)
    assert expand(slp) == text
    assert slp.text_length == len(text)
    assert parse_slp(serialize_slp(slp)) == slp


@given(st.text(alphabet="ab", min_size=1, max_size=40), st.text(alphabet="ab", min_size=1, max_size=40))
def test_expand_concat_is_concatenation(left, right):
    base = build_slp_from_text(left)
    offset = base.statement_count
    other = build_slp_from_text(right)
    statements = list(base.statements)
    for stmt in other.statements:
        if isinstance(stmt, Concat):
            statements.append(Concat(stmt.left + offset, stmt.right + offset))
        else:
            statements.append(stmt)
    statements.append(Concat(base.root, other.root + offset))
    joined = Slp.from_statements(statements)
    assert expand(joined) == left + right
    assert joined.text_length == len(left) + len(right)
