import random

import pytest

from slpseq.core import oracle
from slpseq.errors import OracleLimitError, PatternError, QueryRangeError


def test_oracle_lcs_examples():
    assert oracle.oracle_lcs("baabcbca", "baabcabcabaca") == 8
    assert oracle.oracle_lcs("abc", "") == 0
    assert oracle.oracle_lcs("", "abc") == 0
    assert oracle.oracle_lcs("abcab", "abcab") == 5


def test_semilocal_examples():
    assert oracle.oracle_semilocal("a", "ab") == [(-1, 0), (0, 2), (1, 1)]
    assert oracle.oracle_semilocal("c", "ab") == [(-1, 2), (0, 0), (1, 1)]
    assert len(oracle.oracle_semilocal("baabcbca", "baabcabcabaca")) == 21


def test_semilocal_points_form_a_permutation():
    rng = random.Random(3)
    for _ in range(30):
        a = "".join(rng.choice("ab") for _ in range(rng.randint(1, 12)))
        b = "".join(rng.choice("abc") for _ in range(rng.randint(1, 8)))
        m, n = len(a), len(b)
        points = oracle.oracle_semilocal(a, b)
        assert sorted(x for x, _ in points) == list(range(-m, n))
        assert sorted(y for _, y in points) == list(range(0, m + n))


def test_score_table_agrees_with_lcs():
    rng = random.Random(9)
    for _ in range(30):
        a = "".join(rng.choice("abc") for _ in range(rng.randint(1, 10)))
        b = "".join(rng.choice("abc") for _ in range(rng.randint(1, 10)))
        table = oracle.oracle_score_table(a, b)
        assert table[(0, len(b))] == oracle.oracle_lcs(a, b)
        assert len(b) < 2 or table[(2, 1)] == -1


def test_point_queries():
    t, p = "abaababa", "aab"
    assert oracle.oracle_substring(t, p, 0, 3) == 3
    assert oracle.oracle_suffix_prefix(t, p, 3, 2) == 2
    assert oracle.oracle_prefix_suffix(t, p, 2, 1) == 2
    with pytest.raises(QueryRangeError):
        oracle.oracle_substring(t, p, 2, 1)
    with pytest.raises(QueryRangeError):
        oracle.oracle_suffix_prefix(t, p, 9, 0)


def test_prefix_len_and_contains():
    assert oracle.oracle_prefix_len("abaababa", "bbbb") == 3
    assert oracle.oracle_contains("abaababa", "aab") is True
    assert oracle.oracle_contains("abaababa", "abc") is False
    assert oracle.oracle_contains("abc", "") is True


def test_window_counts():
    t = "abaababa"
    assert oracle.oracle_windows(t, "aab") == [(3, 5), (4, 7)]
    assert oracle.oracle_count_minimal(t, "aab") == 2
    assert oracle.oracle_count_fixed(t, "aab", 5) == 4
    assert oracle.oracle_count_bounded(t, "aab", 3) == 1
    assert oracle.oracle_count_minimal(t, "abc") == 0
    assert oracle.oracle_count_fixed(t, "abc", 8) == 0


@pytest.mark.parametrize("w", range(1, 9))
def test_unary_text_fixed_windows(w):
    assert oracle.oracle_count_minimal("a" * 8, "a") == 8
    assert oracle.oracle_count_fixed("a" * 8, "a", w) == 9 - w


def test_window_errors():
    with pytest.raises(PatternError):
        oracle.oracle_windows("abc", "")
    with pytest.raises(QueryRangeError):
        oracle.oracle_windows("abc", "a", "fixed")


def test_caps():
    with pytest.raises(OracleLimitError):
        oracle.oracle_semilocal("a" * 20, "ab", cap=10)
    with pytest.raises(OracleLimitError):
        oracle.oracle_windows("a" * 20, "a", cap=10)
    with pytest.raises(OracleLimitError):
        oracle.oracle_prefix_len("a" * (oracle.MAX_TEXT + 1), "a")
