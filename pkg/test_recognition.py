import random
import statistics
import time

import pytest

from slpseq.core import oracle
from slpseq.core.recognition import (
    Recognizer,
    build_jump_table,
    build_semilocal_cache,
    contains,
    count_bounded_minimal,
    count_fixed_windows,
    count_minimal_windows,
    global_longest_prefix,
    lcs,
    longest_prefix_in_suffix,
    longest_suffix_in_prefix,
    report_windows,
    shortest_prefix_containing,
    shortest_suffix_containing,
)
from slpseq.core.slp import (
    Concat,
    Slp,
    Terminal,
    chain_slp_from_text,
    doubling_slp,
    expand,
    fibonacci_slp,
    parse_slp,
    power_slp,
)
from slpseq.errors import PatternError, QueryRangeError

FIB = fibonacci_slp()  # "abaababa"


def random_slp(rng, alphabet, max_statements=12, max_length=200):
    terminals = rng.randint(1, min(len(alphabet), 3))
    statements = [Terminal(ch) for ch in rng.sample(alphabet, terminals)]
    lengths = [1] * terminals
    for _ in range(rng.randint(0, max_statements - terminals)):
        r = len(statements)
        for _attempt in range(10):
            left, right = rng.randrange(r), rng.randrange(r)
            if lengths[left] + lengths[right] <= max_length:
                statements.append(Concat(left + 1, right + 1))
                lengths.append(lengths[left] + lengths[right])
                break
    return Slp.from_statements(statements)


def test_global_longest_prefix():
    assert global_longest_prefix(FIB, "aab") == 3
    assert global_longest_prefix(FIB, "") == 0
    assert global_longest_prefix(FIB, "bbbb") == 3


def test_contains():
    assert contains(chain_slp_from_text("baabcabcabaca"), "baabcbca") is True
    assert contains(FIB, "abc") is False
    assert contains(FIB, "") is True


def test_jump_table_composition():
    table = build_jump_table(FIB, "aab")
    assert table[1] == [0, 1, 3, 3]
    assert table[2] == [1, 2, 2, 3]
    for k in range(4):
        assert table[3][k] == table[1][table[2][k]]


def test_lcs():
    assert lcs(doubling_slp("a", 10), "aaa") == 3
    assert lcs(FIB, "aab") == 3
    assert lcs(FIB, "bbbb") == 3
    with pytest.raises(PatternError):
        lcs(FIB, "")


def test_cache_entries():
    recognizer = Recognizer(FIB, "aab")
    assert sorted(recognizer.cache) == [1, 2, 3, 4, 5, 6]
    for entry in recognizer.cache.values():
        assert 3 <= len(entry.psm.nonzeros) <= 6 or entry.m == 1
    single = Recognizer(parse_slp("1='a'"), "ab")
    assert single.root_entry().psm.nonzeros == ((-1, 0), (0, 2), (1, 1))


def test_threads_do_not_change_the_cache():
    text = chain_slp_from_text("baabcabcabacabbacab")
    serial = Recognizer(text, "abcab").cache
    parallel = Recognizer(text, "abcab", threads=4).cache
    assert {s: e.psm for s, e in serial.items()} == {s: e.psm for s, e in parallel.items()}


def test_shortest_suffix_containing():
    entry = Recognizer(FIB, "aab").cache[5]  # "abaab"
    assert shortest_suffix_containing(entry, 2) == 3
    assert shortest_suffix_containing(entry, 3) == 3
    assert shortest_suffix_containing(entry, 1) == 2
    missing = Recognizer(FIB, "cab").cache[5]
    assert shortest_suffix_containing(missing, 1) is None
    with pytest.raises(QueryRangeError):
        shortest_suffix_containing(entry, 0)
    with pytest.raises(QueryRangeError):
        shortest_suffix_containing(entry, 4)


def test_shortest_prefix_and_longest_searches():
    entry = Recognizer(FIB, "aab").cache[5]  # "abaab"
    assert shortest_prefix_containing(entry, 3) == 0
    assert shortest_prefix_containing(entry, 2) == 2
    assert shortest_prefix_containing(entry, 0) == 5
    assert shortest_prefix_containing(entry, 1) == 2
    assert longest_prefix_in_suffix(entry, 3) == 3
    assert longest_prefix_in_suffix(entry, 2) == 1
    assert longest_suffix_in_prefix(entry, 2) == 2
    assert longest_suffix_in_prefix(entry, 5) == 3


def test_count_minimal_windows():
    assert count_minimal_windows(FIB, "aab") == 2
    assert count_minimal_windows(doubling_slp("a", 12), "a") == 2**12
    assert count_minimal_windows(FIB, "abc") == 0
    with pytest.raises(PatternError):
        count_minimal_windows(FIB, "")


def test_minimal_window_inside_one_operand_is_not_double_counted():
    # "a" + "ab": the boundary candidate "aab" strictly contains the episode "ab"
    slp = Slp.from_statements([Terminal("a"), Terminal("b"), Concat(1, 2), Concat(1, 3)])
    assert expand(slp) == "aab"
    assert count_minimal_windows(slp, "ab") == 1
    assert report_windows(slp, "ab").windows == [(2, 3)]


def test_count_fixed_windows():
    assert count_fixed_windows(FIB, "aab", 5) == 4
    assert count_fixed_windows(FIB, "aab", 2) == 0
    assert count_fixed_windows(FIB, "aab", 9) == 0
    k = 12
    assert count_fixed_windows(doubling_slp("a", k), "a", 2 ** (k - 1)) == 2**k - 2 ** (k - 1) + 1
    with pytest.raises(QueryRangeError):
        count_fixed_windows(FIB, "aab", 0)


def test_count_bounded_minimal():
    assert count_bounded_minimal(FIB, "aab", 3) == 1
    assert count_bounded_minimal(FIB, "aab", 8) == 2
    assert count_bounded_minimal(FIB, "aab", 2) == 0


def test_report_windows():
    report = report_windows(FIB, "aab", "minimal", limit=10)
    assert report.windows == [(3, 5), (4, 7)]
    assert report.truncated is False
    assert report_windows(FIB, "aab", "minimal", limit=1) == ([(3, 5)], True)
    assert report_windows(FIB, "abc").windows == []
    assert report_windows(FIB, "aab", "fixed", limit=10, w=5).windows == [(1, 5), (2, 6), (3, 7), (4, 8)]
    assert report_windows(FIB, "aab", "bounded", limit=10, w=3).windows == [(3, 5)]
    with pytest.raises(QueryRangeError):
        report_windows(FIB, "aab", "fixed", limit=10)
    with pytest.raises(QueryRangeError):
        report_windows(FIB, "aab", "minimal", limit=0)


def timed(query, *args):
    started = time.perf_counter()
    value = query(*args)
    assert time.perf_counter() - started < 1.0, query.__name__
    return value


def test_exponential_scale():
    a60 = doubling_slp("a", 60)
    assert timed(count_minimal_windows, a60, "a") == 2**60
    assert timed(count_fixed_windows, a60, "a", 2**59) == 2**59 + 1
    assert timed(count_bounded_minimal, a60, "a", 1) == 2**60
    ab59 = power_slp("ab", 59)
    assert timed(count_minimal_windows, ab59, "ab") == 2**59
    assert timed(count_fixed_windows, ab59, "ab", 2**60) == 1
    report = timed(report_windows, ab59, "ab", "minimal", 3)
    assert report.windows == [(1, 2), (3, 4), (5, 6)]
    assert report.truncated is True
    last = timed(report_windows, a60, "a", "fixed", 2, 2**60 - 1)
    assert last.windows == [(1, 2**60 - 1), (2, 2**60)]
    assert last.truncated is False


def test_report_on_deep_chain():
    slp = chain_slp_from_text("ab" * 5000)
    assert slp.depth() == 10_000
    recognizer = Recognizer(slp, "ab")
    report = recognizer.report("minimal", 3)
    assert report.windows == [(1, 2), (3, 4), (5, 6)]
    assert report.truncated is True
    assert recognizer.count_minimal() == 5000
    every = recognizer.report("minimal", 5000)
    assert every.windows[-1] == (9999, 10_000)
    assert every.truncated is False
    assert recognizer.report("fixed", 2, 3).windows == [(1, 3), (2, 4)]
    assert recognizer.report("bounded", 1, 2).windows == [(1, 2)]


def test_deep_chain_reports_match_oracle():
    rng = random.Random(5)
    text = "".join(rng.choice("abc") for _ in range(1500))
    recognizer = Recognizer(chain_slp_from_text(text), "cab")
    limit = len(text) + 1
    assert recognizer.report("minimal", limit).windows == oracle.oracle_windows(text, "cab", "minimal")
    assert recognizer.report("fixed", limit, 7).windows == oracle.oracle_windows(text, "cab", "fixed", 7)
    assert recognizer.report("bounded", limit, 5).windows == oracle.oracle_windows(text, "cab", "bounded", 5)


def test_differential_against_oracle():
    rng = random.Random(1234)
    for trial in range(1000):
        alphabet = "abcd"[: rng.choice([1, 2, 4])]
        slp = random_slp(rng, list(alphabet))
        text = expand(slp)
        pattern = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 24)))
        recognizer = Recognizer(slp, pattern)
        context = (trial, text, pattern)

        assert recognizer.contains() == oracle.oracle_contains(text, pattern), context
        assert recognizer.prefix_length() == oracle.oracle_prefix_len(text, pattern), context
        assert recognizer.lcs() == oracle.oracle_lcs(text, pattern), context
        assert recognizer.count_minimal() == oracle.oracle_count_minimal(text, pattern), context
        for w in (rng.randint(1, len(text)) for _ in range(3)):
            assert recognizer.count_fixed(w) == oracle.oracle_count_fixed(text, pattern, w), (context, w)
            assert recognizer.count_bounded(w) == oracle.oracle_count_bounded(text, pattern, w), (context, w)


def test_reports_match_oracle_windows():
    rng = random.Random(77)
    for _ in range(150):
        alphabet = "abc"[: rng.choice([1, 2, 3])]
        slp = random_slp(rng, list(alphabet), max_length=80)
        text = expand(slp)
        pattern = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 5)))
        recognizer = Recognizer(slp, pattern)
        w = rng.randint(1, len(text))
        limit = len(text) + 1
        assert recognizer.report("minimal", limit).windows == oracle.oracle_windows(text, pattern, "minimal")
        assert recognizer.report("fixed", limit, w).windows == oracle.oracle_windows(text, pattern, "fixed", w)
        assert recognizer.report("bounded", limit, w).windows == oracle.oracle_windows(text, pattern, "bounded", w)


def test_bounded_is_monotone_and_reaches_minimal():
    rng = random.Random(8)
    for _ in range(40):
        slp = random_slp(rng, ["a", "b"], max_length=60)
        pattern = "".join(rng.choice("ab") for _ in range(rng.randint(1, 4)))
        recognizer = Recognizer(slp, pattern)
        m = slp.text_length
        counts = [recognizer.count_bounded(w) for w in range(1, m + 1)]
        assert counts == sorted(counts)
        assert counts[-1] == recognizer.count_minimal()
        assert recognizer.contains() == (recognizer.lcs() == len(pattern)) == (recognizer.prefix_length() == len(pattern))


@pytest.mark.slow
def test_cache_build_grows_linearly_in_statements():
    rng = random.Random(11)
    pattern = "".join(rng.choice("abcd") for _ in range(12))
    short = chain_slp_from_text("".join(rng.choice("abcd") for _ in range(1500)))
    long = chain_slp_from_text("".join(rng.choice("abcd") for _ in range(3000)))

    def seconds(slp):
        samples = []
        for _ in range(3):
            started = time.perf_counter()
            build_semilocal_cache(slp, pattern)
            samples.append(time.perf_counter() - started)
        return statistics.median(samples)

    ratio = seconds(long) / seconds(short)
    assert ratio <= 2.5, ratio
