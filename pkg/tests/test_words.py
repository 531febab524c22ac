import pytest
from fractions import Fraction

from rrlab import words as W


def test_parse_and_print_words():
    assert W.parse_word("~", 2) == ""
    assert W.parse_word("abba", 2) == "abba"
    assert W.word_str("") == "~"
    with pytest.raises(W.WordSyntaxError):
        W.parse_word("abc", 2)
    with pytest.raises(W.WordSyntaxError):
        W.parse_word("", 2)


def test_comparable():
    assert W.comparable("", "abb") == W.LEFT_PREFIX
    assert W.comparable("ba", "bb") == W.INCOMPARABLE
    assert W.comparable("b", "ba") == W.LEFT_PREFIX
    assert W.comparable("ba", "b") == W.RIGHT_PREFIX
    assert W.comparable("ab", "ab") == W.EQUAL


def test_prefix_code_validation():
    assert W.prefix_code(["bb", "a", "ba"], 2) == ("a", "ba", "bb")
    with pytest.raises(ValueError, match="comparable"):
        W.prefix_code(["a", "ab"], 2)
    assert W.is_prefix_code(["a", "ba", "bb"])
    assert not W.is_prefix_code(["a", "a"])


def test_maximality_and_kraft():
    assert W.is_maximal_prefix_code(["a", "ba", "bb"], 2)
    assert W.is_maximal_prefix_code([""], 2)
    assert not W.is_maximal_prefix_code(["a", "ba"], 2)
    assert not W.is_maximal_prefix_code(["a", "ab"], 2)
    assert W.kraft_sum(["a", "ba", "bb"], 2) == Fraction(1)
    assert W.kraft_sum(["a", "ba"], 2) == Fraction(3, 4)


def test_carets():
    assert W.caret_expand(["a", "b"], "b", 2) == ("a", "ba", "bb")
    assert W.caret_reduce(["a", "ba", "bb"], "b", 2) == ("a", "b")
    assert W.caret_expand(["a", "ba", "bb"], "a", 2) == ("aa", "ab", "ba", "bb")
    with pytest.raises(ValueError):
        W.caret_expand(["a", "b"], "c", 2)
    with pytest.raises(ValueError):
        W.caret_reduce(["a", "ba"], "b", 2)


def test_caret_round_trip():
    X = ("a", "ba", "bb")
    for x in X:
        assert W.caret_reduce(W.caret_expand(X, x, 2), x, 2) == X


def test_basic_map_parse():
    f = W.parse_basic("b>a", 2)
    assert f == W.BasicMap(y="a", x="b")
    assert W.parse_basic("0", 2) is None
    assert W.basic_str(f) == "b>a"
    assert W.basic_str(None) == "0"
    with pytest.raises(W.WordSyntaxError):
        W.parse_basic("a>b>c", 2)


def test_pn_product_cases():
    f = W.parse_basic("b>a", 2)       # a.b^-1
    g = W.parse_basic("a>ba", 2)      # ba.a^-1
    assert W.basic_str(W.pn_mul(f, g)) == "a>aa"
    assert W.pn_mul(f, f) is None
    one = W.BasicMap("", "")
    assert W.pn_mul(one, g) == g
    assert W.pn_mul(g, one) == g
    assert W.pn_mul(f, None) is None


def test_pn_order_and_star():
    small = W.BasicMap(y="aa", x="ba")
    big = W.BasicMap(y="a", x="b")
    assert W.pn_leq(small, big)
    assert not W.pn_leq(big, small)
    assert W.pn_star(big) == W.BasicMap("b", "b")
    assert W.pn_inverse(big) == W.BasicMap("b", "a")
    assert W.pn_left_compatible(W.BasicMap("a", "a"), W.BasicMap("b", "b"))
    assert not W.pn_left_compatible(W.BasicMap("a", "a"), W.BasicMap("b", "a"))


def test_orthogonality_matches_prefix_code():
    assert W.orthogonal_set_check(["a", "ba", "bb"])
    assert not W.orthogonal_set_check(["a", "ab"])
    assert W.orthogonal_set_check([""])


def test_maximal_codes_reachable_by_expansion():
    # every maximal prefix code with at most 7 words at n=2 arises from
    # {empty} by caret expansions
    reachable = set()
    frontier = [("",)]
    while frontier:
        X = frontier.pop()
        if X in reachable or len(X) > 7:
            continue
        reachable.add(X)
        for x in X:
            frontier.append(W.caret_expand(X, x, 2))
    for X in reachable:
        assert W.is_maximal_prefix_code(X, 2)
    # independent cross-check against the Kraft characterization over a
    # bounded universe of codes
    from itertools import combinations
    words = _all_words(3)
    for k in range(1, 8):
        for cand in combinations(words, k):
            if W.is_prefix_code(cand) and W.kraft_sum(cand, 2) == 1:
                assert tuple(W.sort_words(cand)) in reachable


def _all_words(max_len):
    out = [""]
    for _ in range(max_len):
        out += [w + c for w in out for c in "ab" if len(w + c) <= max_len]
    return sorted(set(out), key=W.word_key)
