"""Words over a finite alphabet, prefix codes, carets, and basic maps.

A word is a plain string over the letters 'a'..'h'; the empty word prints
as "~".  The alphabet size n (2 <= n <= 8) is passed alongside values.
A basic map is the partial shift y.x^-1 acting on infinite strings by
xw -> yw; the zero map is represented by None.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

LETTERS = "abcdefgh"

EQUAL = "equal"
LEFT_PREFIX = "left-prefix"
RIGHT_PREFIX = "right-prefix"
INCOMPARABLE = "incomparable"


class WordSyntaxError(ValueError):
    pass


def check_alphabet(n: int) -> None:
    if not 2 <= n <= len(LETTERS):
        raise ValueError(f"alphabet size must be in [2, {len(LETTERS)}], got {n}")


def alphabet(n: int) -> str:
    check_alphabet(n)
    return LETTERS[:n]


def parse_word(text: str, n: int) -> str:
    """Parse a word literal: letters a.. for the first n letters, "~" for the empty word."""
    check_alphabet(n)
    if text == "~":
        return ""
    if not text or any(c not in LETTERS[:n] for c in text):
        raise WordSyntaxError(f"bad word literal {text!r} over a {n}-letter alphabet")
    return text


def word_str(w: str) -> str:
    return w if w else "~"


def word_key(w: str):
    # length-then-lexicographic, the canonical word order throughout
    return (len(w), w)


def sort_words(ws: Iterable[str]) -> list:
    return sorted(ws, key=word_key)


def comparable(x: str, y: str) -> str:
    """Classify the prefix relation between two words."""
    if x == y:
        return EQUAL
    if y.startswith(x):
        return LEFT_PREFIX
    if x.startswith(y):
        return RIGHT_PREFIX
    return INCOMPARABLE


def is_prefix_code(words: Iterable[str]) -> bool:
    ws = list(words)
    if len(set(ws)) != len(ws):
        return False
    for i, x in enumerate(ws):
        for y in ws[i + 1:]:
            if comparable(x, y) != INCOMPARABLE:
                return False
    return True


def prefix_code(words: Iterable[str], n: int) -> tuple:
    """Validate and canonically sort a prefix code; raises naming a witness pair."""
    check_alphabet(n)
    ws = sort_words(words)
    for w in ws:
        if any(c not in LETTERS[:n] for c in w):
            raise WordSyntaxError(f"word {word_str(w)!r} is not over a {n}-letter alphabet")
    for i, x in enumerate(ws):
        for y in ws[i + 1:]:
            if comparable(x, y) != INCOMPARABLE:
                raise ValueError(
                    f"not a prefix code: {word_str(x)} and {word_str(y)} are comparable")
    return tuple(ws)


def kraft_sum(X: Iterable[str], n: int) -> Fraction:
    """Exact Kraft sum of a word set: sum of n^(-|x|)."""
    check_alphabet(n)
    return sum((Fraction(1, n ** len(x)) for x in X), Fraction(0))


def is_maximal_prefix_code(X: Iterable[str], n: int) -> bool:
    """Trie test: every internal node on the way to a codeword has all n children.

    Equivalently the cylinders of X cover the whole space of infinite strings.
    """
    check_alphabet(n)
    words = list(X)
    if not is_prefix_code(words):
        return False
    if not words:
        return False
    end = object()
    root: dict = {}
    for w in words:
        node = root
        for c in w:
            node = node.setdefault(c, {})
        node[end] = True
    stack = [root]
    letters = LETTERS[:n]
    while stack:
        node = stack.pop()
        if node.get(end):
            continue  # a codeword leaf; prefix-code property keeps it childless
        if any(c not in node for c in letters):
            return False
        stack.extend(node[c] for c in letters)
    return True


def caret_expand(X: Iterable[str], x: str, n: int) -> tuple:
    """Replace x in X by its n one-letter extensions."""
    ws = set(X)
    if x not in ws:
        raise ValueError(f"cannot expand: {word_str(x)} is not in the code")
    ws.discard(x)
    ws.update(x + c for c in LETTERS[:n])
    return tuple(sort_words(ws))


def caret_reduce(X: Iterable[str], x: str, n: int) -> tuple:
    """Replace the full caret below x by x itself."""
    ws = set(X)
    caret = [x + c for c in LETTERS[:n]]
    if not all(c in ws for c in caret):
        raise ValueError(f"cannot reduce: the caret below {word_str(x)} is not contained in the code")
    ws.difference_update(caret)
    ws.add(x)
    return tuple(sort_words(ws))


@dataclass(frozen=True)
class BasicMap:
    """The partial map xw -> yw on infinite strings (the element y.x^-1)."""
    y: str
    x: str


def parse_basic(text: str, n: int) -> Optional[BasicMap]:
    """Parse "x>y" (meaning xw -> yw) or "0" for the zero map."""
    if text.strip() == "0":
        return None
    parts = text.split(">")
    if len(parts) != 2:
        raise WordSyntaxError(f"bad basic-map literal {text!r}, expected \"x>y\" or \"0\"")
    x = parse_word(parts[0].strip(), n)
    y = parse_word(parts[1].strip(), n)
    return BasicMap(y=y, x=x)


def basic_str(f: Optional[BasicMap]) -> str:
    if f is None:
        return "0"
    return f"{word_str(f.x)}>{word_str(f.y)}"


def pn_mul(f: Optional[BasicMap], g: Optional[BasicMap]) -> Optional[BasicMap]:
    """Product f.g of basic maps, applying g first.

    For f = y.x^-1 and g = v.u^-1: zero when x and v are incomparable,
    (yz).u^-1 when v = xz, and y.(uz)^-1 when x = vz.
    """
    if f is None or g is None:
        return None
    y, x = f.y, f.x
    v, u = g.y, g.x
    if v.startswith(x):
        z = v[len(x):]
        return BasicMap(y=y + z, x=u)
    if x.startswith(v):
        z = x[len(v):]
        return BasicMap(y=y, x=u + z)
    return None


def pn_star(f: Optional[BasicMap]) -> Optional[BasicMap]:
    if f is None:
        return None
    return BasicMap(y=f.x, x=f.x)


def pn_inverse(f: Optional[BasicMap]) -> Optional[BasicMap]:
    if f is None:
        return None
    return BasicMap(y=f.x, x=f.y)


def pn_is_idempotent(f: Optional[BasicMap]) -> bool:
    return f is None or f.y == f.x


def pn_leq(f: Optional[BasicMap], g: Optional[BasicMap]) -> bool:
    """Natural partial order: y.x^-1 <= v.u^-1 iff (y, x) = (vp, up) for some p."""
    if f is None:
        return True
    if g is None:
        return False
    if not (f.y.startswith(g.y) and f.x.startswith(g.x)):
        return False
    return f.y[len(g.y):] == f.x[len(g.x):]


def pn_left_compatible(f: Optional[BasicMap], g: Optional[BasicMap]) -> bool:
    """True iff f.g^-1 is an idempotent (or zero)."""
    return pn_is_idempotent(pn_mul(f, pn_inverse(g)))


def orthogonal_set_check(X: Iterable[str]) -> bool:
    """The idempotents x.x^-1 over X are pairwise orthogonal iff X is a prefix code.

    Both sides are computed and cross-checked.
    """
    words = list(X)
    by_products = True
    for i, x in enumerate(words):
        for y in words[i + 1:]:
            e, f = BasicMap(x, x), BasicMap(y, y)
            if pn_mul(e, f) is not None or pn_mul(f, e) is not None:
                by_products = False
    by_code = is_prefix_code(words)
    if by_products != by_code:
        raise AssertionError(
            f"orthogonality/prefix-code cross-check disagrees on {sorted(words)}")
    return by_code
