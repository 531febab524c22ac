"""Table maps f^X_Y over an n-letter alphabet.

A TableMap sends x_i w to y_i w for each row (x_i > y_i); the domain
words form a prefix code, so the rows are left-orthogonal basic maps and
every table is a well-defined partial map on infinite strings.  The empty
table is the zero map.  Units (both codes maximal) carry the Thompson
group arithmetic, and the total maps form a Cantor algebra under the
alpha and lambda operations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .words import (
    LETTERS,
    INCOMPARABLE,
    WordSyntaxError,
    check_alphabet,
    comparable,
    is_maximal_prefix_code,
    is_prefix_code,
    parse_word,
    sort_words,
    word_key,
    word_str,
)


@dataclass(frozen=True)
class TableMap:
    n: int
    pairs: tuple  # ((x, y), ...) sorted by domain word; empty means zero


def make(n: int, pairs) -> TableMap:
    """Build a validated TableMap from (domain, image) word pairs."""
    check_alphabet(n)
    rows = sorted({(x, y) for x, y in pairs}, key=lambda p: word_key(p[0]))
    for i, (x, _) in enumerate(rows):
        for x2, _ in rows[i + 1:]:
            if comparable(x, x2) != INCOMPARABLE:
                raise ValueError(
                    f"domain words {word_str(x)} and {word_str(x2)} are comparable")
    for x, y in rows:
        for w in (x, y):
            if any(c not in LETTERS[:n] for c in w):
                raise WordSyntaxError(
                    f"word {word_str(w)!r} is not over a {n}-letter alphabet")
    return TableMap(n, tuple(rows))


def _from_rows(n: int, rows) -> TableMap:
    # internal constructor for rows already known to form a prefix code
    return TableMap(n, tuple(sorted(rows, key=lambda p: word_key(p[0]))))


def parse_table(text: str, n: int) -> TableMap:
    """Parse "[x1>y1, x2>y2, ...]"; "[]" is the zero map."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise WordSyntaxError(f"bad table literal {text!r}, expected [x>y, ...]")
    body = text[1:-1].strip()
    pairs = []
    if body:
        for item in body.split(","):
            halves = item.split(">")
            if len(halves) != 2:
                raise WordSyntaxError(f"bad table entry {item.strip()!r}")
            pairs.append((parse_word(halves[0].strip(), n),
                          parse_word(halves[1].strip(), n)))
    return make(n, pairs)


def table_str(f: TableMap) -> str:
    return "[" + ", ".join(f"{word_str(x)}>{word_str(y)}" for x, y in f.pairs) + "]"


def is_zero(f: TableMap) -> bool:
    return not f.pairs


def identity(n: int) -> TableMap:
    return make(n, [("", "")])


def apply_to_word(f: TableMap, w: str) -> Optional[str]:
    """Partial evaluation on a finite probe word; None when no row matches."""
    for x, y in f.pairs:
        if w.startswith(x):
            return y + w[len(x):]
    return None


def compose(f: TableMap, g: TableMap) -> TableMap:
    """The composite applying g first, then f (not auto-reduced)."""
    if f.n != g.n:
        raise ValueError("alphabet sizes differ")
    rows = []
    for u, v in g.pairs:
        for x, y in f.pairs:
            if v.startswith(x):
                rows.append((u, y + v[len(x):]))
            elif x.startswith(v):
                rows.append((u + x[len(v):], y))
    return _from_rows(f.n, rows)


def reduce(f: TableMap) -> TableMap:
    """Collapse full carets with aligned images until no reduction applies."""
    rows = dict(f.pairs)
    n = f.n
    letters = LETTERS[:n]
    changed = True
    while changed:
        changed = False
        for stem in {x[:-1] for x in rows if x}:
            caret = [stem + c for c in letters]
            images = [rows.get(c) for c in caret]
            if any(img is None or not img or img[-1] != c[-1]
                   for img, c in zip(images, caret)):
                continue
            y = images[0][:-1]
            if all(img[:-1] == y for img in images):
                for c in caret:
                    del rows[c]
                rows[stem] = y
                changed = True
    return _from_rows(n, rows.items())


def star(f: TableMap) -> TableMap:
    return _from_rows(f.n, [(x, x) for x, _ in f.pairs])


def is_partial_unit(f: TableMap) -> bool:
    return is_prefix_code(y for _, y in f.pairs) or is_zero(f)


def invert(f: TableMap) -> Optional[TableMap]:
    if not is_partial_unit(f):
        return None
    return make(f.n, [(y, x) for x, y in f.pairs])


def equals(f: TableMap, g: TableMap) -> bool:
    return f.n == g.n and reduce(f).pairs == reduce(g).pairs


def left_compatible(f: TableMap, g: TableMap) -> bool:
    """True iff the two maps agree wherever both domains overlap."""
    if f.n != g.n:
        raise ValueError("alphabet sizes differ")
    for x1, y1 in f.pairs:
        for x2, y2 in g.pairs:
            if x2.startswith(x1):
                if y2 != y1 + x2[len(x1):]:
                    return False
            elif x1.startswith(x2):
                if y1 != y2 + x1[len(x2):]:
                    return False
    return True


def join(f: TableMap, g: TableMap) -> Optional[TableMap]:
    """Union of two left-compatible maps, caret-reduced; None if incompatible."""
    if not left_compatible(f, g):
        return None
    rows = dict(f.pairs)
    for x2, y2 in g.pairs:
        if any(x2.startswith(x1) for x1 in rows):
            continue
        for x1 in [x for x in rows if x.startswith(x2)]:
            del rows[x1]
        rows[x2] = y2
    return reduce(_from_rows(f.n, rows.items()))


def is_total(f: TableMap) -> bool:
    return is_maximal_prefix_code((x for x, _ in f.pairs), f.n)


def is_unit(f: TableMap) -> bool:
    return (is_total(f)
            and is_prefix_code(y for _, y in f.pairs)
            and is_maximal_prefix_code((y for _, y in f.pairs), f.n))


def alpha(f: TableMap, i: int) -> TableMap:
    """The map w -> f(a_i w); i is 1-based."""
    if not is_total(f):
        raise ValueError("alpha needs a total map")
    if not 1 <= i <= f.n:
        raise ValueError(f"letter index {i} out of range for n={f.n}")
    return reduce(compose(f, make(f.n, [("", LETTERS[i - 1])])))


def lambda_op(fs) -> TableMap:
    """The glued map sending a_i w to f_i(w), for total maps f_1..f_n."""
    fs = list(fs)
    if not fs:
        raise ValueError("lambda needs at least one argument")
    n = fs[0].n
    if len(fs) != n:
        raise ValueError(f"lambda needs exactly {n} arguments, got {len(fs)}")
    rows = []
    for i, f in enumerate(fs):
        if f.n != n:
            raise ValueError("alphabet sizes differ")
        if not is_total(f):
            raise ValueError("lambda needs total maps")
        # compose(f, [a_i > ~]) written out: the pieces are orthogonal by
        # construction, so the union needs no compatibility merge
        rows.extend((LETTERS[i] + x, y) for x, y in f.pairs)
    return reduce(_from_rows(n, rows))


# ---------------------------------------------------------------------------
# Cantor-algebra terms over one generator


@dataclass(frozen=True)
class Generator:
    pass


@dataclass(frozen=True)
class AlphaChain:
    base: object
    word: str  # alpha letters applied left to right


@dataclass(frozen=True)
class Lambda:
    children: tuple


def eval_term(t, n: int) -> TableMap:
    """Interpret a term in the Cantor algebra of total maps, with the
    generator reading as the identity."""
    check_alphabet(n)
    if isinstance(t, Generator):
        return identity(n)
    if isinstance(t, AlphaChain):
        f = eval_term(t.base, n)
        for c in t.word:
            f = alpha(f, LETTERS.index(c) + 1)
        return f
    if isinstance(t, Lambda):
        if len(t.children) != n:
            raise ValueError(
                f"lambda node has {len(t.children)} children, expected {n}")
        return lambda_op([eval_term(c, n) for c in t.children])
    raise TypeError(f"not a term: {t!r}")


def term_for(f: TableMap):
    """A term whose evaluation recovers the total map f, built by peeling
    one domain letter at a time."""
    if not is_total(f):
        raise ValueError("term_for needs a total map")
    f = reduce(f)
    if f.pairs[0][0] == "":
        y = f.pairs[0][1]
        return AlphaChain(Generator(), y) if y else Generator()
    return Lambda(tuple(term_for(alpha(f, i + 1)) for i in range(f.n)))


def parse_term(text: str, n: int):
    """Parse a term: "x", TERM "." WORD (an alpha chain), or "(T, ..., T)L"."""
    check_alphabet(n)
    pos = 0
    s = text

    def skip_ws():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def parse_primary():
        nonlocal pos
        skip_ws()
        if pos >= len(s):
            raise WordSyntaxError("unexpected end of term")
        if s[pos] == "x":
            pos += 1
            return Generator()
        if s[pos] == "(":
            pos += 1
            children = [parse()]
            skip_ws()
            while pos < len(s) and s[pos] == ",":
                pos += 1
                children.append(parse())
                skip_ws()
            if pos >= len(s) or s[pos] != ")":
                raise WordSyntaxError("expected ')' in term")
            pos += 1
            skip_ws()
            if pos >= len(s) or s[pos] != "L":
                raise WordSyntaxError("expected 'L' after ')'")
            pos += 1
            return Lambda(tuple(children))
        raise WordSyntaxError(f"unexpected character {s[pos]!r} in term")

    def parse():
        nonlocal pos
        t = parse_primary()
        skip_ws()
        while pos < len(s) and s[pos] == ".":
            pos += 1
            skip_ws()
            start = pos
            while pos < len(s) and s[pos] in LETTERS[:n]:
                pos += 1
            if pos == start:
                raise WordSyntaxError("expected a word after '.'")
            t = AlphaChain(t, s[start:pos])
            skip_ws()
        return t

    t = parse()
    skip_ws()
    if pos != len(s):
        raise WordSyntaxError(f"trailing input in term: {s[pos:]!r}")
    return t


def term_str(t) -> str:
    if isinstance(t, Generator):
        return "x"
    if isinstance(t, AlphaChain):
        return f"{term_str(t.base)}.{t.word}"
    if isinstance(t, Lambda):
        return "(" + ", ".join(term_str(c) for c in t.children) + ")L"
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Structure checks and random generation


def endo_check(g: TableMap, samples: int, rng: random.Random) -> dict:
    """Check that left multiplication by a total g commutes with alpha and
    lambda on random total maps."""
    if not is_total(g):
        raise ValueError("endo_check needs a total map")
    n = g.n
    failures = []
    for k in range(samples):
        f = random_total(rng, n)
        for i in range(1, n + 1):
            if not equals(reduce(compose(g, alpha(f, i))),
                          alpha(reduce(compose(g, f)), i)):
                failures.append(("alpha", k, i))
        fs = [random_total(rng, n) for _ in range(n)]
        if not equals(reduce(compose(g, lambda_op(fs))),
                      lambda_op([reduce(compose(g, fi)) for fi in fs])):
            failures.append(("lambda", k, None))
    return {"passed": not failures, "samples": samples, "failures": failures}


def zero_simplifying_witness(X, n: int) -> TableMap:
    """A total map a with star(e . a) = identity for e the identity on the
    cylinders of a nonempty prefix code X."""
    X = sort_words(X)
    if not X:
        raise ValueError("the prefix code must be nonempty")
    if not is_prefix_code(X):
        raise ValueError("not a prefix code")
    a = make(n, [("", X[0])])
    e = make(n, [(x, x) for x in X])
    assert equals(star(compose(e, a)), identity(n)), "witness verification failed"
    return a


def random_word(rng: random.Random, n: int, max_len: int) -> str:
    k = rng.randrange(max_len + 1)
    return "".join(rng.choice(LETTERS[:n]) for _ in range(k))


def random_maximal_code(rng: random.Random, n: int, expansions: int) -> list:
    """A maximal prefix code grown from {empty} by random caret expansions."""
    code = [""]
    for _ in range(expansions):
        x = rng.choice(code)
        code.remove(x)
        code.extend(x + c for c in LETTERS[:n])
    return sort_words(code)


def random_total(rng: random.Random, n: int, expansions: Optional[int] = None,
                 image_len: Optional[int] = None) -> TableMap:
    if expansions is None:
        expansions = rng.randrange(3 if n == 2 else 2) + 1
    if image_len is None:
        image_len = 4 if n == 2 else 3
    X = random_maximal_code(rng, n, expansions)
    return _from_rows(n, [(x, random_word(rng, n, image_len)) for x in X])


def random_table(rng: random.Random, n: int) -> TableMap:
    """A random (not necessarily total) table, zero included."""
    full = random_total(rng, n)
    rows = [p for p in full.pairs if rng.random() < 0.7]
    return make(n, rows)
