"""Finite right restriction monoids given by explicit multiplication tables.

Elements are dense integer indices; names are display-only.  The star map,
the natural partial order (a <= b iff a = b.a*), left-compatibility and
partial units follow the standard partial-function semantics: composition
is right to left, so mul(f, g) applies g first.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional

MAX_ISO_SIZE = 128
MAX_BUILD_N = 4


class MalformedTableError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    pass


class InterchangeError(ValueError):
    """A monoid interchange file failed validation; names the offending key."""

    def __init__(self, key: str, message: str):
        super().__init__(f"key {key!r}: {message}")
        self.key = key


class FiniteRRMonoid:
    """A finite monoid with a star map, given by explicit tables.

    Immutable after construction; all derived data (joins, inverses,
    down-sets) is cached lazily and is safe for concurrent readers.
    """

    def __init__(self, element_names, mul, star, one, zero=None, name=""):
        names = tuple(str(s) for s in element_names)
        n = len(names)
        if len(mul) != n:
            raise MalformedTableError(f"mul has {len(mul)} rows, expected {n}")
        rows = []
        for i, row in enumerate(mul):
            row = tuple(row)
            if len(row) != n:
                raise MalformedTableError(f"mul row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise MalformedTableError(f"mul entry at row {i}, column {j} is out of range: {v!r}")
            rows.append(row)
        star = tuple(star)
        if len(star) != n:
            raise MalformedTableError(f"star has length {len(star)}, expected {n}")
        for i, v in enumerate(star):
            if not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTableError(f"star entry {i} is out of range: {v!r}")
        if not isinstance(one, int) or not 0 <= one < n:
            raise MalformedTableError(f"one is out of range: {one!r}")
        if zero is not None and (not isinstance(zero, int) or not 0 <= zero < n):
            raise MalformedTableError(f"zero is out of range: {zero!r}")
        self.element_names = names
        self.mul = tuple(rows)
        self.star = star
        self.one = one
        self.zero = zero
        self.name = name
        self._joins: Optional[dict] = None
        self._inverses: Optional[list] = None
        self._downsets: Optional[list] = None

    def __len__(self):
        return len(self.element_names)

    def __repr__(self):
        label = self.name or "monoid"
        return f"<FiniteRRMonoid {label} with {len(self)} elements>"

    def is_projection(self, a: int) -> bool:
        return self.star[a] == a

    def projections(self) -> list:
        return [a for a in range(len(self)) if self.star[a] == a]


def leq(M: FiniteRRMonoid, a: int, b: int) -> bool:
    """Natural partial order: a <= b iff a = b.a*."""
    return M.mul[b][M.star[a]] == a


def left_compatible(M: FiniteRRMonoid, a: int, b: int) -> bool:
    """True iff a.b* = b.a*."""
    return M.mul[a][M.star[b]] == M.mul[b][M.star[a]]


def meet_of_compatible(M: FiniteRRMonoid, a: int, b: int) -> int:
    """The meet a ^ b = a.b* of a left-compatible pair."""
    if not left_compatible(M, a, b):
        raise ValueError(
            f"elements {M.element_names[a]} and {M.element_names[b]} are not left-compatible")
    return M.mul[a][M.star[b]]


def downset(M: FiniteRRMonoid, a: int) -> frozenset:
    if M._downsets is None:
        n = len(M)
        M._downsets = [frozenset(x for x in range(n) if leq(M, x, b)) for b in range(n)]
    return M._downsets[a]


def join(M: FiniteRRMonoid, a: int, b: int) -> Optional[int]:
    """Least upper bound of {a, b} in the natural order, or None."""
    if M._joins is None:
        M._joins = {}
    key = (a, b) if a <= b else (b, a)
    if key not in M._joins:
        M._joins[key] = join_of_set(M, key)
    return M._joins[key]


def join_of_set(M: FiniteRRMonoid, elems) -> Optional[int]:
    """Least upper bound of a set of elements, found by exhaustive order search."""
    elems = list(elems)
    if not elems:
        return None
    n = len(M)
    upper = [c for c in range(n) if all(leq(M, a, c) for a in elems)]
    for c in upper:
        if all(leq(M, c, d) for d in upper):
            return c
    return None


def inverse_of(M: FiniteRRMonoid, a: int) -> Optional[int]:
    """The unique b with ba = a* and ab = b*, if a is a partial unit."""
    if M._inverses is None:
        n = len(M)
        inv = [None] * n
        for x in range(n):
            for b in range(n):
                if M.mul[b][x] == M.star[x] and M.mul[x][b] == M.star[b]:
                    inv[x] = b
                    break
        M._inverses = inv
    return M._inverses[a]


def partial_units(M: FiniteRRMonoid) -> list:
    return [a for a in range(len(M)) if inverse_of(M, a) is not None]


def compatible(M: FiniteRRMonoid, a: int, b: int) -> bool:
    """Left- and right-compatible; defined for partial units."""
    if not left_compatible(M, a, b):
        return False
    ai, bi = inverse_of(M, a), inverse_of(M, b)
    if ai is None or bi is None:
        raise ValueError("compatibility is only defined for partial units")
    return left_compatible(M, ai, bi)


@dataclass
class AxiomReport:
    passed: bool
    violations: list = field(default_factory=list)


def check_axioms(M: FiniteRRMonoid, max_violations: int = 200) -> AxiomReport:
    """Exhaustively verify associativity, the monoid laws and RR1-RR6.

    Each violation records the axiom id and a witness tuple of element
    indices.  Malformed tables raise at construction time.
    """
    n = len(M)
    mul, star = M.mul, M.star
    violations = []

    def report(axiom, witness):
        if len(violations) < max_violations:
            violations.append((axiom, witness))

    for a in range(n):
        if mul[M.one][a] != a or mul[a][M.one] != a:
            report("identity", (a,))
    if star[M.one] != M.one:
        report("star-one", (M.one,))
    if M.zero is not None:
        z = M.zero
        if star[z] != z:
            report("zero", (z,))
        for a in range(n):
            if mul[z][a] != z or mul[a][z] != z:
                report("zero", (a,))
    rng = range(n)
    for a in rng:
        row_a = mul[a]
        for b in rng:
            ab = row_a[b]
            row_ab = mul[ab]
            row_b = mul[b]
            for c in rng:
                if row_ab[c] != row_a[row_b[c]]:
                    report("assoc", (a, b, c))
    for s in rng:
        if star[star[s]] != star[s]:
            report("RR1", (s,))
        if mul[s][star[s]] != s:
            report("RR4", (s,))
    for s in rng:
        ss = star[s]
        for t in rng:
            ts = star[t]
            p = mul[ss][ts]
            if star[p] != p:
                report("RR2", (s, t))
            if p != mul[ts][ss]:
                report("RR3", (s, t))
            if star[mul[s][t]] != star[mul[ss][t]]:
                report("RR5", (s, t))
            if mul[ts][s] != mul[s][star[mul[t][s]]]:
                report("RR6", (s, t))
    return AxiomReport(passed=not violations, violations=violations)


@dataclass
class Classification:
    is_inverse: bool
    is_distributive: bool
    is_boolean: bool
    is_etale: bool
    is_zero_simplifying: Optional[bool]  # None when the monoid has no zero
    is_fundamental: bool
    n_projections: int
    n_partial_units: int
    n_total: int


def _bottom_projection(M: FiniteRRMonoid) -> Optional[int]:
    projs = M.projections()
    for p in projs:
        if all(leq(M, p, q) for q in projs):
            return p
    return None


def _projections_generalized_boolean(M: FiniteRRMonoid) -> bool:
    projs = M.projections()
    bot = _bottom_projection(M)
    if bot is None:
        return False
    for e in projs:
        below = [f for f in projs if leq(M, f, e)]
        for f in below:
            if not any(M.mul[f][g] == bot and join(M, f, g) == e for g in below):
                return False
    return True


def classify(M: FiniteRRMonoid) -> Classification:
    """Order-theoretic classification by exhaustive search."""
    n = len(M)
    pu = partial_units(M)
    pu_set = set(pu)
    is_inverse = len(pu) == n

    # Joins are demanded for compatible pairs; for pairs of partial units
    # this also requires the inverses to be left-compatible.  The stronger
    # all-left-compatible-joins condition is folded into is_etale below.
    def needs_join(a, b):
        if not left_compatible(M, a, b):
            return False
        if a in pu_set and b in pu_set:
            return left_compatible(M, inverse_of(M, a), inverse_of(M, b))
        return True

    lc_pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if left_compatible(M, a, b)]
    needed = [(a, b) for a, b in lc_pairs if needs_join(a, b)]
    is_distributive = all(join(M, a, b) is not None for a, b in needed)
    if is_distributive:
        for a, b in needed:
            j = join(M, a, b)
            for c in range(n):
                if join(M, M.mul[a][c], M.mul[b][c]) != M.mul[j][c]:
                    is_distributive = False
                    break
            if not is_distributive:
                break

    is_boolean = is_distributive and _projections_generalized_boolean(M)

    is_etale = is_boolean and all(join(M, a, b) is not None for a, b in lc_pairs)
    if is_etale:
        for a in range(n):
            under = [u for u in pu if leq(M, u, a)]
            if join_of_set(M, under) != a:
                is_etale = False
                break

    is_zero_simplifying = _zero_simplifying(M, pu) if M.zero is not None else None
    is_fundamental = _fundamental(M)

    return Classification(
        is_inverse=is_inverse,
        is_distributive=is_distributive,
        is_boolean=is_boolean,
        is_etale=is_etale,
        is_zero_simplifying=is_zero_simplifying,
        is_fundamental=is_fundamental,
        n_projections=len(M.projections()),
        n_partial_units=len(pu),
        n_total=sum(1 for a in range(n) if M.star[a] == M.one),
    )


def _zero_simplifying(M: FiniteRRMonoid, pu: list) -> bool:
    """Only additive ideals of the partial-unit submonoid are {0} and everything.

    Computed by closing each singleton under two-sided multiplication and
    binary compatible joins.
    """
    SM, emb = submonoid(M, pu)
    n = len(SM)
    zero = SM.zero
    if zero is None:
        return False
    full = set(range(n))
    for seed in range(n):
        if seed == zero:
            continue
        ideal = {zero, seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            new = set()
            for s in range(n):
                new.add(SM.mul[s][x])
                new.add(SM.mul[x][s])
            for y in list(ideal):
                if compatible(SM, x, y):
                    j = join(SM, x, y)
                    if j is not None:
                        new.add(j)
            for v in new:
                if v not in ideal:
                    ideal.add(v)
                    frontier.append(v)
        if ideal != full:
            return False
    return True


def _fundamental(M: FiniteRRMonoid) -> bool:
    """Faithfulness of the action e -> (eg)* of the units on the projections."""
    n = len(M)
    units = [g for g in range(n)
             if any(M.mul[g][h] == M.one and M.mul[h][g] == M.one for h in range(n))]
    projs = M.projections()
    for g in units:
        if g == M.one:
            continue
        if all(M.star[M.mul[e][g]] == e for e in projs):
            return False
    return True


def left_orthogonalize(M: FiniteRRMonoid, elems) -> list:
    """Refine a left-compatible family to a left-orthogonal one with the same join.

    Follows b_{m+1} = a_{m+1} . complement(join of earlier stars).
    """
    elems = list(elems)
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if not left_compatible(M, a, b):
                raise ValueError(
                    f"family is not left-compatible: witness "
                    f"({M.element_names[a]}, {M.element_names[b]})")
    if join_of_set(M, elems) is None:
        raise ValueError("family has no join")
    bot = _bottom_projection(M)
    if bot is None:
        raise ValueError("projections have no bottom; host is not Boolean")
    projs = M.projections()
    out = []
    e = bot
    for a in elems:
        comp = None
        for c in projs:
            if M.mul[e][c] == bot and join(M, e, c) == M.one:
                comp = c
                break
        if comp is None:
            raise ValueError(
                f"projection {M.element_names[e]} has no complement; host is not Boolean")
        b = M.mul[a][comp]
        out.append(b)
        e2 = join(M, e, M.star[b])
        if e2 is None:
            raise ValueError("missing join of projections; host is not Boolean")
        e = e2
    return out


def cayley_embed(M: FiniteRRMonoid) -> list:
    """The Cayley representation a -> (x -> ax on the domain a*S).

    Returns one partial self-map of the element set per element, as a tuple
    with -1 marking undefined points; verified injective, multiplicative and
    star-preserving.
    """
    n = len(M)
    reps = []
    for a in range(n):
        dom = {M.mul[M.star[a]][x] for x in range(n)}
        reps.append(tuple(M.mul[a][x] if x in dom else -1 for x in range(n)))
    assert len(set(reps)) == n, "Cayley representation is not injective"
    for a in range(n):
        for b in range(n):
            fb = reps[b]
            fa = reps[a]
            composed = tuple(-1 if fb[x] < 0 else fa[fb[x]] for x in range(n))
            assert composed == reps[M.mul[a][b]], "Cayley representation is not multiplicative"
        fa = reps[a]
        ident = tuple(x if fa[x] >= 0 else -1 for x in range(n))
        assert ident == reps[M.star[a]], "Cayley representation does not preserve star"
    return reps


def _pt_name(f) -> str:
    return "".join("-" if v < 0 else str(v) for v in f)


def _compose_pt(f, g):
    # apply g first
    return tuple(-1 if g[x] < 0 else f[g[x]] for x in range(len(f)))


def _build_from_maps(maps, n, name):
    index = {f: i for i, f in enumerate(maps)}
    mul = [[index[_compose_pt(f, g)] for g in maps] for f in maps]
    star = [index[tuple(x if f[x] >= 0 else -1 for x in range(n))] for f in maps]
    one = index[tuple(range(n))]
    zero = index[tuple([-1] * n)]
    return FiniteRRMonoid([_pt_name(f) for f in maps], mul, star, one, zero, name=name)


def build_PT(n: int) -> FiniteRRMonoid:
    """All (n+1)^n partial self-maps of an n-point set, star = identity on domain."""
    if not 1 <= n <= MAX_BUILD_N:
        raise ResourceLimitError(f"build_PT supports 1 <= n <= {MAX_BUILD_N}, got {n}")
    maps = list(itertools.product(range(-1, n), repeat=n))
    return _build_from_maps(maps, n, name=f"PT{n}")


def build_I(n: int) -> FiniteRRMonoid:
    """The symmetric inverse monoid: all partial bijections of an n-point set."""
    if not 1 <= n <= MAX_BUILD_N:
        raise ResourceLimitError(f"build_I supports 1 <= n <= {MAX_BUILD_N}, got {n}")
    maps = []
    for f in itertools.product(range(-1, n), repeat=n):
        defined = [v for v in f if v >= 0]
        if len(set(defined)) == len(defined):
            maps.append(f)
    return _build_from_maps(maps, n, name=f"I{n}")


def build_boolean_algebra(atoms: int) -> FiniteRRMonoid:
    """The Boolean algebra on 2^atoms subsets as an inverse monoid (meet product)."""
    if not 1 <= atoms <= 6:
        raise ResourceLimitError(f"build_boolean_algebra supports 1 <= atoms <= 6, got {atoms}")
    n = 1 << atoms
    names = [format(s, f"0{atoms}b") for s in range(n)]
    mul = [[a & b for b in range(n)] for a in range(n)]
    star = list(range(n))
    return FiniteRRMonoid(names, mul, star, one=n - 1, zero=0, name=f"B{atoms}")


def submonoid(M: FiniteRRMonoid, subset) -> tuple:
    """Restrict M to a subset closed under mul and star; returns (monoid, embedding)."""
    elems = sorted(set(subset))
    pos = {a: i for i, a in enumerate(elems)}
    for a in elems:
        if M.star[a] not in pos:
            raise ValueError(f"subset is not closed under star at {M.element_names[a]}")
        for b in elems:
            if M.mul[a][b] not in pos:
                raise ValueError(
                    f"subset is not closed under mul at "
                    f"({M.element_names[a]}, {M.element_names[b]})")
    if M.one not in pos:
        raise ValueError("subset does not contain the identity")
    mul = [[pos[M.mul[a][b]] for b in elems] for a in elems]
    star = [pos[M.star[a]] for a in elems]
    zero = pos[M.zero] if M.zero is not None and M.zero in pos else None
    sub = FiniteRRMonoid([M.element_names[a] for a in elems], mul, star,
                         one=pos[M.one], zero=zero, name=f"{M.name}|sub")
    return sub, elems


def _refine_colors(M: FiniteRRMonoid, intern: dict) -> list:
    n = len(M)
    colors = []
    for a in range(n):
        sig = (a == M.one, a == M.zero, M.star[a] == a,
               len(downset(M, a)),
               sum(1 for x in range(n) if leq(M, a, x)),
               sum(1 for x in range(n) if M.star[x] == a))
        colors.append(intern.setdefault(sig, len(intern)))
    for _ in range(n):
        new = []
        for a in range(n):
            sig = (colors[a], colors[M.star[a]],
                   tuple(sorted((colors[x], colors[M.mul[a][x]], colors[M.mul[x][a]])
                                for x in range(n))))
            new.append(intern.setdefault(sig, len(intern)))
        if new == colors:
            break
        colors = new
    return colors


def find_isomorphism(M: FiniteRRMonoid, N: FiniteRRMonoid,
                     max_size: int = MAX_ISO_SIZE) -> Optional[list]:
    """A bijection preserving mul and star, or None.

    Search prunes with iterated color refinement (projection status, order
    profile, star fibers and local multiplication profiles) and propagates
    forced images through products and star.
    """
    n = len(M)
    if n != len(N):
        return None
    if n > max_size:
        raise ResourceLimitError(f"isomorphism search capped at {max_size} elements, got {n}")
    intern: dict = {}
    cm = _refine_colors(M, intern)
    cn = _refine_colors(N, intern)
    if sorted(cm) != sorted(cn):
        return None
    candidates = {a: [b for b in range(n) if cn[b] == cm[a]] for a in range(n)}

    fwd: dict = {}
    rev: dict = {}

    def assign(a, b):
        """Map a -> b and propagate; returns the list of additions or None on clash."""
        added = []
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if x in fwd:
                if fwd[x] != y:
                    for k in added:
                        rev.pop(fwd.pop(k))
                    return None
                continue
            if y in rev or cm[x] != cn[y]:
                for k in added:
                    rev.pop(fwd.pop(k))
                return None
            fwd[x] = y
            rev[y] = x
            added.append(x)
            queue.append((M.star[x], N.star[y]))
            for u, v in list(fwd.items()):
                queue.append((M.mul[x][u], N.mul[y][v]))
                queue.append((M.mul[u][x], N.mul[v][y]))
        return added

    def undo(added):
        for k in added:
            rev.pop(fwd.pop(k))

    def search():
        pending = [a for a in range(n) if a not in fwd]
        if not pending:
            return True
        a = min(pending, key=lambda x: len(candidates[x]))
        for b in candidates[a]:
            if b in rev:
                continue
            added = assign(a, b)
            if added is None:
                continue
            if search():
                return True
            undo(added)
        return False

    start = assign(M.one, N.one)
    if start is None:
        return None
    if M.zero is not None and N.zero is not None:
        if assign(M.zero, N.zero) is None:
            return None
    if (M.zero is None) != (N.zero is None):
        return None
    if not search():
        return None
    out = [fwd[a] for a in range(n)]
    for a in range(n):
        if N.star[out[a]] != out[M.star[a]]:
            return None
        for b in range(n):
            if N.mul[out[a]][out[b]] != out[M.mul[a][b]]:
                return None
    return out


# ---------------------------------------------------------------------------
# JSON interchange


def to_json(M: FiniteRRMonoid) -> str:
    payload = {
        "name": M.name,
        "elements": list(M.element_names),
        "mul": [list(row) for row in M.mul],
        "star": list(M.star),
        "one": M.one,
        "zero": M.zero,
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> FiniteRRMonoid:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeError("<document>", f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InterchangeError("<document>", "expected a JSON object")
    for key in ("name", "elements", "mul", "star", "one"):
        if key not in data:
            raise InterchangeError(key, "missing")
    name = data["name"]
    if not isinstance(name, str):
        raise InterchangeError("name", "expected a string")
    elements = data["elements"]
    if not isinstance(elements, list) or not all(isinstance(s, str) for s in elements):
        raise InterchangeError("elements", "expected an array of strings")
    n = len(elements)
    mul = data["mul"]
    if not isinstance(mul, list) or len(mul) != n:
        raise InterchangeError("mul", f"expected {n} rows")
    for i, row in enumerate(mul):
        if not isinstance(row, list) or len(row) != n:
            raise InterchangeError("mul", f"row {i} is ragged")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InterchangeError("mul", f"entry at row {i}, column {j} is out of range")
    star = data["star"]
    if (not isinstance(star, list) or len(star) != n
            or any(not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n for v in star)):
        raise InterchangeError("star", f"expected {n} indices in range")
    one = data["one"]
    if not isinstance(one, int) or isinstance(one, bool) or not 0 <= one < n:
        raise InterchangeError("one", "out of range")
    zero = data.get("zero")
    if zero is not None and (not isinstance(zero, int) or isinstance(zero, bool)
                             or not 0 <= zero < n):
        raise InterchangeError("zero", "out of range")
    return FiniteRRMonoid(elements, mul, star, one, zero, name=name)
