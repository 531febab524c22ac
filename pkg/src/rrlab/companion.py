"""Completion and companion constructions for finite table monoids.

An acceptable set over a host monoid is a left-compatible order ideal,
stored as a frozenset of element indices.  The completion R(M) has all
acceptable sets as elements; the companion keeps only the sets fixed by
the closure nucleus (closing under finite compatible joins), and its
partial units recover the host.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .tables import (
    FiniteRRMonoid,
    ResourceLimitError,
    classify,
    compatible,
    downset,
    find_isomorphism,
    join,
    join_of_set,
    left_compatible,
    leq,
    partial_units,
)

MAX_ACCEPTABLE = 4096


class StructuralError(RuntimeError):
    """A join required by a construction does not exist in the host."""


def is_acceptable(M: FiniteRRMonoid, A: frozenset) -> bool:
    members = sorted(A)
    for a in members:
        if not downset(M, a) <= A:
            return False
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if not left_compatible(M, a, b):
                return False
    return bool(A)


def down_closure(M: FiniteRRMonoid, F) -> frozenset:
    """Smallest order ideal containing F; F must be pairwise left-compatible."""
    elems = sorted(set(F))
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if not left_compatible(M, a, b):
                raise ValueError(
                    f"family is not left-compatible: witness "
                    f"({M.element_names[a]}, {M.element_names[b]})")
    out = set()
    for a in elems:
        out |= downset(M, a)
    return frozenset(out)


def maximal_members(M: FiniteRRMonoid, A: frozenset) -> list:
    return sorted(a for a in A if not any(b != a and leq(M, a, b) for b in A))


def acceptable_sets(M: FiniteRRMonoid, cap: int = MAX_ACCEPTABLE) -> list:
    """All acceptable sets of M, enumerated through their maximal antichains.

    Every acceptable set is the down-closure of its maximal members, which
    form a nonempty left-compatible antichain, and distinct antichains give
    distinct ideals.
    """
    n = len(M)
    out = []

    def extend(chosen):
        if chosen:
            out.append(down_closure(M, chosen))
            if len(out) > cap:
                raise ResourceLimitError(
                    f"more than {cap} acceptable sets; raise the cap to continue")
        start = chosen[-1] + 1 if chosen else 0
        for a in range(start, n):
            if all(left_compatible(M, a, b)
                   and not leq(M, a, b) and not leq(M, b, a) for b in chosen):
                extend(chosen + [a])

    extend([])
    return sorted(out, key=lambda A: (len(A), sorted(A)))


def set_product(M: FiniteRRMonoid, A: frozenset, B: frozenset) -> frozenset:
    return frozenset(M.mul[a][b] for a in A for b in B)


def set_star(M: FiniteRRMonoid, A: frozenset) -> frozenset:
    return frozenset(M.star[a] for a in A)


def nucleus_closure(M: FiniteRRMonoid, A: frozenset) -> frozenset:
    """Close an acceptable set under binary compatible joins."""
    out = set(A)
    frontier = list(A)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            if not left_compatible(M, x, y):
                continue
            if not compatible(M, x, y):
                continue
            j = join(M, x, y)
            if j is None:
                raise StructuralError(
                    f"compatible pair ({M.element_names[x]}, {M.element_names[y]}) "
                    f"has no join in the host")
            if j not in out:
                out.add(j)
                frontier.append(j)
    return frozenset(out)


def _set_name(M: FiniteRRMonoid, A: frozenset) -> str:
    gens = sorted(M.element_names[a] for a in maximal_members(M, A))
    return "{" + ", ".join(gens) + "}"


@dataclass
class NucleusReport:
    passed: bool
    violations: list = field(default_factory=list)


def check_nucleus(M: FiniteRRMonoid, nu: Callable[[frozenset], frozenset],
                  sets: Optional[list] = None,
                  cap: int = MAX_ACCEPTABLE) -> NucleusReport:
    """Verify the nucleus laws N1-N6 for nu over all acceptable sets of M.

    N1: A <= nu(A).  N2: monotone.  N3: idempotent.  N4: nu(A)nu(B) <= nu(AB).
    N5: projections map to projections.  N6: nu(A*) = nu(nu(A)*).
    """
    if sets is None:
        sets = acceptable_sets(M, cap=cap)
    violations = []
    images = {A: nu(A) for A in sets}

    def name(A):
        return _set_name(M, A)

    for A in sets:
        nA = images[A]
        if not A <= nA:
            violations.append(("N1", name(A)))
        if nu(nA) != nA:
            violations.append(("N3", name(A)))
        if set_star(M, A) == A:
            if set_star(M, nA) != nA:
                violations.append(("N5", name(A)))
        if nu(set_star(M, A)) != nu(set_star(M, nA)):
            violations.append(("N6", name(A)))
        if violations:
            break
    if not violations:
        for A, B in itertools.combinations_with_replacement(sets, 2):
            for X, Y in ((A, B), (B, A)):
                if X <= Y and not images[X] <= images[Y]:
                    violations.append(("N2", (name(X), name(Y))))
                elif not set_product(M, images[X], images[Y]) <= nu(set_product(M, X, Y)):
                    violations.append(("N4", (name(X), name(Y))))
                if violations:
                    break
            if violations:
                break
    return NucleusReport(passed=not violations, violations=violations)


@dataclass
class CompletionResult:
    monoid: FiniteRRMonoid
    sets: list            # acceptable set for each element index
    iota: list            # host element index -> completion element index


def completion_ex(M: FiniteRRMonoid, cap: int = MAX_ACCEPTABLE) -> CompletionResult:
    sets = acceptable_sets(M, cap=cap)
    index = {A: i for i, A in enumerate(sets)}
    n = len(sets)
    mul = [[index[set_product(M, A, B)] for B in sets] for A in sets]
    star = [index[set_star(M, A)] for A in sets]
    one = index[downset(M, M.one)]
    zero = index[downset(M, M.zero)] if M.zero is not None else None
    names = [_set_name(M, A) for A in sets]
    monoid = FiniteRRMonoid(names, mul, star, one, zero, name=f"R({M.name})")
    iota = [index[downset(M, a)] for a in range(len(M))]
    return CompletionResult(monoid, sets, iota)


def completion(M: FiniteRRMonoid, cap: int = MAX_ACCEPTABLE) -> FiniteRRMonoid:
    """The monoid of all acceptable sets: setwise product, inclusion order."""
    return completion_ex(M, cap=cap).monoid


def universal_extension(M: FiniteRRMonoid, T: FiniteRRMonoid, alpha) -> Callable:
    """Extend a homomorphism alpha: M -> T to the completion by A -> join(alpha(A)).

    alpha is given elementwise as a sequence of T-indices.  The returned
    callable maps an acceptable set of M to an element of T.
    """
    alpha = list(alpha)
    if alpha[M.one] != T.one:
        raise ValueError("alpha does not preserve the identity")
    for a in range(len(M)):
        if T.star[alpha[a]] != alpha[M.star[a]]:
            raise ValueError(f"alpha does not preserve star at {M.element_names[a]}")
        for b in range(len(M)):
            if T.mul[alpha[a]][alpha[b]] != alpha[M.mul[a][b]]:
                raise ValueError(
                    f"alpha does not preserve products at "
                    f"({M.element_names[a]}, {M.element_names[b]})")

    def beta(A: frozenset) -> int:
        j = join_of_set(T, [alpha[a] for a in A])
        if j is None:
            raise StructuralError("required join is missing in the target")
        return j

    return beta


@dataclass
class EtaleResult:
    monoid: FiniteRRMonoid
    sets: list            # closed acceptable set for each element index
    iota: list            # host element index -> index of its principal ideal


def etale_of_ex(M: FiniteRRMonoid, cap: int = MAX_ACCEPTABLE) -> EtaleResult:
    cls = classify(M)
    if not (cls.is_inverse and cls.is_boolean):
        raise ValueError("the companion construction needs a Boolean inverse monoid")
    closed = sorted({nucleus_closure(M, A) for A in acceptable_sets(M, cap=cap)},
                    key=lambda A: (len(A), sorted(A)))
    index = {A: i for i, A in enumerate(closed)}
    n = len(closed)
    mul = [[index[nucleus_closure(M, set_product(M, A, B))] for B in closed] for A in closed]
    star = [index[nucleus_closure(M, set_star(M, A))] for A in closed]
    one = index[frozenset(M.projections())]
    zero = index[frozenset({M.zero})] if M.zero is not None else None
    names = [_set_name(M, A) for A in closed]
    monoid = FiniteRRMonoid(names, mul, star, one, zero, name=f"Etale({M.name})")
    iota = [index[downset(M, a)] for a in range(len(M))]
    return EtaleResult(monoid, closed, iota)


def etale_of(M: FiniteRRMonoid, cap: int = MAX_ACCEPTABLE) -> FiniteRRMonoid:
    """The companion of a finite Boolean inverse monoid.

    Elements are the acceptable sets fixed by the closure nucleus, with
    product and star taken after re-closing.
    """
    return etale_of_ex(M, cap=cap).monoid


@dataclass
class InvIsoReport:
    passed: bool
    details: list = field(default_factory=list)


def verify_inv_iso(M: FiniteRRMonoid, cap: int = MAX_ACCEPTABLE) -> InvIsoReport:
    """Check that the partial units of the companion are exactly the principal
    ideals and that a -> down-closure(a) is an isomorphism onto them."""
    res = etale_of_ex(M, cap=cap)
    E = res.monoid
    details = []
    pu = set(partial_units(E))
    principal = set(res.iota)
    if pu != principal:
        details.append(("partial-units-mismatch",
                        sorted(E.element_names[i] for i in pu ^ principal)))
    if len(set(res.iota)) != len(M):
        details.append(("embedding-not-injective", None))
    if res.iota[M.one] != E.one:
        details.append(("identity-not-preserved", None))
    for a in range(len(M)):
        if E.star[res.iota[a]] != res.iota[M.star[a]]:
            details.append(("star-not-preserved", M.element_names[a]))
            break
        for b in range(len(M)):
            if E.mul[res.iota[a]][res.iota[b]] != res.iota[M.mul[a][b]]:
                details.append(("product-not-preserved",
                                (M.element_names[a], M.element_names[b])))
                break
        else:
            continue
        break
    return InvIsoReport(passed=not details, details=details)


def extend_hom(M: FiniteRRMonoid, N: FiniteRRMonoid, theta,
               cap: int = MAX_ACCEPTABLE) -> tuple:
    """Extend a join-preserving homomorphism of Boolean inverse monoids to
    the companions.  Returns (phi, source companion, target companion) where
    phi lists the image index for each companion element of M."""
    theta = list(theta)
    if theta[M.one] != N.one:
        raise ValueError("theta does not preserve the identity")
    for a in range(len(M)):
        if N.star[theta[a]] != theta[M.star[a]]:
            raise ValueError(f"theta does not preserve star at {M.element_names[a]}")
        for b in range(len(M)):
            if N.mul[theta[a]][theta[b]] != theta[M.mul[a][b]]:
                raise ValueError(
                    f"theta does not preserve products at "
                    f"({M.element_names[a]}, {M.element_names[b]})")
    for a in range(len(M)):
        for b in range(a + 1, len(M)):
            if left_compatible(M, a, b) and compatible(M, a, b):
                j = join(M, a, b)
                if j is not None and join(N, theta[a], theta[b]) != theta[j]:
                    raise ValueError(
                        f"theta does not preserve the join of "
                        f"({M.element_names[a]}, {M.element_names[b]})")
    src = etale_of_ex(M, cap=cap)
    dst = etale_of_ex(N, cap=cap)
    dst_index = {A: i for i, A in enumerate(dst.sets)}
    phi = []
    for A in src.sets:
        gens = maximal_members(M, A)
        image = nucleus_closure(N, down_closure(N, [theta[a] for a in gens]))
        phi.append(dst_index[image])
    return phi, src, dst


def fixed_point_check(M: FiniteRRMonoid, cap: int = MAX_ACCEPTABLE) -> bool:
    """The companion of M is isomorphic to M iff left-compatible pairs in M
    are already compatible; both sides are computed and must agree."""
    E = etale_of(M, cap=cap)
    iso = len(E) == len(M) and find_isomorphism(M, E) is not None
    lc_implies_c = all(compatible(M, a, b)
                       for a in range(len(M)) for b in range(a + 1, len(M))
                       if left_compatible(M, a, b))
    assert iso == lc_implies_c, "fixed-point criterion disagrees with isomorphism test"
    return iso


def nucleus_quotient(S: FiniteRRMonoid, nu) -> tuple:
    """The monoid of nu-closed elements with product a.b = nu(ab), plus the
    quotient map.  nu is given elementwise as a sequence of S-indices."""
    nu = list(nu)
    closed = [a for a in range(len(S)) if nu[a] == a]
    pos = {a: i for i, a in enumerate(closed)}
    mul = [[pos[nu[S.mul[a][b]]] for b in closed] for a in closed]
    star = [pos[nu[S.star[a]]] for a in closed]
    one = pos[nu[S.one]]
    zero = pos[nu[S.zero]] if S.zero is not None else None
    T = FiniteRRMonoid([S.element_names[a] for a in closed], mul, star, one, zero,
                       name=f"{S.name}_nu")
    theta = [pos[nu[a]] for a in range(len(S))]
    return T, theta


@dataclass
class ReconstructionReport:
    pure: bool
    witness: Optional[tuple] = None
    passed: bool = False
    details: list = field(default_factory=list)


def reconstruct_projection_pure(S: FiniteRRMonoid, T: FiniteRRMonoid,
                                theta) -> ReconstructionReport:
    """Given a surjective star- and join-preserving homomorphism theta: S -> T,
    test projection-purity and, when pure, rebuild T from the induced nucleus.

    Purity failure is reported as data with a witness pair.  When pure, the
    report records checks of the adjoint's five properties, the nucleus laws
    for nu = theta_* theta, and an isomorphism from the closed elements onto T.
    """
    theta = list(theta)
    ns, nt = len(S), len(T)
    if set(theta) != set(range(nt)):
        raise ValueError("theta is not surjective")
    if theta[S.one] != T.one:
        raise ValueError("theta does not preserve the identity")
    for a in range(ns):
        if T.star[theta[a]] != theta[S.star[a]]:
            raise ValueError(f"theta does not preserve star at {S.element_names[a]}")
        for b in range(ns):
            if T.mul[theta[a]][theta[b]] != theta[S.mul[a][b]]:
                raise ValueError(
                    f"theta does not preserve products at "
                    f"({S.element_names[a]}, {S.element_names[b]})")
    for a in range(ns):
        for b in range(a + 1, ns):
            if left_compatible(S, a, b):
                j = join(S, a, b)
                if j is not None:
                    tj = join(T, theta[a], theta[b])
                    if tj != theta[j]:
                        raise ValueError(
                            f"theta does not preserve the join of "
                            f"({S.element_names[a]}, {S.element_names[b]})")

    for a in range(ns):
        for b in range(ns):
            if left_compatible(T, theta[a], theta[b]) and not left_compatible(S, a, b):
                return ReconstructionReport(
                    pure=False, witness=(S.element_names[a], S.element_names[b]))

    report = ReconstructionReport(pure=True)
    details = report.details

    def theta_star(t: int) -> int:
        fiber = [s for s in range(ns) if leq(T, theta[s], t)]
        j = join_of_set(S, fiber)
        if j is None:
            raise StructuralError("the adjoint join is missing in the source")
        return j

    adj = [theta_star(t) for t in range(nt)]
    for e in range(nt):
        if T.star[e] == e and S.star[adj[e]] != adj[e]:
            details.append(("adjoint-projection", T.element_names[e]))
    for t in range(nt):
        for u in range(nt):
            if leq(T, t, u) and not leq(S, adj[t], adj[u]):
                details.append(("adjoint-order", (T.element_names[t], T.element_names[u])))
            if not leq(S, S.mul[adj[t]][adj[u]], adj[T.mul[t][u]]):
                details.append(("adjoint-lax-product", (T.element_names[t], T.element_names[u])))
    for s in range(ns):
        if not leq(S, s, adj[theta[s]]):
            details.append(("unit-law", S.element_names[s]))
    for t in range(nt):
        if not leq(T, theta[adj[t]], t):
            details.append(("counit-law", T.element_names[t]))
        if theta[adj[theta[adj[t]]]] != theta[adj[t]]:
            details.append(("triple-identity", T.element_names[t]))
    for s in range(ns):
        if theta[adj[theta[s]]] != theta[s]:
            details.append(("triple-identity", S.element_names[s]))

    nu = [adj[theta[s]] for s in range(ns)]
    for a in range(ns):
        if not leq(S, a, nu[a]):
            details.append(("N1", S.element_names[a]))
        if nu[nu[a]] != nu[a]:
            details.append(("N3", S.element_names[a]))
        if S.star[a] == a and S.star[nu[a]] != nu[a]:
            details.append(("N5", S.element_names[a]))
        if nu[S.star[a]] != nu[S.star[nu[a]]]:
            details.append(("N6", S.element_names[a]))
        for b in range(ns):
            if leq(S, a, b) and not leq(S, nu[a], nu[b]):
                details.append(("N2", (S.element_names[a], S.element_names[b])))
            if not leq(S, S.mul[nu[a]][nu[b]], nu[S.mul[a][b]]):
                details.append(("N4", (S.element_names[a], S.element_names[b])))

    if not details:
        S_nu, _ = nucleus_quotient(S, nu)
        alpha = {}
        ok = True
        for i, a in enumerate(aidx for aidx in range(ns) if nu[aidx] == aidx):
            alpha[i] = theta[a]
        if len(set(alpha.values())) != nt or len(alpha) != nt:
            ok = False
            details.append(("quotient-not-bijective", None))
        else:
            for i in range(nt):
                if T.star[alpha[i]] != alpha[S_nu.star[i]]:
                    ok = False
                    details.append(("iso-star", S_nu.element_names[i]))
                    break
                for j2 in range(nt):
                    if T.mul[alpha[i]][alpha[j2]] != alpha[S_nu.mul[i][j2]]:
                        ok = False
                        details.append(("iso-product",
                                        (S_nu.element_names[i], S_nu.element_names[j2])))
                        break
                if not ok:
                    break
    report.passed = report.pure and not details
    return report
