import json

import pytest

from rrlab import tables as T


def _pt2():
    return T.build_PT(2)


def _i2():
    return T.build_I(2)


def _by_name(M):
    return {name: i for i, name in enumerate(M.element_names)}


def test_build_sizes():
    assert len(T.build_PT(2)) == 9
    assert len(T.build_I(1)) == 2
    assert len(T.build_I(2)) == 7
    assert len(T.build_I(3)) == 34
    with pytest.raises(T.ResourceLimitError):
        T.build_PT(9)


def test_axioms_pass_on_corpus():
    for M in (T.build_PT(1), _pt2(), _i2(), T.build_boolean_algebra(2)):
        report = T.check_axioms(M)
        assert report.passed and not report.violations


def test_axiom_violation_reported():
    M = _pt2()
    # redefine star of a non-total element to the identity
    names = _by_name(M)
    f = names["1-"]
    star = list(M.star)
    star[f] = M.one
    broken = T.FiniteRRMonoid(M.element_names, M.mul, star, M.one, M.zero)
    report = T.check_axioms(broken)
    assert not report.passed
    assert any(ax in ("RR5", "RR6") and f in wit for ax, wit in report.violations)


def test_malformed_table_rejected():
    with pytest.raises(T.MalformedTableError, match="row 0"):
        T.FiniteRRMonoid(["a", "b"], [[0], [1, 0]], [0, 1], 0)
    with pytest.raises(T.MalformedTableError, match="star"):
        T.FiniteRRMonoid(["a", "b"], [[0, 1], [1, 0]], [0, 5], 0)


def test_order_and_compatibility():
    M = _pt2()
    names = _by_name(M)
    f = names["01"]        # the identity
    g = names["0-"]        # its restriction to the first point
    assert T.leq(M, g, f)
    assert not T.leq(M, f, g)
    assert T.leq(M, f, f)
    assert T.left_compatible(M, f, g)
    assert T.meet_of_compatible(M, f, g) == g
    h = names["10"]        # the swap disagrees with the identity everywhere
    assert not T.left_compatible(M, f, h)
    with pytest.raises(ValueError):
        T.meet_of_compatible(M, f, h)


def test_meet_star_law():
    M = _pt2()
    for a in range(len(M)):
        for b in range(len(M)):
            if T.left_compatible(M, a, b):
                m = T.meet_of_compatible(M, a, b)
                assert M.star[m] == M.mul[M.star[a]][M.star[b]]


def test_order_implies_star_order_and_compatibility():
    M = _pt2()
    n = len(M)
    for a in range(n):
        for b in range(n):
            if T.leq(M, a, b):
                assert T.leq(M, M.star[a], M.star[b])
            for c in range(n):
                if T.leq(M, a, c) and T.leq(M, b, c):
                    assert T.left_compatible(M, a, b)
                    if M.star[a] == M.star[b]:
                        assert a == b


def test_partial_units():
    M = _pt2()
    pu = T.partial_units(M)
    assert len(pu) == 7
    for e in M.projections():
        assert T.inverse_of(M, e) == e
    # closed under multiplication and downward closed
    for a in pu:
        for b in pu:
            assert M.mul[a][b] in pu
        for x in range(len(M)):
            if T.leq(M, x, a):
                assert x in pu
    I2 = _i2()
    assert T.partial_units(I2) == list(range(7))


def test_classify_corpus():
    cls = T.classify(_pt2())
    assert cls.is_boolean and cls.is_etale and not cls.is_inverse
    assert cls.is_distributive and cls.n_partial_units == 7
    cls2 = T.classify(T.build_I(3))
    assert cls2.is_inverse and cls2.is_boolean
    assert cls2.is_zero_simplifying and cls2.is_fundamental
    assert not cls2.is_etale
    triv = T.build_boolean_algebra(1)   # the two-element monoid {0, 1}
    cls3 = T.classify(triv)
    assert (cls3.is_inverse and cls3.is_distributive and cls3.is_boolean
            and cls3.is_etale and cls3.is_zero_simplifying and cls3.is_fundamental)
    cls4 = T.classify(T.build_boolean_algebra(2))
    assert cls4.is_boolean and cls4.is_etale and not cls4.is_zero_simplifying


def test_no_zero_reports_not_applicable():
    # the one-element monoid has zero = one; strip the zero marker
    M = T.FiniteRRMonoid(["1"], [[0]], [0], 0, zero=None)
    assert T.classify(M).is_zero_simplifying is None


def test_joins():
    M = _pt2()
    names = _by_name(M)
    a, b = names["0-"], names["-1"]
    assert T.join(M, a, b) == names["01"]
    assert T.join_of_set(M, [a]) == a
    I2 = _i2()
    # two rank-one maps onto the same point are left-compatible but joinless
    lc_joinless = [(x, y) for x in range(7) for y in range(x + 1, 7)
                   if T.left_compatible(I2, x, y) and T.join(I2, x, y) is None]
    assert lc_joinless


def test_join_laws_where_joins_exist():
    M = _pt2()
    n = len(M)
    for a in range(n):
        for b in range(n):
            if not T.left_compatible(M, a, b):
                continue
            j = T.join(M, a, b)
            assert j is not None
            assert M.star[j] == T.join(M, M.star[a], M.star[b])
            for c in range(n):
                # both-sided distributivity
                assert M.mul[c][j] == T.join(M, M.mul[c][a], M.mul[c][b])
                assert M.mul[j][c] == T.join(M, M.mul[a][c], M.mul[b][c])


def test_left_orthogonalize():
    M = _pt2()
    names = _by_name(M)
    f = names["01"]
    g = names["0-"]
    out = T.left_orthogonalize(M, [f, g])
    assert out[0] == f and out[1] == M.zero
    a, b = names["0-"], names["-0"]
    out = T.left_orthogonalize(M, [a, b])
    assert M.mul[M.star[out[0]]][M.star[out[1]]] == M.zero
    assert T.join(M, out[0], out[1]) == T.join(M, a, b)
    with pytest.raises(ValueError, match="left-compatible"):
        T.left_orthogonalize(M, [names["01"], names["10"]])


def test_cayley_embedding():
    for M in (T.build_PT(2), T.build_I(2), T.build_boolean_algebra(2)):
        reps = T.cayley_embed(M)
        assert len(set(reps)) == len(M)


def test_find_isomorphism():
    M = _pt2()
    iso = T.find_isomorphism(M, M)
    assert iso is not None
    assert T.find_isomorphism(_i2(), M) is None
    # relabelled copy
    perm = list(reversed(range(len(M))))
    inv = [perm.index(i) for i in range(len(M))]
    mul = [[perm[M.mul[inv[i]][inv[j]]] for j in range(len(M))] for i in range(len(M))]
    star = [perm[M.star[inv[i]]] for i in range(len(M))]
    N = T.FiniteRRMonoid([M.element_names[inv[i]] for i in range(len(M))],
                         mul, star, perm[M.one], perm[M.zero])
    iso = T.find_isomorphism(M, N)
    assert iso is not None
    for a in range(len(M)):
        for b in range(len(M)):
            assert N.mul[iso[a]][iso[b]] == iso[M.mul[a][b]]


def test_json_round_trip():
    M = _i2()
    text = T.to_json(M)
    M2 = T.from_json(text)
    assert T.to_json(M2) == text
    assert M2.mul == M.mul and M2.star == M.star


def test_json_rejects_bad_input():
    M = T.build_I(1)
    data = json.loads(T.to_json(M))
    bad = dict(data)
    bad["mul"] = [[0], [1, 0]]
    with pytest.raises(T.InterchangeError, match="mul"):
        T.from_json(json.dumps(bad))
    bad = dict(data)
    bad["star"] = [0, 9]
    with pytest.raises(T.InterchangeError, match="star"):
        T.from_json(json.dumps(bad))
    bad = dict(data)
    del bad["one"]
    with pytest.raises(T.InterchangeError, match="one"):
        T.from_json(json.dumps(bad))
    with pytest.raises(T.InterchangeError):
        T.from_json("not json")
