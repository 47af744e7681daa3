from itertools import product

import pytest
from hypothesis import given, strategies as st

from congkit import gf
from congkit.errors import DimensionMismatch, FieldMismatch, GuardExceeded, InputError
from congkit.gf import PrimeField, enumerate_subspaces, intersect, member, nullspace, rref, sum_spaces

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)


def brute_span(rows, p, n):
    """Every vector of the span, by iterating all coefficient tuples."""
    out = set()
    for coeffs in product(range(p), repeat=len(rows)):
        out.add(tuple(sum(c * r[k] for c, r in zip(coeffs, rows)) % p for k in range(n)))
    return out or {(0,) * n}


def brute_subspace_count(n, p):
    vecs = list(product(range(p), repeat=n))
    spaces = set()
    for k in range(n + 1):
        for gens in product(vecs, repeat=k):
            spaces.add(frozenset(brute_span(list(gens), p, n)))
    return len(spaces)


@pytest.mark.parametrize("p", [1, 4, 9, 101, 0])
def test_prime_field_rejects_non_primes(p):
    with pytest.raises(InputError):
        PrimeField(p)


def test_inverse():
    for p in (2, 3, 5, 7, 97):
        f = PrimeField(p)
        assert all(a * f.inv(a) % p == 1 for a in range(1, p))


def test_rref_empty_is_zero_space():
    u = rref([], F3, 4)
    assert u.dim == 0 and u.basis == ()


def test_rref_already_canonical():
    rows = [(1, 0, 1, 0), (0, 1, 0, 1)]
    assert rref(rows, F3).basis == tuple(rows)


def test_rref_example_j():
    # hand elimination: R1-R2+R3, R2-R3, R3
    u = rref([(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)], F3)
    assert u.basis == ((1, 0, 0, 1), (0, 1, 0, 2), (0, 0, 1, 1))


def test_rref_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rref([(1, 0), (1, 0, 0)], F3)
    with pytest.raises(FieldMismatch):
        sum_spaces(rref([(1, 0)], F2), rref([(1, 0)], F3))


J = rref([(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)], F3)


def test_member_examples():
    assert member((0, 0, 0, 0), J)
    # exhaustive search over F3^3 finds exactly (1, 2, 0) for 1 - a²
    assert member((1, 0, 2, 0), J)
    assert not member((1, 2, 0, 0), J)


def test_sum_and_intersect_examples():
    i = rref([(1, 0, 1, 0), (0, 1, 0, 1)], F3)
    assert sum_spaces(i, J).dim == 4
    zero, full = gf.zero_space(F3, 4), gf.full_space(F3, 4)
    assert sum_spaces(i, zero) == i
    assert intersect(i, full) == i
    assert intersect(i, J).dim == 1


def test_nullspace():
    k = nullspace([(1, 1, 0), (0, 0, 1)], F5, 3)
    assert k.basis == ((1, 4, 0),)
    assert nullspace([], F2, 2) == gf.full_space(F2, 2)


@pytest.mark.parametrize("n,p,expected", [(1, 2, 2), (2, 2, 5), (2, 3, 6), (3, 2, 16)])
def test_subspace_count_matches_brute_force(n, p, expected):
    assert brute_subspace_count(n, p) == expected
    assert sum(1 for _ in enumerate_subspaces(n, PrimeField(p))) == expected


def test_enumeration_n4_p3():
    assert [gf.gaussian_binomial(4, k, 3) for k in range(5)] == [1, 40, 130, 40, 1]
    spaces = list(enumerate_subspaces(4, F3))
    assert len(spaces) == 212
    assert len({u.basis for u in spaces}) == 212


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("p", [2, 3, 5])
def test_enumeration_matches_gaussian_binomials(n, p):
    spaces = list(enumerate_subspaces(n, PrimeField(p)))
    by_dim = [sum(1 for u in spaces if u.dim == k) for k in range(n + 1)]
    assert by_dim == [gf.gaussian_binomial(n, k, p) for k in range(n + 1)]
    # every enumerated basis is already canonical
    assert all(rref(u.basis, u.field, n) == u for u in spaces)


def test_enumeration_guard():
    with pytest.raises(GuardExceeded):
        enumerate_subspaces(6, F5)
    with pytest.raises(GuardExceeded):
        enumerate_subspaces(3, F2, guard=10)


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv(gf.GUARD_ENV, "3")
    with pytest.raises(GuardExceeded):
        enumerate_subspaces(2, F2)
    monkeypatch.setenv(gf.GUARD_ENV, "nope")
    with pytest.raises(InputError):
        gf.subspace_guard()


vectors = lambda p, n: st.lists(st.integers(0, p - 1), min_size=n, max_size=n)


@st.composite
def generating_sets(draw, p=None, n=None, max_rows=4):
    p = p or draw(st.sampled_from([2, 3, 5]))
    n = n or draw(st.integers(1, 4))
    rows = draw(st.lists(vectors(p, n), max_size=max_rows))
    return PrimeField(p), n, rows


@given(generating_sets(), st.randoms(use_true_random=False))
def test_rref_canonical_under_regeneration(data, rnd):
    field, n, rows = data
    u = rref(rows, field, n)
    p = field.p
    for _ in range(5):
        # random invertible recombination of the basis plus random redundant rows
        k = u.dim
        gens = [list(r) for r in u.basis]
        for i in range(k):
            for j in range(k):
                if i != j:
                    c = rnd.randrange(p)
                    gens[i] = [(a + c * b) % p for a, b in zip(gens[i], gens[j])]
        scales = [rnd.randrange(1, p) for _ in gens]
        gens = [[(x * c) % p for x in g] for c, g in zip(scales, gens)]
        extra = []
        for _ in range(2):
            coeffs = [rnd.randrange(p) for _ in u.basis]
            extra.append([sum(a * r[c] for a, r in zip(coeffs, u.basis)) % p for c in range(n)])
        mixed = gens + extra
        rnd.shuffle(mixed)
        assert rref(mixed, field, n) == u


@given(generating_sets(max_rows=3))
def test_rref_idempotent_and_spans_same_set(data):
    field, n, rows = data
    u = rref(rows, field, n)
    assert rref(u.basis, field, n) == u
    assert set(u.vectors()) == brute_span(rows, field.p, n)


@given(generating_sets(max_rows=3), st.data())
def test_member_agrees_with_exhaustive_span(data, draw):
    field, n, rows = data
    u = rref(rows, field, n)
    v = tuple(draw.draw(vectors(field.p, n)))
    assert member(v, u) == (v in brute_span(list(u.basis), field.p, n))


@pytest.mark.parametrize("n,p", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_dimension_formula_all_pairs(n, p):
    spaces = list(enumerate_subspaces(n, PrimeField(p)))
    for u in spaces:
        for w in spaces:
            s, m = sum_spaces(u, w), intersect(u, w)
            assert s.dim + m.dim == u.dim + w.dim


@given(generating_sets(p=3, n=3, max_rows=3), generating_sets(p=3, n=3, max_rows=3))
def test_intersection_is_set_intersection(a, b):
    (field, n, ra), (_, _, rb) = a, b
    u, w = rref(ra, field, n), rref(rb, field, n)
    assert set(intersect(u, w).vectors()) == set(u.vectors()) & set(w.vectors())
    assert u <= sum_spaces(u, w) and intersect(u, w) <= w
